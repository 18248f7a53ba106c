/*
   Copyright 2026 The g2ss Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// JSON forms of curves and reports. Polynomials are arrays of coefficient
// strings, low degree first; over K(T) each x-coefficient is itself such an array.

#ifndef G2SS_SERIALIZE_HPP
#define G2SS_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "g2ss/harness.hpp"
#include "g2ss/repmod.hpp"

namespace g2ss {

using json = nlohmann::ordered_json;

json poly_json(const PolyT<Rational>& u);
json poly_json(const PolyT<Fq>& u);
json poly_json(const PolyXT<Rational>& f);  // nested
json poly_json(const PolyXT<Fq>& f);
json flat_poly_json(const PolyXT<Rational>& f);  // constant coefficients only
json flat_poly_json(const PolyXT<Fq>& f);

/// Printed form with the function-field variable renamed.
std::string curve_text(const SexticCurve& c, char var = 'T');

/// {domain, p, ext_degree, var, function_field, coefficients, separable, clearing, text}
json curve_json(const SexticCurve& c, char var = 'T');

/// Accepts the object above (coefficients or text) and fills p / ext_degree / var
/// from the object when present. Throws Parse, NonSeparable.
SexticCurve curve_from_json(const json& j, bool allow_singular = false);

/// `text` is either a JSON object or a polynomial expression in x (and T).
SexticCurve parse_curve(const std::string& text, u64 p, unsigned ext_degree = 1, char var = 'T',
                        bool allow_singular = false);

json report_json(const Mat2& m);
json report_json(const CartierManinReport& r);
json report_json(const GaloisCertificate& c);
json report_json(const RowReport& r);
json report_json(const TableReport& t);  // summary, without the rows
json report_json(const CoprimalityReport& r);
json report_json(const ScanHit& h);
json report_json(const ScanSummary& s);
json report_json(const PipelineVerdict& v);
json report_json(const RepReport& r);
json report_json(const Char3IdentityReport& r);
json report_json(const F9FamilyCurve& f);
json report_json(const QuadraticOrder& o, u64 p);

}  // namespace g2ss

#endif
