#pragma once

// JSON and text forms of polynomials, groups, canonicalization records and
// verification reports. Every JSON writer is deterministic: keys appear in a
// fixed order and no timing data is emitted.

#include "canonbasis/verify.hpp"

#include "json.hpp"

#include <string>

namespace canonbasis {

using Json = nlohmann::ordered_json;

/// Thrown by every *_from_json reader on malformed input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json field_to_json(const FieldElement& x);
// Accepts a rational string or a 4-tuple (1, sqrt2, sqrt3, sqrt6).
FieldElement field_from_json(const Json& j);
Json radical_to_json(const Radical& r);
Radical radical_from_json(const Json& j);

// Coefficients are rational strings when every coefficient is rational and
// 4-tuples otherwise.
Json polynomial_to_json(const IntPoly& p);
Json polynomial_to_json(const RatPoly& p);
Json polynomial_to_json(const FieldPoly& p);
FieldPoly polynomial_from_json(const Json& j);

// Explicit exponent tuples in graded-reverse-lex order.
std::string polynomial_text(const RatPoly& p);
std::string polynomial_text(const FieldPoly& p);

Json group_to_json(const GroupSpec& g);
std::string group_text(const GroupSpec& g);
std::string roots_text(const GroupSpec& g);

// p and q bases, both in the original coordinates.
Json basis_to_json(const GroupSpec& g);
std::string basis_text(const GroupSpec& g);

// h_poly, when written, is in the original coordinates.
Json record_to_json(const GroupSpec& g, const TransformRecord& record, bool include_h_poly);
TransformRecord record_from_json(const GroupSpec& g, const Json& j);

Json canonicalization_to_json(const GroupSpec& g, const Canonicalization& c, bool include_h_poly);
Canonicalization canonicalization_from_json(const Json& j);
std::string canonicalization_text(const GroupSpec& g, const Canonicalization& c);

// The factor 1/||h_a|| per record.
Json normalization_to_json(const GroupSpec& g, const Canonicalization& c);
std::string normalization_text(const GroupSpec& g, const Canonicalization& c);

Json report_to_json(const VerificationReport& report);

// Two-space indentation plus a trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

}  // namespace canonbasis
