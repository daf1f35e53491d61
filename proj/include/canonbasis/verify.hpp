#pragma once

/**
 * @file verify.hpp
 * @brief Independent checks of a computed canonical basis: the full pairwise
 * conditions, harmonicity, the Jacobian / reflecting-hyperplane structure and
 * regression against the published transformation tables.
 */

#include "canonbasis/canonicalize.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace canonbasis {

enum class CheckLevel { fast, full };
std::string to_string(CheckLevel level);
CheckLevel parse_check_level(std::string_view text);

struct CheckEntry {
  std::string id;
  bool passed = false;
  std::string detail;
  std::string witness;  // non-empty for every failure
  double seconds = 0;   // excluded from serialized reports
};

struct VerificationReport {
  std::string group;
  std::uint64_t seed = 0;
  CheckLevel level = CheckLevel::fast;
  std::vector<CheckEntry> checks;

  bool passed() const;
};

struct VerifyOptions {
  CheckLevel level = CheckLevel::fast;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  int hyperplane_points = 20;
  /// Substitution-based invariance of the q basis (costly for E8).
  bool check_invariance = true;
};

// ---------------------------------------------------------------------------
// Published tables

struct PublishedEntry {
  int a = 0;
  Radical prefactor;       // h_a = prefactor * expression
  std::string expression;  // polynomial in q1..qn
  Integer k_denominator;   // k_a = h_a / (D sqrt(R))
  Integer k_radicand;
};

struct PublishedTable {
  std::string group;
  std::vector<PublishedEntry> entries;
};

/// nullptr for groups without a published table.
const PublishedTable* published_table(std::string_view group);

/// FNV-1a over the table contents; published_table() checks it on first use.
std::uint64_t table_checksum(const PublishedTable& table);

/// Polynomial in the symbols q1..q_nq, keyed by exponent vector.
using QPolynomial = std::map<MultiIndex, Rational>;

/// Parses integers, q<i>, + - * ^ and parentheses. Throws
/// std::invalid_argument on malformed input.
QPolynomial parse_q_expression(std::string_view text, int nq);

// ---------------------------------------------------------------------------
// Individual checks. Polynomials are in the q coordinates of g.

/// apply_diff_op(h_a, h_b) == 0 for all a != b with d_a <= d_b.
CheckEntry check_canonical(const GroupSpec& g, const std::vector<RatPoly>& basis, unsigned threads = 1);

/// Laplacian of h_a vanishes for a >= 2.
CheckEntry check_harmonic(const GroupSpec& g, const std::vector<RatPoly>& basis, unsigned threads = 1);

/// q_c(d) h_a == 0 for all d_c < d_a.
CheckEntry check_linear_conditions(const GroupSpec& g, const QBasis& q, const std::vector<RatPoly>& basis,
                                   unsigned threads = 1);

/// Exact division of p by the linear form sum_i form[i] x_i; nullopt when
/// the division leaves a remainder.
std::optional<IntPoly> divide_by_linear_form(const IntPoly& p, const std::vector<Integer>& form);

/// Integer determinant by fraction-free elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

/// Jacobian determinant against the reflecting hyperplanes. Full level on
/// rank <= 6: symbolic determinant divided by every positive-root form.
/// Otherwise: vanishing on seeded hyperplane points and nonvanishing at a
/// generic point.
std::vector<CheckEntry> check_jacobian(const GroupSpec& g, const std::vector<RatPoly>& basis,
                                       const VerifyOptions& options);

/// Each record's z is a rational multiple mu_a of the published vector.
/// Appends one entry per record; multiples[a-1] receives mu_a when found.
std::vector<CheckEntry> regress_published(const GroupSpec& g, const std::vector<TransformRecord>& records,
                                          std::vector<std::optional<Rational>>& multiples);

/// With the multiples from regress_published, the published h_a has norm
/// D^2 R and the record's normalization factor matches the published k_a.
std::vector<CheckEntry> check_norm_constants(const GroupSpec& g, const std::vector<TransformRecord>& records,
                                             const std::vector<std::optional<Rational>>& multiples);

/// All checks for one canonicalization. The h polynomials are re-expanded
/// from the z vectors; stored h_poly data, when present, must agree.
VerificationReport verify_canonicalization(const GroupSpec& g, const std::vector<TransformRecord>& records,
                                           const VerifyOptions& options = {});

std::string report_text(const VerificationReport& report);

}  // namespace canonbasis
