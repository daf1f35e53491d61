#pragma once

/**
 * @file groups.hpp
 * @brief Catalog of reflection groups (E6, E7, E8 and the small test groups
 * D4, B3): defining linear forms, degrees, simple roots, and the starting
 * invariant bases p_a and their rescaled versions q_a.
 */

#include "canonbasis/pairing.hpp"
#include "canonbasis/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace canonbasis {

using Vector = std::vector<FieldElement>;

struct GroupSpec {
  std::string name;
  int rank = 0;
  std::vector<int> degrees;             // ascending, degrees.front() == 2
  std::vector<FieldPoly> forms;         // the defining linear forms l_k (27, 56, 240 for E6, E7, E8)
  std::vector<Vector> simple_roots;
  int n_positive_roots = 0;             // sum of (d_a - 1)
  bool dn_even = false;                 // some degree occurs twice
  std::vector<Radical> q_rescale;       // q_a = q_rescale[a] * p_a
  // The q_a are stored as rational polynomials in y_i = sqrt(w_i) x_i;
  // w is all ones except where a coordinate carries an irrational scale.
  std::vector<int> q_weights;

  Metric metric() const { return Metric(q_weights); }

  /// Number of basis polynomials sharing degree d.
  int multiplicity(int d) const;
};

/// Names accepted by catalog(), in catalog order.
const std::vector<std::string>& catalog_names();

/// Immutable, lazily built catalog entry. Throws std::invalid_argument for
/// an unknown name.
const GroupSpec& catalog(std::string_view name);

enum class BasisLabel { p, q, h, k_report };
std::string to_string(BasisLabel label);

template <Coefficient C>
struct Basis {
  std::string group;
  BasisLabel label = BasisLabel::p;
  std::vector<Polynomial<C>> polys;
};

using PBasis = Basis<FieldElement>;
using QBasis = Basis<Rational>;

/// p_a = sum over forms of l_k^{d_a} for the E series (half the forms,
/// doubled, when all degrees are even); fixed power-sum style bases for D4
/// and B3.
PBasis build_p_basis(const GroupSpec& g);

/// q_a = multiplier_a * p_a, rewritten in the scaled coordinates given by
/// g.q_weights. Throws InvariantViolation if a resulting coefficient is
/// irrational.
QBasis rescale_to_q(const GroupSpec& g, const PBasis& p);

/// Inverse of the coordinate scaling: the q-side rational polynomial as a
/// polynomial in the original coordinates x.
FieldPoly to_original_coordinates(const GroupSpec& g, const RatPoly& f);

/// The reverse map; throws InvariantViolation when the result is not rational.
RatPoly from_original_coordinates(const GroupSpec& g, const FieldPoly& f);

/// Convenience: rescale_to_q(g, build_p_basis(g)).
QBasis build_q_basis(const GroupSpec& g);

/// Euclidean dot product.
FieldElement dot(const Vector& a, const Vector& b);

/// x - 2 (alpha.x)/(alpha.alpha) alpha
Vector reflect(const Vector& x, const Vector& alpha);

/// Positive roots (first nonzero coordinate positive) obtained by closing
/// the simple roots under their reflections. Throws InvariantViolation if the
/// closure does not terminate within a safety cap or misses the expected
/// count.
std::vector<Vector> generate_positive_roots(const GroupSpec& g);

/// The linear form alpha . x.
FieldPoly root_form(const Vector& alpha);

/// f(r x) for the reflection r through alpha (exact substitution).
FieldPoly compose_with_reflection(const FieldPoly& f, const Vector& alpha);
RatPoly compose_with_reflection(const RatPoly& f, const Vector& alpha);

/// Simultaneous substitution x_{var} -> form for each listed pair.
template <Coefficient C>
Polynomial<C> substitute_linear(const Polynomial<C>& f,
                                const std::vector<std::pair<int, Polynomial<C>>>& subs);

/// True iff f (in the original coordinates) is fixed by every simple
/// reflection of g.
bool check_invariance(const GroupSpec& g, const FieldPoly& f);
bool check_invariance(const GroupSpec& g, const RatPoly& f);

/// Same check for a polynomial given in the scaled q coordinates.
bool check_scaled_invariance(const GroupSpec& g, const RatPoly& f);

bool is_rational_vector(const Vector& v);

}  // namespace canonbasis
