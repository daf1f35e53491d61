#pragma once

/**
 * @file canonicalize.hpp
 * @brief Canonical invariant bases by linear algebra on a general ansatz.
 *
 * For each degree d_a the unknown polynomial is written as
 * h = sum_m z_m prod_b q_b^{m_b} over all multi-indices of weighted degree
 * d_a. The conditions q_c(d) h = 0 for every d_c < d_a are linear in z; the
 * solution space has dimension equal to the multiplicity of d_a.
 */

#include "canonbasis/groups.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace canonbasis {

using MultiIndex = std::vector<int>;

/// All m >= 0 with sum_b degrees[b] * m_b == d, ordered by comparing the
/// reversed index lexicographically (so the pure highest term comes last).
std::vector<MultiIndex> weighted_monomials(const std::vector<int>& degrees, int d);

struct Ansatz {
  int degree = 0;
  std::vector<MultiIndex> monomials;

  /// Position of the pure q_b monomial, or -1 when absent.
  int pure_index(int b) const;
};

Ansatz make_ansatz(const GroupSpec& g, int degree);

/// Memoized products prod_b Q_b^{m_b} of a basis of integer polynomials.
class ProductCache {
 public:
  explicit ProductCache(std::vector<IntPoly> factors) : factors_(std::move(factors)) {}

  const IntPoly& get(const MultiIndex& m);
  const std::vector<IntPoly>& factors() const { return factors_; }
  std::size_t cached_terms() const;

 private:
  std::vector<IntPoly> factors_;
  std::map<MultiIndex, IntPoly> memo_;
};

/// Homogeneous integer linear system A z = 0, rows deduplicated, each row
/// primitive with a positive leading entry.
struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<std::vector<Integer>> rows;

  /// Adds a row after normalization; returns false for zero or duplicate rows.
  bool add_row(std::vector<Integer> row);

 private:
  std::set<std::vector<Integer>> seen_;
};

/// Every condition q_c(d) h = 0 with d_c < d, one row per output monomial,
/// over the unknowns z of the ansatz (expressed on the q basis itself).
LinearSystem assemble_system(const GroupSpec& g, const QBasis& q, const Ansatz& ansatz, unsigned threads = 1);

/// Basis of the null space, one primitive integer vector per free column,
/// each normalized so that its free-column entry is positive. Computed with
/// fraction-free (Bareiss) elimination.
std::vector<std::vector<Integer>> solve_system(const LinearSystem& system);

/// Integer row-echelon form that accepts rows one at a time and keeps each
/// pivot column cleared in all other rows.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(std::size_t unknowns) : unknowns_(unknowns) {}

  /// Returns true if the row increased the rank.
  bool add(std::vector<Integer> row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t unknowns() const { return unknowns_; }
  /// Same normalization as solve_system.
  std::vector<std::vector<Integer>> null_space() const;

 private:
  std::size_t unknowns_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Primitive integer vector with the given entry positive.
std::vector<Integer> primitive_vector(const std::vector<Rational>& v, std::size_t positive_entry);

struct TransformRecord {
  int a = 0;  // 1-based basis index
  int degree = 0;
  std::vector<MultiIndex> monomials;
  std::vector<Rational> z;  // on the q basis
  Rational norm_sq;
  Radical norm_factor{Rational(1), 1};
  // Expanded h in the coordinates of the q basis (GroupSpec::q_weights);
  // to_original_coordinates() maps it back to x.
  std::optional<RatPoly> h_poly;
};

struct DnPair {
  int degree = 0;
  int first = 0;   // basis indices of the two members
  int second = 0;
  std::vector<std::vector<Integer>> null_basis;  // as solved, before mixing
  Rational c1, c2, c3, c4;                       // h = c1 v1 + c2 v2, h' = c3 v1 + c4 v2
  Rational gram_before[3];                       // (v1,v1), (v1,v2), (v2,v2)
  Rational gram_after[3];                        // (h,h), (h,h'), (h',h')
};

/// Result of canonicalizing one group.
struct Canonicalization {
  std::string group;
  std::vector<TransformRecord> records;
  std::optional<DnPair> dn_pair;
  /// Per-degree statistics (rows examined, elimination rank).
  struct DegreeStats {
    int degree = 0;
    std::size_t unknowns = 0;
    std::size_t rows_used = 0;
    std::size_t verify_rounds = 0;
    double seconds = 0;
  };
  std::vector<DegreeStats> stats;
};

struct CanonicalizeOptions {
  unsigned threads = 1;
  std::uint64_t seed = 1;
  bool keep_h_poly = true;
  /// Called before each degree is processed: (basis index, rank, degree).
  std::function<void(int, int, int)> progress;
};

/// The scale convention: primitive integer z, positive on the pure q_a entry.
/// `h` is the expansion of z on the q basis.
TransformRecord fix_scale(const GroupSpec& g, int a, const Ansatz& ansatz, const std::vector<Rational>& z,
                          const RatPoly& h, bool keep_h_poly);

/// Gram-Schmidt on a two-dimensional solution space:
/// h' <- h' - ((h, h') / (h, h)) h. `null_basis` holds z vectors on the q
/// basis and `members` their expansions. Returns the pair data; the mixed z
/// vectors and polynomials are written to z_out / h_out.
DnPair dn_even_branch(const GroupSpec& g, int degree, const std::vector<std::vector<Integer>>& null_basis,
                      const std::vector<RatPoly>& members, std::vector<std::vector<Rational>>& z_out,
                      std::vector<RatPoly>& h_out);

/// Runs the whole construction for g in degree order.
Canonicalization canonicalize_all(const GroupSpec& g, const CanonicalizeOptions& options = {});

/// Same, starting from an explicit invariant basis q (any rational rescaling
/// of build_q_basis(g) is accepted).
Canonicalization canonicalize_with_basis(const GroupSpec& g, const QBasis& q,
                                         const CanonicalizeOptions& options = {});

/// 1 / ||h_a|| as a simplified radical.
Radical normalization_data(const TransformRecord& record);

/// The h polynomials (q coordinates) recomputed from z and the q basis.
std::vector<RatPoly> expand_records(const QBasis& q, const std::vector<TransformRecord>& records);

}  // namespace canonbasis
