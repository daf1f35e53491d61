#include "canonbasis/canonicalize.hpp"

#include "canonbasis/pairing.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <unordered_map>

namespace canonbasis {

// ---------------------------------------------------------------------------
// Ansatz

std::vector<MultiIndex> weighted_monomials(const std::vector<int>& degrees, int d) {
  if (d < 0) throw std::invalid_argument("weighted_monomials: negative degree");
  const std::size_t n = degrees.size();
  std::vector<MultiIndex> out;
  MultiIndex m(n, 0);
  auto recurse = [&](auto&& self, std::size_t b, int remaining) -> void {
    if (b == n) {
      if (remaining == 0) out.push_back(m);
      return;
    }
    for (int k = 0; k * degrees[b] <= remaining; ++k) {
      m[b] = k;
      self(self, b + 1, remaining - k * degrees[b]);
    }
    m[b] = 0;
  };
  recurse(recurse, 0, d);
  std::sort(out.begin(), out.end(), [](const MultiIndex& x, const MultiIndex& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return out;
}

int Ansatz::pure_index(int b) const {
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    const auto& m = monomials[j];
    bool pure = true;
    for (std::size_t i = 0; i < m.size() && pure; ++i) pure = m[i] == (static_cast<int>(i) == b ? 1 : 0);
    if (pure) return static_cast<int>(j);
  }
  return -1;
}

Ansatz make_ansatz(const GroupSpec& g, int degree) {
  return Ansatz{degree, weighted_monomials(g.degrees, degree)};
}

// ---------------------------------------------------------------------------
// Products

const IntPoly& ProductCache::get(const MultiIndex& m) {
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  if (m.size() != factors_.size()) throw std::invalid_argument("product index has wrong length");
  auto first = std::find_if(m.begin(), m.end(), [](int e) { return e != 0; });
  const int nvars = factors_.front().nvars();
  IntPoly value(nvars);
  if (first == m.end()) {
    value = IntPoly::constant(nvars, Integer(1));
  } else {
    // Peel off one factor of the lowest-degree basis element present.
    const auto b = static_cast<std::size_t>(first - m.begin());
    MultiIndex rest = m;
    --rest[b];
    value = get(rest) * factors_[b];
  }
  return memo_.emplace(m, std::move(value)).first->second;
}

std::size_t ProductCache::cached_terms() const {
  std::size_t total = 0;
  for (const auto& [m, p] : memo_) total += p.size();
  return total;
}

// ---------------------------------------------------------------------------
// Linear algebra

namespace {

// Divides by the gcd of the entries and makes the first nonzero entry
// positive. Returns false for the zero vector.
bool normalize_row(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) return false;
  auto lead = std::find_if(row.begin(), row.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (sgn(*lead) < 0) g = -g;
  if (g != 1) {
    for (auto& x : row) {
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
  return true;
}

std::vector<Integer> integer_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = row[i].get_num() * (l / row[i].get_den());
  }
  return out;
}

}  // namespace

bool LinearSystem::add_row(std::vector<Integer> row) {
  if (row.size() != unknowns) throw std::invalid_argument("row length does not match unknowns");
  if (!normalize_row(row)) return false;
  if (!seen_.insert(row).second) return false;
  rows.push_back(std::move(row));
  return true;
}

std::vector<Integer> primitive_vector(const std::vector<Rational>& v, std::size_t positive_entry) {
  if (positive_entry >= v.size() || sgn(v[positive_entry]) == 0) {
    throw InvariantViolation("primitive_vector: reference entry is zero");
  }
  std::vector<Integer> out = integer_row(v);
  normalize_row(out);
  if (sgn(out[positive_entry]) < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

namespace {

// Null-space basis of an echelon form given by rows with distinct pivot
// columns (each pivot column zero in all other rows when `reduced`).
std::vector<std::vector<Integer>> null_space_from_echelon(const std::vector<std::vector<Integer>>& rows,
                                                          const std::vector<std::size_t>& pivots,
                                                          std::size_t n, bool reduced) {
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  // Process rows from the highest pivot down for back substitution.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] > pivots[b]; });

  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[f] = 1;
    for (std::size_t i : order) {
      const auto& row = rows[i];
      const std::size_t p = pivots[i];
      Rational s = 0;
      if (reduced) {
        s = Rational(row[f]);
      } else {
        for (std::size_t j = p + 1; j < n; ++j) {
          if (sgn(row[j]) != 0 && sgn(x[j]) != 0) s += Rational(row[j]) * x[j];
        }
      }
      x[p] = -s / Rational(row[p]);
      x[p].canonicalize();
    }
    basis.push_back(primitive_vector(x, f));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Integer>> solve_system(const LinearSystem& system) {
  const std::size_t n = system.unknowns;
  std::vector<std::vector<Integer>> m = system.rows;
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows; ++col) {
    // Smallest nonzero magnitude keeps the fraction-free entries small.
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      if (best == rows || mpz_cmpabs(m[i][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0) best = i;
    }
    if (best == rows) continue;
    std::swap(m[r], m[best]);
    const Integer& piv = m[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer factor = m[i][col];
      for (std::size_t j = col + 1; j < n; ++j) {
        Integer v = piv * m[i][j] - factor * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  return null_space_from_echelon(m, pivots, n, false);
}

bool IncrementalEchelon::add(std::vector<Integer> row) {
  if (row.size() != unknowns_) throw std::invalid_argument("row length does not match unknowns");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(row[p]) == 0) continue;
    const Integer a = rows_[i][p], b = row[p];
    for (std::size_t j = 0; j < unknowns_; ++j) row[j] = a * row[j] - b * rows_[i][j];
    normalize_row(row);
  }
  if (!normalize_row(row)) return false;
  const auto q = static_cast<std::size_t>(
      std::find_if(row.begin(), row.end(), [](const Integer& x) { return sgn(x) != 0; }) - row.begin());
  for (auto& other : rows_) {
    if (sgn(other[q]) == 0) continue;
    const Integer a = row[q], b = other[q];
    for (std::size_t j = 0; j < unknowns_; ++j) other[j] = a * other[j] - b * row[j];
    normalize_row(other);
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(q);
  return true;
}

std::vector<std::vector<Integer>> IncrementalEchelon::null_space() const {
  return null_space_from_echelon(rows_, pivots_, unknowns_, true);
}

// ---------------------------------------------------------------------------
// Full assembly (used for moderate sizes and as a cross-check)

namespace {

// prod_b s_b^{m_b}
Rational scale_power(const std::vector<Rational>& scales, const MultiIndex& m) {
  Rational r = 1;
  for (std::size_t b = 0; b < m.size(); ++b) {
    for (int k = 0; k < m[b]; ++k) r *= scales[b];
  }
  return r;
}

struct SplitBasis {
  std::vector<Rational> scales;
  std::vector<IntPoly> primitive;
};

SplitBasis split_basis(const QBasis& q) {
  SplitBasis s;
  for (const auto& p : q.polys) {
    auto cs = content_primitive(p);
    s.scales.push_back(cs.scale);
    s.primitive.push_back(std::move(cs.primitive));
  }
  return s;
}

}  // namespace

LinearSystem assemble_system(const GroupSpec& g, const QBasis& q, const Ansatz& ansatz, unsigned threads) {
  const Metric metric = g.metric();
  const SplitBasis split = split_basis(q);
  ProductCache cache(split.primitive);
  const std::size_t nunk = ansatz.monomials.size();
  LinearSystem system;
  system.unknowns = nunk;
  std::vector<Rational> column_scale(nunk);
  for (std::size_t j = 0; j < nunk; ++j) column_scale[j] = scale_power(split.scales, ansatz.monomials[j]);

  for (std::size_t c = 0; c < g.degrees.size(); ++c) {
    if (g.degrees[c] >= ansatz.degree) continue;
    std::unordered_map<Monomial, std::vector<Rational>, MonomialHash> rows;
    for (std::size_t j = 0; j < nunk; ++j) {
      IntPoly r = apply_diff_op(split.primitive[c], cache.get(ansatz.monomials[j]), threads, metric);
      for (const auto& t : r.terms()) {
        auto& row = rows[t.mono];
        if (row.empty()) row.assign(nunk, Rational(0));
        row[j] = Rational(t.coeff) * column_scale[j];
      }
    }
    std::vector<Monomial> keys;
    keys.reserve(rows.size());
    for (const auto& kv : rows) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), grevlex_greater);
    for (auto k : keys) system.add_row(integer_row(rows[k]));
  }
  return system;
}

// ---------------------------------------------------------------------------
// Records

TransformRecord fix_scale(const GroupSpec& g, int a, const Ansatz& ansatz, const std::vector<Rational>& z,
                          const RatPoly& h, bool keep_h_poly) {
  const int pure = ansatz.pure_index(a - 1);
  if (pure < 0) throw InvariantViolation("ansatz lacks the pure q_" + std::to_string(a) + " monomial");
  if (sgn(z[static_cast<std::size_t>(pure)]) == 0) {
    throw InvariantViolation("solution has zero coefficient on q_" + std::to_string(a));
  }
  std::vector<Integer> zi = primitive_vector(z, static_cast<std::size_t>(pure));
  const Rational kappa = Rational(zi[static_cast<std::size_t>(pure)]) / z[static_cast<std::size_t>(pure)];

  TransformRecord rec;
  rec.a = a;
  rec.degree = ansatz.degree;
  rec.monomials = ansatz.monomials;
  for (auto& x : zi) rec.z.emplace_back(x);
  RatPoly scaled = kappa == 1 ? h : h.scaled(kappa);
  rec.norm_sq = norm_sq(scaled, g.metric());
  if (sgn(rec.norm_sq) <= 0) throw InvariantViolation("non-positive canonical norm");
  rec.norm_factor = inverse_sqrt(rec.norm_sq);
  if (keep_h_poly) rec.h_poly = std::move(scaled);
  return rec;
}

Radical normalization_data(const TransformRecord& record) { return inverse_sqrt(record.norm_sq); }

DnPair dn_even_branch(const GroupSpec& g, int degree, const std::vector<std::vector<Integer>>& null_basis,
                      const std::vector<RatPoly>& members, std::vector<std::vector<Rational>>& z_out,
                      std::vector<RatPoly>& h_out) {
  if (null_basis.size() != 2 || members.size() != 2) {
    throw std::invalid_argument("dn_even_branch: expected a two-dimensional space");
  }
  const Metric metric = g.metric();
  const Ansatz ansatz = make_ansatz(g, degree);
  DnPair pair;
  pair.degree = degree;
  auto first = std::find(g.degrees.begin(), g.degrees.end(), degree);
  pair.first = static_cast<int>(first - g.degrees.begin()) + 1;
  pair.second = pair.first + 1;
  pair.null_basis = null_basis;

  const RatPoly& v1 = members[0];
  const RatPoly& v2 = members[1];
  pair.gram_before[0] = pairing_number(v1, v1, metric);
  pair.gram_before[1] = pairing_number(v1, v2, metric);
  pair.gram_before[2] = pairing_number(v2, v2, metric);
  const Rational det = pair.gram_before[0] * pair.gram_before[2] - pair.gram_before[1] * pair.gram_before[1];
  if (sgn(pair.gram_before[0]) <= 0 || sgn(det) <= 0) {
    throw InvariantViolation("Gram matrix of the degenerate degree is not positive definite");
  }
  const Rational t = pair.gram_before[1] / pair.gram_before[0];

  const std::size_t nunk = null_basis[0].size();
  std::vector<Rational> z1(nunk), z2(nunk);
  for (std::size_t j = 0; j < nunk; ++j) {
    z1[j] = Rational(null_basis[0][j]);
    z2[j] = Rational(null_basis[1][j]) - t * Rational(null_basis[0][j]);
  }
  const auto pure1 = static_cast<std::size_t>(ansatz.pure_index(pair.first - 1));
  const auto pure2 = static_cast<std::size_t>(ansatz.pure_index(pair.second - 1));
  auto p1 = primitive_vector(z1, pure1);
  auto p2 = primitive_vector(z2, pure2);
  const Rational l1 = Rational(p1[pure1]) / z1[pure1];
  const Rational l2 = Rational(p2[pure2]) / z2[pure2];
  pair.c1 = l1;
  pair.c2 = 0;
  pair.c3 = -l2 * t;
  pair.c4 = l2;

  RatPoly h1 = v1.scaled(l1);
  RatPoly h2 = (v2 - v1.scaled(t)).scaled(l2);
  pair.gram_after[0] = pairing_number(h1, h1, metric);
  pair.gram_after[1] = pairing_number(h1, h2, metric);
  pair.gram_after[2] = pairing_number(h2, h2, metric);

  z_out.clear();
  z_out.emplace_back(p1.begin(), p1.end());
  z_out.emplace_back(p2.begin(), p2.end());
  h_out = {std::move(h1), std::move(h2)};
  return pair;
}

// ---------------------------------------------------------------------------
// Streaming solver

namespace {

// Sampled rows come from randomly chosen output monomials of the condition
// polynomials; the candidate null space is then verified exactly on every
// condition and violated rows are fed back until nothing is violated.
class DegreeSolver {
 public:
  DegreeSolver(const GroupSpec& g, const SplitBasis& split, ProductCache& cache, const Ansatz& ansatz,
               const CanonicalizeOptions& options)
      : g_(g), split_(split), ansatz_(ansatz), options_(options), metric_(g.metric()),
        echelon_(ansatz.monomials.size()),
        rng_(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(ansatz.degree)) {
    for (const auto& m : ansatz.monomials) products_.push_back(&cache.get(m));
    for (const auto* p : products_) weighted_.emplace_back(*p, metric_);
    for (std::size_t c = 0; c < g.degrees.size(); ++c) {
      if (g.degrees[c] < ansatz.degree) conditions_.push_back(c);
    }
  }

  // Null space in the coordinates of the primitive products.
  std::vector<std::vector<Integer>> solve(std::size_t expected_dim, Canonicalization::DegreeStats& stats,
                                          std::vector<IntPoly>& expansions) {
    const std::size_t nunk = ansatz_.monomials.size();
    const std::size_t target_rank = nunk >= expected_dim ? nunk - expected_dim : 0;
    if (!conditions_.empty()) {
      const std::size_t budget = 40 * nunk + 200;
      std::size_t attempts = 0;
      while (echelon_.rank() < target_rank && attempts < budget) {
        const std::size_t c = conditions_[attempts % conditions_.size()];
        add_sample(c);
        ++attempts;
      }
    }
    for (std::size_t round = 1;; ++round) {
      stats.verify_rounds = round;
      auto basis = echelon_.null_space();
      expansions.clear();
      bool all_ok = true;
      for (const auto& w : basis) {
        IntPoly h = combine(w);
        if (!verify(h)) all_ok = false;
        expansions.push_back(std::move(h));
      }
      if (all_ok) {
        stats.rows_used = rows_added_;
        return basis;
      }
      if (round > 4 * nunk + 8) throw InvariantViolation("null-space refinement did not converge");
    }
  }

 private:
  const std::vector<Monomial>& targets(std::size_t c) {
    auto it = targets_.find(c);
    if (it != targets_.end()) return it->second;
    unsigned mask = split_.primitive[c].even_variable_mask();
    for (const auto* p : products_) mask &= p->even_variable_mask();
    const int out_degree = ansatz_.degree - g_.degrees[c];
    return targets_.emplace(c, monomials_of_degree(g_.rank, static_cast<unsigned>(out_degree), mask))
        .first->second;
  }

  std::vector<Integer> row_for(std::size_t c, Monomial gamma) const {
    std::vector<Integer> row(ansatz_.monomials.size());
    for (const auto& t : split_.primitive[c].terms()) {
      const Monomial beta = t.mono * gamma;
      for (std::size_t j = 0; j < weighted_.size(); ++j) {
        if (const Integer* w = weighted_[j].find(beta)) add_product(row[j], t.coeff, *w);
      }
    }
    return row;
  }

  void add_sample(std::size_t c) {
    const auto& ts = targets(c);
    if (ts.empty()) return;
    std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
    if (echelon_.add(row_for(c, ts[pick(rng_)]))) ++rows_added_;
  }

  IntPoly combine(const std::vector<Integer>& w) const {
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (sgn(w[j]) == 0) continue;
      for (const auto& t : products_[j]->terms()) add_product(acc[t.mono], w[j], t.coeff);
    }
    return IntPoly::from_map(g_.rank, std::move(acc));
  }

  // Exact check of every condition; violated rows are added to the echelon.
  bool verify(const IntPoly& h) {
    bool ok = true;
    if (h.is_zero()) throw InvariantViolation("candidate solution expands to zero");
    WeightedOperand<Integer> wh(h, metric_);
    for (std::size_t c : conditions_) {
      IntPoly r = apply_diff_op(split_.primitive[c], wh, options_.threads);
      if (r.is_zero()) continue;
      ok = false;
      std::size_t added = 0;
      for (const auto& t : r.terms()) {
        if (echelon_.add(row_for(c, t.mono))) ++rows_added_;
        if (++added >= 4) break;
      }
    }
    return ok;
  }

  const GroupSpec& g_;
  const SplitBasis& split_;
  const Ansatz& ansatz_;
  const CanonicalizeOptions& options_;
  Metric metric_;
  std::vector<const IntPoly*> products_;
  std::vector<WeightedOperand<Integer>> weighted_;
  std::vector<std::size_t> conditions_;
  std::map<std::size_t, std::vector<Monomial>> targets_;
  IncrementalEchelon echelon_;
  std::mt19937_64 rng_;
  std::size_t rows_added_ = 0;
};

}  // namespace

Canonicalization canonicalize_with_basis(const GroupSpec& g, const QBasis& q, const CanonicalizeOptions& options) {
  if (q.polys.size() != g.degrees.size()) throw std::invalid_argument("basis size does not match group rank");
  for (std::size_t b = 0; b < q.polys.size(); ++b) {
    if (q.polys[b].is_zero() || !q.polys[b].is_homogeneous() || q.polys[b].degree() != g.degrees[b]) {
      throw std::invalid_argument("q_" + std::to_string(b + 1) + " is not homogeneous of degree " +
                                  std::to_string(g.degrees[b]));
    }
  }
  const SplitBasis split = split_basis(q);
  ProductCache cache(split.primitive);
  Canonicalization result;
  result.group = g.name;
  const int n = g.rank;

  for (int a = 1; a <= n;) {
    const int d = g.degrees[static_cast<std::size_t>(a - 1)];
    const int mult = g.multiplicity(d);
    if (options.progress) options.progress(a, n, d);
    const auto t0 = std::chrono::steady_clock::now();
    const Ansatz ansatz = make_ansatz(g, d);
    Canonicalization::DegreeStats stats;
    stats.degree = d;
    stats.unknowns = ansatz.monomials.size();

    DegreeSolver solver(g, split, cache, ansatz, options);
    std::vector<IntPoly> expansions;
    auto basis = solver.solve(static_cast<std::size_t>(mult), stats, expansions);
    if (basis.size() != static_cast<std::size_t>(mult)) {
      throw InvariantViolation(g.name + " degree " + std::to_string(d) + ": null space has dimension " +
                               std::to_string(basis.size()) + ", expected " + std::to_string(mult) + " (" +
                               std::to_string(ansatz.monomials.size()) + " unknowns)");
    }

    // Back to coefficients on the q basis: z_m = w_m / prod s_b^{m_b}.
    std::vector<std::vector<Rational>> zs;
    std::vector<RatPoly> hs;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Rational> z(basis[k].size());
      for (std::size_t j = 0; j < z.size(); ++j) {
        z[j] = Rational(basis[k][j]) / scale_power(split.scales, ansatz.monomials[j]);
      }
      zs.push_back(std::move(z));
      hs.push_back(to_rational(expansions[k]));
    }

    if (mult == 1) {
      result.records.push_back(fix_scale(g, a, ansatz, zs[0], hs[0], options.keep_h_poly));
    } else if (mult == 2) {
      std::vector<std::vector<Integer>> null_z;
      std::vector<RatPoly> members;
      for (std::size_t k = 0; k < 2; ++k) {
        std::size_t ref = 0;
        while (sgn(zs[k][ref]) == 0) ++ref;
        null_z.push_back(primitive_vector(zs[k], ref));
        members.push_back(hs[k].scaled(Rational(null_z[k][ref]) / zs[k][ref]));
      }
      std::vector<std::vector<Rational>> zmix;
      std::vector<RatPoly> hmix;
      result.dn_pair = dn_even_branch(g, d, null_z, members, zmix, hmix);
      for (std::size_t k = 0; k < 2; ++k) {
        result.records.push_back(fix_scale(g, a + static_cast<int>(k), ansatz, zmix[k], hmix[k], options.keep_h_poly));
      }
    } else {
      throw InvariantViolation("degree multiplicity above two is not supported");
    }
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    result.stats.push_back(stats);
    a += mult;
  }
  return result;
}

Canonicalization canonicalize_all(const GroupSpec& g, const CanonicalizeOptions& options) {
  return canonicalize_with_basis(g, build_q_basis(g), options);
}

std::vector<RatPoly> expand_records(const QBasis& q, const std::vector<TransformRecord>& records) {
  const SplitBasis split = split_basis(q);
  ProductCache cache(split.primitive);
  std::vector<RatPoly> out;
  for (const auto& rec : records) {
    if (rec.monomials.size() != rec.z.size()) throw std::invalid_argument("record z/monomial length mismatch");
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (std::size_t j = 0; j < rec.z.size(); ++j) {
      if (sgn(rec.z[j]) == 0) continue;
      const Rational c = rec.z[j] * scale_power(split.scales, rec.monomials[j]);
      for (const auto& t : cache.get(rec.monomials[j]).terms()) acc[t.mono] += c * Rational(t.coeff);
    }
    out.push_back(RatPoly::from_map(q.polys.front().nvars(), std::move(acc)));
  }
  return out;
}

}  // namespace canonbasis
