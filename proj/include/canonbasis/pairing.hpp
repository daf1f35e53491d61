#pragma once

/**
 * @file pairing.hpp
 * @brief The differential pairing (p, q)(x) = p(d) q(x) and the canonical
 * norm ||p||^2 = (p, p).
 *
 * For an operator monomial x^a and operand monomial x^b with b >= a the
 * contribution is b!/(b-a)! x^(b-a). Both kernels below rewrite this as
 * (1/g!) * (a+g)! q_{a+g} with g = b - a, so the operand is weighted once by
 * its monomial factorials and the inner loop is a plain multiply-add.
 *
 * A diagonal Metric generalizes the weight a! to a! w^a. Polynomials stored
 * in rescaled coordinates y_i = sqrt(w_i) x_i pair exactly like the original
 * ones once this weight is used, which keeps such data rational.
 */

#include "canonbasis/parallel.hpp"
#include "canonbasis/polynomial.hpp"

#include <array>
#include <bit>
#include <unordered_map>

namespace canonbasis {

/// n! for n <= 127, from a precomputed table.
const Integer& factorial_cached(unsigned n);

/// prod_i e_i! over the exponents of m.
Integer monomial_factorial(Monomial m);

/// Positive integer weights per variable; all ones by default.
class Metric {
 public:
  Metric() { weights_.fill(1); }
  explicit Metric(const std::vector<int>& weights);

  bool trivial() const { return trivial_; }
  unsigned weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  std::vector<int> weights(int nvars) const;

  /// w^m = prod_i w_i^{e_i}
  Integer power(Monomial m) const;

  friend bool operator==(const Metric& a, const Metric& b) { return a.weights_ == b.weights_; }

 private:
  std::array<unsigned, Monomial::kMaxVars> weights_{};
  bool trivial_ = true;
};

/// m! w^m, the weight of monomial m in the pairing.
Integer monomial_weight(Monomial m, const Metric& metric);

/// Operand polynomial with coefficients pre-multiplied by the monomial
/// weights and a hash index for O(1) lookups.
template <Coefficient C>
class WeightedOperand {
 public:
  explicit WeightedOperand(const Polynomial<C>& q, const Metric& metric = Metric())
      : poly_(&q), metric_(metric) {
    weighted_.reserve(q.size());
    index_.reserve(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      const auto& t = q.terms()[i];
      C w = t.coeff;
      scale_by(w, monomial_weight(t.mono, metric_));
      weighted_.push_back(std::move(w));
      index_.emplace(t.mono, static_cast<std::uint32_t>(i));
    }
  }

  const Polynomial<C>& poly() const { return *poly_; }
  const Metric& metric() const { return metric_; }
  const C* find(Monomial m) const {
    auto it = index_.find(m);
    return it == index_.end() ? nullptr : &weighted_[it->second];
  }
  const C& weighted(std::size_t i) const { return weighted_[i]; }

 private:
  const Polynomial<C>* poly_;
  Metric metric_;
  std::vector<C> weighted_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

namespace detail {

template <Coefficient C>
void check_pairing_args(const Polynomial<C>& p, const Polynomial<C>& q) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("pairing: mismatched nvars");
  if (!p.is_homogeneous() || !q.is_homogeneous()) {
    throw std::invalid_argument("pairing: operands must be homogeneous");
  }
}

}  // namespace detail

/// p(d) applied to q. Zero when deg p > deg q, a constant when the degrees
/// agree and homogeneous of degree deg q - deg p otherwise.
template <Coefficient C>
Polynomial<C> apply_diff_op(const Polynomial<C>& p, const WeightedOperand<C>& wq, unsigned threads = 1) {
  const Polynomial<C>& q = wq.poly();
  detail::check_pairing_args(p, q);
  const int n = q.nvars();
  if (p.is_zero() || q.is_zero() || p.degree() > q.degree()) return Polynomial<C>(n);
  const unsigned out_degree = static_cast<unsigned>(q.degree() - p.degree());
  const unsigned even = p.even_variable_mask() & q.even_variable_mask();

  // Strategy 1: enumerate candidate result monomials and look up a+g in q.
  // Strategy 2: test every (a, b) pair for divisibility.
  const double lookup_cost = static_cast<double>(p.size()) *
                             static_cast<double>(count_monomials(n, out_degree)) /
                             static_cast<double>(1u << std::popcount(even));
  const double pair_cost = static_cast<double>(p.size()) * static_cast<double>(q.size());

  if (lookup_cost <= pair_cost) {
    const std::vector<Monomial> targets = monomials_of_degree(n, out_degree, even);
    std::vector<C> values(targets.size());
    parallel_for(targets.size(), threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        C acc(0);
        for (const auto& a : p.terms()) {
          if (const C* w = wq.find(a.mono * targets[k])) add_product(acc, a.coeff, *w);
        }
        if (!is_zero(acc)) divide_exact(acc, monomial_weight(targets[k], wq.metric()));
        values[k] = std::move(acc);
      }
    });
    Polynomial<C> r(n);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if (!is_zero(values[k])) r.push_back_sorted(targets[k], std::move(values[k]));
    }
    return r;
  }

  std::unordered_map<Monomial, C, MonomialHash> acc;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const Monomial b = q.terms()[j].mono;
    for (const auto& a : p.terms()) {
      if (b.divisible_by(a.mono)) add_product(acc[b / a.mono], a.coeff, wq.weighted(j));
    }
  }
  for (auto& [g, v] : acc) {
    if (!is_zero(v)) divide_exact(v, monomial_weight(g, wq.metric()));
  }
  return Polynomial<C>::from_map(n, std::move(acc));
}

template <Coefficient C>
Polynomial<C> apply_diff_op(const Polynomial<C>& p, const Polynomial<C>& q, unsigned threads = 1,
                            const Metric& metric = Metric()) {
  detail::check_pairing_args(p, q);
  if (p.is_zero() || q.is_zero() || p.degree() > q.degree()) return Polynomial<C>(q.nvars());
  return apply_diff_op(p, WeightedOperand<C>(q, metric), threads);
}

/// (p, q) for equal degrees: sum over shared monomials of a! w^a p_a q_a.
template <Coefficient C>
C pairing_number(const Polynomial<C>& p, const Polynomial<C>& q, const Metric& metric = Metric()) {
  detail::check_pairing_args(p, q);
  if (!p.is_zero() && !q.is_zero() && p.degree() != q.degree()) {
    throw std::invalid_argument("pairing_number: degrees differ");
  }
  C total(0);
  std::size_t i = 0, j = 0;
  const auto& a = p.terms();
  const auto& b = q.terms();
  while (i < a.size() && j < b.size()) {
    if (a[i].mono == b[j].mono) {
      C v = a[i].coeff * b[j].coeff;
      scale_by(v, monomial_weight(a[i].mono, metric));
      total += v;
      ++i;
      ++j;
    } else if (grevlex_greater(a[i].mono, b[j].mono)) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

/// ||p||_c^2 = (p, p).
template <Coefficient C>
C norm_sq(const Polynomial<C>& p, const Metric& metric = Metric()) {
  if (!p.is_homogeneous()) throw std::invalid_argument("norm_sq: polynomial must be homogeneous");
  C total(0);
  for (const auto& t : p.terms()) {
    C v = t.coeff * t.coeff;
    scale_by(v, monomial_weight(t.mono, metric));
    total += v;
  }
  return total;
}

}  // namespace canonbasis
