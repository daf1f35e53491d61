#pragma once

// Independent reference implementations used to cross-check the library:
// naive iterated differentiation for the pairing and textbook Gauss-Jordan
// elimination over the rationals for null spaces.

#include "canonbasis/canonicalize.hpp"

#include <random>

namespace oracle {

using namespace canonbasis;

// p(d) q by differentiating q once per operator exponent.
inline RatPoly naive_apply(const RatPoly& p, const RatPoly& q) {
  RatPoly acc(q.nvars());
  for (const auto& t : p.terms()) {
    RatPoly r = q;
    for (int i = 0; i < q.nvars() && !r.is_zero(); ++i) {
      for (unsigned k = 0; k < t.mono.exponent(i); ++k) r = partial_derivative(r, i);
    }
    acc += r.scaled(t.coeff);
  }
  return acc;
}

inline FieldElement sqrt_power(int w, unsigned e) {
  FieldElement r(1);
  const FieldElement s = Radical(1, w).to_field();
  for (unsigned k = 0; k < e; ++k) r *= s;
  return r;
}

// f(y) with y_i = sqrt(w_i) x_i, written in x.
inline FieldPoly to_x(const RatPoly& f, const std::vector<int>& w) {
  FieldPoly r = to_field(f);
  for (auto& t : r.mutable_terms()) {
    for (int i = 0; i < f.nvars(); ++i) t.coeff *= sqrt_power(w[static_cast<std::size_t>(i)], t.mono.exponent(i));
  }
  return r;
}

inline RatPoly from_x(const FieldPoly& f, const std::vector<int>& w) {
  FieldPoly r = f;
  for (auto& t : r.mutable_terms()) {
    for (int i = 0; i < f.nvars(); ++i) t.coeff /= sqrt_power(w[static_cast<std::size_t>(i)], t.mono.exponent(i));
  }
  return to_rational(r);
}

// The weighted pairing evaluated in the original coordinates.
inline RatPoly naive_apply_weighted(const RatPoly& p, const RatPoly& q, const std::vector<int>& w) {
  const FieldPoly px = to_x(p, w), qx = to_x(q, w);
  FieldPoly acc(q.nvars());
  for (const auto& t : px.terms()) {
    FieldPoly r = qx;
    for (int i = 0; i < q.nvars() && !r.is_zero(); ++i) {
      for (unsigned k = 0; k < t.mono.exponent(i); ++k) r = partial_derivative(r, i);
    }
    acc += r.scaled(t.coeff);
  }
  return from_x(acc, w);
}

inline RatPoly random_homogeneous(std::mt19937_64& rng, int nvars, unsigned degree, double density = 0.5) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  std::bernoulli_distribution keep(density);
  std::vector<RatPoly::Term> terms;
  for (Monomial m : monomials_of_degree(nvars, degree)) {
    if (!keep(rng)) continue;
    const int a = num(rng);
    if (a == 0) continue;
    terms.push_back({m, make_rational(a, den(rng))});
  }
  return RatPoly::from_terms(nvars, std::move(terms));
}

// Reduced row echelon form by Gauss-Jordan over Q; returns a null-space basis
// with a unit on each free column, scaled to primitive integers positive on
// that column.
inline std::vector<std::vector<Integer>> dense_null_space(const std::vector<std::vector<Integer>>& rows,
                                                          std::size_t n) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = Rational(r[j]);
    m.push_back(std::move(q));
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> z(n);
    Integer g = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = v[j] * Rational(l);
      z[j] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[j].get_mpz_t());
    }
    for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    basis.push_back(std::move(z));
  }
  return basis;
}

}  // namespace oracle
