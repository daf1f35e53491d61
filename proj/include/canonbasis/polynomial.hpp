#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over Integer, Rational or
 * FieldElement coefficients.
 *
 * Terms are kept in a sorted vector, leading (grevlex-largest) term first,
 * with no zero coefficients. The three coefficient rings share one template;
 * the rational and integer instantiations are the fast path used for every
 * large computation, the FieldElement one carries data with sqrt2/sqrt3.
 */

#include "canonbasis/coeff.hpp"
#include "canonbasis/monomial.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace canonbasis {

template <Coefficient C>
class Polynomial {
 public:
  using coefficient_type = C;
  struct Term {
    Monomial mono;
    C coeff;
  };

  explicit Polynomial(int nvars = 1) : nvars_(nvars) { check_nvars(nvars); }

  static Polynomial constant(int nvars, const C& c) {
    Polynomial p(nvars);
    if (!canonbasis::is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }

  /// x_{index+1}; index is zero-based.
  static Polynomial variable(int nvars, int index, const C& c = C(1)) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Polynomial p(nvars);
    if (!canonbasis::is_zero(c)) p.terms_.push_back({Monomial::variable(index), c});
    return p;
  }

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(int nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
    for (auto& t : terms) {
      check_monomial(t.mono, nvars);
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && canonbasis::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && canonbasis::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    return p;
  }

  /// Builds from a monomial -> coefficient map (order irrelevant).
  template <class Map>
  static Polynomial from_map(int nvars, Map&& acc) {
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [mono, c] : acc) {
      if (!canonbasis::is_zero(c)) terms.push_back({mono, std::move(c)});
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
    Polynomial p(nvars);
    p.terms_ = std::move(terms);
    return p;
  }

  int nvars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.front();
  }

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.total_degree());
  }

  /// True for zero and for polynomials whose monomials share one degree.
  bool is_homogeneous() const {
    return terms_.empty() || terms_.front().mono.total_degree() == terms_.back().mono.total_degree();
  }

  /// Throws std::invalid_argument unless homogeneous; returns the degree (-1 for 0).
  int homogeneous_degree() const {
    if (!is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
    return degree();
  }

  C coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial key) {
      return grevlex_greater(t.mono, key);
    });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return C(0);
  }

  /// Bit mask of variables that only occur with even exponents.
  unsigned even_variable_mask() const {
    std::uint64_t odd = 0;
    for (const auto& t : terms_) odd |= t.mono.packed() & 0x0101010101010101ULL;
    unsigned mask = 0;
    for (int i = 0; i < nvars_; ++i) {
      if (((odd >> (8 * i)) & 1u) == 0) mask |= 1u << i;
    }
    return mask;
  }

  bool all_rational() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return is_rational_value(t.coeff); });
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }

  Polynomial scaled(const C& s) const {
    if (canonbasis::is_zero(s)) return Polynomial(nvars_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= s;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  /// Converts coefficients into another ring via `f`.
  template <Coefficient D, class F>
  Polynomial<D> map_coefficients(F&& f) const {
    std::vector<typename Polynomial<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, f(t.coeff)});
    return Polynomial<D>::from_terms(nvars_, std::move(out));
  }

  /// Appends a term that sorts after every existing term; used by builders
  /// that already produce grevlex-descending output.
  void push_back_sorted(Monomial m, C c) {
    if (canonbasis::is_zero(c)) return;
    if (!terms_.empty() && !grevlex_greater(terms_.back().mono, m)) {
      throw std::logic_error("push_back_sorted out of order");
    }
    terms_.push_back({m, std::move(c)});
  }

  std::vector<Term>& mutable_terms() { return terms_; }

 private:
  static void check_nvars(int n) {
    if (n < 1 || n > Monomial::kMaxVars) {
      throw std::invalid_argument("polynomials need between 1 and 8 variables");
    }
  }
  static void check_monomial(Monomial m, int nvars) {
    if (nvars < Monomial::kMaxVars && (m.packed() >> (8 * nvars)) != 0) {
      throw std::out_of_range("monomial uses a variable beyond nvars");
    }
    for (int i = 0; i < nvars; ++i) {
      if (m.exponent(i) > Monomial::kMaxExponent) throw std::out_of_range("exponent above 127");
    }
  }
  static void require_same_nvars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials have different nvars");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_nvars(a, b);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && grevlex_greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grevlex_greater(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? C(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        C c = subtract ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (!canonbasis::is_zero(c)) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    require_same_nvars(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
    if (a.degree() + b.degree() > static_cast<int>(Monomial::kMaxExponent)) {
      throw std::out_of_range("product degree exceeds 127");
    }
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    if (small.size() == 1) {
      const auto& s = small.terms_.front();
      Polynomial r(a.nvars_);
      r.terms_.reserve(large.size());
      for (const auto& t : large.terms_) r.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
      return r;  // multiplying by a monomial preserves grevlex order
    }
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(small.size() * large.size(), 1u << 22));
    for (const auto& s : small.terms_) {
      for (const auto& t : large.terms_) add_product(acc[t.mono * s.mono], t.coeff, s.coeff);
    }
    return from_map(a.nvars_, std::move(acc));
  }

  int nvars_;
  std::vector<Term> terms_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;
using FieldPoly = Polynomial<FieldElement>;

// ---------------------------------------------------------------------------
// Free operations

/// The linear form sum_i coeffs[i] * x_{i+1}.
template <Coefficient C>
Polynomial<C> linear_form(std::span<const C> coeffs) {
  Polynomial<C> p(static_cast<int>(coeffs.size()));
  std::vector<typename Polynomial<C>::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!canonbasis::is_zero(coeffs[i])) terms.push_back({Monomial::variable(static_cast<int>(i)), coeffs[i]});
  }
  return Polynomial<C>::from_terms(static_cast<int>(coeffs.size()), std::move(terms));
}

namespace detail {

// (sum_i c_i x_{v_i})^k expanded by the multinomial theorem.
template <Coefficient C>
Polynomial<C> linear_form_power(const Polynomial<C>& form, unsigned k) {
  const auto& ts = form.terms();
  const std::size_t m = ts.size();
  // powers[i][e] = c_i^e
  std::vector<std::vector<C>> powers(m, std::vector<C>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    powers[i][0] = C(1);
    for (unsigned e = 1; e <= k; ++e) powers[i][e] = powers[i][e - 1] * ts[i].coeff;
  }
  std::vector<Integer> fact(k + 1);
  for (unsigned e = 0; e <= k; ++e) fact[e] = factorial(e);
  std::vector<typename Polynomial<C>::Term> out;
  std::vector<unsigned> e(m, 0);
  // Iterate over compositions of k into m parts.
  auto recurse = [&](auto&& self, std::size_t i, unsigned remaining, Integer denom, C coeff,
                     std::uint64_t packed) -> void {
    if (i + 1 == m) {
      Integer multinom = fact[k] / (denom * fact[remaining]);
      C c = coeff * powers[i][remaining];
      scale_by(c, multinom);
      std::uint64_t w = packed + ts[i].mono.packed() * remaining;
      out.push_back({Monomial::from_packed(w), std::move(c)});
      return;
    }
    for (unsigned x = 0; x <= remaining; ++x) {
      self(self, i + 1, remaining - x, denom * fact[x], coeff * powers[i][x],
           packed + ts[i].mono.packed() * x);
    }
  };
  recurse(recurse, 0, k, Integer(1), C(1), 0);
  return Polynomial<C>::from_terms(form.nvars(), std::move(out));
}

}  // namespace detail

/// p^k by binary exponentiation (p^0 = 1); linear forms use the multinomial
/// expansion directly.
template <Coefficient C>
Polynomial<C> pow(const Polynomial<C>& p, unsigned k) {
  if (k == 0) return Polynomial<C>::constant(p.nvars(), C(1));
  if (p.is_zero()) return p;
  if (static_cast<long>(p.degree()) * k > static_cast<long>(Monomial::kMaxExponent)) {
    throw std::out_of_range("power degree exceeds 127");
  }
  bool linear = std::all_of(p.terms().begin(), p.terms().end(),
                            [](const auto& t) { return t.mono.total_degree() == 1; });
  if (linear && p.size() > 1) return detail::linear_form_power(p, k);
  Polynomial<C> result = Polynomial<C>::constant(p.nvars(), C(1));
  Polynomial<C> base = p;
  while (true) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k == 0) break;
    base *= base;
  }
  return result;
}

/// d p / d x_{index+1}; index is zero-based.
template <Coefficient C>
Polynomial<C> partial_derivative(const Polynomial<C>& p, int index) {
  if (index < 0 || index >= p.nvars()) throw std::out_of_range("variable index out of range");
  const Monomial unit = Monomial::variable(index);
  Polynomial<C> r(p.nvars());
  auto& out = r.mutable_terms();
  // Dividing every surviving monomial by the same x_i keeps grevlex order.
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exponent(index);
    if (e == 0) continue;
    C c = t.coeff;
    scale_by(c, Integer(e));
    out.push_back({t.mono / unit, std::move(c)});
  }
  return r;
}

/// Exact value at `point` (length nvars). Coefficients and point share a ring.
template <Coefficient C>
C evaluate(const Polynomial<C>& p, std::span<const C> point) {
  if (point.size() != static_cast<std::size_t>(p.nvars())) {
    throw std::invalid_argument("evaluation point has wrong length");
  }
  const int n = p.nvars();
  std::vector<std::vector<C>> powers(static_cast<std::size_t>(n));
  int deg = std::max(p.degree(), 0);
  for (int i = 0; i < n; ++i) {
    auto& row = powers[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(deg) + 1);
    row[0] = C(1);
    for (int e = 1; e <= deg; ++e) row[static_cast<std::size_t>(e)] = row[static_cast<std::size_t>(e) - 1] * point[static_cast<std::size_t>(i)];
  }
  C total(0);
  for (const auto& t : p.terms()) {
    C v = t.coeff;
    for (int i = 0; i < n; ++i) {
      unsigned e = t.mono.exponent(i);
      if (e) v *= powers[static_cast<std::size_t>(i)][e];
    }
    total += v;
  }
  return total;
}

/// Converts to rational coefficients; throws std::domain_error on an
/// irrational coefficient.
template <Coefficient C>
RatPoly to_rational(const Polynomial<C>& p) {
  return p.template map_coefficients<Rational>([](const C& c) { return to_rational_value(c); });
}

template <Coefficient C>
FieldPoly to_field(const Polynomial<C>& p) {
  return p.template map_coefficients<FieldElement>([](const C& c) { return to_field_value(c); });
}

/// Integer coefficients as rationals.
inline RatPoly to_rational(const IntPoly& p) {
  return p.template map_coefficients<Rational>([](const Integer& c) { return Rational(c); });
}

/// Requires integral rational coefficients.
IntPoly to_integer(const RatPoly& p);

/// Result of content_primitive: p = scale * primitive.
struct ContentSplit {
  Rational scale;
  IntPoly primitive;
};

/// Splits a nonzero rational polynomial into a rational content and an
/// integer polynomial with coprime coefficients and positive leading
/// coefficient. Throws std::invalid_argument for the zero polynomial.
ContentSplit content_primitive(const RatPoly& p);
/// FieldElement overload; throws std::domain_error if a coefficient is irrational.
ContentSplit content_primitive(const FieldPoly& p);

extern template class Polynomial<Integer>;
extern template class Polynomial<Rational>;
extern template class Polynomial<FieldElement>;

}  // namespace canonbasis
