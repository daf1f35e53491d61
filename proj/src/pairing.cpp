#include "canonbasis/pairing.hpp"

#include <array>

namespace canonbasis {

const Integer& factorial_cached(unsigned n) {
  static const std::array<Integer, Monomial::kMaxExponent + 1> table = [] {
    std::array<Integer, Monomial::kMaxExponent + 1> t;
    t[0] = 1;
    for (unsigned k = 1; k < t.size(); ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  if (n >= table.size()) throw std::out_of_range("factorial table exceeded");
  return table[n];
}

Integer monomial_factorial(Monomial m) {
  Integer r = 1;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    unsigned e = m.exponent(i);
    if (e > 1) r *= factorial_cached(e);
  }
  return r;
}

Metric::Metric(const std::vector<int>& weights) {
  if (weights.size() > weights_.size()) throw std::invalid_argument("metric: too many variables");
  weights_.fill(1);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) throw std::invalid_argument("metric weights must be positive");
    weights_[i] = static_cast<unsigned>(weights[i]);
    if (weights[i] != 1) trivial_ = false;
  }
}

std::vector<int> Metric::weights(int nvars) const {
  return std::vector<int>(weights_.begin(), weights_.begin() + nvars);
}

Integer Metric::power(Monomial m) const {
  Integer r = 1;
  if (trivial_) return r;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    unsigned e = m.exponent(i);
    if (e == 0 || weights_[static_cast<std::size_t>(i)] == 1) continue;
    Integer f;
    mpz_ui_pow_ui(f.get_mpz_t(), weights_[static_cast<std::size_t>(i)], e);
    r *= f;
  }
  return r;
}

Integer monomial_weight(Monomial m, const Metric& metric) {
  Integer r = monomial_factorial(m);
  if (!metric.trivial()) r *= metric.power(m);
  return r;
}

}  // namespace canonbasis
