#include "canonbasis/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace canonbasis {

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("monomials support at most 8 variables");
  }
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || static_cast<unsigned>(exps[i]) > kMaxExponent) {
      throw std::out_of_range("exponent " + std::to_string(exps[i]) + " outside [0, 127]");
    }
    w |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
  }
  return from_packed(w);
}

Monomial Monomial::variable(int index, unsigned power) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (power > kMaxExponent) throw std::out_of_range("exponent outside [0, 127]");
  return from_packed(static_cast<std::uint64_t>(power) << (8 * index));
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> e(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>(exponent(i));
  return e;
}

std::string Monomial::to_string(int nvars) const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < nvars; ++i) os << (i ? "," : "") << exponent(i);
  os << ']';
  return os.str();
}

namespace {

void enumerate(int var, int nvars, unsigned remaining, unsigned even_mask, std::uint64_t acc,
               std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    if ((even_mask >> var & 1u) && remaining % 2 != 0) return;
    out.push_back(Monomial::from_packed(acc | static_cast<std::uint64_t>(remaining) << (8 * var)));
    return;
  }
  unsigned step = (even_mask >> var & 1u) ? 2 : 1;
  for (unsigned e = 0; e <= remaining; e += step) {
    enumerate(var + 1, nvars, remaining - e, even_mask, acc | static_cast<std::uint64_t>(e) << (8 * var),
              out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, unsigned degree, unsigned even_mask) {
  if (nvars < 1 || nvars > Monomial::kMaxVars) throw std::invalid_argument("bad variable count");
  if (degree > Monomial::kMaxExponent) throw std::out_of_range("degree too large");
  std::vector<Monomial> out;
  enumerate(0, nvars, degree, even_mask, 0, out);
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

std::uint64_t count_monomials(int nvars, unsigned degree) {
  // C(degree + nvars - 1, nvars - 1)
  std::uint64_t r = 1;
  for (int k = 1; k < nvars; ++k) r = r * (degree + static_cast<unsigned>(k)) / static_cast<unsigned>(k);
  return r;
}

}  // namespace canonbasis
