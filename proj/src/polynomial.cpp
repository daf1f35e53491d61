#include "canonbasis/polynomial.hpp"

namespace canonbasis {

template class Polynomial<Integer>;
template class Polynomial<Rational>;
template class Polynomial<FieldElement>;

IntPoly to_integer(const RatPoly& p) {
  return p.map_coefficients<Integer>([](const Rational& q) {
    if (q.get_den() != 1) throw std::domain_error("coefficient " + to_string(q) + " is not integral");
    return Integer(q.get_num());
  });
}

ContentSplit content_primitive(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("content of the zero polynomial");
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational scale = make_rational(num_gcd, den_lcm);
  if (sgn(p.leading_term().coeff) < 0) scale = -scale;
  IntPoly prim(p.nvars());
  auto& out = prim.mutable_terms();
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rational q = t.coeff / scale;
    out.push_back({t.mono, Integer(q.get_num())});
  }
  return {scale, std::move(prim)};
}

ContentSplit content_primitive(const FieldPoly& p) { return content_primitive(to_rational(p)); }

}  // namespace canonbasis
