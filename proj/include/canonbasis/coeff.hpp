#pragma once

// Uniform helpers over the three coefficient rings used by the polynomial
// templates: Integer (mpz_class), Rational (mpq_class) and FieldElement.

#include "canonbasis/exactnum.hpp"

#include <string>
#include <type_traits>

namespace canonbasis {

template <class C>
concept Coefficient = std::is_same_v<C, Integer> || std::is_same_v<C, Rational> ||
                      std::is_same_v<C, FieldElement>;

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

inline bool is_one(const Integer& z) { return z == 1; }
inline bool is_one(const Rational& q) { return q == 1; }
inline bool is_one(const FieldElement& x) { return x.is_rational() && x.rational_part() == 1; }

/// acc += a * b without temporaries where the ring allows it.
inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void add_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void add_product(FieldElement& acc, const FieldElement& a, const FieldElement& b) {
  acc += a * b;
}

/// Multiplies by a nonnegative integer factor.
inline void scale_by(Integer& x, const Integer& k) { x *= k; }
inline void scale_by(Rational& x, const Integer& k) { x *= Rational(k); }
inline void scale_by(FieldElement& x, const Integer& k) { x *= FieldElement(k); }

/// Exact division by a nonzero integer known to divide x (Integer case).
inline void divide_exact(Integer& x, const Integer& k) {
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
}
inline void divide_exact(Rational& x, const Integer& k) { x /= Rational(k); }
inline void divide_exact(FieldElement& x, const Integer& k) { x *= FieldElement(Rational(1) / Rational(k)); }

inline bool is_rational_value(const Integer&) { return true; }
inline bool is_rational_value(const Rational&) { return true; }
inline bool is_rational_value(const FieldElement& x) { return x.is_rational(); }

inline Rational to_rational_value(const Integer& z) { return Rational(z); }
inline Rational to_rational_value(const Rational& q) { return q; }
inline Rational to_rational_value(const FieldElement& x) { return x.as_rational(); }

inline FieldElement to_field_value(const Integer& z) { return FieldElement(z); }
inline FieldElement to_field_value(const Rational& q) { return FieldElement(q); }
inline FieldElement to_field_value(const FieldElement& x) { return x; }

inline std::string coeff_string(const Integer& z) { return z.get_str(); }
inline std::string coeff_string(const Rational& q) { return to_string(q); }
inline std::string coeff_string(const FieldElement& x) { return x.to_string(); }

}  // namespace canonbasis
