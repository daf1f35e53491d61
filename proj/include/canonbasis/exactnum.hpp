#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact scalars: GMP-backed integers and rationals, elements of the
 * real biquadratic field Q(sqrt2, sqrt3), and symbolic square-root radicals.
 *
 * FieldElement stores a + b*sqrt2 + c*sqrt3 + d*sqrt6 with four canonical
 * rationals, so equality is component-wise and zero has a unique form.
 * Radical stores scale*sqrt(radicand) with a square-free radicand and is
 * never expanded into a FieldElement unless the radicand divides 6.
 */

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canonbasis {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an internal consistency check fails (a construction bug, not
/// bad user input).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "num/den", with "/den" omitted when den == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "num" or "num/den" (optional leading '-'). Throws
/// std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// Binomial and factorial helpers used by the polynomial kernels.
Integer factorial(unsigned n);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const Integer& v) : a_(v) {}  // NOLINT
  FieldElement(const Rational& v) : a_(v) {}  // NOLINT
  FieldElement(Rational a, Rational b, Rational c, Rational d);

  static FieldElement sqrt2() { return {0, 1, 0, 0}; }
  static FieldElement sqrt3() { return {0, 0, 1, 0}; }
  static FieldElement sqrt6() { return {0, 0, 0, 1}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  const Rational& sqrt3_part() const { return c_; }
  const Rational& sqrt6_part() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && is_rational(); }
  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0; }
  /// Returns the rational value; throws std::domain_error if irrational.
  const Rational& as_rational() const;

  /// Exact sign of the real number represented.
  int sign() const;

  /// Multiplicative inverse; throws std::domain_error on zero.
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    return x * y.inverse();
  }
  FieldElement operator-() const { return {-a_, -b_, -c_, -d_}; }

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  /// Component-wise lexicographic order (not the numeric order); usable as a
  /// key in ordered containers.
  static bool lex_less(const FieldElement& x, const FieldElement& y);

  /// The four component strings, in the order (1, sqrt2, sqrt3, sqrt6).
  std::array<std::string, 4> components() const;
  static FieldElement from_components(const std::array<std::string, 4>& parts);

  /// Human-readable form such as "1/2 + 3*sqrt2 - sqrt6".
  std::string to_string() const;

 private:
  Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// The 4x4 rational matrix of multiplication by x in the basis
/// (1, sqrt2, sqrt3, sqrt6); column k holds the components of x*basis_k.
std::array<std::array<Rational, 4>, 4> multiplication_matrix(const FieldElement& x);

/// Exact value scale * sqrt(radicand), radicand square-free and >= 1.
class Radical {
 public:
  Radical() : scale_(0), radicand_(1) {}
  Radical(Rational scale, Integer radicand);  // checks square-freeness

  const Rational& scale() const { return scale_; }
  const Integer& radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 1; }
  bool is_zero() const { return sgn(scale_) == 0; }

  /// scale^2 * radicand.
  Rational square() const;
  Radical operator*(const Radical& o) const;
  Radical reciprocal() const;
  /// Only defined for radicands dividing 6.
  FieldElement to_field() const;

  friend bool operator==(const Radical& x, const Radical& y) {
    return x.scale_ == y.scale_ && x.radicand_ == y.radicand_;
  }

  std::string to_string() const;

 private:
  Rational scale_;
  Integer radicand_;
};

/// scale * sqrt(radicand) with square factors moved into the scale.
/// Throws std::invalid_argument when radicand <= 0.
Radical radical_simplify(const Rational& scale, const Integer& radicand);

/// 1/sqrt(value) for a positive rational value, simplified.
Radical inverse_sqrt(const Rational& value);

/// Writes n = root^2 * squarefree with squarefree square-free; n > 0.
std::pair<Integer, Integer> square_free_decomposition(const Integer& n);

/// Prime factorisation (ascending, with multiplicity) of n > 0.
std::vector<Integer> factor_integer(const Integer& n);

std::ostream& operator<<(std::ostream& os, const Radical& r);

}  // namespace canonbasis
