#include "canonbasis/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace canonbasis;

namespace {

Monomial mono(std::vector<int> e) { return Monomial::from_exponents(e); }

RatPoly x(int n, int i) { return RatPoly::variable(n, i); }

}  // namespace

TEST(Monomial, PackingAndArithmetic) {
  const Monomial a = mono({1, 2, 0, 3});
  EXPECT_EQ(a.exponent(0), 1u);
  EXPECT_EQ(a.exponent(3), 3u);
  EXPECT_EQ(a.total_degree(), 6u);
  EXPECT_EQ((a * mono({0, 1})).exponent(1), 3u);
  EXPECT_TRUE(a.divisible_by(mono({1, 1})));
  EXPECT_FALSE(a.divisible_by(mono({2})));
  EXPECT_THROW(mono({128}), std::out_of_range);
}

TEST(Monomial, GradedReverseLexOrder) {
  // degree first
  EXPECT_TRUE(grevlex_greater(mono({0, 0, 3}), mono({1, 1})));
  // same degree: the smaller last exponent is greater
  EXPECT_TRUE(grevlex_greater(mono({2, 0, 0}), mono({1, 1, 0})));
  EXPECT_TRUE(grevlex_greater(mono({1, 1, 0}), mono({0, 2, 0})));
  EXPECT_TRUE(grevlex_greater(mono({0, 2, 0}), mono({1, 0, 1})));
}

TEST(Monomial, EnumerationCounts) {
  EXPECT_EQ(monomials_of_degree(3, 4).size(), 15u);
  EXPECT_EQ(count_monomials(8, 30), 10295472u);
  // even exponents in every variable
  for (Monomial m : monomials_of_degree(3, 4, 0b111)) {
    for (int i = 0; i < 3; ++i) EXPECT_EQ(m.exponent(i) % 2, 0u);
  }
  EXPECT_EQ(monomials_of_degree(3, 4, 0b111).size(), 6u);
}

TEST(Polynomial, TermsStaySortedAndCancel) {
  RatPoly p = x(3, 0) * x(3, 0) + x(3, 1) * x(3, 2) - x(3, 0) * x(3, 0);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.leading_term().mono, mono({0, 1, 1}));
  RatPoly q = (x(3, 0) + x(3, 1)) * (x(3, 0) - x(3, 1));
  EXPECT_EQ(q.size(), 2u);
  EXPECT_EQ(q.coefficient(mono({0, 2})), Rational(-1));
  EXPECT_TRUE(q.is_homogeneous());
  EXPECT_EQ(q.degree(), 2);
}

TEST(Polynomial, FromTermsMergesDuplicates) {
  RatPoly p = RatPoly::from_terms(2, {{mono({1, 0}), Rational(2)}, {mono({0, 1}), Rational(1)}, {mono({1, 0}), Rational(-2)}});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_THROW(RatPoly::from_terms(2, {{mono({0, 0, 1}), Rational(1)}}), std::out_of_range);
}

TEST(Polynomial, PowerMatchesRepeatedProduct) {
  RatPoly f = x(3, 0) + RatPoly::variable(3, 1, Rational(2)) - x(3, 2);
  RatPoly r = RatPoly::constant(3, Rational(1));
  for (int k = 0; k < 5; ++k) r *= f;
  EXPECT_EQ(pow(f, 5), r);
  EXPECT_EQ(detail::linear_form_power(f, 5), r);
}

TEST(Polynomial, PartialDerivative) {
  RatPoly p = pow(x(2, 0), 3) * x(2, 1);
  EXPECT_EQ(partial_derivative(p, 0), (pow(x(2, 0), 2) * x(2, 1)).scaled(Rational(3)));
  EXPECT_TRUE(partial_derivative(partial_derivative(p, 1), 1).is_zero());
}

TEST(Polynomial, EvaluateFieldPoint) {
  FieldPoly p = to_field(pow(x(2, 0), 2) + x(2, 1));
  std::vector<FieldElement> point = {FieldElement::sqrt2(), FieldElement(3)};
  EXPECT_EQ(evaluate(p, std::span<const FieldElement>(point)), FieldElement(5));
}

TEST(Polynomial, ContentPrimitive) {
  RatPoly p = x(2, 0).scaled(Rational(-4, 3)) + x(2, 1).scaled(Rational(2));
  ContentSplit s = content_primitive(p);
  EXPECT_EQ(to_rational(s.primitive).scaled(s.scale), p);
  EXPECT_GT(sgn(s.primitive.leading_term().coeff), 0);
  EXPECT_THROW(content_primitive(RatPoly(2)), std::invalid_argument);
}

TEST(Polynomial, DegreeGuard) {
  RatPoly p = pow(x(1, 0), 100);
  EXPECT_THROW(p * p, std::out_of_range);
}

TEST(Polynomial, MultiplicationIsCommutativeAndDistributive) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-5, 5);
  auto random_poly = [&] {
    std::vector<RatPoly::Term> t;
    for (Monomial m : monomials_of_degree(3, 2)) t.push_back({m, Rational(c(rng))});
    return RatPoly::from_terms(3, std::move(t));
  };
  for (int k = 0; k < 20; ++k) {
    RatPoly a = random_poly(), b = random_poly(), d = random_poly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + d), a * b + a * d);
  }
}
