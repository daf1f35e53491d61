#include "canonbasis/pairing.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace canonbasis;

namespace {

RatPoly x(int n, int i) { return RatPoly::variable(n, i); }

}  // namespace

TEST(Pairing, LaplacianOfQuartic) {
  // (sum x^2)(d) sum x^4 = 12 sum x^2
  const int n = 3;
  RatPoly p(n), q(n), expect(n);
  for (int i = 0; i < n; ++i) {
    p += pow(x(n, i), 2);
    q += pow(x(n, i), 4);
    expect += pow(x(n, i), 2).scaled(Rational(12));
  }
  EXPECT_EQ(apply_diff_op(p, q), expect);
}

TEST(Pairing, HigherOperatorDegreeGivesZero) {
  EXPECT_TRUE(apply_diff_op(pow(x(2, 0), 3), pow(x(2, 0), 2)).is_zero());
}

TEST(Pairing, NormOfMonomial) {
  // ||x^a||^2 = a!
  const RatPoly m = pow(x(3, 0), 2) * pow(x(3, 2), 3);
  EXPECT_EQ(norm_sq(m), Rational(12));
  EXPECT_EQ(pairing_number(m, m), Rational(12));
  EXPECT_EQ(pairing_number(m, pow(x(3, 1), 5)), Rational(0));
}

TEST(Pairing, MetricWeightsOddAndEvenPowers) {
  // y = sqrt(3) x: ||y^2||^2 = 2! * 3^2
  Metric m({1, 3});
  EXPECT_EQ(norm_sq(pow(x(2, 1), 2), m), Rational(18));
  EXPECT_EQ(monomial_weight(Monomial::from_exponents(std::vector<int>{2, 3}), m), Integer(2 * 6 * 27));
  EXPECT_FALSE(m.trivial());
  EXPECT_TRUE(Metric().trivial());
}

TEST(Pairing, RejectsInhomogeneousOperands) {
  RatPoly p = x(2, 0) + pow(x(2, 1), 2);
  EXPECT_THROW(apply_diff_op(p, p), std::invalid_argument);
}

TEST(Pairing, AgreesWithIteratedDifferentiation) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> nv(1, 4), dq(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = nv(rng);
    const unsigned degq = static_cast<unsigned>(dq(rng));
    const unsigned degp = std::uniform_int_distribution<unsigned>(0, degq)(rng);
    const RatPoly p = oracle::random_homogeneous(rng, n, degp);
    const RatPoly q = oracle::random_homogeneous(rng, n, degq);
    EXPECT_EQ(apply_diff_op(p, q), oracle::naive_apply(p, q)) << "trial " << trial;
  }
}

TEST(Pairing, WeightedAgreesWithOriginalCoordinates) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> wpick(0, 3), dq(0, 6);
  const int choices[] = {1, 2, 3, 6};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3;
    std::vector<int> w(n);
    for (auto& v : w) v = choices[wpick(rng)];
    const unsigned degq = static_cast<unsigned>(dq(rng));
    const unsigned degp = std::uniform_int_distribution<unsigned>(0, degq)(rng);
    const RatPoly p = oracle::random_homogeneous(rng, n, degp);
    const RatPoly q = oracle::random_homogeneous(rng, n, degq);
    EXPECT_EQ(apply_diff_op(p, q, 1, Metric(w)), oracle::naive_apply_weighted(p, q, w)) << "trial " << trial;
  }
}

TEST(Pairing, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(5);
  const RatPoly p = oracle::random_homogeneous(rng, 4, 3, 0.8);
  const RatPoly q = oracle::random_homogeneous(rng, 4, 8, 0.8);
  EXPECT_EQ(apply_diff_op(p, q, 1), apply_diff_op(p, q, 4));
}

TEST(Pairing, SymmetricInEqualDegree) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10; ++k) {
    const RatPoly p = oracle::random_homogeneous(rng, 3, 4);
    const RatPoly q = oracle::random_homogeneous(rng, 3, 4);
    EXPECT_EQ(pairing_number(p, q), pairing_number(q, p));
  }
}
