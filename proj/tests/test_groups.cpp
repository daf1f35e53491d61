#include "canonbasis/groups.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace canonbasis;

namespace {

// Rank of the Jacobian of `basis` at a rational point, by elimination over Q.
int jacobian_rank_at(const std::vector<RatPoly>& basis, const std::vector<Rational>& point) {
  const std::size_t n = basis.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      m[a][i] = evaluate(partial_derivative(basis[a], static_cast<int>(i)), std::span<const Rational>(point));
    }
  }
  int rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < n && sgn(m[p][col]) == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == static_cast<std::size_t>(rank) || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[static_cast<std::size_t>(rank)][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[static_cast<std::size_t>(rank)][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Catalog, Names) {
  EXPECT_EQ(catalog_names(), (std::vector<std::string>{"E6", "E7", "E8", "D4", "B3"}));
  EXPECT_THROW(catalog("F4"), std::invalid_argument);
}

TEST(Catalog, DegreesAndRootCounts) {
  struct Expect {
    const char* name;
    std::vector<int> degrees;
    int roots;
    std::size_t forms;
  };
  const Expect table[] = {
      {"E6", {2, 5, 6, 8, 9, 12}, 36, 27},
      {"E7", {2, 6, 8, 10, 12, 14, 18}, 63, 56},
      {"E8", {2, 8, 12, 14, 18, 20, 24, 30}, 120, 240},
      {"D4", {2, 4, 4, 6}, 12, 8},
      {"B3", {2, 4, 6}, 9, 6},
  };
  for (const auto& e : table) {
    const GroupSpec& g = catalog(e.name);
    EXPECT_EQ(g.degrees, e.degrees) << e.name;
    EXPECT_EQ(g.n_positive_roots, e.roots) << e.name;
    EXPECT_EQ(generate_positive_roots(g).size(), static_cast<std::size_t>(e.roots)) << e.name;
    EXPECT_EQ(g.forms.size(), e.forms) << e.name;
    EXPECT_EQ(g.dn_even, std::string(e.name) == "D4");
  }
}

TEST(Roots, SimpleRootsHaveCommonLength) {
  for (const char* name : {"E6", "E7", "E8"}) {
    // the coordinates of the defining forms give every root squared length 4
    for (const auto& alpha : catalog(name).simple_roots) EXPECT_EQ(dot(alpha, alpha), FieldElement(4)) << name;
  }
}

TEST(Roots, ReflectionIsInvolution) {
  const GroupSpec& g = catalog("E6");
  const Vector v = g.simple_roots[2];
  for (const auto& alpha : g.simple_roots) EXPECT_EQ(reflect(reflect(v, alpha), alpha), v);
  EXPECT_EQ(reflect(v, v), Vector([&] {
              Vector r = v;
              for (auto& c : r) c = -c;
              return r;
            }()));
}

TEST(Forms, ClosedUpToSignUnderSimpleReflections) {
  for (const char* name : {"E6", "E7"}) {
    const GroupSpec& g = catalog(name);
    for (const auto& alpha : g.simple_roots) {
      for (const auto& f : g.forms) {
        FieldPoly r = compose_with_reflection(f, alpha);
        bool found = std::any_of(g.forms.begin(), g.forms.end(), [&](const FieldPoly& h) { return h == r || h == -r; });
        EXPECT_TRUE(found) << name;
      }
    }
  }
}

TEST(Basis, PBasisDegreesAndInvariance) {
  for (const char* name : {"E6", "E7", "D4", "B3"}) {
    const GroupSpec& g = catalog(name);
    const PBasis p = build_p_basis(g);
    ASSERT_EQ(p.polys.size(), g.degrees.size());
    for (std::size_t a = 0; a < p.polys.size(); ++a) {
      EXPECT_TRUE(p.polys[a].is_homogeneous());
      EXPECT_EQ(p.polys[a].degree(), g.degrees[a]) << name << " p" << a + 1;
      EXPECT_TRUE(check_invariance(g, p.polys[a])) << name << " p" << a + 1;
    }
  }
}

TEST(Basis, QBasisRationalInScaledCoordinates) {
  for (const auto& name : catalog_names()) {
    const GroupSpec& g = catalog(name);
    const PBasis p = build_p_basis(g);
    const QBasis q = rescale_to_q(g, p);
    for (std::size_t a = 0; a < q.polys.size(); ++a) {
      FieldPoly back = to_original_coordinates(g, q.polys[a]);
      EXPECT_EQ(back, p.polys[a].scaled(g.q_rescale[a].to_field())) << name << " q" << a + 1;
      EXPECT_EQ(from_original_coordinates(g, back), q.polys[a]);
    }
  }
}

TEST(Basis, FirstInvariantIsSumOfSquares) {
  for (const auto& name : catalog_names()) {
    const GroupSpec& g = catalog(name);
    const QBasis q = build_q_basis(g);
    FieldPoly expect(g.rank);
    for (int i = 0; i < g.rank; ++i) expect += pow(FieldPoly::variable(g.rank, i), 2);
    EXPECT_EQ(to_original_coordinates(g, q.polys[0]), expect) << name;
  }
}

TEST(Basis, E6HasScaledLastCoordinate) {
  EXPECT_EQ(catalog("E6").q_weights, (std::vector<int>{1, 1, 1, 1, 1, 3}));
  EXPECT_EQ(catalog("E7").q_weights, std::vector<int>(7, 1));
  // p_2 of E6 has odd powers of x6 with sqrt(3)-multiples
  const FieldPoly p2 = build_p_basis(catalog("E6")).polys[1];
  EXPECT_FALSE(p2.all_rational());
}

TEST(Basis, JacobianNonzeroAtRandomPoint) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-100000, 100000), den(1, 97);
  for (const char* name : {"E6", "E7", "D4", "B3"}) {
    const GroupSpec& g = catalog(name);
    const QBasis q = build_q_basis(g);
    std::vector<Rational> point(static_cast<std::size_t>(g.rank));
    for (auto& v : point) v = make_rational(c(rng), den(rng));
    EXPECT_EQ(jacobian_rank_at(q.polys, point), g.rank) << name;
  }
}

TEST(Invariance, DetectsNonInvariant) {
  const GroupSpec& g = catalog("B3");
  FieldPoly x1 = FieldPoly::variable(3, 0);
  EXPECT_FALSE(check_invariance(g, x1 * x1 * FieldPoly::variable(3, 1) * FieldPoly::variable(3, 1) + x1 * x1 * x1 * x1));
  EXPECT_TRUE(check_invariance(g, x1 * x1 + pow(FieldPoly::variable(3, 1), 2) + pow(FieldPoly::variable(3, 2), 2)));
}
