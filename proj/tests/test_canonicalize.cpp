#include "canonbasis/canonicalize.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace canonbasis;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const Canonicalization& e6() {
  static const Canonicalization c = canonicalize_all(catalog("E6"));
  return c;
}

}  // namespace

TEST(Ansatz, WeightedMonomialsOrder) {
  const auto m = weighted_monomials({2, 5, 6, 8, 9, 12}, 12);
  ASSERT_EQ(m.size(), 6u);
  EXPECT_EQ(m.front(), (MultiIndex{6, 0, 0, 0, 0, 0}));
  EXPECT_EQ(m[1], (MultiIndex{1, 2, 0, 0, 0, 0}));
  EXPECT_EQ(m.back(), (MultiIndex{0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(weighted_monomials({2, 8, 12, 14, 18, 20, 24, 30}, 30).size(), 20u);
  EXPECT_TRUE(weighted_monomials({2, 4}, 3).empty());
}

TEST(Ansatz, PureIndex) {
  const Ansatz a = make_ansatz(catalog("E6"), 8);
  EXPECT_EQ(a.monomials.size(), 3u);
  EXPECT_EQ(a.pure_index(3), 2);
  EXPECT_EQ(a.pure_index(1), -1);
}

TEST(LinearSystem, RowsAreNormalizedAndDeduplicated) {
  LinearSystem s;
  s.unknowns = 3;
  EXPECT_TRUE(s.add_row({Integer(-2), Integer(4), Integer(6)}));
  EXPECT_FALSE(s.add_row({Integer(1), Integer(-2), Integer(-3)}));
  EXPECT_FALSE(s.add_row({Integer(0), Integer(0), Integer(0)}));
  ASSERT_EQ(s.rows.size(), 1u);
  EXPECT_EQ(s.rows[0], (std::vector<Integer>{1, -2, -3}));
}

TEST(SolveSystem, NullSpaceConvention) {
  LinearSystem s;
  s.unknowns = 3;
  s.add_row({Integer(2), Integer(0), Integer(-1)});
  s.add_row({Integer(0), Integer(3), Integer(-1)});
  const auto basis = solve_system(s);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], (std::vector<Integer>{3, 2, 6}));
}

TEST(SolveSystem, IncrementalEchelonAgrees) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 6;
    LinearSystem s;
    s.unknowns = n;
    IncrementalEchelon inc(n);
    for (int r = 0; r < 4; ++r) {
      std::vector<Integer> row(n);
      for (auto& x : row) x = c(rng);
      s.add_row(row);
      inc.add(row);
    }
    const auto basis = solve_system(s);
    EXPECT_EQ(basis, inc.null_space());
    EXPECT_EQ(basis, oracle::dense_null_space(s.rows, n));
  }
}

TEST(SolveSystem, AgreesWithDenseEliminationOnE6) {
  const GroupSpec& g = catalog("E6");
  const QBasis q = build_q_basis(g);
  for (std::size_t a = 1; a < g.degrees.size(); ++a) {
    const Ansatz ansatz = make_ansatz(g, g.degrees[a]);
    const LinearSystem sys = assemble_system(g, q, ansatz);
    const auto basis = solve_system(sys);
    EXPECT_EQ(basis, oracle::dense_null_space(sys.rows, sys.unknowns)) << "degree " << g.degrees[a];
    EXPECT_EQ(basis.size(), 1u);
  }
}

TEST(Canonicalize, E6TransformationVectors) {
  const auto& r = e6().records;
  ASSERT_EQ(r.size(), 6u);
  EXPECT_EQ(r[2].z, rationals({-8, 1}));
  EXPECT_EQ(r[3].z, rationals({1120, -224, 3}));
  EXPECT_EQ(r[4].z, rationals({-80, 1}));
  EXPECT_EQ(r[5].z, rationals({-169845984, -18714080, 50516928, -657888, -1108536, 21171}));
}

TEST(Canonicalize, E6NormsAndFactors) {
  const auto& r = e6().records;
  EXPECT_EQ(r[0].norm_sq, Rational(12));
  EXPECT_EQ(r[0].norm_factor, Radical(Rational(1, 6), Integer(3)));
  for (const auto& rec : r) {
    EXPECT_EQ(rec.norm_factor.square() * rec.norm_sq, Rational(1));
    EXPECT_EQ(normalization_data(rec), rec.norm_factor);
  }
}

TEST(Canonicalize, StoredPolynomialsMatchExpansion) {
  const QBasis q = build_q_basis(catalog("E6"));
  const auto hs = expand_records(q, e6().records);
  for (std::size_t a = 0; a < hs.size(); ++a) {
    ASSERT_TRUE(e6().records[a].h_poly.has_value());
    EXPECT_EQ(*e6().records[a].h_poly, hs[a]);
  }
}

TEST(Canonicalize, B3IsCanonicalAndHarmonic) {
  const GroupSpec& g = catalog("B3");
  const Canonicalization c = canonicalize_all(g);
  const QBasis q = build_q_basis(g);
  const auto hs = expand_records(q, c.records);
  RatPoly lap(3);
  for (int i = 0; i < 3; ++i) lap += pow(RatPoly::variable(3, i), 2);
  EXPECT_TRUE(apply_diff_op(lap, hs[1]).is_zero());
  EXPECT_TRUE(apply_diff_op(lap, hs[2]).is_zero());
  EXPECT_TRUE(apply_diff_op(hs[1], hs[2]).is_zero());
  EXPECT_FALSE(c.dn_pair.has_value());
}

TEST(Canonicalize, D4DegeneratePair) {
  const GroupSpec& g = catalog("D4");
  const Canonicalization c = canonicalize_all(g);
  ASSERT_TRUE(c.dn_pair.has_value());
  const DnPair& d = *c.dn_pair;
  EXPECT_EQ(d.degree, 4);
  EXPECT_EQ(d.null_basis.size(), 2u);
  EXPECT_EQ(d.gram_after[1], Rational(0));
  const QBasis q = build_q_basis(g);
  const auto hs = expand_records(q, c.records);
  EXPECT_EQ(pairing_number(hs[1], hs[2]), Rational(0));
  EXPECT_EQ(c.records[1].z, rationals({-1, 2, 0}));
  EXPECT_EQ(c.records[2].z, rationals({0, 0, 1}));
}

TEST(Canonicalize, NullSpaceDimensionMatchesMultiplicity) {
  for (const char* name : {"E6", "D4", "B3"}) {
    const GroupSpec& g = catalog(name);
    const QBasis q = build_q_basis(g);
    for (int d : g.degrees) {
      if (d == 2) continue;
      const auto basis = solve_system(assemble_system(g, q, make_ansatz(g, d)));
      EXPECT_EQ(static_cast<int>(basis.size()), g.multiplicity(d)) << name << " degree " << d;
    }
  }
}

TEST(Canonicalize, ScaleConventionAbsorbsRescaledBasis) {
  // Rescale every q_c; the transformation mapped back onto the original q
  // basis must reproduce the unperturbed primitive vectors.
  const GroupSpec& g = catalog("E6");
  QBasis q = build_q_basis(g);
  const std::vector<Rational> s = {Rational(3, 7), Rational(-2), Rational(5, 11), Rational(13, 4), Rational(-1, 9),
                                   Rational(17, 6)};
  for (std::size_t b = 0; b < q.polys.size(); ++b) q.polys[b] = q.polys[b].scaled(s[b]);
  const Canonicalization c = canonicalize_with_basis(g, q);
  for (std::size_t a = 0; a < c.records.size(); ++a) {
    const auto& rec = c.records[a];
    std::vector<Rational> back(rec.z.size());
    for (std::size_t k = 0; k < rec.z.size(); ++k) {
      Rational f = rec.z[k];
      for (std::size_t b = 0; b < s.size(); ++b) {
        for (int e = 0; e < rec.monomials[k][b]; ++e) f *= s[b];
      }
      back[k] = f;
    }
    const int pure = make_ansatz(g, rec.degree).pure_index(static_cast<int>(a));
    const auto prim = primitive_vector(back, static_cast<std::size_t>(pure));
    std::vector<Rational> expect;
    for (const auto& v : prim) expect.emplace_back(v);
    EXPECT_EQ(expect, e6().records[a].z) << "h" << a + 1;
    EXPECT_EQ(rec.norm_factor.square() * rec.norm_sq, Rational(1));
  }
}

TEST(Canonicalize, SeedAndThreadsDoNotChangeRecords) {
  const GroupSpec& g = catalog("E7");
  CanonicalizeOptions a, b;
  b.seed = 12345;
  b.threads = 3;
  const auto ra = canonicalize_all(g, a).records, rb = canonicalize_all(g, b).records;
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    EXPECT_EQ(ra[k].z, rb[k].z);
    EXPECT_EQ(ra[k].norm_sq, rb[k].norm_sq);
  }
}

TEST(Canonicalize, E7LeadingVectors) {
  const auto r = canonicalize_all(catalog("E7")).records;
  EXPECT_EQ(r[0].norm_sq, Rational(14));
  EXPECT_EQ(r[1].z, rationals({-15, 11}));
  EXPECT_EQ(r[2].z, rationals({2835, -3276, 247}));
  EXPECT_EQ(r[6].z.size(), 14u);
}

TEST(Canonicalize, RejectsWrongBasisDegrees) {
  const GroupSpec& g = catalog("B3");
  QBasis q = build_q_basis(g);
  std::swap(q.polys[1], q.polys[2]);
  EXPECT_THROW(canonicalize_with_basis(g, q), std::invalid_argument);
}
