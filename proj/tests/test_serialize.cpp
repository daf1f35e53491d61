#include "canonbasis/serialize.hpp"

#include <gtest/gtest.h>

using namespace canonbasis;

TEST(Json, RationalAndField) {
  EXPECT_EQ(rational_to_json(Rational(-3, 4)), Json("-3/4"));
  EXPECT_EQ(rational_from_json(Json("10/4")), Rational(5, 2));
  EXPECT_THROW(rational_from_json(Json(3)), FormatError);
  const FieldElement x(Rational(1), Rational(0), Rational(-1, 2), Rational(3));
  EXPECT_EQ(field_from_json(field_to_json(x)), x);
  EXPECT_EQ(field_to_json(x), Json::parse(R"(["1","0","-1/2","3"])"));
  EXPECT_THROW(field_from_json(Json::parse(R"(["1","0"])")), FormatError);
}

TEST(Json, Radical) {
  const Radical r(Rational(1, 6), Integer(3));
  EXPECT_EQ(radical_from_json(radical_to_json(r)), r);
  EXPECT_THROW(radical_from_json(Json::parse(R"({"scale":"1","radicand":"4"})")), FormatError);
}

TEST(Json, PolynomialSchema) {
  const RatPoly p = RatPoly::variable(2, 0, Rational(1, 2)) * RatPoly::variable(2, 1) - RatPoly::variable(2, 1) * RatPoly::variable(2, 1);
  const Json j = polynomial_to_json(p);
  EXPECT_EQ(j.dump(), R"({"nvars":2,"degree":2,"terms":[{"e":[1,1],"c":"1/2"},{"e":[0,2],"c":"-1"}]})");
  EXPECT_EQ(to_rational(polynomial_from_json(j)), p);
  FieldPoly f = to_field(p).scaled(FieldElement::sqrt3());
  EXPECT_EQ(polynomial_from_json(polynomial_to_json(f)), f);
  EXPECT_TRUE(polynomial_to_json(f)["terms"][0]["c"].is_array());
}

TEST(Json, PolynomialValidation) {
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"nvars":2,"degree":3,"terms":[{"e":[1,1],"c":"1"}]})")), FormatError);
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"nvars":2,"degree":2,"terms":[{"e":[1],"c":"1"}]})")), FormatError);
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"nvars":2,"terms":[]})")), FormatError);
  EXPECT_THROW(polynomial_from_json(
                   Json::parse(R"({"nvars":1,"degree":1,"terms":[{"e":[1],"c":"1"},{"e":[1],"c":"2"}]})")),
               FormatError);
}

TEST(Json, CanonicalizationRoundTrip) {
  for (const char* name : {"E6", "D4"}) {
    const GroupSpec& g = catalog(name);
    const Canonicalization c = canonicalize_all(g);
    const Json j = canonicalization_to_json(g, c, true);
    const Canonicalization back = canonicalization_from_json(parse_json(dump(j)));
    ASSERT_EQ(back.records.size(), c.records.size());
    for (std::size_t a = 0; a < c.records.size(); ++a) {
      EXPECT_EQ(back.records[a].z, c.records[a].z);
      EXPECT_EQ(back.records[a].monomials, c.records[a].monomials);
      EXPECT_EQ(back.records[a].norm_sq, c.records[a].norm_sq);
      EXPECT_EQ(back.records[a].norm_factor, c.records[a].norm_factor);
      ASSERT_TRUE(back.records[a].h_poly.has_value());
      EXPECT_EQ(*back.records[a].h_poly, *c.records[a].h_poly);
    }
    EXPECT_EQ(back.dn_pair.has_value(), c.dn_pair.has_value());
    EXPECT_EQ(dump(canonicalization_to_json(g, back, true)), dump(j));
  }
}

TEST(Json, E6PolynomialsAreIrrationalInOriginalCoordinates) {
  const GroupSpec& g = catalog("E6");
  const Canonicalization c = canonicalize_all(g);
  const Json j = record_to_json(g, c.records[1], true);
  bool any_tuple = false;
  for (const auto& t : j["h_poly"]["terms"]) any_tuple = any_tuple || t["c"].is_array();
  EXPECT_TRUE(any_tuple);
}

TEST(Json, RecordFieldNames) {
  const GroupSpec& g = catalog("B3");
  const Json j = record_to_json(g, canonicalize_all(g).records[1], false);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"a", "degree", "monomials", "z", "norm_sq", "norm_factor"}));
}

TEST(Json, MalformedCanonicalization) {
  EXPECT_THROW(canonicalization_from_json(Json::parse(R"({"group":"G2","records":[]})")), FormatError);
  EXPECT_THROW(canonicalization_from_json(Json::parse(R"({"group":"B3"})")), FormatError);
  EXPECT_THROW(canonicalization_from_json(Json::parse(
                   R"({"group":"B3","records":[{"a":1,"degree":2,"monomials":[[1,0,0]],"z":[1],"norm_sq":"6","norm_factor":{"scale":"1","radicand":"1"}}]})")),
               FormatError);
  EXPECT_THROW(parse_json("{"), FormatError);
}

TEST(Json, ReportHasNoTimings) {
  const GroupSpec& g = catalog("B3");
  const auto r = verify_canonicalization(g, canonicalize_all(g).records);
  const std::string s = dump(report_to_json(r));
  EXPECT_EQ(s.find("second"), std::string::npos);
  EXPECT_NE(s.find("\"passed\": true"), std::string::npos);
}

TEST(Text, PolynomialUsesExponentTuples) {
  const RatPoly p = RatPoly::variable(3, 2, Rational(-2));
  EXPECT_EQ(polynomial_text(p), "nvars 3  degree 1  terms 1\n  (0,0,1)  -2\n");
}

TEST(Text, NormalizationListsFactors) {
  const GroupSpec& g = catalog("E6");
  const std::string t = normalization_text(g, canonicalize_all(g));
  EXPECT_NE(t.find("k1 = 1/6*sqrt(3) * h1"), std::string::npos);
  EXPECT_NE(t.find("sqrt(543389)"), std::string::npos);
}
