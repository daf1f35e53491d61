#include "canonbasis/serialize.hpp"

#include <sstream>

namespace canonbasis {

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_value(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json exponents_to_json(Monomial m, int nvars) {
  Json e = Json::array();
  for (int i = 0; i < nvars; ++i) e.push_back(m.exponent(i));
  return e;
}

std::string exponent_tuple(Monomial m, int nvars) {
  std::string s = "(";
  for (int i = 0; i < nvars; ++i) s += (i ? "," : "") + std::to_string(m.exponent(i));
  return s + ")";
}

template <class C, class F>
Json polynomial_json(const Polynomial<C>& p, F&& coeff) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json term;
    term["e"] = exponents_to_json(t.mono, p.nvars());
    term["c"] = coeff(t.coeff);
    terms.push_back(std::move(term));
  }
  Json j;
  j["nvars"] = p.nvars();
  j["degree"] = p.degree();
  j["terms"] = std::move(terms);
  return j;
}

template <class C, class F>
std::string polynomial_text_impl(const Polynomial<C>& p, F&& coeff) {
  std::ostringstream os;
  os << "nvars " << p.nvars() << "  degree " << p.degree() << "  terms " << p.size() << "\n";
  for (const auto& t : p.terms()) os << "  " << exponent_tuple(t.mono, p.nvars()) << "  " << coeff(t.coeff) << "\n";
  return os.str();
}

std::string multi_index_text(const MultiIndex& m) {
  std::string s;
  for (std::size_t b = 0; b < m.size(); ++b) {
    if (m[b] == 0) continue;
    if (!s.empty()) s += "*";
    s += "q" + std::to_string(b + 1);
    if (m[b] > 1) s += "^" + std::to_string(m[b]);
  }
  return s.empty() ? "1" : s;
}

Json integer_vector_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  try {
    return parse_rational(string_value(j, "rational"));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json field_to_json(const FieldElement& x) {
  Json a = Json::array();
  for (auto& c : x.components()) a.push_back(c);
  return a;
}

FieldElement field_from_json(const Json& j) {
  if (j.is_string()) return FieldElement(rational_from_json(j));
  if (!j.is_array() || j.size() != 4) fail("field element must be a rational string or a 4-tuple");
  std::array<std::string, 4> parts;
  for (std::size_t k = 0; k < 4; ++k) parts[k] = string_value(j[k], "field component");
  try {
    return FieldElement::from_components(parts);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json radical_to_json(const Radical& r) {
  Json j;
  j["scale"] = rational_to_json(r.scale());
  j["radicand"] = r.radicand().get_str();
  return j;
}

Radical radical_from_json(const Json& j) {
  Rational scale = rational_from_json(field(j, "scale"));
  Integer radicand;
  const std::string text = string_value(field(j, "radicand"), "radicand");
  if (text.empty() || radicand.set_str(text, 10) != 0) fail("malformed radicand '" + text + "'");
  try {
    return Radical(scale, radicand);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json polynomial_to_json(const IntPoly& p) {
  return polynomial_json(p, [](const Integer& c) { return Json(c.get_str()); });
}

Json polynomial_to_json(const RatPoly& p) { return polynomial_json(p, rational_to_json); }

Json polynomial_to_json(const FieldPoly& p) {
  if (p.all_rational()) return polynomial_json(p, [](const FieldElement& c) { return rational_to_json(c.as_rational()); });
  return polynomial_json(p, field_to_json);
}

FieldPoly polynomial_from_json(const Json& j) {
  const int nvars = int_field(j, "nvars");
  const int degree = int_field(j, "degree");
  if (nvars < 1 || nvars > Monomial::kMaxVars) fail("nvars out of range");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) fail("'terms' must be an array");
  std::vector<FieldPoly::Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    const Json& e = field(t, "e");
    if (!e.is_array() || static_cast<int>(e.size()) != nvars) fail("exponent tuple has the wrong length");
    std::vector<int> exps;
    for (const auto& x : e) {
      if (!x.is_number_integer()) fail("exponents must be integers");
      exps.push_back(x.get<int>());
    }
    try {
      out.push_back({Monomial::from_exponents(exps), field_from_json(field(t, "c"))});
    } catch (const std::out_of_range& ex) {
      fail(ex.what());
    }
  }
  const std::size_t n = out.size();
  FieldPoly p = FieldPoly::from_terms(nvars, std::move(out));
  if (p.size() != n) fail("polynomial has repeated or zero terms");
  if (p.degree() != degree) fail("declared degree does not match the terms");
  return p;
}

std::string polynomial_text(const RatPoly& p) {
  return polynomial_text_impl(p, [](const Rational& c) { return to_string(c); });
}

std::string polynomial_text(const FieldPoly& p) {
  return polynomial_text_impl(p, [](const FieldElement& c) { return c.to_string(); });
}

// ---------------------------------------------------------------------------
// Groups

Json group_to_json(const GroupSpec& g) {
  Json j;
  j["group"] = g.name;
  j["rank"] = g.rank;
  j["degrees"] = g.degrees;
  j["n_positive_roots"] = g.n_positive_roots;
  j["coordinate_weights"] = g.q_weights;
  Json rescale = Json::array();
  for (const auto& r : g.q_rescale) rescale.push_back(radical_to_json(r));
  j["q_rescale"] = std::move(rescale);
  Json simple = Json::array();
  for (const auto& alpha : g.simple_roots) simple.push_back(polynomial_to_json(root_form(alpha)));
  j["simple_roots"] = std::move(simple);
  Json roots = Json::array();
  for (const auto& alpha : generate_positive_roots(g)) roots.push_back(polynomial_to_json(root_form(alpha)));
  j["positive_roots"] = std::move(roots);
  Json forms = Json::array();
  for (const auto& f : g.forms) forms.push_back(polynomial_to_json(f));
  j["forms"] = std::move(forms);
  return j;
}

std::string group_text(const GroupSpec& g) {
  std::ostringstream os;
  os << "group " << g.name << "\n";
  os << "rank " << g.rank << "\n";
  os << "degrees";
  for (int d : g.degrees) os << " " << d;
  os << "\n";
  os << "positive roots " << g.n_positive_roots << "\n";
  os << "linear forms " << g.forms.size() << "\n";
  return os.str();
}

std::string roots_text(const GroupSpec& g) {
  const auto roots = generate_positive_roots(g);
  std::ostringstream os;
  os << "# " << g.name << ": " << roots.size() << " positive roots\n";
  for (std::size_t r = 0; r < roots.size(); ++r) {
    os << r + 1;
    for (const auto& x : roots[r]) os << "\t" << x.to_string();
    os << "\n";
  }
  return os.str();
}

Json basis_to_json(const GroupSpec& g) {
  const PBasis p = build_p_basis(g);
  const QBasis q = rescale_to_q(g, p);
  Json j;
  j["group"] = g.name;
  j["degrees"] = g.degrees;
  Json pj = Json::array(), qj = Json::array(), rj = Json::array();
  for (const auto& f : p.polys) pj.push_back(polynomial_to_json(f));
  for (const auto& f : q.polys) qj.push_back(polynomial_to_json(to_original_coordinates(g, f)));
  for (const auto& r : g.q_rescale) rj.push_back(radical_to_json(r));
  j["p"] = std::move(pj);
  j["q_rescale"] = std::move(rj);
  j["q"] = std::move(qj);
  return j;
}

std::string basis_text(const GroupSpec& g) {
  const PBasis p = build_p_basis(g);
  const QBasis q = rescale_to_q(g, p);
  std::ostringstream os;
  for (std::size_t a = 0; a < p.polys.size(); ++a) {
    os << "p" << a + 1 << "  degree " << g.degrees[a] << "\n" << polynomial_text(p.polys[a]);
  }
  for (std::size_t a = 0; a < q.polys.size(); ++a) {
    os << "q" << a + 1 << " = " << g.q_rescale[a].to_string() << " * p" << a + 1 << "\n"
       << polynomial_text(to_original_coordinates(g, q.polys[a]));
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Records

Json record_to_json(const GroupSpec& g, const TransformRecord& record, bool include_h_poly) {
  Json j;
  j["a"] = record.a;
  j["degree"] = record.degree;
  Json monos = Json::array();
  for (const auto& m : record.monomials) monos.push_back(m);
  j["monomials"] = std::move(monos);
  Json z = Json::array();
  for (const auto& c : record.z) z.push_back(rational_to_json(c));
  j["z"] = std::move(z);
  j["norm_sq"] = rational_to_json(record.norm_sq);
  j["norm_factor"] = radical_to_json(record.norm_factor);
  if (include_h_poly && record.h_poly) j["h_poly"] = polynomial_to_json(to_original_coordinates(g, *record.h_poly));
  return j;
}

TransformRecord record_from_json(const GroupSpec& g, const Json& j) {
  TransformRecord r;
  r.a = int_field(j, "a");
  r.degree = int_field(j, "degree");
  const Json& monos = field(j, "monomials");
  const Json& z = field(j, "z");
  if (!monos.is_array() || !z.is_array() || monos.size() != z.size()) fail("monomials and z must be arrays of equal length");
  for (const auto& m : monos) {
    if (!m.is_array() || static_cast<int>(m.size()) != g.rank) fail("multi-index has the wrong length");
    MultiIndex mi;
    for (const auto& x : m) {
      if (!x.is_number_integer() || x.get<int>() < 0) fail("multi-index entries must be non-negative integers");
      mi.push_back(x.get<int>());
    }
    r.monomials.push_back(std::move(mi));
  }
  for (const auto& c : z) r.z.push_back(rational_from_json(c));
  r.norm_sq = rational_from_json(field(j, "norm_sq"));
  r.norm_factor = radical_from_json(field(j, "norm_factor"));
  if (j.contains("h_poly")) {
    try {
      r.h_poly = from_original_coordinates(g, polynomial_from_json(j.at("h_poly")));
    } catch (const InvariantViolation& e) {
      fail(e.what());
    }
    if (r.h_poly->nvars() != g.rank) fail("h_poly has the wrong number of variables");
  }
  return r;
}

Json canonicalization_to_json(const GroupSpec& g, const Canonicalization& c, bool include_h_poly) {
  Json j;
  j["group"] = c.group;
  j["degrees"] = g.degrees;
  Json records = Json::array();
  for (const auto& r : c.records) records.push_back(record_to_json(g, r, include_h_poly));
  j["records"] = std::move(records);
  if (c.dn_pair) {
    const DnPair& d = *c.dn_pair;
    Json dj;
    dj["degree"] = d.degree;
    dj["members"] = {d.first, d.second};
    Json nb = Json::array();
    for (const auto& v : d.null_basis) nb.push_back(integer_vector_json(v));
    dj["null_basis"] = std::move(nb);
    dj["mixing"] = {rational_to_json(d.c1), rational_to_json(d.c2), rational_to_json(d.c3), rational_to_json(d.c4)};
    dj["gram_before"] = {rational_to_json(d.gram_before[0]), rational_to_json(d.gram_before[1]),
                         rational_to_json(d.gram_before[2])};
    dj["gram_after"] = {rational_to_json(d.gram_after[0]), rational_to_json(d.gram_after[1]),
                        rational_to_json(d.gram_after[2])};
    j["dn_pair"] = std::move(dj);
  }
  return j;
}

namespace {

Canonicalization read_canonicalization(const Json& j) {
  Canonicalization c;
  c.group = string_value(field(j, "group"), "group");
  const GroupSpec* g = nullptr;
  try {
    g = &catalog(c.group);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  const Json& records = field(j, "records");
  if (!records.is_array()) fail("'records' must be an array");
  for (const auto& r : records) c.records.push_back(record_from_json(*g, r));
  if (j.contains("dn_pair")) {
    const Json& dj = j.at("dn_pair");
    DnPair d;
    d.degree = int_field(dj, "degree");
    const Json& members = field(dj, "members");
    if (!members.is_array() || members.size() != 2) fail("dn_pair members must be a pair");
    d.first = members[0].get<int>();
    d.second = members[1].get<int>();
    for (const auto& v : field(dj, "null_basis")) {
      std::vector<Integer> row;
      for (const auto& x : v) {
        Integer value;
        if (value.set_str(string_value(x, "null basis entry"), 10) != 0) fail("malformed integer");
        row.push_back(value);
      }
      d.null_basis.push_back(std::move(row));
    }
    const Json& mix = field(dj, "mixing");
    const Json& before = field(dj, "gram_before");
    const Json& after = field(dj, "gram_after");
    if (mix.size() != 4 || before.size() != 3 || after.size() != 3) fail("malformed dn_pair data");
    d.c1 = rational_from_json(mix[0]);
    d.c2 = rational_from_json(mix[1]);
    d.c3 = rational_from_json(mix[2]);
    d.c4 = rational_from_json(mix[3]);
    for (std::size_t k = 0; k < 3; ++k) {
      d.gram_before[k] = rational_from_json(before[k]);
      d.gram_after[k] = rational_from_json(after[k]);
    }
    c.dn_pair = std::move(d);
  }
  return c;
}

}  // namespace

Canonicalization canonicalization_from_json(const Json& j) {
  try {
    return read_canonicalization(j);
  } catch (const Json::exception& e) {
    fail(e.what());
  }
}

std::string canonicalization_text(const GroupSpec& g, const Canonicalization& c) {
  std::ostringstream os;
  os << "group " << g.name << "\n";
  for (const auto& r : c.records) {
    os << "h" << r.a << "  degree " << r.degree << "\n";
    for (std::size_t k = 0; k < r.monomials.size(); ++k) {
      os << "  " << multi_index_text(r.monomials[k]) << "  " << to_string(r.z[k]) << "\n";
    }
    os << "  norm_sq " << to_string(r.norm_sq) << "\n";
    os << "  norm_factor " << r.norm_factor.to_string() << "\n";
  }
  if (c.dn_pair) {
    const DnPair& d = *c.dn_pair;
    os << "degenerate pair h" << d.first << ", h" << d.second << " at degree " << d.degree << "\n";
    os << "  gram before " << to_string(d.gram_before[0]) << " " << to_string(d.gram_before[1]) << " "
       << to_string(d.gram_before[2]) << "\n";
    os << "  gram after " << to_string(d.gram_after[0]) << " " << to_string(d.gram_after[1]) << " "
       << to_string(d.gram_after[2]) << "\n";
  }
  return os.str();
}

Json normalization_to_json(const GroupSpec& g, const Canonicalization& c) {
  Json j;
  j["group"] = g.name;
  Json entries = Json::array();
  for (const auto& r : c.records) {
    Json e;
    e["a"] = r.a;
    e["degree"] = r.degree;
    e["norm_sq"] = rational_to_json(r.norm_sq);
    e["factor"] = radical_to_json(normalization_data(r));
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string normalization_text(const GroupSpec& g, const Canonicalization& c) {
  std::ostringstream os;
  os << "group " << g.name << "\n";
  for (const auto& r : c.records) {
    os << "k" << r.a << " = " << normalization_data(r).to_string() << " * h" << r.a << "    ||h" << r.a
       << "||^2 = " << to_string(r.norm_sq) << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Reports

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["group"] = report.group;
  j["seed"] = report.seed;
  j["level"] = to_string(report.level);
  j["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["id"] = c.id;
    e["status"] = c.passed ? "pass" : "fail";
    e["detail"] = c.detail;
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(e.what());
  }
}

}  // namespace canonbasis
