#include "canonbasis/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace canonbasis {

int GroupSpec::multiplicity(int d) const {
  return static_cast<int>(std::count(degrees.begin(), degrees.end(), d));
}

namespace {

FieldPoly form_from_vector(const Vector& coeffs) { return linear_form<FieldElement>(coeffs); }

Vector unit_combination(int n, std::initializer_list<std::pair<int, FieldElement>> entries) {
  Vector v(static_cast<std::size_t>(n), FieldElement(0));
  for (const auto& [index, value] : entries) v[static_cast<std::size_t>(index - 1)] = value;
  return v;
}

const FieldElement kSqrt2 = FieldElement::sqrt2();
const FieldElement kSqrt6 = FieldElement::sqrt6();
const FieldElement kHalf = FieldElement(Rational(1, 2));

// Sign patterns in listing order: (+,+), (+,-), (-,+), (-,-), ...
std::vector<std::vector<int>> sign_patterns(int k) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = (mask >> (k - 1 - i) & 1) ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

GroupSpec make_e6() {
  GroupSpec g;
  g.name = "E6";
  g.rank = 6;
  g.degrees = {2, 5, 6, 8, 9, 12};
  const int n = 6;
  // sqrt(2/3) = sqrt6/3, 1/sqrt6 = sqrt6/6, sqrt3*sqrt(2/3) = sqrt2.
  const FieldElement r23 = kSqrt6 * FieldElement(Rational(1, 3));
  const FieldElement r16 = kSqrt6 * FieldElement(Rational(1, 6));
  const FieldElement s2h = kSqrt2 * kHalf;  // sqrt3/sqrt6

  std::vector<Vector> forms;
  forms.push_back(unit_combination(n, {{6, FieldElement(2) * r23}}));
  for (int s : {1, -1}) forms.push_back(unit_combination(n, {{5, FieldElement(s) * kSqrt2}, {6, -r23}}));
  auto pair_block = [&](int i, int j, FieldElement c5, FieldElement c6) {
    for (const auto& s : sign_patterns(2)) {
      forms.push_back(unit_combination(n, {{i, FieldElement(s[0])}, {j, FieldElement(s[1])}, {5, c5}, {6, c6}}));
    }
  };
  pair_block(3, 4, FieldElement(0), -r23);
  pair_block(1, 2, FieldElement(0), -r23);
  pair_block(2, 4, s2h, r16);
  pair_block(1, 3, s2h, r16);
  pair_block(2, 3, -s2h, r16);
  pair_block(1, 4, -s2h, r16);
  for (const auto& f : forms) g.forms.push_back(form_from_vector(f));

  const FieldElement r32 = kSqrt6 * kHalf;  // sqrt(3/2)
  g.simple_roots = {
      unit_combination(n, {{2, 1}, {3, -1}, {5, s2h}, {6, r32}}),
      unit_combination(n, {{3, 1}, {4, -1}, {5, -kSqrt2}}),
      unit_combination(n, {{4, 2}}),
      unit_combination(n, {{3, 1}, {4, -1}, {5, kSqrt2}}),
      unit_combination(n, {{2, 1}, {3, -1}, {5, -s2h}, {6, -r32}}),
      unit_combination(n, {{1, 1}, {2, -1}, {3, -1}, {4, -1}}),
  };
  g.q_rescale = {Radical(Rational(1, 12), 1), Radical(Rational(3, 20), 2), Radical(Rational(1, 2), 1),
                 Radical(9, 1), Radical(Rational(9, 7), 2), Radical(36, 1)};
  // After rescaling, odd powers of x6 still carry a factor sqrt3.
  g.q_weights = {1, 1, 1, 1, 1, 3};
  return g;
}

GroupSpec make_e7() {
  GroupSpec g;
  g.name = "E7";
  g.rank = 7;
  g.degrees = {2, 6, 8, 10, 12, 14, 18};
  const int n = 7;
  const int triples[7][3] = {{1, 2, 7}, {1, 3, 6}, {1, 4, 5}, {2, 3, 5}, {2, 4, 6}, {3, 4, 7}, {5, 6, 7}};
  for (const auto& t : triples) {
    for (const auto& s : sign_patterns(3)) {
      g.forms.push_back(form_from_vector(unit_combination(
          n, {{t[0], FieldElement(s[0])}, {t[1], FieldElement(s[1])}, {t[2], FieldElement(s[2])}})));
    }
  }
  g.simple_roots = {
      unit_combination(n, {{7, 2}}),
      unit_combination(n, {{2, 1}, {3, -1}, {6, -1}, {7, -1}}),
      unit_combination(n, {{6, 2}}),
      unit_combination(n, {{3, 1}, {4, -1}, {5, -1}, {6, -1}}),
      unit_combination(n, {{4, 2}}),
      unit_combination(n, {{1, 1}, {2, -1}, {3, -1}, {4, -1}}),
      unit_combination(n, {{5, 2}}),
  };
  const Radical r24(Rational(1, 24), 1), r8(Rational(1, 8), 1);
  g.q_rescale = {r24, r24, r8, r24, r24, r8, r24};
  return g;
}

GroupSpec make_e8() {
  GroupSpec g;
  g.name = "E8";
  g.rank = 8;
  g.degrees = {2, 8, 12, 14, 18, 20, 24, 30};
  const int n = 8;
  for (int i = 1; i <= 8; ++i) {
    for (int s : {1, -1}) g.forms.push_back(form_from_vector(unit_combination(n, {{i, FieldElement(2 * s)}})));
  }
  const int quads[14][4] = {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}, {1, 3, 5, 7}, {1, 3, 6, 8},
                            {1, 4, 6, 7}, {1, 4, 5, 8}, {2, 3, 5, 8}, {2, 3, 6, 7}, {2, 4, 5, 7},
                            {2, 4, 6, 8}, {3, 4, 5, 6}, {3, 4, 7, 8}, {5, 6, 7, 8}};
  for (const auto& q : quads) {
    for (const auto& s : sign_patterns(4)) {
      g.forms.push_back(form_from_vector(unit_combination(n, {{q[0], FieldElement(s[0])},
                                                              {q[1], FieldElement(s[1])},
                                                              {q[2], FieldElement(s[2])},
                                                              {q[3], FieldElement(s[3])}})));
    }
  }
  g.simple_roots = {
      unit_combination(n, {{1, 1}, {2, -1}, {3, -1}, {4, -1}}),
      unit_combination(n, {{4, 2}}),
      unit_combination(n, {{3, 1}, {4, -1}, {5, -1}, {6, -1}}),
      unit_combination(n, {{6, 2}}),
      unit_combination(n, {{5, 1}, {6, -1}, {7, -1}, {8, -1}}),
      unit_combination(n, {{8, 2}}),
      unit_combination(n, {{2, 1}, {3, -1}, {5, -1}, {8, -1}}),
      unit_combination(n, {{7, 2}}),
  };
  const Radical r48(Rational(1, 48), 1);
  g.q_rescale = {Radical(Rational(1, 120), 1), r48, r48, r48, r48, r48, r48, Radical(Rational(1, 240), 1)};
  return g;
}

// Coordinate forms +-x_i; the p-bases of D4 and B3 are fixed explicitly.
void coordinate_forms(GroupSpec& g) {
  for (int i = 1; i <= g.rank; ++i) {
    for (int s : {1, -1}) g.forms.push_back(form_from_vector(unit_combination(g.rank, {{i, FieldElement(s)}})));
  }
}

GroupSpec make_d4() {
  GroupSpec g;
  g.name = "D4";
  g.rank = 4;
  g.degrees = {2, 4, 4, 6};
  coordinate_forms(g);
  g.simple_roots = {
      unit_combination(4, {{1, 1}, {2, -1}}),
      unit_combination(4, {{2, 1}, {3, -1}}),
      unit_combination(4, {{3, 1}, {4, -1}}),
      unit_combination(4, {{3, 1}, {4, 1}}),
  };
  g.q_rescale.assign(4, Radical(1, 1));
  return g;
}

GroupSpec make_b3() {
  GroupSpec g;
  g.name = "B3";
  g.rank = 3;
  g.degrees = {2, 4, 6};
  coordinate_forms(g);
  g.simple_roots = {
      unit_combination(3, {{1, 1}, {2, -1}}),
      unit_combination(3, {{2, 1}, {3, -1}}),
      unit_combination(3, {{3, 1}}),
  };
  g.q_rescale.assign(3, Radical(1, 1));
  return g;
}

void finish(GroupSpec& g) {
  if (g.q_weights.empty()) g.q_weights.assign(static_cast<std::size_t>(g.rank), 1);
  g.n_positive_roots = std::accumulate(g.degrees.begin(), g.degrees.end(), 0) - g.rank;
  for (int d : g.degrees) g.dn_even = g.dn_even || g.multiplicity(d) == 2;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"E6", "E7", "E8", "D4", "B3"};
  return names;
}

const GroupSpec& catalog(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, GroupSpec, std::less<>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  GroupSpec g;
  if (name == "E6") g = make_e6();
  else if (name == "E7") g = make_e7();
  else if (name == "E8") g = make_e8();
  else if (name == "D4") g = make_d4();
  else if (name == "B3") g = make_b3();
  else throw std::invalid_argument("unknown group '" + std::string(name) + "'");
  finish(g);
  return cache.emplace(std::string(name), std::move(g)).first->second;
}

std::string to_string(BasisLabel label) {
  switch (label) {
    case BasisLabel::p: return "p";
    case BasisLabel::q: return "q";
    case BasisLabel::h: return "h";
    case BasisLabel::k_report: return "k-report";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Bases

namespace {

bool is_leading_positive(const FieldPoly& form) { return form.leading_term().coeff.sign() > 0; }

template <Coefficient C>
Polynomial<C> power_sum(const std::vector<Polynomial<C>>& forms, int degree, int nvars) {
  std::unordered_map<Monomial, C, MonomialHash> acc;
  for (const auto& f : forms) {
    auto pw = pow(f, static_cast<unsigned>(degree));
    for (auto& t : pw.mutable_terms()) acc[t.mono] += t.coeff;
  }
  return Polynomial<C>::from_map(nvars, std::move(acc));
}

FieldPoly coordinate_power_sum(int n, unsigned d) {
  FieldPoly p(n);
  for (int i = 0; i < n; ++i) p.push_back_sorted(Monomial::variable(i, d), FieldElement(1));
  return p;
}

}  // namespace

PBasis build_p_basis(const GroupSpec& g) {
  PBasis basis;
  basis.group = g.name;
  basis.label = BasisLabel::p;
  const int n = g.rank;
  if (g.name == "D4" || g.name == "B3") {
    for (int d : g.degrees) basis.polys.push_back(coordinate_power_sum(n, static_cast<unsigned>(d)));
    if (g.name == "D4") {
      FieldPoly prod(n);
      prod.push_back_sorted(Monomial::from_packed(0x01010101ULL), FieldElement(1));
      basis.polys[2] = prod;
    }
    return basis;
  }

  const bool all_even = std::all_of(g.degrees.begin(), g.degrees.end(), [](int d) { return d % 2 == 0; });
  std::vector<FieldPoly> used;
  for (const auto& f : g.forms) {
    if (!all_even || is_leading_positive(f)) used.push_back(f);
  }
  const bool rational = std::all_of(used.begin(), used.end(), [](const FieldPoly& f) { return f.all_rational(); });
  std::vector<RatPoly> rational_forms;
  if (rational) {
    for (const auto& f : used) rational_forms.push_back(to_rational(f));
  }
  for (int d : g.degrees) {
    FieldPoly p = rational ? to_field(power_sum(rational_forms, d, n)) : power_sum(used, d, n);
    // Half the forms were summed: the other half contribute the same amount.
    if (all_even) p = p.scaled(FieldElement(2));
    basis.polys.push_back(std::move(p));
  }
  return basis;
}

namespace {

// sqrt(w)^m over the coordinates, as a field element.
FieldElement coordinate_scale(const std::vector<int>& weights, Monomial m) {
  FieldElement r(1);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const unsigned e = m.exponent(static_cast<int>(i));
    if (e == 0 || weights[i] == 1) continue;
    Integer even;
    mpz_ui_pow_ui(even.get_mpz_t(), static_cast<unsigned long>(weights[i]), e / 2);
    r *= FieldElement(even);
    if (e % 2 == 1) r *= Radical(1, weights[i]).to_field();
  }
  return r;
}

}  // namespace

QBasis rescale_to_q(const GroupSpec& g, const PBasis& p) {
  if (p.polys.size() != g.degrees.size()) throw std::invalid_argument("basis size does not match group rank");
  QBasis q;
  q.group = g.name;
  q.label = BasisLabel::q;
  const bool scaled_coords = !g.metric().trivial();
  for (std::size_t a = 0; a < p.polys.size(); ++a) {
    FieldPoly scaled = p.polys[a].scaled(g.q_rescale[a].to_field());
    if (scaled_coords) {
      for (auto& t : scaled.mutable_terms()) t.coeff = t.coeff / coordinate_scale(g.q_weights, t.mono);
    }
    if (!scaled.all_rational()) {
      throw InvariantViolation(g.name + " q_" + std::to_string(a + 1) + " has irrational coefficients");
    }
    q.polys.push_back(to_rational(scaled));
  }
  return q;
}

FieldPoly to_original_coordinates(const GroupSpec& g, const RatPoly& f) {
  FieldPoly r = to_field(f);
  if (g.metric().trivial()) return r;
  for (auto& t : r.mutable_terms()) t.coeff = t.coeff * coordinate_scale(g.q_weights, t.mono);
  return r;
}

RatPoly from_original_coordinates(const GroupSpec& g, const FieldPoly& f) {
  FieldPoly r = f;
  if (!g.metric().trivial()) {
    for (auto& t : r.mutable_terms()) t.coeff = t.coeff / coordinate_scale(g.q_weights, t.mono);
  }
  if (!r.all_rational()) throw InvariantViolation("polynomial is not rational in the scaled coordinates of " + g.name);
  return to_rational(r);
}

QBasis build_q_basis(const GroupSpec& g) { return rescale_to_q(g, build_p_basis(g)); }

// ---------------------------------------------------------------------------
// Roots and reflections

FieldElement dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  FieldElement s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

Vector reflect(const Vector& x, const Vector& alpha) {
  FieldElement f = FieldElement(2) * dot(alpha, x) / dot(alpha, alpha);
  Vector r = x;
  if (f.is_zero()) return r;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!alpha[i].is_zero()) r[i] -= f * alpha[i];
  }
  return r;
}

namespace {

Vector positive_representative(Vector v) {
  for (const auto& c : v) {
    int s = c.sign();
    if (s == 0) continue;
    if (s < 0) {
      for (auto& x : v) x = -x;
    }
    return v;
  }
  throw InvariantViolation("zero vector in root closure");
}

struct VectorLess {
  bool operator()(const Vector& a, const Vector& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), FieldElement::lex_less);
  }
};

}  // namespace

std::vector<Vector> generate_positive_roots(const GroupSpec& g) {
  constexpr std::size_t kCap = 4096;
  std::vector<Vector> roots;
  std::map<Vector, std::size_t, VectorLess> seen;
  std::deque<Vector> queue;
  for (const auto& a : g.simple_roots) {
    Vector v = positive_representative(a);
    if (seen.emplace(v, roots.size()).second) {
      roots.push_back(v);
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : g.simple_roots) {
      Vector w = positive_representative(reflect(v, a));
      if (seen.emplace(w, roots.size()).second) {
        roots.push_back(w);
        queue.push_back(std::move(w));
        if (roots.size() > kCap) {
          throw InvariantViolation(g.name + ": root closure exceeded " + std::to_string(kCap) +
                                   " roots; simple-root data is inconsistent");
        }
      }
    }
  }
  if (static_cast<int>(roots.size()) != g.n_positive_roots) {
    throw InvariantViolation(g.name + ": generated " + std::to_string(roots.size()) +
                             " positive roots, expected " + std::to_string(g.n_positive_roots));
  }
  return roots;
}

FieldPoly root_form(const Vector& alpha) { return linear_form<FieldElement>(alpha); }

bool is_rational_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_rational(); });
}

template <Coefficient C>
Polynomial<C> substitute_linear(const Polynomial<C>& f, const std::vector<std::pair<int, Polynomial<C>>>& subs) {
  auto recurse = [&](auto&& self, const Polynomial<C>& poly, std::size_t idx) -> Polynomial<C> {
    if (idx == subs.size() || poly.is_zero()) return poly;
    const int var = subs[idx].first;
    const Polynomial<C>& form = subs[idx].second;
    // Split poly = sum_k x_var^k F_k; each bucket keeps grevlex order.
    std::vector<Polynomial<C>> buckets;
    for (const auto& t : poly.terms()) {
      unsigned k = t.mono.exponent(var);
      if (buckets.size() <= k) buckets.resize(k + 1, Polynomial<C>(poly.nvars()));
      buckets[k].mutable_terms().push_back({t.mono / Monomial::variable(var, k), t.coeff});
    }
    Polynomial<C> result = self(self, buckets.back(), idx + 1);
    for (std::size_t k = buckets.size() - 1; k-- > 0;) {
      result = result * form + self(self, buckets[k], idx + 1);
    }
    return result;
  };
  return recurse(recurse, f, 0);
}

template FieldPoly substitute_linear(const FieldPoly&, const std::vector<std::pair<int, FieldPoly>>&);
template RatPoly substitute_linear(const RatPoly&, const std::vector<std::pair<int, RatPoly>>&);

namespace {

// x_i -> x_i - (2 alpha_i / alpha.alpha) (alpha . x) for i in supp(alpha)
std::vector<std::pair<int, FieldPoly>> reflection_substitution(const Vector& alpha) {
  const int n = static_cast<int>(alpha.size());
  FieldElement inv = FieldElement(2) / dot(alpha, alpha);
  FieldPoly form = root_form(alpha);
  std::vector<std::pair<int, FieldPoly>> subs;
  for (int i = 0; i < n; ++i) {
    if (alpha[static_cast<std::size_t>(i)].is_zero()) continue;
    FieldPoly li = FieldPoly::variable(n, i) - form.scaled(inv * alpha[static_cast<std::size_t>(i)]);
    subs.emplace_back(i, std::move(li));
  }
  return subs;
}

}  // namespace

FieldPoly compose_with_reflection(const FieldPoly& f, const Vector& alpha) {
  if (static_cast<int>(alpha.size()) != f.nvars()) throw std::invalid_argument("root length != nvars");
  return substitute_linear(f, reflection_substitution(alpha));
}

RatPoly compose_with_reflection(const RatPoly& f, const Vector& alpha) {
  if (static_cast<int>(alpha.size()) != f.nvars()) throw std::invalid_argument("root length != nvars");
  if (!is_rational_vector(alpha)) return to_rational(compose_with_reflection(to_field(f), alpha));
  std::vector<std::pair<int, RatPoly>> subs;
  for (auto& [i, form] : reflection_substitution(alpha)) subs.emplace_back(i, to_rational(form));
  return substitute_linear(f, subs);
}

bool check_invariance(const GroupSpec& g, const FieldPoly& f) {
  if (f.all_rational()) return check_invariance(g, to_rational(f));
  for (const auto& alpha : g.simple_roots) {
    if (!(compose_with_reflection(f, alpha) == f)) return false;
  }
  return true;
}

bool check_invariance(const GroupSpec& g, const RatPoly& f) {
  for (const auto& alpha : g.simple_roots) {
    if (!(compose_with_reflection(f, alpha) == f)) return false;
  }
  return true;
}

bool check_scaled_invariance(const GroupSpec& g, const RatPoly& f) {
  if (g.metric().trivial()) return check_invariance(g, f);
  return check_invariance(g, to_original_coordinates(g, f));
}

}  // namespace canonbasis
