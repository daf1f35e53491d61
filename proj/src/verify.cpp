#include "canonbasis/verify.hpp"

#include "canonbasis/pairing.hpp"
#include "canonbasis/parallel.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <sstream>

namespace canonbasis {

std::string to_string(CheckLevel level) { return level == CheckLevel::full ? "full" : "fast"; }

CheckLevel parse_check_level(std::string_view text) {
  if (text == "fast") return CheckLevel::fast;
  if (text == "full") return CheckLevel::full;
  throw std::invalid_argument("check level must be 'fast' or 'full'");
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string exponent_string(Monomial m, int nvars) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < nvars; ++i) os << (i ? "," : "") << m.exponent(i);
  os << ']';
  return os.str();
}

template <Coefficient C>
std::string first_term_witness(const Polynomial<C>& p) {
  const auto& t = p.leading_term();
  return "nonzero at " + exponent_string(t.mono, p.nvars()) + " with coefficient " + coeff_string(t.coeff);
}

std::string h_name(std::size_t index) { return "h" + std::to_string(index + 1); }

// Laplacian as an operator polynomial in the q coordinates: sum_i y_i^2 / w_i.
RatPoly laplacian_operator(const GroupSpec& g) {
  RatPoly lap(g.rank);
  for (int i = 0; i < g.rank; ++i) {
    lap.push_back_sorted(Monomial::variable(i, 2), Rational(1, g.q_weights[static_cast<std::size_t>(i)]));
  }
  return lap;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pairwise conditions

CheckEntry check_canonical(const GroupSpec& g, const std::vector<RatPoly>& basis, unsigned threads) {
  const auto t0 = Clock::now();
  const Metric metric = g.metric();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a != b && basis[a].degree() <= basis[b].degree()) pairs.emplace_back(a, b);
    }
  }
  std::vector<std::string> failures(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto [a, b] = pairs[k];
      RatPoly r = apply_diff_op(basis[a], basis[b], 1, metric);
      if (!r.is_zero()) failures[k] = "(" + h_name(a) + "," + h_name(b) + ") " + first_term_witness(r);
    }
  });
  CheckEntry e;
  e.id = "canonical.pairwise";
  std::size_t bad = 0;
  for (const auto& f : failures) {
    if (f.empty()) continue;
    if (e.witness.empty()) e.witness = f;
    ++bad;
  }
  e.passed = bad == 0;
  e.detail = std::to_string(pairs.size()) + " ordered pairs, " + std::to_string(bad) + " nonzero";
  e.seconds = seconds_since(t0);
  return e;
}

CheckEntry check_harmonic(const GroupSpec& g, const std::vector<RatPoly>& basis, unsigned threads) {
  const auto t0 = Clock::now();
  const RatPoly lap = laplacian_operator(g);
  const Metric metric = g.metric();
  CheckEntry e;
  e.id = "canonical.harmonic";
  std::size_t bad = 0;
  for (std::size_t a = 1; a < basis.size(); ++a) {
    RatPoly r = apply_diff_op(lap, basis[a], threads, metric);
    if (!r.is_zero()) {
      if (e.witness.empty()) e.witness = "laplacian of " + h_name(a) + " " + first_term_witness(r);
      ++bad;
    }
  }
  e.passed = bad == 0;
  e.detail = std::to_string(basis.size() > 0 ? basis.size() - 1 : 0) + " polynomials, " + std::to_string(bad) +
             " not harmonic";
  e.seconds = seconds_since(t0);
  return e;
}

CheckEntry check_linear_conditions(const GroupSpec& g, const QBasis& q, const std::vector<RatPoly>& basis,
                                   unsigned threads) {
  const auto t0 = Clock::now();
  const Metric metric = g.metric();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t c = 0; c < q.polys.size(); ++c) {
      if (q.polys[c].degree() < basis[a].degree()) pairs.emplace_back(c, a);
    }
  }
  std::vector<std::string> failures(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto [c, a] = pairs[k];
      RatPoly r = apply_diff_op(q.polys[c], basis[a], 1, metric);
      if (!r.is_zero()) failures[k] = "(q" + std::to_string(c + 1) + "," + h_name(a) + ") " + first_term_witness(r);
    }
  });
  CheckEntry e;
  e.id = "canonical.linear_conditions";
  std::size_t bad = 0;
  for (const auto& f : failures) {
    if (f.empty()) continue;
    if (e.witness.empty()) e.witness = f;
    ++bad;
  }
  e.passed = bad == 0;
  e.detail = std::to_string(pairs.size()) + " conditions, " + std::to_string(bad) + " violated";
  e.seconds = seconds_since(t0);
  return e;
}

// ---------------------------------------------------------------------------
// Jacobian

std::optional<IntPoly> divide_by_linear_form(const IntPoly& p, const std::vector<Integer>& form) {
  const int n = p.nvars();
  if (static_cast<int>(form.size()) != n) throw std::invalid_argument("linear form has wrong length");
  auto lead = std::find_if(form.begin(), form.end(), [](const Integer& c) { return sgn(c) != 0; });
  if (lead == form.end()) throw std::invalid_argument("division by the zero form");
  if (p.is_zero()) return IntPoly(n);
  const int v = static_cast<int>(lead - form.begin());
  const Integer& c = *lead;

  // rest = form - c x_v
  std::vector<IntPoly::Term> rest_terms;
  for (int i = 0; i < n; ++i) {
    if (i != v && sgn(form[static_cast<std::size_t>(i)]) != 0) {
      rest_terms.push_back({Monomial::variable(i), form[static_cast<std::size_t>(i)]});
    }
  }
  const IntPoly rest = IntPoly::from_terms(n, std::move(rest_terms));

  // p = sum_k P_k x_v^k
  std::vector<IntPoly> buckets;
  for (const auto& t : p.terms()) {
    const unsigned k = t.mono.exponent(v);
    if (buckets.size() <= k) buckets.resize(k + 1, IntPoly(n));
    buckets[k].mutable_terms().push_back({t.mono / Monomial::variable(v, k), t.coeff});
  }
  const std::size_t top = buckets.size() - 1;
  auto divide_by_c = [&](IntPoly& x) {
    for (auto& t : x.mutable_terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) return false;
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    }
    return true;
  };
  // quotient = sum_k Q_k x_v^k with Q_{k-1} = (P_k - rest * Q_k) / c
  std::vector<IntPoly> quot(std::max<std::size_t>(top, 1), IntPoly(n));
  if (top == 0) return std::nullopt;  // no x_v at all: only possible if p == 0
  IntPoly current = buckets[top];
  for (std::size_t k = top; k >= 1; --k) {
    if (!divide_by_c(current)) return std::nullopt;
    quot[k - 1] = current;
    current = buckets[k - 1] - rest * quot[k - 1];
  }
  if (!current.is_zero()) return std::nullopt;
  std::vector<IntPoly::Term> terms;
  for (std::size_t k = 0; k < quot.size(); ++k) {
    for (const auto& t : quot[k].terms()) terms.push_back({t.mono * Monomial::variable(v, static_cast<unsigned>(k)), t.coeff});
  }
  return IntPoly::from_terms(n, std::move(terms));
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

namespace {

// Radicand r_i in {1, 2, 3, 6} such that sqrt(r_i) times every simple-root
// entry at coordinate i is rational: with x_i = sqrt(r_i) u_i all root
// forms become rational.
std::vector<int> root_coordinate_radicands(const GroupSpec& g) {
  std::vector<int> out(static_cast<std::size_t>(g.rank), 0);
  for (int i = 0; i < g.rank; ++i) {
    for (int r : {1, 2, 3, 6}) {
      const FieldElement s = Radical(1, r).to_field();
      bool ok = std::all_of(g.simple_roots.begin(), g.simple_roots.end(), [&](const Vector& alpha) {
        return (alpha[static_cast<std::size_t>(i)] * s).is_rational();
      });
      if (ok) {
        out[static_cast<std::size_t>(i)] = r;
        break;
      }
    }
    if (out[static_cast<std::size_t>(i)] == 0) throw InvariantViolation("root coordinates cannot be rationalized");
  }
  return out;
}

FieldElement sqrt_power(int r, unsigned e) {
  Integer even;
  mpz_ui_pow_ui(even.get_mpz_t(), static_cast<unsigned long>(r), e / 2);
  FieldElement v(even);
  if (e % 2 == 1) v *= Radical(1, r).to_field();
  return v;
}

// f(sqrt(r) u) as (constant) * primitive integer polynomial; nullopt when no
// common irrational constant exists.
std::optional<IntPoly> in_root_coordinates(const FieldPoly& f, const std::vector<int>& radicands) {
  FieldPoly g = f;
  for (auto& t : g.mutable_terms()) {
    for (std::size_t i = 0; i < radicands.size(); ++i) {
      const unsigned e = t.mono.exponent(static_cast<int>(i));
      if (e != 0 && radicands[i] != 1) t.coeff *= sqrt_power(radicands[i], e);
    }
  }
  if (g.is_zero()) return std::nullopt;
  const FieldElement inv = g.leading_term().coeff.inverse();
  for (auto& t : g.mutable_terms()) {
    t.coeff *= inv;
    if (!t.coeff.is_rational()) return std::nullopt;
  }
  return content_primitive(to_rational(g)).primitive;
}

std::vector<Integer> root_form_coefficients(const Vector& alpha, const std::vector<int>& radicands) {
  std::vector<Rational> v(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    FieldElement c = alpha[i] * Radical(1, radicands[i]).to_field();
    if (!c.is_rational()) throw InvariantViolation("root not rational in root coordinates");
    v[i] = c.as_rational();
  }
  std::size_t ref = 0;
  while (sgn(v[ref]) == 0) ++ref;
  return primitive_vector(v, ref);
}

std::vector<Integer> gradient_at(const IntPoly& f, const std::vector<Integer>& u) {
  const int n = f.nvars();
  const int deg = std::max(f.degree(), 0);
  std::vector<std::vector<Integer>> pw(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(deg) + 1));
  for (int i = 0; i < n; ++i) {
    auto& row = pw[static_cast<std::size_t>(i)];
    row[0] = 1;
    for (int e = 1; e <= deg; ++e) row[static_cast<std::size_t>(e)] = row[static_cast<std::size_t>(e) - 1] * u[static_cast<std::size_t>(i)];
  }
  std::vector<Integer> grad(static_cast<std::size_t>(n), Integer(0));
  std::vector<Integer> prefix(static_cast<std::size_t>(n) + 1), suffix(static_cast<std::size_t>(n) + 1);
  for (const auto& t : f.terms()) {
    prefix[0] = 1;
    for (int i = 0; i < n; ++i) {
      prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] * pw[static_cast<std::size_t>(i)][t.mono.exponent(i)];
    }
    suffix[static_cast<std::size_t>(n)] = 1;
    for (int i = n - 1; i >= 0; --i) {
      suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] * pw[static_cast<std::size_t>(i)][t.mono.exponent(i)];
    }
    for (int i = 0; i < n; ++i) {
      const unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      Integer v = t.coeff * e;
      v *= prefix[static_cast<std::size_t>(i)];
      v *= suffix[static_cast<std::size_t>(i) + 1];
      v *= pw[static_cast<std::size_t>(i)][e - 1];
      grad[static_cast<std::size_t>(i)] += v;
    }
  }
  return grad;
}

std::string vector_string(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

IntPoly symbolic_jacobian_determinant(const std::vector<IntPoly>& fs, unsigned threads) {
  const int n = static_cast<int>(fs.size());
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::vector<IntPoly>> jac(fs.size());
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < n; ++i) jac[static_cast<std::size_t>(a)].push_back(partial_derivative(fs[static_cast<std::size_t>(a)], i));
  }
  // minors[S] for the first k rows over the column set S (|S| = k)
  std::vector<IntPoly> minors(full, IntPoly(n));
  minors[0] = IntPoly::constant(n, Integer(1));
  for (int k = 0; k < n; ++k) {
    std::vector<std::size_t> sets;
    for (std::size_t s = 0; s < full; ++s) {
      if (std::popcount(s) == k + 1) sets.push_back(s);
    }
    std::vector<IntPoly> next(sets.size(), IntPoly(n));
    parallel_for(sets.size(), threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t idx = begin; idx < end; ++idx) {
        const std::size_t s = sets[idx];
        IntPoly acc(n);
        int pos = 0;
        for (int i = 0; i < n; ++i) {
          if (!(s >> i & 1u)) continue;
          const IntPoly& entry = jac[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
          const IntPoly& minor = minors[s & ~(std::size_t{1} << i)];
          if (!entry.is_zero() && !minor.is_zero()) {
            IntPoly term = entry * minor;
            if ((k + pos) % 2 == 0) acc += term;
            else acc -= term;
          }
          ++pos;
        }
        next[idx] = std::move(acc);
      }
    });
    for (std::size_t idx = 0; idx < sets.size(); ++idx) minors[sets[idx]] = std::move(next[idx]);
  }
  return minors[full - 1];
}

}  // namespace

std::vector<CheckEntry> check_jacobian(const GroupSpec& g, const std::vector<RatPoly>& basis,
                                       const VerifyOptions& options) {
  std::vector<CheckEntry> out;
  auto t0 = Clock::now();
  CheckEntry roots_entry;
  roots_entry.id = "roots.count";
  std::vector<Vector> roots;
  try {
    roots = generate_positive_roots(g);
    roots_entry.passed = true;
    roots_entry.detail = std::to_string(roots.size()) + " positive roots";
  } catch (const InvariantViolation& ex) {
    roots_entry.passed = false;
    roots_entry.witness = ex.what();
  }
  roots_entry.seconds = seconds_since(t0);
  out.push_back(roots_entry);
  if (!roots_entry.passed) return out;

  t0 = Clock::now();
  const std::vector<int> radicands = root_coordinate_radicands(g);
  std::vector<IntPoly> fs;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    auto f = in_root_coordinates(to_original_coordinates(g, basis[a]), radicands);
    if (!f) {
      CheckEntry e;
      e.id = "jacobian.setup";
      e.witness = h_name(a) + " has no rational form in root coordinates";
      out.push_back(e);
      return out;
    }
    fs.push_back(std::move(*f));
  }
  std::vector<std::vector<Integer>> forms;
  for (const auto& r : roots) forms.push_back(root_form_coefficients(r, radicands));

  const bool symbolic = options.level == CheckLevel::full && g.rank <= 6;
  CheckEntry e;
  if (symbolic) {
    e.id = "jacobian.division_chain";
    IntPoly det = symbolic_jacobian_determinant(fs, options.threads);
    const int expected = g.n_positive_roots;
    if (det.is_zero() || !det.is_homogeneous() || det.degree() != expected) {
      e.witness = "determinant has degree " + std::to_string(det.degree()) + ", expected " + std::to_string(expected);
    } else {
      const std::size_t det_terms = det.size();
      IntPoly quotient = std::move(det);
      for (std::size_t r = 0; r < forms.size() && e.witness.empty(); ++r) {
        auto q = divide_by_linear_form(quotient, forms[r]);
        if (!q) e.witness = "root form " + vector_string(forms[r]) + " does not divide the remaining quotient";
        else quotient = std::move(*q);
      }
      if (e.witness.empty()) {
        if (quotient.degree() != 0) {
          e.witness = "quotient has degree " + std::to_string(quotient.degree());
        } else {
          e.passed = true;
          e.detail = "det has " + std::to_string(det_terms) + " terms, degree " + std::to_string(expected) +
                     "; quotient by " + std::to_string(forms.size()) + " root forms is the constant " +
                     coeff_string(quotient.leading_term().coeff);
        }
      }
    }
  } else {
    e.id = "jacobian.hyperplane_points";
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> coord(-9, 9);
    auto random_vector = [&] {
      std::vector<Integer> v(static_cast<std::size_t>(g.rank));
      for (auto& x : v) x = coord(rng);
      return v;
    };
    auto jacobian_det = [&](const std::vector<Integer>& u) {
      std::vector<std::vector<Integer>> m;
      for (const auto& f : fs) m.push_back(gradient_at(f, u));
      return bareiss_determinant(std::move(m));
    };
    auto dot_int = [](const std::vector<Integer>& a, const std::vector<Integer>& b) {
      Integer s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
      return s;
    };
    std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
    int checked = 0;
    for (int k = 0; k < options.hyperplane_points && e.witness.empty(); ++k) {
      const auto& root = forms[pick(rng)];
      std::vector<Integer> u;
      do {
        auto v = random_vector();
        const Integer rr = dot_int(root, root), rv = dot_int(root, v);
        u.resize(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) u[i] = rr * v[i] - rv * root[i];
      } while (std::all_of(u.begin(), u.end(), [](const Integer& x) { return sgn(x) == 0; }));
      if (sgn(jacobian_det(u)) != 0) e.witness = "det nonzero on hyperplane of " + vector_string(root) + " at " + vector_string(u);
      ++checked;
    }
    if (e.witness.empty()) {
      std::vector<Integer> v;
      bool generic = false;
      while (!generic) {
        v = random_vector();
        generic = std::all_of(forms.begin(), forms.end(), [&](const auto& f) { return sgn(dot_int(f, v)) != 0; });
      }
      Integer d = jacobian_det(v);
      if (sgn(d) == 0) {
        e.witness = "det vanishes at generic point " + vector_string(v);
      } else {
        e.passed = true;
        e.detail = std::to_string(checked) + " hyperplane points vanish; det nonzero at generic point " +
                   vector_string(v);
      }
    }
  }
  e.seconds = seconds_since(t0);
  out.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Published tables

std::vector<CheckEntry> regress_published(const GroupSpec& g, const std::vector<TransformRecord>& records,
                                          std::vector<std::optional<Rational>>& multiples) {
  std::vector<CheckEntry> out;
  multiples.assign(records.size(), std::nullopt);
  const PublishedTable* table = published_table(g.name);
  if (!table) return out;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& rec = records[k];
    CheckEntry e;
    e.id = "published.h" + std::to_string(rec.a);
    auto it = std::find_if(table->entries.begin(), table->entries.end(),
                           [&](const PublishedEntry& p) { return p.a == rec.a; });
    if (it == table->entries.end()) {
      e.witness = "no published entry";
      out.push_back(e);
      continue;
    }
    const QPolynomial pub = parse_q_expression(it->expression, g.rank);
    std::vector<Rational> pv(rec.monomials.size(), Rational(0));
    for (const auto& [m, c] : pub) {
      auto pos = std::find(rec.monomials.begin(), rec.monomials.end(), m);
      if (pos == rec.monomials.end()) {
        e.witness = "published monomial outside the ansatz";
        break;
      }
      pv[static_cast<std::size_t>(pos - rec.monomials.begin())] = c;
    }
    if (e.witness.empty()) {
      std::optional<Rational> mu;
      for (std::size_t j = 0; j < pv.size(); ++j) {
        if (sgn(pv[j]) != 0) {
          mu = rec.z[j] / pv[j];
          break;
        }
      }
      if (!mu || sgn(*mu) == 0) {
        e.witness = "zero multiple";
      } else {
        for (std::size_t j = 0; j < pv.size() && e.witness.empty(); ++j) {
          if (rec.z[j] != *mu * pv[j]) {
            e.witness = "coefficient " + std::to_string(j + 1) + ": computed " + to_string(rec.z[j]) +
                        ", published " + to_string(pv[j]) + " times " + to_string(*mu);
          }
        }
        if (e.witness.empty()) {
          e.passed = true;
          e.detail = std::to_string(pv.size()) + " coefficients, computed = " + to_string(*mu) + " * published";
          multiples[k] = *mu;
        }
      }
    }
    out.push_back(e);
  }
  return out;
}

std::vector<CheckEntry> check_norm_constants(const GroupSpec& g, const std::vector<TransformRecord>& records,
                                             const std::vector<std::optional<Rational>>& multiples) {
  std::vector<CheckEntry> out;
  const PublishedTable* table = published_table(g.name);
  if (!table) return out;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& rec = records[k];
    CheckEntry e;
    e.id = "norm.h" + std::to_string(rec.a);
    auto it = std::find_if(table->entries.begin(), table->entries.end(),
                           [&](const PublishedEntry& p) { return p.a == rec.a; });
    if (it == table->entries.end() || k >= multiples.size() || !multiples[k]) {
      e.witness = "no published multiple available";
      out.push_back(e);
      continue;
    }
    const Rational& mu = *multiples[k];
    // published h = (prefactor / mu) * computed h
    const Rational rescaled_norm = it->prefactor.square() * rec.norm_sq / (mu * mu);
    const Rational expected = Rational(it->k_denominator * it->k_denominator * it->k_radicand);
    // 1/||h|| for the computed h equals |prefactor / mu| / (D sqrt(R))
    Radical expected_factor = it->prefactor * Radical(Rational(abs(Rational(1) / (mu * Rational(it->k_denominator)))), 1) *
                              inverse_sqrt(Rational(it->k_radicand));
    expected_factor = radical_simplify(Rational(abs(expected_factor.scale())), expected_factor.radicand());
    if (rescaled_norm != expected) {
      e.witness = "published-scale norm " + to_string(rescaled_norm) + ", expected " + to_string(expected);
    } else if (!(expected_factor == rec.norm_factor)) {
      e.witness = "normalization factor " + rec.norm_factor.to_string() + ", expected " + expected_factor.to_string();
    } else {
      e.passed = true;
      e.detail = "||h||^2 = " + it->k_denominator.get_str() + "^2 * " + it->k_radicand.get_str();
    }
    out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Driver

VerificationReport verify_canonicalization(const GroupSpec& g, const std::vector<TransformRecord>& records,
                                           const VerifyOptions& options) {
  VerificationReport report;
  report.group = g.name;
  report.seed = options.seed;
  report.level = options.level;
  auto add = [&](CheckEntry e) { report.checks.push_back(std::move(e)); };

  auto t0 = Clock::now();
  CheckEntry shape;
  shape.id = "records.shape";
  bool ok_shape = records.size() == static_cast<std::size_t>(g.rank);
  for (std::size_t k = 0; ok_shape && k < records.size(); ++k) {
    const auto& r = records[k];
    const Ansatz ansatz = make_ansatz(g, g.degrees[k]);
    ok_shape = r.a == static_cast<int>(k) + 1 && r.degree == g.degrees[k] && r.monomials == ansatz.monomials &&
               r.z.size() == r.monomials.size();
    if (!ok_shape) shape.witness = "record " + std::to_string(k + 1) + " does not match the ansatz of degree " +
                                   std::to_string(g.degrees[k]);
  }
  if (!ok_shape && shape.witness.empty()) {
    shape.witness = std::to_string(records.size()) + " records for rank " + std::to_string(g.rank);
  }
  shape.passed = ok_shape;
  shape.detail = std::to_string(records.size()) + " records";
  shape.seconds = seconds_since(t0);
  add(shape);
  if (!ok_shape) return report;

  t0 = Clock::now();
  const QBasis q = build_q_basis(g);
  const std::vector<RatPoly> hs = expand_records(q, records);
  const Metric metric = g.metric();

  CheckEntry consistency;
  consistency.id = "records.expansion";
  consistency.passed = true;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    std::string why;
    if (r.h_poly && !(*r.h_poly == hs[k])) why = "stored h_poly differs from the z expansion";
    else if (norm_sq(hs[k], metric) != r.norm_sq) why = "norm_sq differs from the expansion";
    else if (r.norm_factor.square() * r.norm_sq != 1) why = "norm_factor^2 * norm_sq != 1";
    if (!why.empty() && consistency.passed) {
      consistency.passed = false;
      consistency.witness = h_name(k) + ": " + why;
    }
  }
  consistency.detail = "h re-expanded from z; norms and factors recomputed";
  consistency.seconds = seconds_since(t0);
  add(consistency);

  if (options.check_invariance) {
    t0 = Clock::now();
    CheckEntry inv;
    inv.id = "basis.invariance";
    inv.passed = true;
    for (std::size_t b = 0; b < q.polys.size() && inv.passed; ++b) {
      if (!check_scaled_invariance(g, q.polys[b])) {
        inv.passed = false;
        inv.witness = "q" + std::to_string(b + 1) + " is not fixed by a simple reflection";
      }
    }
    inv.detail = std::to_string(q.polys.size()) + " basis polynomials under " + std::to_string(g.simple_roots.size()) +
                 " simple reflections";
    inv.seconds = seconds_since(t0);
    add(inv);
  }

  add(check_linear_conditions(g, q, hs, options.threads));
  add(check_canonical(g, hs, options.threads));
  add(check_harmonic(g, hs, options.threads));

  bool all_even = std::all_of(q.polys.begin(), q.polys.end(), [&](const RatPoly& p) {
    return p.even_variable_mask() == (1u << g.rank) - 1;
  });
  if (all_even) {
    t0 = Clock::now();
    CheckEntry par;
    par.id = "parity.even_exponents";
    par.passed = true;
    for (std::size_t k = 0; k < hs.size() && par.passed; ++k) {
      if (hs[k].even_variable_mask() != (1u << g.rank) - 1) {
        par.passed = false;
        par.witness = h_name(k) + " has an odd exponent";
      }
    }
    par.detail = "every exponent of every h is even";
    par.seconds = seconds_since(t0);
    add(par);
  }

  if (g.dn_even) {
    t0 = Clock::now();
    CheckEntry dn;
    dn.id = "dn_even.orthogonal_pair";
    dn.passed = true;
    int pairs = 0;
    for (std::size_t a = 0; a < hs.size(); ++a) {
      for (std::size_t b = a + 1; b < hs.size(); ++b) {
        if (g.degrees[a] != g.degrees[b]) continue;
        ++pairs;
        Rational v = pairing_number(hs[a], hs[b], metric);
        if (sgn(v) != 0 && dn.passed) {
          dn.passed = false;
          dn.witness = "(" + h_name(a) + "," + h_name(b) + ") = " + to_string(v);
        }
      }
    }
    if (pairs == 0) {
      dn.passed = false;
      dn.witness = "no repeated degree";
    }
    dn.detail = std::to_string(pairs) + " equal-degree pair(s)";
    dn.seconds = seconds_since(t0);
    add(dn);
  }

  for (auto& e : check_jacobian(g, hs, options)) add(std::move(e));

  std::vector<std::optional<Rational>> multiples;
  for (auto& e : regress_published(g, records, multiples)) add(std::move(e));
  for (auto& e : check_norm_constants(g, records, multiples)) add(std::move(e));
  return report;
}

std::string report_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "group " << report.group << "  level " << to_string(report.level) << "  seed " << report.seed << "\n";
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.id;
    if (!c.detail.empty()) os << "  " << c.detail;
    if (!c.witness.empty()) os << "  witness: " << c.witness;
    os << "\n";
  }
  os << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
  return os.str();
}

}  // namespace canonbasis
