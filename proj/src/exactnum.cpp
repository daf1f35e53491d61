#include "canonbasis/exactnum.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace canonbasis {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return make_rational(Integer(num), d);
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

const Rational& FieldElement::as_rational() const {
  if (!is_rational()) {
    throw std::domain_error("field element " + to_string() + " is irrational");
  }
  return a_;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  if (y.is_rational()) {
    const Rational& s = y.a_;
    return {x.a_ * s, x.b_ * s, x.c_ * s, x.d_ * s};
  }
  if (x.is_rational()) {
    const Rational& s = x.a_;
    return {y.a_ * s, y.b_ * s, y.c_ * s, y.d_ * s};
  }
  // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2.
  FieldElement r;
  r.a_ = x.a_ * y.a_ + 2 * x.b_ * y.b_ + 3 * x.c_ * y.c_ + 6 * x.d_ * y.d_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_ + 3 * (x.c_ * y.d_ + x.d_ * y.c_);
  r.c_ = x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.d_ + x.d_ * y.b_);
  r.d_ = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
  return r;
}

std::array<std::array<Rational, 4>, 4> multiplication_matrix(const FieldElement& x) {
  const std::array<FieldElement, 4> basis = {FieldElement(1), FieldElement::sqrt2(),
                                             FieldElement::sqrt3(), FieldElement::sqrt6()};
  std::array<std::array<Rational, 4>, 4> m;
  for (int k = 0; k < 4; ++k) {
    FieldElement col = x * basis[k];
    m[0][k] = col.rational_part();
    m[1][k] = col.sqrt2_part();
    m[2][k] = col.sqrt3_part();
    m[3][k] = col.sqrt6_part();
  }
  return m;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (is_rational()) return FieldElement(Rational(1) / a_);

  // Solve M(x) y = e_0 by Gauss-Jordan elimination over Q.
  auto m = multiplication_matrix(*this);
  std::array<Rational, 4> rhs = {1, 0, 0, 0};
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && sgn(m[piv][col]) == 0) ++piv;
    if (piv == 4) throw InvariantViolation("singular multiplication matrix for nonzero element");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = 1 / m[col][col];
    for (int k = col; k < 4; ++k) m[col][k] *= inv;
    rhs[col] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  return {rhs[0], rhs[1], rhs[2], rhs[3]};
}

namespace {

// sign(s + t*sqrt2)
int sign_q2(const Rational& s, const Rational& t) {
  int ss = sgn(s), st = sgn(t);
  if (st == 0) return ss;
  if (ss == 0 || ss == st) return st;
  Rational w = s * s - 2 * t * t;
  return ss * sgn(w);
}

}  // namespace

int FieldElement::sign() const {
  // x = u + v*sqrt3 with u = a + b sqrt2, v = c + d sqrt2.
  int su = sign_q2(a_, b_);
  int sv = sign_q2(c_, d_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // u^2 - 3 v^2 in Q(sqrt2)
  Rational s = a_ * a_ + 2 * b_ * b_ - 3 * (c_ * c_ + 2 * d_ * d_);
  Rational t = 2 * a_ * b_ - 6 * c_ * d_;
  return su * sign_q2(s, t);
}

bool FieldElement::lex_less(const FieldElement& x, const FieldElement& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_;
  if (x.b_ != y.b_) return x.b_ < y.b_;
  if (x.c_ != y.c_) return x.c_ < y.c_;
  return x.d_ < y.d_;
}

std::array<std::string, 4> FieldElement::components() const {
  return {canonbasis::to_string(a_), canonbasis::to_string(b_), canonbasis::to_string(c_),
          canonbasis::to_string(d_)};
}

FieldElement FieldElement::from_components(const std::array<std::string, 4>& parts) {
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
          parse_rational(parts[3])};
}

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& q, const char* unit) {
    if (sgn(q) == 0) return;
    Rational mag = abs(q);
    if (!first) os << (sgn(q) < 0 ? " - " : " + ");
    else if (sgn(q) < 0) os << "-";
    if (*unit == '\0') os << canonbasis::to_string(mag);
    else if (mag == 1) os << unit;
    else os << canonbasis::to_string(mag) << "*" << unit;
    first = false;
  };
  emit(a_, "");
  emit(b_, "sqrt2");
  emit(c_, "sqrt3");
  emit(d_, "sqrt6");
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Integer factorisation (trial division + Pollard-Brent)

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % n, c = (seed * 7 + 3) % n, m = 128, g = 1, r = 1, q = 1;
  Integer x, ys;
  auto f = [&](const Integer& v) {
    Integer t = v * v + c;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return t;
  };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        Integer diff = abs(x - y);
        q = q * diff % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    out.push_back(n);
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    factor_into(root, out);
    factor_into(root, out);
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

std::vector<Integer> factor_integer(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("factor_integer requires n > 0");
  std::vector<Integer> out;
  Integer m = n;
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      m /= p;
    }
    if (m == 1) break;
  }
  factor_into(m, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Integer, Integer> square_free_decomposition(const Integer& n) {
  auto primes = factor_integer(n);
  Integer root = 1, free = 1;
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    std::size_t mult = j - i;
    for (std::size_t k = 0; k < mult / 2; ++k) root *= primes[i];
    if (mult % 2 == 1) free *= primes[i];
    i = j;
  }
  return {root, free};
}

// ---------------------------------------------------------------------------
// Radical

Radical::Radical(Rational scale, Integer radicand)
    : scale_(std::move(scale)), radicand_(std::move(radicand)) {
  scale_.canonicalize();
  if (radicand_ <= 0) throw std::invalid_argument("radicand must be positive");
  if (sgn(scale_) == 0) radicand_ = 1;
  if (square_free_decomposition(radicand_).first != 1) {
    throw std::invalid_argument("radicand " + radicand_.get_str() + " is not square-free");
  }
}

Rational Radical::square() const { return scale_ * scale_ * Rational(radicand_); }

Radical Radical::operator*(const Radical& o) const {
  Integer g;
  mpz_gcd(g.get_mpz_t(), radicand_.get_mpz_t(), o.radicand_.get_mpz_t());
  // sqrt(r1) sqrt(r2) = g sqrt(r1 r2 / g^2), and r1 r2 / g^2 is square-free.
  return {scale_ * o.scale_ * Rational(g), (radicand_ / g) * (o.radicand_ / g)};
}

Radical Radical::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero radical");
  return {1 / (scale_ * Rational(radicand_)), radicand_};
}

FieldElement Radical::to_field() const {
  if (radicand_ == 1) return {scale_, 0, 0, 0};
  if (radicand_ == 2) return {0, scale_, 0, 0};
  if (radicand_ == 3) return {0, 0, scale_, 0};
  if (radicand_ == 6) return {0, 0, 0, scale_};
  throw std::domain_error("sqrt(" + radicand_.get_str() + ") is outside Q(sqrt2, sqrt3)");
}

std::string Radical::to_string() const {
  if (radicand_ == 1) return canonbasis::to_string(scale_);
  if (scale_ == 1) return "sqrt(" + radicand_.get_str() + ")";
  return canonbasis::to_string(scale_) + "*sqrt(" + radicand_.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Radical& r) { return os << r.to_string(); }

Radical radical_simplify(const Rational& scale, const Integer& radicand) {
  if (radicand <= 0) throw std::invalid_argument("radicand must be positive");
  auto [root, free] = square_free_decomposition(radicand);
  return {scale * Rational(root), free};
}

Radical inverse_sqrt(const Rational& value) {
  if (sgn(value) <= 0) throw std::domain_error("inverse_sqrt of non-positive value");
  // 1/sqrt(u/v) = sqrt(u v) / u
  Rational v = value;
  v.canonicalize();
  return radical_simplify(Rational(1) / Rational(v.get_num()), v.get_num() * v.get_den());
}

}  // namespace canonbasis
