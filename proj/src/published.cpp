#include "canonbasis/verify.hpp"

#include <cctype>
#include <mutex>

namespace canonbasis {

namespace {

// Transformation tables: h_a = prefactor * expression(q), and the
// normalization k_a = h_a / (D * sqrt(R)).
std::vector<PublishedTable> make_tables() {
  return {
  {"E6",
   {
    {1, Radical(Rational(1), 1),
      "q1",
      Integer("2"), Integer("3")},
    {2, Radical(Rational(1, 3), 3),
      "q2",
      Integer("48"), Integer("2")},
    {3, Radical(Rational(1), 3),
      "-8*q1^3+q3",
      Integer("576"), Integer("5")},
    {4, Radical(Rational(1, 5), 3),
      "1120*q1^4-224*q1*q3+3*q4",
      Integer("13824"), Integer("70")},
    {5, Radical(Rational(1, 3), 3),
      "-80*q1^2*q2+q5",
      Integer("46080"), Integer("2")},
    {6, Radical(make_rational(Integer("1"), Integer("405")), 1),
      "-169845984*q1^6-18714080*q1*q2^2+50516928*q1^3*q3-657888*q3^2-1108536*q1^2*q4+21171*q6",
      Integer("4423680"), Integer("543389")},
   }},
  {"E7",
   {
    {1, Radical(Rational(1), 1),
      "q1",
      Integer("1"), Integer("14")},
    {2, Radical(make_rational(Integer("1"), Integer("2")), 1),
      "-15*q1^3+11*q2",
      Integer("24"), Integer("2310")},
    {3, Radical(make_rational(Integer("1"), Integer("20")), 1),
      "2835*q1^4-3276*q1*q2+247*q3",
      Integer("2016"), Integer("741")},
    {4, Radical(make_rational(Integer("1"), Integer("2")), 1),
      "-9*q1*(18*q1^4-30*q1*q2+5*q3)+23*q4",
      Integer("40320"), Integer("138")},
    {5, Radical(make_rational(Integer("1"), Integer("10")), 1),
      "11*(280*q1^6-1288*q1^3*q2-490*q2^2+761*q1^2*q3-970*q1*q4)+1735*q5",
      Integer("483840"), Integer("7634")},
    {6, Radical(make_rational(Integer("1"), Integer("319")), 1),
      "819*(33*(4490*q1^7-8666*q1^4*q2+4900*q1*q2^2-300*q1^3*q3-465*q2*q3+2525*q1^2*q4)-36115*q1*"
      "q5)+1610605*q6",
      Integer("11612160"), Integer("146565055")},
    {7, Radical(make_rational(Integer("1"), Integer("15682040")), 1),
      "-2431*(5085078551185*q1^9-11402026037640*q1^6*q2+7472423123536*q1^3*q2^2-201739938400*q2^3"
      "-540102070990*q1^5*q3-748116822184*q1^2*q2*q3-46311340011*q1*q3^2+40*(152224768729*q1^4-65"
      "55491354*q1*q2+1476892164*q3)*q4)+742560*(12033352910*q1^3-517191829*q2)*q5-70397524026360"
      "0*q1^2*q6+64758924763060*q7",
      Integer("92897280"), Integer("5181830514230370")},
   }},
  {"E8",
   {
    {1, Radical(Rational(1), 1),
      "q1",
      Integer("4"), Integer("1")},
    {2, Radical(Rational(1), 1),
      "-10*q1^4+q2",
      Integer("1920"), Integer("42")},
    {3, Radical(make_rational(Integer("1"), Integer("7")), 1),
      "4235*q1^6-495*q1^2*q2+13*q3",
      Integer("92160"), Integer("15015")},
    {4, Radical(make_rational(Integer("1"), Integer("11")), 1),
      "-17589*q1^7+2145*q1^3*q2-91*q1*q3+8*q4",
      Integer("15482880"), Integer("65")},
    {5, Radical(make_rational(Integer("1"), Integer("7280")), 1),
      "17*q1*(27922895*q1^8-3333330*q1^4*q2-24453*q2^2+227864*q1^2*q3-36144*q1*q4)+7600*q5",
      Integer("1857945600"), Integer("17765")},
    {6, Radical(make_rational(Integer("1"), Integer("748")), 1),
      "-969*(429*q1^2*(992005*q1^8-115710*q1^4*q2-1271*q2^2)+728*(5059*q1^4+10*q2)*q3-647312*q1^3"
      "*q4)-12549880*q1*q5+880796*q6",
      Integer("52022476800"), Integer("4778475585")},
    {7, Radical(make_rational(Integer("1"), Integer("28647880800")), 1),
      "23*(4199*(20274537662080415*q1^12-2250467375658810*q1^8*q2-40769297380581*q1^4*q2^2+178341"
      "143921528*q1^6*q3+1420510398720*q1^2*q2*q3-1640*(8061383*q2^3+3080560*q3^2))-46512*q1*(301"
      "5480163976*q1^4+10722788425*q2)*q4+3837192062311440*q1^3*q5-443023026566400*q1^2*q6)+78547"
      "609202400*q7",
      Integer("41736889958400"), Integer("342348352885")},
    {8, Radical(make_rational(Integer("1"), Integer("19626789759713136000000")), 1),
      "667*(323*(-11*q1^3*(1094671830559801212459572195245*q1^12-124907605937936839186287677130*q"
      "1^8*q2-1777752453446126054618835543*q1^4*q2^2+530575867656892216179020*q2^3)-1144*q1*(9207"
      "3813834207882297946571*q1^8+511036172390511143554680*q1^4*q2-449662651462146636150*q2^2)*q"
      "3+40125576319460176480000*q1^3*q3^2+48*(406458546004454701971207148*q1^8+10883352884839130"
      "57060495*q1^4*q2-469314879303830560000*q2^2+9038224261602298802000*q1^2*q3)*q4-38325110052"
      "347105500800*q1*q4^2)-117040*(1497805112196088699388741*q1^6-1376419171002564521550*q1^2*q"
      "2+9544045308237440000*q3)*q5+100900800*q1*(207536086797307841747*q1^4-259054452883944920*q"
      "2)*q6)-121281139650829621358815920000*q1^3*q7+486032507227341717350400000*q8",
      Integer("14383174385664000"), Integer("14557753942206761")},
   }},  };
}

constexpr std::pair<std::string_view, std::uint64_t> kChecksums[] = {
    {"E6", 14962133778966050553ULL},
    {"E7", 3763277216766221758ULL},
    {"E8", 16197176456333450280ULL},
};

void fnv_mix(std::uint64_t& h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h ^= 0xff;
  h *= 0x100000001b3ULL;
}

}  // namespace

std::uint64_t table_checksum(const PublishedTable& table) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv_mix(h, table.group);
  for (const auto& e : table.entries) {
    fnv_mix(h, std::to_string(e.a));
    fnv_mix(h, e.prefactor.to_string());
    fnv_mix(h, e.expression);
    fnv_mix(h, e.k_denominator.get_str());
    fnv_mix(h, e.k_radicand.get_str());
  }
  return h;
}

const PublishedTable* published_table(std::string_view group) {
  static const std::vector<PublishedTable> tables = [] {
    auto t = make_tables();
    for (const auto& table : t) {
      for (const auto& [name, sum] : kChecksums) {
        if (name == table.group && sum != table_checksum(table)) {
          throw InvariantViolation("published table " + table.group + " fails its checksum");
        }
      }
    }
    return t;
  }();
  for (const auto& t : tables) {
    if (t.group == group) return &t;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class QParser {
 public:
  QParser(std::string_view text, int nq) : s_(text), nq_(nq) {}

  QPolynomial parse() {
    QPolynomial r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("q-expression: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  static void add_into(QPolynomial& acc, const QPolynomial& x, int sign) {
    for (const auto& [m, c] : x) {
      Rational& slot = acc[m];
      if (sign > 0) slot += c; else slot -= c;
      if (sgn(slot) == 0) acc.erase(m);
    }
  }
  QPolynomial mul(const QPolynomial& x, const QPolynomial& y) const {
    QPolynomial r;
    for (const auto& [mx, cx] : x) {
      for (const auto& [my, cy] : y) {
        MultiIndex m(static_cast<std::size_t>(nq_));
        for (int i = 0; i < nq_; ++i) m[static_cast<std::size_t>(i)] = mx[static_cast<std::size_t>(i)] + my[static_cast<std::size_t>(i)];
        r[m] += cx * cy;
      }
    }
    for (auto it = r.begin(); it != r.end();) it = sgn(it->second) == 0 ? r.erase(it) : std::next(it);
    return r;
  }
  QPolynomial constant(const Rational& c) const {
    QPolynomial r;
    if (sgn(c) != 0) r[MultiIndex(static_cast<std::size_t>(nq_), 0)] = c;
    return r;
  }

  QPolynomial expr() {
    QPolynomial acc;
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    add_into(acc, term(), sign);
    while (true) {
      if (eat('+')) add_into(acc, term(), 1);
      else if (eat('-')) add_into(acc, term(), -1);
      else break;
    }
    return acc;
  }
  QPolynomial term() {
    QPolynomial r = power();
    while (eat('*')) r = mul(r, power());
    return r;
  }
  QPolynomial power() {
    QPolynomial base = primary();
    if (eat('^')) {
      const int e = std::stoi(digits());
      QPolynomial r = constant(1);
      for (int k = 0; k < e; ++k) r = mul(r, base);
      return r;
    }
    return base;
  }
  QPolynomial primary() {
    skip();
    if (eat('(')) {
      QPolynomial r = expr();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    if (pos_ < s_.size() && s_[pos_] == 'q') {
      ++pos_;
      const int i = std::stoi(digits());
      if (i < 1 || i > nq_) fail("symbol index out of range");
      MultiIndex m(static_cast<std::size_t>(nq_), 0);
      m[static_cast<std::size_t>(i - 1)] = 1;
      return QPolynomial{{m, Rational(1)}};
    }
    return constant(Rational(Integer(digits())));
  }

  std::string_view s_;
  int nq_;
  std::size_t pos_ = 0;
};

}  // namespace

QPolynomial parse_q_expression(std::string_view text, int nq) {
  if (nq < 1 || nq > Monomial::kMaxVars) throw std::invalid_argument("q-expression: bad symbol count");
  return QParser(text, nq).parse();
}

}  // namespace canonbasis
