#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace canonbasis {

/// Exponent vector x_1^{e_1} ... x_n^{e_n} packed one byte per variable into
/// a 64-bit word, x_1 in the lowest byte. Up to 8 variables; each exponent is
/// kept below 128 so that componentwise subtraction can detect borrows with
/// word arithmetic.
class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr unsigned kMaxExponent = 127;

  constexpr Monomial() = default;
  static constexpr Monomial from_packed(std::uint64_t w) {
    Monomial m;
    m.packed_ = w;
    return m;
  }
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int index, unsigned power = 1);

  constexpr std::uint64_t packed() const { return packed_; }

  constexpr unsigned exponent(int i) const {
    return static_cast<unsigned>((packed_ >> (8 * i)) & 0xFFu);
  }

  /// Sum of the exponents. Exact while the sum stays below 256, which the
  /// exponent bound guarantees for any product of two valid monomials.
  constexpr unsigned total_degree() const {
    return static_cast<unsigned>((packed_ * 0x0101010101010101ULL) >> 56);
  }

  std::vector<int> exponents(int nvars) const;

  /// Componentwise sum. The caller keeps exponents within kMaxExponent.
  constexpr Monomial operator*(Monomial o) const { return from_packed(packed_ + o.packed_); }

  /// True if every exponent of d is <= the matching exponent of *this.
  constexpr bool divisible_by(Monomial d) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
    return (((packed_ | kHigh) - d.packed_) & kHigh) == kHigh;
  }

  /// Componentwise difference; requires divisible_by(d).
  constexpr Monomial operator/(Monomial d) const { return from_packed(packed_ - d.packed_); }

  friend constexpr bool operator==(Monomial a, Monomial b) { return a.packed_ == b.packed_; }

  std::string to_string(int nvars) const;

 private:
  std::uint64_t packed_ = 0;
};

/// Graded reverse lexicographic order: higher degree first; within a degree
/// the monomial with the smaller exponent on the last variable is larger.
/// With the packing above this reduces to comparing the packed words.
constexpr bool grevlex_greater(Monomial a, Monomial b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.packed() < b.packed();
}

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept {
    std::uint64_t x = m.packed();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

/// All monomials of total degree `degree` in `nvars` variables, in grevlex
/// descending order. Variables flagged in `even_mask` (bit i for x_{i+1}) only
/// take even exponents.
std::vector<Monomial> monomials_of_degree(int nvars, unsigned degree, unsigned even_mask = 0);

/// Number of monomials of the given degree (stars and bars).
std::uint64_t count_monomials(int nvars, unsigned degree);

}  // namespace canonbasis
