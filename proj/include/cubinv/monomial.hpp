#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

namespace cubinv {

/// The four dual variables. The numeric value is the row index used by
/// action matrices, so a3 is row 0 and a0 is row 3.
enum class Var : int { a3 = 0, a2 = 1, a1 = 2, a0 = 3 };

inline constexpr std::array<Var, 4> kAllVars = {Var::a3, Var::a2, Var::a1, Var::a0};

/// A monomial a3^e3 a2^e2 a1^e1 a0^e0, packed into one word as
/// (degree, e0, e1, e2) with 16 bits each; e3 is implied by the degree.
///
/// The packing makes grevlex with a0 < a1 < a2 < a3 a plain integer comparison
/// once the three low fields are complemented: larger degree wins, then the
/// smaller e0, then the smaller e1, then the smaller e2. Multiplication is
/// addition of the packed words.
class Monomial {
 public:
  static constexpr unsigned kMaxDegree = 0xFFFF;

  constexpr Monomial() = default;
  /// Throws std::overflow_error if the degree exceeds kMaxDegree.
  Monomial(unsigned e3, unsigned e2, unsigned e1, unsigned e0);
  static Monomial power(Var v, unsigned e);
  static Monomial from_exponents(const std::array<unsigned, 4>& e) {
    return {e[0], e[1], e[2], e[3]};
  }

  unsigned degree() const { return static_cast<unsigned>(bits_ >> 48); }
  unsigned e0() const { return static_cast<unsigned>((bits_ >> 32) & 0xFFFF); }
  unsigned e1() const { return static_cast<unsigned>((bits_ >> 16) & 0xFFFF); }
  unsigned e2() const { return static_cast<unsigned>(bits_ & 0xFFFF); }
  unsigned e3() const { return degree() - e0() - e1() - e2(); }
  unsigned exponent(Var v) const;
  std::array<unsigned, 4> exponents() const { return {e3(), e2(), e1(), e0()}; }

  bool is_one() const { return bits_ == 0; }

  /// 3*e3 + e2 - e1 - 3*e0, the unreduced weight.
  std::int64_t raw_weight() const {
    return 3 * std::int64_t(e3()) + e2() - std::int64_t(e1()) - 3 * std::int64_t(e0());
  }
  /// Weight reduced into [0, p-1).
  unsigned weight(std::uint32_t p) const;
  /// (e2 mod 2, e1 mod 2).
  std::pair<unsigned, unsigned> parity() const { return {e2() & 1u, e1() & 1u}; }

  Monomial operator*(Monomial o) const;
  bool divides(Monomial o) const;
  /// Exact quotient; throws std::invalid_argument unless o divides *this.
  Monomial operator/(Monomial o) const;
  Monomial pow(unsigned k) const;
  static Monomial lcm(Monomial a, Monomial b);
  static Monomial gcd(Monomial a, Monomial b);

  std::uint64_t packed() const { return bits_; }
  static Monomial from_packed(std::uint64_t bits) {
    Monomial m;
    m.bits_ = bits;
    return m;
  }

  bool operator==(const Monomial&) const = default;
  /// grevlex with a0 < a1 < a2 < a3
  std::strong_ordering operator<=>(const Monomial& o) const {
    return order_key() <=> o.order_key();
  }
  std::uint64_t order_key() const { return bits_ ^ 0x0000FFFFFFFFFFFFull; }

  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Three-way grevlex comparison, as a free function.
inline std::strong_ordering grevlex_cmp(Monomial a, Monomial b) { return a <=> b; }

std::ostream& operator<<(std::ostream& os, Monomial m);

struct MonomialHash {
  std::size_t operator()(Monomial m) const noexcept {
    std::uint64_t x = m.packed() * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

}  // namespace cubinv
