#pragma once

/**
 * @file field.hpp
 * @brief Arithmetic in the prime field F_p.
 *
 * Residues are stored as the least non-negative representative. The polynomial
 * kernels built on top of this accumulate products lazily in 64-bit cells, so
 * the supported characteristic is capped at 2^16; every prime this library is
 * meant for (5, 7, 11, 13, ...) is far below that.
 */

#include <cstdint>
#include <ostream>

namespace cubinv {

/// Largest characteristic accepted by the polynomial layer (exclusive).
inline constexpr std::uint32_t kMaxPrime = 1u << 16;

bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument unless p is prime, p > 3 and p < kMaxPrime.
void require_supported_prime(std::uint64_t p);

/// Raw residue helpers; operands must already be reduced.
namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
/// Throws std::domain_error for a == 0.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
/// Reduces any signed integer into [0, p).
inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

}  // namespace modp

/// An element of F_p carrying its characteristic. Mixing characteristics
/// throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(std::uint32_t p, std::int64_t value);

  std::uint32_t value() const { return value_; }
  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const = default;

 private:
  struct Unchecked {};
  FieldElement(Unchecked, std::uint32_t p, std::uint32_t v) : value_(v), p_(p) {}
  void check_same(const FieldElement& o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace cubinv
