#include "cubinv/field.hpp"

#include <stdexcept>
#include <string>

namespace cubinv {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_supported_prime(std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p <= 3)
    throw std::invalid_argument("characteristic must exceed 3, got " + std::to_string(p));
  if (p >= kMaxPrime)
    throw std::invalid_argument("prime " + std::to_string(p) + " exceeds supported bound 65536");
}

namespace modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p, base = a % p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p));
  // extended Euclid on (a, p)
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0, p);
}

}  // namespace modp

FieldElement::FieldElement(std::uint32_t p, std::int64_t value) : p_(p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  value_ = modp::reduce(value, p);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("mixed characteristics " + std::to_string(p_) + " and " +
                                std::to_string(o.p_));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {Unchecked{}, p_, modp::add(value_, o.value_, p_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {Unchecked{}, p_, modp::sub(value_, o.value_, p_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {Unchecked{}, p_, modp::mul(value_, o.value_, p_)};
}
FieldElement FieldElement::operator-() const { return {Unchecked{}, p_, modp::neg(value_, p_)}; }
FieldElement FieldElement::inv() const { return {Unchecked{}, p_, modp::inv(value_, p_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const {
  return {Unchecked{}, p_, modp::pow(value_, e, p_)};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

}  // namespace cubinv
