#include "cubinv/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cubinv {

Monomial::Monomial(unsigned e3, unsigned e2, unsigned e1, unsigned e0) {
  std::uint64_t d = std::uint64_t(e3) + e2 + e1 + e0;
  if (d > kMaxDegree) throw std::overflow_error("monomial degree exceeds 65535");
  bits_ = (d << 48) | (std::uint64_t(e0) << 32) | (std::uint64_t(e1) << 16) | e2;
}

Monomial Monomial::power(Var v, unsigned e) {
  std::array<unsigned, 4> ex{};
  ex[static_cast<int>(v)] = e;
  return from_exponents(ex);
}

unsigned Monomial::exponent(Var v) const {
  switch (v) {
    case Var::a3: return e3();
    case Var::a2: return e2();
    case Var::a1: return e1();
    case Var::a0: return e0();
  }
  return 0;
}

unsigned Monomial::weight(std::uint32_t p) const {
  std::int64_t m = std::int64_t(p) - 1;
  std::int64_t w = raw_weight() % m;
  return static_cast<unsigned>(w < 0 ? w + m : w);
}

Monomial Monomial::operator*(Monomial o) const {
  if (degree() + o.degree() > kMaxDegree) throw std::overflow_error("monomial degree exceeds 65535");
  return from_packed(bits_ + o.bits_);
}

bool Monomial::divides(Monomial o) const {
  return e0() <= o.e0() && e1() <= o.e1() && e2() <= o.e2() && e3() <= o.e3();
}

Monomial Monomial::operator/(Monomial o) const {
  if (!o.divides(*this)) throw std::invalid_argument("monomial division is not exact");
  return from_packed(bits_ - o.bits_);
}

Monomial Monomial::pow(unsigned k) const {
  if (std::uint64_t(degree()) * k > kMaxDegree) throw std::overflow_error("monomial degree exceeds 65535");
  return from_packed(bits_ * k);
}

Monomial Monomial::lcm(Monomial a, Monomial b) {
  return {std::max(a.e3(), b.e3()), std::max(a.e2(), b.e2()), std::max(a.e1(), b.e1()),
          std::max(a.e0(), b.e0())};
}

Monomial Monomial::gcd(Monomial a, Monomial b) {
  return {std::min(a.e3(), b.e3()), std::min(a.e2(), b.e2()), std::min(a.e1(), b.e1()),
          std::min(a.e0(), b.e0())};
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::ostringstream os;
  static constexpr const char* names[] = {"a3", "a2", "a1", "a0"};
  bool first = true;
  for (Var v : kAllVars) {
    unsigned e = exponent(v);
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << names[static_cast<int>(v)];
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Monomial m) { return os << m.to_string(); }

}  // namespace cubinv
