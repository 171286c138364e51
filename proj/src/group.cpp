#include "cubinv/group.hpp"

#include <sstream>
#include <stdexcept>

#include "cubinv/parallel.hpp"

namespace cubinv {

namespace {
std::uint32_t checked_prime(std::uint32_t p) {
  require_supported_prime(p);
  return p;
}
}  // namespace

SL2Element::SL2Element(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : p_(checked_prime(p)), m_{modp::reduce(a, p), modp::reduce(b, p), modp::reduce(c, p), modp::reduce(d, p)} {
  const std::uint32_t det = modp::sub(modp::mul(m_[0], m_[3], p), modp::mul(m_[1], m_[2], p), p);
  if (det != 1) throw std::invalid_argument("matrix " + to_string() + " does not have determinant 1");
}

SL2Element SL2Element::rho(std::uint32_t p, std::int64_t w) {
  const std::uint32_t x = modp::reduce(w, p);
  return {p, x, 0, 0, modp::inv(x, p)};
}

SL2Element SL2Element::operator*(const SL2Element& o) const {
  if (p_ != o.p_) throw std::invalid_argument("group elements over different primes");
  const auto& a = m_;
  const auto& b = o.m_;
  auto dot = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t w) {
    return modp::add(modp::mul(x, y, p_), modp::mul(z, w, p_), p_);
  };
  return {p_, dot(a[0], b[0], a[1], b[2]), dot(a[0], b[1], a[1], b[3]), dot(a[2], b[0], a[3], b[2]),
          dot(a[2], b[1], a[3], b[3])};
}

SL2Element SL2Element::inverse() const {
  return {p_, m_[3], modp::neg(m_[1], p_), modp::neg(m_[2], p_), m_[0]};
}

std::string SL2Element::to_string() const {
  std::ostringstream os;
  os << "[[" << m_[0] << "," << m_[1] << "],[" << m_[2] << "," << m_[3] << "]]";
  return os.str();
}

ActionMatrix ActionMatrix::operator*(const ActionMatrix& o) const {
  if (p != o.p) throw std::invalid_argument("action matrices over different primes");
  ActionMatrix r{p, {}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::uint64_t s = 0;
      for (int k = 0; k < 4; ++k) s += std::uint64_t(rows[i][k]) * o.rows[k][j];
      r.rows[i][j] = std::uint32_t(s % p);
    }
  return r;
}

ActionMatrix ActionMatrix::identity(std::uint32_t p) {
  ActionMatrix r{p, {}};
  for (int i = 0; i < 4; ++i) r.rows[i][i] = 1;
  return r;
}

ActionMatrix induced_matrix(const SL2Element& g) {
  const std::uint32_t p = g.prime();
  const auto& e = g.entries();
  // g Y = a Y + c X, g X = b Y + d X. Column k of the matrix holds the
  // coordinates of g(c_k Y^{3-k} X^k) in the basis c_l Y^{3-l} X^l, where
  // c = (1, 3, 3, 1). Writing u = X/Y the image is c_k (a + c u)^{3-k} (b + d u)^k.
  static constexpr std::uint32_t scale[4] = {1, 3, 3, 1};
  ActionMatrix m{p, {}};
  for (int k = 0; k < 4; ++k) {
    std::array<std::uint32_t, 4> coef{1, 0, 0, 0};
    auto mul_linear = [&](std::uint32_t c0, std::uint32_t c1) {
      std::array<std::uint32_t, 4> next{};
      for (int l = 0; l < 4; ++l) {
        next[l] = modp::add(next[l], modp::mul(coef[l], c0, p), p);
        if (l + 1 < 4) next[l + 1] = modp::add(next[l + 1], modp::mul(coef[l], c1, p), p);
      }
      coef = next;
    };
    for (int i = 0; i < 3 - k; ++i) mul_linear(e[0], e[2]);
    for (int i = 0; i < k; ++i) mul_linear(e[1], e[3]);
    for (int l = 0; l < 4; ++l)
      m.rows[l][k] = modp::mul(modp::mul(coef[l], scale[k], p), modp::inv(scale[l], p), p);
  }
  return m;
}

Poly act(const Poly& f, const ActionMatrix& m) {
  if (f.prime() != m.p) throw std::invalid_argument("action matrix over a different prime");
  return substitute_linear(f, m.rows);
}

Poly act(const Poly& f, const SL2Element& g) { return act(f, induced_matrix(g)); }

std::string to_string(Subgroup s) {
  switch (s) {
    case Subgroup::P: return "P";
    case Subgroup::Q: return "Q";
    case Subgroup::B: return "B";
    case Subgroup::G: return "G";
  }
  return "?";
}

std::vector<SL2Element> subgroup_elements(Subgroup s, std::uint32_t p) {
  std::vector<SL2Element> out;
  switch (s) {
    case Subgroup::P:
      for (std::uint32_t t = 0; t < p; ++t) out.push_back(SL2Element::sigma(p, t));
      break;
    case Subgroup::Q:
      for (std::uint32_t t = 0; t < p; ++t) out.push_back(SL2Element::sigma_t(p, t));
      break;
    case Subgroup::B:
      for (std::uint32_t w = 1; w < p; ++w)
        for (std::uint32_t t = 0; t < p; ++t)
          out.push_back(SL2Element::sigma(p, t) * SL2Element::rho(p, w));
      break;
    case Subgroup::G:
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
          for (std::uint32_t c = 0; c < p; ++c)
            for (std::uint32_t d = 0; d < p; ++d)
              if ((std::uint64_t(a) * d + std::uint64_t(p - b) * c) % p == 1)
                out.emplace_back(p, a, b, c, d);
      break;
  }
  return out;
}

std::size_t subgroup_order(Subgroup s, std::uint32_t p) {
  switch (s) {
    case Subgroup::P:
    case Subgroup::Q: return p;
    case Subgroup::B: return std::size_t(p) * (p - 1);
    case Subgroup::G: return std::size_t(p) * (std::size_t(p) * p - 1);
  }
  return 0;
}

std::vector<SL2Element> borel_coset_reps(std::uint32_t p) {
  auto reps = subgroup_elements(Subgroup::Q, p);
  reps.push_back(SL2Element::eta(p));
  return reps;
}

Poly transfer(const Poly& f, std::span<const SL2Element> reps) {
  std::vector<Poly> parts(reps.size(), Poly(f.prime()));
  parallel_for(reps.size(), [&](std::size_t i) { parts[i] = act(f, reps[i]); });
  Poly sum(f.prime());
  for (const auto& x : parts) sum += x;
  return sum;
}

Poly transfer_p(const Poly& f) { return transfer(f, subgroup_elements(Subgroup::P, f.prime())); }

Poly transfer_p_to_b(const Poly& f) {
  std::vector<SL2Element> reps;
  for (std::uint32_t w = 1; w < f.prime(); ++w) reps.push_back(SL2Element::rho(f.prime(), w));
  return transfer(f, reps);
}

Poly transfer_b_to_g(const Poly& f) { return transfer(f, borel_coset_reps(f.prime())); }

Poly transfer_g(const Poly& f) { return transfer_b_to_g(transfer_p_to_b(transfer_p(f))); }

Poly transfer_g_full(const Poly& f) { return transfer(f, subgroup_elements(Subgroup::G, f.prime())); }

Poly orbit_product(const Poly& f, Subgroup s) {
  Poly r = Poly::constant(f.prime(), 1);
  for (const auto& g : subgroup_elements(s, f.prime())) r = r * act(f, g);
  return r;
}

bool is_fixed_by(const Poly& f, const SL2Element& g) { return act(f, g) == f; }

}  // namespace cubinv
