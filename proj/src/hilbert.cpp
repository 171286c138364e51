#include "cubinv/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cubinv/group.hpp"
#include "cubinv/invariants.hpp"
#include "cubinv/parallel.hpp"

namespace cubinv {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in series arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in series arithmetic");
  return r;
}

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

IntPoly t_pow(int k, std::int64_t c) {
  if (k < 0) throw std::invalid_argument("negative exponent in t_pow");
  IntPoly r(std::size_t(k) + 1, 0);
  r[std::size_t(k)] = c;
  trim(r);
  return r;
}

IntPoly one_minus_t(int k) { return t_pow(0) - t_pow(k); }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  trim(r);
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly nb(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) nb[i] = checked_mul(b[i], -1);
  return a + nb;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

PowerSeries divide(const PowerSeries& a, const IntPoly& q) {
  if (q.empty() || (q[0] != 1 && q[0] != -1)) throw std::domain_error("denominator constant term must be +-1");
  PowerSeries r{std::vector<std::int64_t>(a.coeffs.size(), 0)};
  for (std::size_t d = 0; d < a.coeffs.size(); ++d) {
    std::int64_t s = a.coeffs[d];
    for (std::size_t k = 1; k < q.size() && k <= d; ++k) s = checked_add(s, checked_mul(-q[k], r.coeffs[d - k]));
    r.coeffs[d] = checked_mul(s, q[0]);
  }
  return r;
}

PowerSeries expand(const RationalSeries& rs, int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  PowerSeries num{std::vector<std::int64_t>(std::size_t(d_max) + 1, 0)};
  for (std::size_t i = 0; i < rs.numerator.size() && i <= std::size_t(d_max); ++i) num.coeffs[i] = rs.numerator[i];
  return divide(num, rs.denominator);
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r{std::vector<std::int64_t>(std::min(a.coeffs.size(), b.coeffs.size()))};
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = checked_add(a.coeffs[i], b.coeffs[i]);
  return r;
}

std::optional<int> first_difference(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a.coeffs[i] != b.coeffs[i]) return int(i);
  return std::nullopt;
}

RationalSeries closed_form(std::uint32_t p) {
  require_supported_prime(p);
  const int P = int(p);
  auto t = [](int k, std::int64_t c = 1) { return t_pow(k, c); };
  const IntPoly one = t(0);
  if (!is_minus_one_mod3(p)) {
    const int pc = P * (P - 1) / 3;
    const IntPoly head = one + t(P + 1) + t(P + 3) + t(2 * P - 2) + t(2 * P + 4) + t(3 * P - 5) +
                         t(P - 1) * (t(2 * P - 2) - t((P - 1) * (P - 1) / 3)) + t(pc + P - 1) + t(pc + 2 * P);
    const IntPoly numer = head * one_minus_t(P - 3) * one_minus_t(P + 3) +
                          (t(2 * P - 2) + t(2 * P)) * (t(2 * P - 6) - t((P - 3) * (P - 1) / 3)) * one_minus_t(P + 3) +
                          (one + t(P + 1)) * (t(2 * P + 6) - t((P + 3) * (P - 1) / 3)) * one_minus_t(P - 3);
    const IntPoly denom = one_minus_t(4) * one_minus_t(P - 3) * one_minus_t(P - 1) * one_minus_t(P + 1) *
                          one_minus_t(P + 3) * one_minus_t(pc);
    return {numer, denom};
  }
  const int q = P * (P - 2) / 3;
  const IntPoly chi1 =
      one + t(P + 1) + t(P * (P + 1)) + t((P + 1) * (P - 1)) + t(P) * (t(3) + t(P - 2) + t(P + 4) + t(2 * P - 5)) +
      t(P * (P + 1) / 3) * (t(2) + t(P + 1) + t(P + 3) + t(2 * P - 4) + t(2 * P - 2) - t(2 * P)) +
      t(P * (2 * P - 1) / 3) * (t(P, 2) + t(P + 2) + t(2 * P - 3) + t((2 * P + 5) / 3) * one_minus_t(P - 1)) +
      t(3 * (P - 1)) * one_minus_t((P - 1) * (P - 5) / 3) * (one + t(q + 3) + t(2 * q + 2));
  const IntPoly chi2 = t(4 * (P - 2)) * one_minus_t((P - 3) * (P - 5) / 3) * (one + t(2)) *
                       (one + t(q + 1) + t(2 * q + 2));
  const IntPoly chi3 = t(2 * P + 6) * one_minus_t((P + 3) * (P - 5) / 3) * (one + t(P + 1)) *
                       (one + t(q - 1) + t(2 * q - 2));
  const IntPoly numer =
      chi1 * one_minus_t(P - 3) * one_minus_t(P + 3) + chi2 * one_minus_t(P + 3) + chi3 * one_minus_t(P - 3);
  const IntPoly denom = one_minus_t(4) * one_minus_t(P - 3) * one_minus_t(P - 1) * one_minus_t(P + 1) *
                        one_minus_t(P + 3) * one_minus_t(P * (P - 1));
  return {numer, denom};
}

namespace {

/// Columns (M_sigma - I; M_sigma^T - I) applied to each domain monomial, in
/// coordinates on the full degree-d basis.
std::vector<Vec> fixed_space_columns(std::uint32_t p, const DegreeBasis& domain, const DegreeBasis& target) {
  const ActionMatrix s = induced_matrix(SL2Element::sigma(p));
  const ActionMatrix st = induced_matrix(SL2Element::sigma_t(p));
  const std::size_t n = target.size();
  std::vector<Vec> cols;
  cols.reserve(domain.size());
  for (Monomial m : domain.monomials()) {
    const Poly f = Poly::monomial(p, m);
    Vec v(2 * n, 0);
    const Vec a = target.coordinates(act(f, s) - f);
    const Vec b = target.coordinates(act(f, st) - f);
    std::copy(a.begin(), a.end(), v.begin());
    std::copy(b.begin(), b.end(), v.begin() + std::ptrdiff_t(n));
    cols.push_back(std::move(v));
  }
  return cols;
}

std::size_t nullity(std::uint32_t p, unsigned d, bool restrict_weight) {
  const DegreeBasis target(d);
  const DegreeBasis domain = restrict_weight ? DegreeBasis(d, p) : target;
  const auto cols = fixed_space_columns(p, domain, target);
  return domain.size() - rank_of(p, cols, 2 * target.size());
}

}  // namespace

std::size_t fixed_space_dim(std::uint32_t p, unsigned d) {
  require_supported_prime(p);
  return nullity(p, d, true);
}

std::size_t fixed_space_dim_unrestricted(std::uint32_t p, unsigned d) {
  require_supported_prime(p);
  return nullity(p, d, false);
}

std::vector<Poly> fixed_space_basis(std::uint32_t p, unsigned d) {
  require_supported_prime(p);
  const DegreeBasis target(d);
  const DegreeBasis domain(d, p);
  const auto kernel = nullspace(p, fixed_space_columns(p, domain, target), 2 * target.size());
  std::vector<Poly> out;
  for (const auto& v : kernel) out.push_back(domain.polynomial(p, v));
  return out;
}

PowerSeries brute_series(std::uint32_t p, int d_max) {
  require_supported_prime(p);
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  PowerSeries r{std::vector<std::int64_t>(std::size_t(d_max) + 1, 0)};
  // Largest degrees first so the slowest items start early.
  parallel_for(r.coeffs.size(), [&](std::size_t k) {
    const unsigned d = unsigned(d_max) - unsigned(k);
    r.coeffs[d] = std::int64_t(fixed_space_dim(p, d));
  });
  return r;
}

int cone_max_j(std::uint32_t p) { return int(delta_exponent(p)); }

std::string to_string(ConeForm f) { return f == ConeForm::printed ? "printed" : "resolved"; }

RationalSeries cone_closed_form(std::uint32_t p, int j, ConeForm form) {
  require_supported_prime(p);
  const int P = int(p);
  const int c = cone_max_j(p);
  if (j < 0 || j > c)
    throw std::out_of_range("cone index j must satisfy 0 <= j <= " + std::to_string(c) + " (got " +
                            std::to_string(j) + ")");
  auto t = [](int k, std::int64_t c = 1) { return t_pow(k, c); };
  const IntPoly one = t(0);
  const IntPoly den = one_minus_t(4) * one_minus_t(P - 1);
  // t^shift * (a / ((1-t^4)(1-t^{p-1})) + b / (1-t^4) + e / (1-t^{p-1}))
  auto make = [&](int shift, const IntPoly& a, const IntPoly& b, const IntPoly& e = {}) {
    return RationalSeries{t(shift) * (a + b * one_minus_t(P - 1) + e * one_minus_t(4)), den};
  };
  const bool minus = is_minus_one_mod3(p);

  if (j == 0) return make(0, one + t(P + 1), {});
  if (j == c) {
    if (minus) return make(P * (P - 1), t(P - 1) + t(2 * P), {});
    return make(P * c + P - 1, one + t(P + 1), {});
  }
  if (j == 1 && 3 * j < P - 1) return make(P, t(3) + t(P - 2) + t(P + 4) + t(2 * P - 5), {});
  if (3 * j < P - 1) {
    // 1 < j < (p-1)/3: the even and odd displays; they agree with the common form.
    if (j % 2 == 0) {
      const int k = j / 2;
      return make(2 * k * P, t(6 * k) + t(2 * P - 2 - 6 * k) + t(P + 6 * k + 1) + t(2 * P - 6 * k), t(P - 1 - 2 * k));
    }
    const int k = (j - 1) / 2;
    return make((2 * k + 1) * P, t(6 * k + 3) + t(2 * P - 2 - 6 * k - 3) + t(P + 6 * k + 4) + t(2 * P - 6 * k - 3),
                t(P - 2 - 2 * k));
  }
  // Only p = -1 mod 3 reaches here.
  if (j == (P + 1) / 3)
    return make(P * (P + 1) / 3, t(2) + t(P + 1) + t(P + 3) + t(2 * P - 2), {}, t(2 * P - 4));
  if (j < (2 * P - 1) / 3)
    return make(j * P, t(3 * j + 2) + t(3 * P - 3 - 3 * j) + t(3 * P - 1 - 3 * j) + t(3 * j - P + 1),
                t(4 * (P + 1) / 3 - j));
  if (j == (2 * P - 1) / 3)
    return make(P * (2 * P - 1) / 3, t(P, 2) + t(2 * P - 3) + t(2 * P + 1), t(P + 2) + t((2 * P + 5) / 3));
  // (2p+2)/3 <= j <= p-2
  const bool repeated = form == ConeForm::printed && j % 2 == 0;
  return make(j * P, t(3 * j - 2 * P + 2) + t(4 * P - 4 - 3 * j) + t(repeated ? 4 * P - 4 - 3 * j : 4 * P - 2 - 3 * j) +
                         t(3 * j - P + 3),
              t(5 * (P + 1) / 3 - j - 2));
}

PowerSeries cone_series(std::uint32_t p, int j, int d_max, ConeForm form) {
  return expand(cone_closed_form(p, j, form), d_max);
}

std::vector<Monomial> cone_seeds(std::uint32_t p, int j, int d_max) {
  require_supported_prime(p);
  const int P = int(p);
  const int c = cone_max_j(p);
  if (j < 0 || j > c)
    throw std::out_of_range("cone index j must satisfy 0 <= j <= " + std::to_string(c) + " (got " +
                            std::to_string(j) + ")");
  const bool minus = is_minus_one_mod3(p);
  std::vector<Monomial> seeds;
  auto add = [&](Monomial m) {
    if (int(m.degree()) <= d_max) seeds.push_back(m);
  };
  if (j == 0) {
    add(Monomial());
    add(predicted_named_lm("L", p));
    return seeds;
  }
  for (int fam = 1; fam <= 4; ++fam) {
    const auto r = family_range(fam, p);
    if (std::find(r.begin(), r.end(), j) != r.end()) add(predicted_lm(family_symbol(fam), 0, j, p));
  }
  for (int i = 0;; ++i) {
    const Monomial a = predicted_lm(LmSymbol::alpha, i, j, p);
    if (int(a.degree()) > d_max) break;
    add(a);
    add(predicted_lm(LmSymbol::epsilon, i, j, p));
  }
  if (minus) {
    if (j == (P + 1) / 3) add(predicted_lm(LmSymbol::mu, 0, 0, p));
    if (j == (2 * P - 1) / 3) add(predicted_lm(LmSymbol::lambda, 0, 0, p));
    if (j >= (P + 4) / 3 && j <= (2 * P - 1) / 3) add(predicted_lm(LmSymbol::eta, 0, j, p));
  }
  return seeds;
}

namespace {

/// (x, y) exponents of a2, a1 over the union of the D,K-cones.
std::set<std::pair<int, int>> cone_union(std::uint32_t p, const std::vector<Monomial>& seeds, int budget) {
  const int P = int(p);
  std::set<std::pair<int, int>> pts;
  for (Monomial s : seeds) {
    const int base = int(s.e2() + s.e1());
    for (int k = 0; base + k * (P - 1) <= budget; ++k)
      for (int l = 0; base + k * (P - 1) + 4 * l <= budget; ++l)
        pts.emplace(int(s.e2()) + k * (P - 1) + 2 * l, int(s.e1()) + 2 * l);
  }
  return pts;
}

}  // namespace

PowerSeries cone_count(std::uint32_t p, int j, int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  const int P = int(p);
  const int c = cone_max_j(p);
  PowerSeries r{std::vector<std::int64_t>(std::size_t(d_max) + 1, 0)};
  const int budget = d_max - P * j;
  if (budget < 0) {
    cone_seeds(p, j, d_max);  // range check
    return r;
  }
  std::vector<Monomial> seeds;
  for (Monomial m : cone_seeds(p, j, d_max)) {
    if (int(m.e3()) != P * j || m.e0() != 0) throw std::logic_error("cone seed outside a3^{pj} a2^x a1^y");
    seeds.push_back(m);
  }
  auto pts = cone_union(p, seeds, budget);
  if (j == c) {
    // Z-tilde omits LM(delta) times the j = 0 part.
    for (const auto& q : cone_union(p, cone_seeds(p, 0, budget), budget)) pts.erase(q);
  }
  for (const auto& [x, y] : pts) ++r.coeffs[std::size_t(P * j + x + y)];
  return r;
}

PowerSeries assemble_total(std::uint32_t p, int d_max, ConeSource source, ConeForm form) {
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  PowerSeries sum{std::vector<std::int64_t>(std::size_t(d_max) + 1, 0)};
  for (int j = 0; j <= cone_max_j(p); ++j)
    sum = sum + (source == ConeSource::counts ? cone_count(p, j, d_max) : cone_series(p, j, d_max, form));
  const int P = int(p);
  return divide(sum, one_minus_t(P + 1) * one_minus_t(P * cone_max_j(p)));
}

}  // namespace cubinv
