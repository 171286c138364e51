#include "cubinv/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dense.hpp"

namespace cubinv {

using detail::Accumulator;
using detail::Cube;
using detail::degree_runs;
using detail::Run;

namespace {

bool descending(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

Poly::Poly(std::uint32_t p) : p_(p) { require_supported_prime(p); }

Poly Poly::constant(std::uint32_t p, std::int64_t c) { return monomial(p, Monomial(), c); }

Poly Poly::monomial(std::uint32_t p, Monomial m, std::int64_t c) {
  Poly f(p);
  std::uint32_t v = modp::reduce(c, p);
  if (v) f.terms_.push_back({m, v});
  return f;
}

Poly Poly::variable(std::uint32_t p, Var v) { return monomial(p, Monomial::power(v, 1)); }

Poly Poly::from_terms(std::uint32_t p, std::vector<Term> terms) {
  Poly f(p);
  std::sort(terms.begin(), terms.end(), descending);
  std::vector<Term> out;
  out.reserve(terms.size());
  std::size_t i = 0;
  while (i < terms.size()) {
    Monomial m = terms[i].mono;
    std::uint64_t s = 0;
    for (; i < terms.size() && terms[i].mono == m; ++i) s += terms[i].coeff % p;
    s %= p;
    if (s) out.push_back({m, std::uint32_t(s)});
  }
  f.terms_ = std::move(out);
  return f;
}

Poly Poly::from_canonical(std::uint32_t p, std::vector<Term> terms) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < terms.size(); ++i) {
    assert(terms[i].coeff != 0 && terms[i].coeff < p);
    assert(i == 0 || terms[i - 1].mono > terms[i].mono);
  }
#endif
  return Poly(Unchecked{}, p, std::move(terms));
}

Term Poly::lead_term() const {
  if (terms_.empty()) throw std::domain_error("lead term of the zero polynomial");
  return terms_.front();
}

FieldElement Poly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial x) { return t.mono > x; });
  if (it != terms_.end() && it->mono == m) return {p_, it->coeff};
  return {p_, 0};
}

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

bool Poly::is_isobaric() const {
  if (terms_.empty()) return true;
  unsigned w = terms_.front().mono.weight(p_);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.weight(p_) == w; });
}

void Poly::check_same(const Poly& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("polynomials over different primes: " + std::to_string(p_) +
                                " and " + std::to_string(o.p_));
}

Poly Poly::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = p_ - x.coeff;
  return Poly(Unchecked{}, p_, std::move(t));
}

Poly Poly::combine(const Poly& o, bool subtract) const {
  check_same(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
      Term t = o.terms_[j++];
      if (subtract) t.coeff = p_ - t.coeff;
      out.push_back(t);
    } else {
      std::uint32_t c = subtract ? modp::sub(terms_[i].coeff, o.terms_[j].coeff, p_)
                                 : modp::add(terms_[i].coeff, o.terms_[j].coeff, p_);
      if (c) out.push_back({terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return Poly(Unchecked{}, p_, std::move(out));
}

Poly& Poly::operator+=(const Poly& o) { return *this = combine(o, false); }
Poly& Poly::operator-=(const Poly& o) { return *this = combine(o, true); }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(std::int64_t c) const {
  std::uint32_t v = modp::reduce(c, p_);
  if (v == 0) return Poly(Unchecked{}, p_, {});
  std::vector<Term> t = terms_;
  for (auto& x : t) x.coeff = modp::mul(x.coeff, v, p_);
  return Poly(Unchecked{}, p_, std::move(t));
}

Poly Poly::scaled(const FieldElement& c) const {
  if (c.prime() != p_) throw std::invalid_argument("scalar from a different field");
  return scaled(std::int64_t(c.value()));
}

Poly Poly::times_monomial(Monomial m, std::uint32_t c) const {
  c %= p_;
  if (c == 0) return Poly(Unchecked{}, p_, {});
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.mono * m, modp::mul(x.coeff, c, p_)});
  return Poly(Unchecked{}, p_, std::move(t));
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  const std::uint32_t p = a.p_;
  if (a.is_zero() || b.is_zero()) return Poly(Poly::Unchecked{}, p, {});
  if (a.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);

  const auto ra = degree_runs(a.terms_);
  const auto rb = degree_runs(b.terms_);
  std::map<unsigned, std::vector<std::pair<Run, Run>>, std::greater<>> by_degree;
  for (const auto& x : ra)
    for (const auto& y : rb) by_degree[x.degree + y.degree].push_back({x, y});

  std::vector<Term> out;
  std::vector<std::size_t> ia, ib;
  std::vector<std::uint32_t> cb;
  for (const auto& [d, pairs] : by_degree) {
    std::size_t expected = 0;
    for (const auto& [x, y] : pairs) expected += x.size() * y.size();
    Accumulator acc(d, p, expected);
    const Cube& cube = acc.cube();
    for (const auto& [x, y] : pairs) {
      // iterate over the longer run in the inner loop
      const bool swap = x.size() > y.size();
      const Run& outer = swap ? y : x;
      const Run& inner = swap ? x : y;
      const auto& to = swap ? b.terms_ : a.terms_;
      const auto& ti = swap ? a.terms_ : b.terms_;
      ib.clear();
      cb.clear();
      for (std::size_t k = inner.begin; k < inner.end; ++k) {
        ib.push_back(cube.index(ti[k].mono));
        cb.push_back(ti[k].coeff);
      }
      const std::size_t n = ib.size();
      if (acc.dense()) {
        std::uint64_t* cells = acc.data();
        for (std::size_t k = outer.begin; k < outer.end; ++k) {
          const std::size_t base = cube.index(to[k].mono);
          const std::uint64_t c = to[k].coeff;
          std::uint64_t* row = cells + base;
          for (std::size_t l = 0; l < n; ++l) row[ib[l]] += c * cb[l];
          acc.note_bulk(n);
        }
      } else {
        for (std::size_t k = outer.begin; k < outer.end; ++k) {
          const std::size_t base = cube.index(to[k].mono);
          const std::uint64_t c = to[k].coeff;
          for (std::size_t l = 0; l < n; ++l) acc.add(base + ib[l], c * cb[l]);
        }
      }
    }
    acc.append_to(out);
  }
  return Poly(Poly::Unchecked{}, p, std::move(out));
}

Poly Poly::pow(unsigned k) const {
  Poly r = constant(p_, 1);
  // Repeated multiplication by the base: in four variables the powers fill the
  // monomial cube quickly, so squaring buys nothing over multiplying by the
  // (short) base.
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(std::int64_t(modp::inv(terms_.front().coeff, p_)));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    const auto& t = terms_[i];
    if (t.mono.is_one()) {
      os << t.coeff;
    } else {
      if (t.coeff != 1) os << t.coeff << '*';
      os << t.mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

Poly set_var_zero(const Poly& f, Var v) {
  std::vector<Term> out;
  for (const auto& t : f.terms_)
    if (t.mono.exponent(v) == 0) out.push_back(t);
  return Poly(Poly::Unchecked{}, f.p_, std::move(out));
}

Poly homogeneous_component(const Poly& f, unsigned d) {
  std::vector<Term> out;
  for (const auto& t : f.terms_)
    if (t.mono.degree() == d) out.push_back(t);
  return Poly(Poly::Unchecked{}, f.p_, std::move(out));
}

// ---------------------------------------------------------------------------
// Linear substitution

namespace {

using Matrix4 = std::array<std::array<std::uint32_t, 4>, 4>;

struct PLU {
  std::array<int, 4> perm;  // variable perm[k] is replaced by variable k
  Matrix4 lower{};          // unit lower triangular
  Matrix4 upper{};
};

PLU factor(const Matrix4& m, std::uint32_t p) {
  PLU f;
  Matrix4 a = m;
  for (int i = 0; i < 4; ++i) {
    f.perm[i] = i;
    for (int j = 0; j < 4; ++j) a[i][j] %= p;
  }
  for (int k = 0; k < 4; ++k) {
    int r = k;
    while (r < 4 && a[r][k] == 0) ++r;
    if (r == 4) throw std::invalid_argument("substitution matrix is singular");
    if (r != k) {
      std::swap(a[r], a[k]);
      std::swap(f.perm[r], f.perm[k]);
      for (int j = 0; j < k; ++j) std::swap(f.lower[r][j], f.lower[k][j]);
    }
    const std::uint32_t inv = modp::inv(a[k][k], p);
    for (int i = k + 1; i < 4; ++i) {
      const std::uint32_t l = modp::mul(a[i][k], inv, p);
      f.lower[i][k] = l;
      for (int j = k; j < 4; ++j) a[i][j] = modp::sub(a[i][j], modp::mul(l, a[k][j], p), p);
    }
  }
  for (int i = 0; i < 4; ++i) f.lower[i][i] = 1;
  f.upper = a;
  return f;
}

// a_i -> a_i + c a_k on one homogeneous run.
std::vector<Term> transvect(const std::vector<Term>& in, unsigned d, Var vi, Var vk, std::uint32_t c,
                            std::uint32_t p) {
  if (c == 0 || in.empty()) return in;
  // weights[E][t] = binom(E, t) c^t
  unsigned maxE = 0;
  std::size_t expected = 0;
  for (const auto& t : in) {
    unsigned e = t.mono.exponent(vi);
    maxE = std::max(maxE, e);
    expected += e + 1;
  }
  std::vector<std::uint32_t> cpow(maxE + 1);
  cpow[0] = 1;
  for (unsigned t = 1; t <= maxE; ++t) cpow[t] = modp::mul(cpow[t - 1], c, p);
  std::vector<std::vector<std::uint32_t>> w(maxE + 1);
  std::vector<std::uint32_t> binom{1};
  for (unsigned e = 0; e <= maxE; ++e) {
    if (e > 0) {
      std::vector<std::uint32_t> next(e + 1);
      next[0] = next[e] = 1;
      for (unsigned t = 1; t < e; ++t) next[t] = modp::add(binom[t - 1], binom[t], p);
      binom = std::move(next);
    }
    w[e].resize(e + 1);
    for (unsigned t = 0; t <= e; ++t) w[e][t] = modp::mul(binom[t], cpow[t], p);
  }

  Accumulator acc(d, p, expected);
  const Cube& cube = acc.cube();
  const std::int64_t delta = cube.stride(vk) - cube.stride(vi);
  for (const auto& t : in) {
    const unsigned e = t.mono.exponent(vi);
    const std::int64_t base = std::int64_t(cube.index(t.mono));
    const std::uint64_t v = t.coeff;
    const auto& row = w[e];
    if (acc.dense()) {
      std::uint64_t* cells = acc.data();
      for (unsigned s = 0; s <= e; ++s) cells[base + std::int64_t(s) * delta] += v * row[s];
      acc.note_bulk(e + 1);
    } else {
      for (unsigned s = 0; s <= e; ++s) acc.add(std::size_t(base + std::int64_t(s) * delta), v * row[s]);
    }
  }
  std::vector<Term> out;
  acc.append_to(out);
  return out;
}

void scale_var(std::vector<Term>& t, Var v, std::uint32_t u, std::uint32_t p, unsigned d) {
  if (u == 1) return;
  std::vector<std::uint32_t> pw(d + 1);
  pw[0] = 1;
  for (unsigned i = 1; i <= d; ++i) pw[i] = modp::mul(pw[i - 1], u, p);
  for (auto& x : t) x.coeff = modp::mul(x.coeff, pw[x.mono.exponent(v)], p);
}

}  // namespace

Poly substitute_linear(const Poly& f, const LinearForms& rows) {
  const std::uint32_t p = f.p_;
  const PLU plu = factor(rows, p);
  bool identity_perm = true;
  for (int k = 0; k < 4; ++k) identity_perm &= plu.perm[k] == k;

  std::vector<Term> out;
  out.reserve(f.terms_.size());
  for (const Run& run : degree_runs(f.terms_)) {
    const unsigned d = run.degree;
    std::vector<Term> cur(f.terms_.begin() + run.begin, f.terms_.begin() + run.end);
    if (!identity_perm) {
      for (auto& t : cur) {
        const auto e = t.mono.exponents();
        std::array<unsigned, 4> ne{};
        for (int k = 0; k < 4; ++k) ne[k] = e[plu.perm[k]];
        t.mono = Monomial::from_exponents(ne);
      }
      std::sort(cur.begin(), cur.end(), descending);
    }
    for (int i = 1; i < 4; ++i)
      for (int k = 0; k < i; ++k)
        cur = transvect(cur, d, kAllVars[i], kAllVars[k], plu.lower[i][k], p);
    for (int i = 3; i >= 0; --i) {
      for (int k = i + 1; k < 4; ++k)
        cur = transvect(cur, d, kAllVars[i], kAllVars[k], plu.upper[i][k], p);
      scale_var(cur, kAllVars[i], plu.upper[i][i], p, d);
    }
    out.insert(out.end(), cur.begin(), cur.end());
  }
  return Poly(Poly::Unchecked{}, p, std::move(out));
}

}  // namespace cubinv
