#include "cubinv/grobner.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

#include "dense.hpp"

namespace cubinv {

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

bool coprime(Monomial a, Monomial b) { return Monomial::gcd(a, b).is_one(); }

void require_homogeneous(const std::vector<Poly>& gens) {
  for (const Poly& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("ideal generator is zero");
    if (!g.is_homogeneous()) throw std::invalid_argument("only homogeneous ideals are supported");
    if (g.prime() != gens.front().prime()) throw std::invalid_argument("generators over different fields");
  }
}

// Reduces f against the rows whose flag is set; f must be homogeneous.
Poly reduce(const Poly& f, const std::vector<Poly>& g, const std::vector<bool>& active) {
  if (f.is_zero()) return f;
  const std::uint32_t p = f.prime();
  const unsigned d = unsigned(f.degree());
  const detail::Cube cube(d);
  std::vector<Monomial> lms;
  std::vector<const Poly*> reducers;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (active[k] && g[k].degree() <= int(d)) {
      lms.push_back(g[k].lead_monomial());
      reducers.push_back(&g[k]);
    }

  std::vector<std::uint64_t> acc(cube.cells(), 0);
  for (const Term& t : f.terms()) acc[cube.index(t.mono)] = t.coeff;
  const std::uint64_t sq = std::uint64_t(p - 1) * (p - 1);
  const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() - p) / sq - 1;
  std::uint64_t pending = 0;

  std::vector<Term> rest;
  for (unsigned e0 = 0; e0 <= d; ++e0)
    for (unsigned e1 = 0; e0 + e1 <= d; ++e1)
      for (unsigned e2 = 0; e0 + e1 + e2 <= d; ++e2) {
        const std::size_t idx = (e0 * cube.base + e1) * cube.base + e2;
        const std::uint32_t c = std::uint32_t(acc[idx] % p);
        if (c == 0) continue;
        const Monomial m(d - e0 - e1 - e2, e2, e1, e0);
        std::size_t k = 0;
        while (k < lms.size() && !lms[k].divides(m)) ++k;
        if (k == lms.size()) {
          rest.push_back({m, c});
          continue;
        }
        if (++pending >= limit) {
          for (auto& x : acc) x %= p;
          pending = 1;
        }
        const Monomial q = m / lms[k];
        const std::uint64_t scale = p - c;
        for (const Term& t : reducers[k]->terms()) acc[cube.index(t.mono * q)] += scale * t.coeff;
      }
  return Poly::from_canonical(p, std::move(rest));
}

// Gebauer-Moeller update for a new basis element h = g[k].
void update(std::vector<Pair>& pairs, const std::vector<Poly>& g, std::vector<bool>& active, std::size_t k) {
  const Monomial lh = g[k].lead_monomial();
  std::vector<Pair> fresh;
  for (std::size_t i = 0; i < k; ++i)
    if (active[i]) fresh.push_back({i, k, Monomial::lcm(g[i].lead_monomial(), lh)});

  // Chain criterion among the new pairs; coprime pairs are kept for now so
  // that they can still eliminate others.
  std::vector<Pair> kept;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    const Pair& x = fresh[a];
    bool drop = false;
    if (!coprime(g[x.i].lead_monomial(), lh)) {
      for (std::size_t b = a + 1; b < fresh.size() && !drop; ++b) drop = fresh[b].lcm.divides(x.lcm);
      for (std::size_t b = 0; b < kept.size() && !drop; ++b) drop = kept[b].lcm.divides(x.lcm);
    }
    if (!drop) kept.push_back(x);
  }
  // Product criterion.
  std::erase_if(kept, [&](const Pair& x) { return coprime(g[x.i].lead_monomial(), lh); });

  // Old pairs made redundant by h.
  std::erase_if(pairs, [&](const Pair& x) {
    return lh.divides(x.lcm) && Monomial::lcm(g[x.i].lead_monomial(), lh) != x.lcm &&
           Monomial::lcm(g[x.j].lead_monomial(), lh) != x.lcm;
  });
  pairs.insert(pairs.end(), kept.begin(), kept.end());

  for (std::size_t i = 0; i < k; ++i)
    if (active[i] && lh.divides(g[i].lead_monomial())) active[i] = false;
}

bool pair_before(const Pair& a, const Pair& b) {
  if (a.lcm != b.lcm) return a.lcm < b.lcm;
  return a.j != b.j ? a.j < b.j : a.i < b.i;
}

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = Monomial::lcm(f.lead_monomial(), g.lead_monomial());
  const Poly a = f.monic().times_monomial(l / f.lead_monomial());
  const Poly b = g.monic().times_monomial(l / g.lead_monomial());
  return a - b;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
  if (!f.is_homogeneous()) throw std::invalid_argument("normal_form expects a homogeneous polynomial");
  for (const Poly& b : basis)
    if (b.is_zero()) throw std::invalid_argument("basis element is zero");
  return reduce(f, basis, std::vector<bool>(basis.size(), true));
}

IdealBasis buchberger(const std::vector<Poly>& gens, const BuchbergerOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("buchberger expects at least one generator");
  require_homogeneous(gens);

  std::vector<Poly> inputs = gens;
  std::stable_sort(inputs.begin(), inputs.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  std::size_t next_input = 0;

  IdealBasis out;
  std::vector<Poly> g;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto add = [&](const Poly& h) {
    g.push_back(h.monic());
    active.push_back(true);
    update(pairs, g, active, g.size() - 1);
  };

  while (next_input < inputs.size() || !pairs.empty()) {
    int d = std::numeric_limits<int>::max();
    if (next_input < inputs.size()) d = inputs[next_input].degree();
    for (const Pair& x : pairs) d = std::min(d, int(x.lcm.degree()));
    if (d > opts.max_degree)
      throw std::runtime_error("buchberger: critical pair of degree " + std::to_string(d) + " exceeds the cap " +
                               std::to_string(opts.max_degree) + " with " + std::to_string(g.size()) +
                               " basis elements");

    std::vector<Pair> now;
    std::erase_if(pairs, [&](const Pair& x) {
      if (int(x.lcm.degree()) != d) return false;
      now.push_back(x);
      return true;
    });
    std::sort(now.begin(), now.end(), pair_before);

    for (const Pair& x : now) {
      const Poly s = s_polynomial(g[x.i], g[x.j]);
      if (!s.is_zero() && !s.is_homogeneous()) throw std::logic_error("S-polynomial is not homogeneous");
      const Poly h = reduce(s, g, active);
      ++out.pairs_reduced;
      if (h.is_zero())
        ++out.zero_reductions;
      else
        add(h);
    }
    while (next_input < inputs.size() && inputs[next_input].degree() == d) {
      const Poly h = reduce(inputs[next_input++], g, active);
      if (!h.is_zero()) add(h);
    }
  }

  // Minimal basis, then tail reduction.
  std::vector<Poly> minimal;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (active[k]) minimal.push_back(g[k]);
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly& a, const Poly& b) { return a.lead_monomial() < b.lead_monomial(); });
  const std::vector<bool> all(minimal.size(), true);
  for (Poly& f : minimal) {
    const Term lt = f.lead_term();
    const Poly tail = f - Poly::monomial(f.prime(), lt.mono, lt.coeff);
    f = Poly::monomial(f.prime(), lt.mono, lt.coeff) + reduce(tail, minimal, all);
  }
  out.polys = std::move(minimal);
  out.groebner = true;
  return out;
}

bool s_polynomials_reduce_to_zero(const std::vector<Poly>& basis) {
  require_homogeneous(basis);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

bool is_zero_dimensional(const IdealBasis& basis) {
  if (!basis.groebner) throw std::logic_error("is_zero_dimensional needs a Groebner basis");
  std::array<bool, 4> seen{};
  for (const Poly& f : basis.polys) {
    const Monomial m = f.lead_monomial();
    for (Var v : kAllVars)
      if (m.exponent(v) == m.degree()) seen[std::size_t(v)] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<std::size_t> standard_monomial_counts(const IdealBasis& basis, int d_max) {
  if (!basis.groebner) throw std::logic_error("standard_monomial_counts needs a Groebner basis");
  std::vector<Monomial> lms;
  for (const Poly& f : basis.polys) lms.push_back(f.lead_monomial());
  std::vector<std::size_t> out;
  for (int d = 0; d <= d_max; ++d) {
    std::size_t n = 0;
    for (unsigned e0 = 0; e0 <= unsigned(d); ++e0)
      for (unsigned e1 = 0; e0 + e1 <= unsigned(d); ++e1)
        for (unsigned e2 = 0; e0 + e1 + e2 <= unsigned(d); ++e2) {
          const Monomial m(unsigned(d) - e0 - e1 - e2, e2, e1, e0);
          if (std::none_of(lms.begin(), lms.end(), [&](Monomial l) { return l.divides(m); })) ++n;
        }
    out.push_back(n);
  }
  return out;
}

}  // namespace cubinv
