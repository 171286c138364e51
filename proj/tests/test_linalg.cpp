#include <random>
#include <stdexcept>

#include "cubinv/linalg.hpp"
#include "doctest.h"

using namespace cubinv;

namespace {
// Plain Gaussian elimination on a row-major copy; the reference rank.
std::size_t reference_rank(std::uint32_t p, std::vector<Vec> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::uint32_t inv = modp::inv(m[r][c], p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint32_t f = modp::mul(m[i][c], inv, p);
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = modp::sub(m[i][k], modp::mul(f, m[r][k], p), p);
    }
    ++r;
  }
  return r;
}
}  // namespace

TEST_CASE("echelon rank matches plain elimination") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {5u, 7u, 65521u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + rng() % 12, m = 1 + rng() % 12;
      std::vector<Vec> vs(m, Vec(n));
      // Low-rank mixtures exercise dependent inserts.
      const std::size_t k = 1 + rng() % std::min(n, m);
      std::vector<Vec> base(k, Vec(n));
      for (auto& b : base)
        for (auto& x : b) x = rng() % p;
      for (auto& v : vs)
        for (const auto& b : base) {
          const std::uint32_t c = rng() % p;
          for (std::size_t i = 0; i < n; ++i) v[i] = modp::add(v[i], modp::mul(c, b[i], p), p);
        }
      CHECK(rank_of(p, vs, n) == reference_rank(p, vs));
    }
  }
}

TEST_CASE("nullspace vectors are kernel vectors and rank-nullity holds") {
  std::mt19937_64 rng(23);
  const std::uint32_t p = 7;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 10;
    std::vector<Vec> c(cols, Vec(rows));
    for (auto& v : c)
      for (auto& x : v) x = (rng() % 3 == 0) ? rng() % p : 0;
    const auto ker = nullspace(p, c, rows);
    CHECK(ker.size() + rank_of(p, c, rows) == cols);
    CHECK(rank_of(p, ker, cols) == ker.size());
    for (const auto& x : ker)
      for (std::size_t r = 0; r < rows; ++r) {
        std::uint32_t s = 0;
        for (std::size_t j = 0; j < cols; ++j) s = modp::add(s, modp::mul(x[j], c[j][r], p), p);
        CHECK(s == 0);
      }
  }
}

TEST_CASE("membership and reduction") {
  EchelonBasis e(5, 3);
  CHECK(e.insert({1, 2, 3}));
  CHECK(e.insert({0, 1, 1}));
  CHECK_FALSE(e.insert({2, 0, 2}));  // 2*(1,2,3) - 4*(0,1,1)
  CHECK(e.rank() == 2);
  CHECK(e.contains({1, 3, 4}));
  CHECK_FALSE(e.contains({0, 0, 1}));
  CHECK(e.reduce({1, 2, 3}) == Vec{0, 0, 0});
  CHECK_THROWS_AS(e.insert({1, 2}), std::invalid_argument);
}

TEST_CASE("degree bases") {
  DegreeBasis b(3);
  CHECK(b.size() == 20);
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(b.monomials()[i - 1] > b.monomials()[i]);
  DegreeBasis w(6, 5);
  for (Monomial m : w.monomials()) CHECK(m.weight(5) == 0);
  Poly f = Poly::monomial(5, Monomial(1, 1, 1, 0), 2) + Poly::monomial(5, Monomial(0, 0, 0, 3));
  CHECK(b.polynomial(5, b.coordinates(f)) == f);
  CHECK(b.index(Monomial(1, 0, 0, 0)) == -1);
}
