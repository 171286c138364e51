#include <random>
#include <stdexcept>

#include "cubinv/poly.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cubinv;
using cubinv::testing::naive_product;
using cubinv::testing::naive_substitute;
using cubinv::testing::random_poly;

TEST_CASE("grevlex on the four variables") {
  const Monomial a3(1, 0, 0, 0), a2(0, 1, 0, 0), a1(0, 0, 1, 0), a0(0, 0, 0, 1);
  CHECK(a3 > a2);
  CHECK(a2 > a1);
  CHECK(a1 > a0);
  // a2^2 beats a3*a1 in grevlex: the smallest variable a1 appears in the latter.
  CHECK(Monomial(0, 2, 0, 0) > Monomial(1, 0, 1, 0));
  CHECK(Monomial(0, 0, 0, 3) > Monomial(2, 0, 0, 0));
  CHECK(Monomial(2, 0, 0, 1) < Monomial(1, 1, 1, 0));
}

TEST_CASE("grevlex defining rule on random pairs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Monomial x = cubinv::testing::random_monomial(rng, rng() % 6);
    Monomial y = cubinv::testing::random_monomial(rng, rng() % 6);
    const auto ex = x.exponents(), ey = y.exponents();
    int expect = 0;
    if (x.degree() != y.degree()) {
      expect = x.degree() > y.degree() ? 1 : -1;
    } else {
      for (int k = 3; k >= 0 && expect == 0; --k)
        if (ex[k] != ey[k]) expect = ex[k] < ey[k] ? 1 : -1;
    }
    const int got = x > y ? 1 : (x < y ? -1 : 0);
    CHECK(got == expect);
  }
}

TEST_CASE("monomial arithmetic") {
  Monomial m(1, 2, 0, 3);
  CHECK(m.degree() == 6);
  CHECK((m * Monomial(0, 1, 1, 0)).exponents() == std::array<unsigned, 4>{1, 3, 1, 3});
  CHECK(Monomial(0, 1, 0, 1).divides(m));
  CHECK_FALSE(Monomial(0, 0, 1, 0).divides(m));
  CHECK((m / Monomial(1, 0, 0, 1)) == Monomial(0, 2, 0, 2));
  CHECK_THROWS_AS(m / Monomial(0, 0, 1, 0), std::invalid_argument);
  CHECK(m.raw_weight() == 3 + 2 - 9);
  CHECK(Monomial::lcm(m, Monomial(2, 0, 1, 0)) == Monomial(2, 2, 1, 3));
  CHECK(Monomial::gcd(m, Monomial(2, 1, 1, 0)) == Monomial(1, 1, 0, 0));
  CHECK_THROWS_AS(Monomial(70000, 0, 0, 0), std::overflow_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {5u, 7u, 13u}) {
    for (int i = 0; i < 40; ++i) {
      Poly f = random_poly(rng, p, 6, 12), g = random_poly(rng, p, 6, 12), h = random_poly(rng, p, 5, 8);
      CHECK(f * g == naive_product(f, g));
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - f).is_zero());
      CHECK(f + (-f) == Poly(p));
      CHECK(f.scaled(p - 1) == -f);
    }
  }
}

TEST_CASE("large products match the schoolbook oracle") {
  std::mt19937_64 rng(12);
  Poly f = cubinv::testing::random_homogeneous(rng, 11, 20, 400);
  Poly g = cubinv::testing::random_homogeneous(rng, 11, 15, 300);
  CHECK(f * g == naive_product(f, g));
  Poly s = random_poly(rng, 11, 30, 500);
  CHECK(s * s == naive_product(s, s));
}

TEST_CASE("pow, monic and lead data") {
  const std::uint32_t p = 7;
  Poly x = Poly::variable(p, Var::a3) + Poly::variable(p, Var::a0).scaled(2);
  Poly c = x.pow(3);
  CHECK(c == x * x * x);
  CHECK(c.lead_monomial() == Monomial(3, 0, 0, 0));
  CHECK(c.degree() == 3);
  CHECK(c.is_homogeneous());
  CHECK(c.coefficient(Monomial(1, 0, 0, 2)).value() == 12 % 7);
  CHECK(x.scaled(3).monic() == x);
  CHECK_THROWS_AS(Poly(p).lead_term(), std::domain_error);
  CHECK(Poly(p).degree() == -1);
  CHECK(x.pow(0) == Poly::constant(p, 1));
  CHECK_THROWS_AS(Poly(4), std::invalid_argument);
  CHECK_THROWS_AS(x + Poly::variable(5, Var::a3), std::invalid_argument);
}

TEST_CASE("Frobenius on a sum") {
  std::mt19937_64 rng(5);
  const std::uint32_t p = 5;
  Poly f = random_poly(rng, p, 1, 4), g = random_poly(rng, p, 1, 4);
  CHECK((f + g).pow(p) == f.pow(p) + g.pow(p));
}

TEST_CASE("set_var_zero and homogeneous parts") {
  std::mt19937_64 rng(3);
  Poly f = random_poly(rng, 11, 8, 60);
  Poly z = set_var_zero(f, Var::a1);
  for (const auto& t : z.terms()) CHECK(t.mono.e1() == 0);
  Poly sum(11);
  for (unsigned d = 0; d <= 8; ++d) {
    Poly h = homogeneous_component(f, d);
    CHECK((h.is_zero() || (h.is_homogeneous() && unsigned(h.degree()) == d)));
    sum += h;
  }
  CHECK(sum == f);
}

TEST_CASE("linear substitution matches term-by-term expansion") {
  std::mt19937_64 rng(21);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (int i = 0; i < 30; ++i) {
      LinearForms rows{};
      // Random invertible matrix: retry until substitution of the variables is injective.
      for (;;) {
        for (auto& r : rows)
          for (auto& x : r) x = std::uint32_t(rng() % p);
        // Determinant by cofactor-free elimination mod p.
        std::array<std::array<std::int64_t, 4>, 4> m{};
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) m[a][b] = rows[a][b];
        bool singular = false;
        for (int c = 0; c < 4 && !singular; ++c) {
          int piv = -1;
          for (int r = c; r < 4; ++r)
            if (m[r][c] % p != 0) piv = r;
          if (piv < 0) { singular = true; break; }
          std::swap(m[piv], m[c]);
          const std::uint32_t inv = modp::inv(std::uint32_t(m[c][c] % p), p);
          for (int r = c + 1; r < 4; ++r) {
            const std::int64_t f = (m[r][c] % p) * inv % p;
            for (int k = 0; k < 4; ++k) m[r][k] = ((m[r][k] - f * m[c][k]) % std::int64_t(p) + p) % p;
          }
        }
        if (!singular) break;
      }
      Poly f = random_poly(rng, p, 7, 15);
      CHECK(substitute_linear(f, rows) == naive_substitute(f, rows));
    }
  }
}

TEST_CASE("to_string") {
  Poly f = Poly::monomial(7, Monomial(1, 2, 0, 0), 3) + Poly::constant(7, -1);
  CHECK(f.to_string() == "3*a3*a2^2 + 6");
  CHECK(Poly(7).to_string() == "0");
}
