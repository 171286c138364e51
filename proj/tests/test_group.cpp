#include <random>
#include <stdexcept>

#include "cubinv/group.hpp"
#include "cubinv/parallel.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cubinv;
using cubinv::testing::random_poly;
using cubinv::testing::random_sl2;

TEST_CASE("induced matrices of sigma and rho") {
  const std::uint32_t p = 7;
  ActionMatrix s = induced_matrix(SL2Element::sigma(p));
  LinearForms expect{{{1, 3, 3, 1}, {0, 1, 2, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}};
  CHECK(s.rows == expect);
  const std::uint32_t w = 3;
  ActionMatrix r = induced_matrix(SL2Element::rho(p, w));
  const std::uint32_t wi = modp::inv(w, p);
  LinearForms diag{};
  diag[0][0] = modp::pow(w, 3, p);
  diag[1][1] = w;
  diag[2][2] = wi;
  diag[3][3] = modp::pow(wi, 3, p);
  CHECK(r.rows == diag);
  LinearForms eta{{{0, 0, 0, 1}, {0, 0, p - 1, 0}, {0, 1, 0, 0}, {p - 1, 0, 0, 0}}};
  CHECK(induced_matrix(SL2Element::eta(p)).rows == eta);
}

TEST_CASE("group element validation") {
  CHECK_THROWS_AS(SL2Element(7, 1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(SL2Element::rho(7, 0), std::domain_error);
  CHECK_THROWS_AS(SL2Element(9, 1, 0, 0, 1), std::invalid_argument);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    SL2Element g = random_sl2(rng, 11);
    CHECK(g * g.inverse() == SL2Element::identity(11));
  }
}

TEST_CASE("action is a right action and matrices are multiplicative") {
  std::mt19937_64 rng(4);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (int i = 0; i < 25; ++i) {
      SL2Element g = random_sl2(rng, p), h = random_sl2(rng, p);
      CHECK(induced_matrix(g * h) == induced_matrix(g) * induced_matrix(h));
      Poly f = random_poly(rng, p, 6, 10);
      CHECK(act(act(f, g), h) == act(f, g * h));
      CHECK(act(f, SL2Element::identity(p)) == f);
    }
  }
}

TEST_CASE("action matches naive substitution") {
  std::mt19937_64 rng(8);
  const std::uint32_t p = 13;
  for (int i = 0; i < 20; ++i) {
    SL2Element g = random_sl2(rng, p);
    Poly f = random_poly(rng, p, 8, 12);
    CHECK(act(f, g) == cubinv::testing::naive_substitute(f, induced_matrix(g).rows));
  }
}

TEST_CASE("subgroup enumerations") {
  for (std::uint32_t p : {5u, 7u}) {
    for (Subgroup s : {Subgroup::P, Subgroup::Q, Subgroup::B, Subgroup::G}) {
      auto el = subgroup_elements(s, p);
      CHECK(el.size() == subgroup_order(s, p));
      for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j) CHECK_FALSE(el[i] == el[j]);
    }
    for (const auto& b : subgroup_elements(Subgroup::B, p)) CHECK(b.is_upper_triangular());
  }
  CHECK(subgroup_order(Subgroup::G, 11) == 1320);
}

TEST_CASE("Borel representatives cover G by right and left cosets") {
  for (std::uint32_t p : {5u, 7u}) {
    const auto B = subgroup_elements(Subgroup::B, p);
    const auto reps = borel_coset_reps(p);
    CHECK(reps.size() == p + 1);
    std::vector<SL2Element> right, left;
    for (const auto& t : reps)
      for (const auto& b : B) {
        right.push_back(b * t);
        left.push_back(t * b);
      }
    for (auto* v : {&right, &left}) {
      for (std::size_t i = 0; i < v->size(); ++i)
        for (std::size_t j = i + 1; j < v->size(); ++j) REQUIRE_FALSE((*v)[i] == (*v)[j]);
      CHECK(v->size() == subgroup_order(Subgroup::G, p));
    }
  }
}

TEST_CASE("composite transfer equals the sum over all of G") {
  std::mt19937_64 rng(9);
  const std::uint32_t p = 5;
  for (int i = 0; i < 6; ++i) {
    Poly f = random_poly(rng, p, 6, 6);
    Poly t = transfer_g(f);
    CHECK(t == transfer_g_full(f));
    CHECK(is_fixed_by(t, SL2Element::sigma(p)));
    CHECK(is_fixed_by(t, SL2Element::eta(p)));
  }
}

TEST_CASE("transfer of a B-invariant does not depend on the coset representatives") {
  std::mt19937_64 rng(10);
  const std::uint32_t p = 7;
  Poly f = transfer_p_to_b(transfer_p(random_poly(rng, p, 6, 8)));
  const auto B = subgroup_elements(Subgroup::B, p);
  auto reps = borel_coset_reps(p);
  for (auto& t : reps) t = B[rng() % B.size()] * t;
  CHECK(transfer(f, reps) == transfer_b_to_g(f));
}

TEST_CASE("orbit product over P is P-invariant") {
  const std::uint32_t p = 7;
  Poly N = orbit_product(Poly::variable(p, Var::a0), Subgroup::P);
  CHECK(N.degree() == int(p));
  CHECK(is_fixed_by(N, SL2Element::sigma(p)));
}

TEST_CASE("parallel transfer agrees with the serial one") {
  std::mt19937_64 rng(13);
  Poly f = random_poly(rng, 7, 8, 20);
  Poly serial = transfer_g(f);
  set_max_jobs(3);
  Poly par = transfer_g(f);
  set_max_jobs(1);
  CHECK(serial == par);
}
