#include <algorithm>
#include <stdexcept>

#include "cubinv/invariants.hpp"
#include "doctest.h"

using namespace cubinv;

namespace {
bool divisible_by_a0(const Poly& f) {
  for (const auto& t : f.terms())
    if (t.mono.e0() == 0) return false;
  return true;
}
}  // namespace

TEST_CASE("delta exponent") {
  CHECK(delta_exponent(5) == 4);
  CHECK(delta_exponent(7) == 2);
  CHECK(delta_exponent(11) == 10);
  CHECK(delta_exponent(13) == 4);
}

TEST_CASE("hand-typed invariants are invariant") {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    CHECK(verify_invariance(build_named("D", p).poly));
    CHECK(verify_invariance(build_named("L", p).poly));
    CHECK(verify_invariance(build_named("Na0", p).poly));
    CHECK_FALSE(verify_invariance(Poly::variable(p, Var::a3)));
    CHECK_FALSE(verify_invariance(build_named("N", p).poly));
    // d and e are P-invariant and isobaric of weights -2 and -3.
    for (const char* n : {"d", "e"}) {
      Poly f = build_named(n, p).poly;
      CHECK(is_fixed_by(f, SL2Element::sigma(p)));
      CHECK(f.is_isobaric());
    }
    CHECK(build_named("d", p).lead.weight(p) == p - 3);
    CHECK(build_named("e", p).lead.weight(p) == p - 4);
  }
}

TEST_CASE("N is the product of the P-orbit of a3") {
  const std::uint32_t p = 7;
  Poly expect = Poly::constant(p, 1);
  for (std::uint32_t s = 0; s < p; ++s) {
    std::vector<Term> t{{Monomial(1, 0, 0, 0), 1},
                        {Monomial(0, 1, 0, 0), 3 * s % p},
                        {Monomial(0, 0, 1, 0), 3 * s * s % p},
                        {Monomial(0, 0, 0, 1), s * s * s % p}};
    expect *= Poly::from_terms(p, t);
  }
  CHECK(norm_n(p) == expect);
  CHECK(norm_n(p).lead_monomial() == Monomial(p, 0, 0, 0));
}

TEST_CASE("named invariants have the predicted lead monomials") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    for (const char* n : {"D", "K", "L", "Na0", "delta", "etilde"}) {
      auto r = build_named(n, p);
      CHECK_MESSAGE(r.lead == predicted_named_lm(n, p), n << " at p=" << p);
      CHECK(verify_invariance(r.poly));
      CHECK(r.poly.is_homogeneous());
    }
    CHECK(build_named("etilde", p).poly.lead_term().coeff == 2);
  }
}

TEST_CASE("dtilde lead monomial and domain") {
  auto r = build_named("dtilde", 5);
  CHECK(r.lead == Monomial(10, 0, 2, 0));
  CHECK(r.lead == predicted_named_lm("dtilde", 5));
  CHECK(verify_invariance(r.poly));
  CHECK(build_named("dtilde", 11).lead == Monomial(44, 0, 2, 0));
  CHECK_THROWS_AS(build_named("dtilde", 7), std::domain_error);
  CHECK_THROWS_AS(build_named("Q", 7), std::invalid_argument);
}

TEST_CASE("K agrees with the transfer over every group element") {
  const std::uint32_t p = 5;
  CHECK(build_named("K", p).poly == -transfer_g_full(Poly::monomial(p, Monomial(0, 0, p - 1, 0))));
}

TEST_CASE("K identities") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const Poly K = build_named("K", p).poly;
    const Poly a0p = Poly::monomial(p, Monomial(0, 0, 0, p - 1));
    CHECK(K == -transfer_p(Poly::monomial(p, Monomial(p - 1, 0, 0, 0))) - a0p);
    const Poly xi3 = build_named("xi", p).poly.scaled(3);
    CHECK(set_var_zero(K, Var::a0) == xi3.pow((p - 1) / 2) + Poly::monomial(p, Monomial(0, 0, p - 1, 0)));
  }
}

TEST_CASE("tr^P(a3^(p-2)) modulo a0") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const Poly t = transfer_p(Poly::monomial(p, Monomial(p - 2, 0, 0, 0)));
    const Poly xi3 = build_named("xi", p).poly.scaled(3);
    CHECK(set_var_zero(t, Var::a0) == (Poly::variable(p, Var::a1) * xi3.pow((p - 3) / 2)).scaled(6));
  }
}

TEST_CASE("resolved family ranges") {
  CHECK(family_range(1, 5) == std::vector<int>{1, 2, 3});
  CHECK(family_range(2, 5) == std::vector<int>{1});
  CHECK(family_range(3, 5).empty());
  CHECK(family_range(4, 5) == std::vector<int>{3});
  CHECK(family_range(1, 7) == std::vector<int>{1});
  CHECK(family_range(2, 7) == std::vector<int>{1});
  CHECK(family_range(3, 7).empty());
  CHECK(family_range(4, 7).empty());
  CHECK(family_range(3, 11) == std::vector<int>{2, 3, 5, 6, 8, 9});
  CHECK(family_range(3, 13) == std::vector<int>{2, 3});
  CHECK(describe_ranges(5) == "fam1: 1 2 3\nfam2: 1\nfam3: (empty)\nfam4: 3\n");
}

TEST_CASE("family 3 exclusions match the lead-monomial lemma") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    const int top = is_minus_one_mod3(p) ? int(p) - 2 : (int(p) - 4) / 3;
    const auto range = family_range(3, p);
    for (int j = 2; j <= top; ++j) {
      const bool kept = std::find(range.begin(), range.end(), j) != range.end();
      CHECK_MESSAGE(kept == !family3_lemma_excludes(j, p), "p=" << p << " j=" << j);
    }
  }
}

TEST_CASE("family index errors") {
  CHECK_THROWS_AS(build_transfer_family(1, 0, 7), std::out_of_range);
  CHECK_THROWS_AS(build_transfer_family(1, 2, 7), std::out_of_range);
  CHECK_THROWS_AS(build_transfer_family(3, 2, 5), std::out_of_range);
  CHECK_THROWS_AS(build_transfer_family(3, 3, 5), std::out_of_range);
  CHECK_THROWS_AS(build_transfer_family(4, 3, 7), std::domain_error);
  CHECK_THROWS_AS(build_transfer_family(5, 1, 7), std::invalid_argument);
  try {
    check_family_index(3, 4, 11);
    FAIL("expected an exception");
  } catch (const std::out_of_range& e) {
    CHECK(std::string(e.what()).find("(p+1)/3") != std::string::npos);
  }
}

TEST_CASE("transfer families at p = 5 and 7") {
  for (std::uint32_t p : {5u, 7u}) {
    for (int fam = 1; fam <= 4; ++fam) {
      for (int j : family_range(fam, p)) {
        auto r = build_transfer_family(fam, j, p);
        CHECK_MESSAGE(r.lead == predicted_lm(family_symbol(fam), 0, j, p), "fam" << fam << " j=" << j << " p=" << p);
        CHECK(verify_invariance(r.poly));
        // The transfer differs from its argument by a multiple of a0.
        const Poly inner = norm_n(p).pow(j) * transfer_p(Poly::monomial(p, family_seed(fam, j, p)));
        CHECK(divisible_by_a0(r.poly - inner));
      }
    }
  }
  CHECK(build_transfer_family(1, 1, 7).lead == Monomial(7, 9, 0, 0));
  CHECK(build_transfer_family(1, 1, 7).degree == 16);
  CHECK(build_transfer_family(4, 3, 5).lead == Monomial(15, 4, 1, 0));
  CHECK(build_transfer_family(2, 1, 5).lead == Monomial(5, 2, 1, 0));
}

TEST_CASE("family transfers are -tr^G of N^j times the seed") {
  const std::uint32_t p = 5;
  for (int j : family_range(1, p)) {
    const Poly arg = norm_n(p).pow(j) * Poly::monomial(p, family_seed(1, j, p));
    CHECK(build_transfer_family(1, j, p).poly == -transfer_g(arg));
  }
}

TEST_CASE("generating sets") {
  auto g5 = build_generating_set(5);
  CHECK(g5.size() == 12);
  int max5 = 0;
  for (const auto& r : g5) max5 = std::max(max5, r.degree);
  CHECK(max5 == 22);
  auto g7 = build_generating_set(7);
  CHECK(g7.size() == 8);
  int max7 = 0;
  for (const auto& r : g7) max7 = std::max(max7, r.degree);
  CHECK(max7 == 16);
  std::vector<int> deg5;
  for (const auto& r : g5) deg5.push_back(r.degree);
  CHECK(deg5 == std::vector<int>{4, 4, 6, 20, 6, 8, 12, 10, 16, 22, 8, 20});
}

TEST_CASE("tete-a-tete lead terms") {
  for (std::uint32_t p : {5u, 7u}) {
    auto hs = build_h_sequence(5, p);
    for (int i = 1; i <= 5; ++i) {
      const auto& r = hs[i - 1];
      CHECK(r.i == i);
      CHECK(r.poly.lead_term().coeff == 2);
      CHECK(r.lead == Monomial(p, 0, p + 2 + (i - 1) * (p - 1), 0));
      CHECK(r.lead == predicted_lm(LmSymbol::n, i, 0, p));
      CHECK(verify_invariance(r.poly));
    }
  }
  CHECK(build_h(1, 5).lead == Monomial(5, 0, 7, 0));
  CHECK(build_h(2, 5).lead == Monomial(5, 0, 11, 0));
  CHECK(build_h(3, 7).lead == Monomial(7, 0, 21, 0));
  CHECK_THROWS_AS(build_h(0, 5), std::out_of_range);
}

TEST_CASE("predicted lead monomials") {
  CHECK(predicted_lm(LmSymbol::gamma, 0, 1, 7) == Monomial(7, 9, 0, 0));
  CHECK(predicted_lm(LmSymbol::mu, 0, 0, 5) == Monomial(10, 7, 1, 0));
  CHECK(predicted_lm(LmSymbol::n, 0, 0, 5) == Monomial(5, 0, 3, 0));
  CHECK(predicted_lm(LmSymbol::phi, 0, 3, 5) == Monomial(15, 4, 1, 0));
  CHECK(predicted_lm(LmSymbol::beta, 0, 1, 5) == Monomial(5, 2, 1, 0));
  CHECK_THROWS_AS(predicted_lm(LmSymbol::lambda, 0, 0, 7), std::out_of_range);
  CHECK_THROWS_AS(predicted_lm(LmSymbol::eta, 0, 1, 11), std::out_of_range);
  CHECK_THROWS_AS(predicted_lm(LmSymbol::alpha, -1, 1, 7), std::out_of_range);
  CHECK_THROWS_AS(predicted_lm(LmSymbol::alpha, 0, 3, 7), std::out_of_range);
  CHECK(parse_lm_symbol("Delta") == LmSymbol::Delta);
  CHECK_FALSE(parse_lm_symbol("zeta").has_value());
}

TEST_CASE("product descriptions of the cone generators") {
  for (std::uint32_t p : {5u, 11u, 17u}) {
    const int P = int(p);
    const Monomial ld = predicted_named_lm("dtilde", p);
    const Monomial g = predicted_lm(LmSymbol::gamma, 0, (P - 2) / 3, p);
    CHECK(predicted_lm(LmSymbol::lambda, 0, 0, p) == ld * g);
    CHECK(predicted_lm(LmSymbol::mu, 0, 0, p) == predicted_lm(LmSymbol::beta, 0, 1, p) * g);
    for (int j = (P + 4) / 3; j <= (2 * P - 1) / 3; ++j)
      CHECK(predicted_lm(LmSymbol::eta, 0, j, p) == ld * predicted_lm(LmSymbol::beta, 0, j - (P + 1) / 3, p));
    for (int j = 1; j <= P - 1; ++j)
      for (int i = 0; i < 3; ++i) {
        const int s = 3 * j / (P - 1);
        const int k = j - 1 - s * (P + 1) / 3;
        if (k < 0) continue;
        const Monomial n0 = predicted_lm(LmSymbol::n, 0, 0, p);
        const Monomial expect = ld.pow(s) * predicted_lm(LmSymbol::n, i, 0, p) * n0.pow(k);
        CHECK(predicted_lm(LmSymbol::alpha, i, j, p) == expect);
        CHECK(predicted_lm(LmSymbol::epsilon, i, j, p) == expect * predicted_named_lm("L", p));
      }
  }
  for (std::uint32_t p : {7u, 13u})
    for (int j = 1; j <= (int(p) - 1) / 3; ++j) {
      const Monomial n0 = predicted_lm(LmSymbol::n, 0, 0, p);
      CHECK(predicted_lm(LmSymbol::alpha, 2, j, p) == n0.pow(j - 1) * predicted_lm(LmSymbol::n, 2, 0, p));
    }
}
