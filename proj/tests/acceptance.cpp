// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cubinv/checks.hpp"

using namespace cubinv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void add(Outcome& o, const Check& c) {
  if (!o.detail.empty()) o.detail += " | ";
  o.detail += (c.pass ? "" : "FAILED ") + c.claim + ": " + c.detail;
  o.pass = o.pass && c.pass;
}

template <class F>
Outcome over(std::initializer_list<std::uint32_t> primes, F check) {
  Outcome o;
  for (std::uint32_t p : primes) add(o, check(p));
  return o;
}

Outcome noether() {
  Outcome o;
  for (auto [p, d_max, expected] : {std::tuple{5u, 24, 22}, std::tuple{7u, 20, 16}}) {
    NoetherReport r;
    add(o, check_noether(p, d_max, &r));
    if (r.noether_number != expected) {
      o.pass = false;
      o.detail += " | expected Noether number " + std::to_string(expected) + " at p = " + std::to_string(p);
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Hilbert series agreement, p = 5, degrees 0..24", [] { return over({5}, [](auto p) { return check_brute_vs_closed(p, 24); }); }},
      {"Hilbert series agreement, p = 7, degrees 0..20", [] { return over({7}, [](auto p) { return check_brute_vs_closed(p, 20); }); }},
      {"invariance of the generating set, p = 5, 7, 11, 13", [] { return over({5, 7, 11, 13}, check_invariance); }},
      {"lead monomials of the transfer families, p = 5, 7, 11, 13", [] { return over({5, 7, 11, 13}, check_family_leads); }},
      {"K identities, p = 5, 7, 11, 13", [] { return over({5, 7, 11, 13}, check_k_identities); }},
      {"tr^P(a3^(p-2)) modulo a0, p = 5, 7, 11, 13", [] { return over({5, 7, 11, 13}, check_trace_identity); }},
      {"lead terms of h_1..h_5, p = 5, 7", [] { return over({5, 7}, [](auto p) { return check_tete_leads(p, 5); }); }},
      {"D, K, N a0, delta zero-dimensional, p = 5, 7", [] { return over({5, 7}, check_hsop); }},
      {"Noether numbers 22 (p = 5) and 16 (p = 7) with degreewise generation", noether},
      {"LM(h_1..h_3) indecomposable, p = 5, 7", [] { return over({5, 7}, [](auto p) { return check_indecomposable(p, 3); }); }},
      {"cone counts against the per-j series to degree 40, p = 5, 7 (and p = 11, 17 where a printed display differs)",
       [] {
         Outcome o = over({5, 7}, [](auto p) { return check_cones(p, 40); });
         add(o, check_cones(11, 150));
         add(o, check_cones(17, 260));
         return o;
       }},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << " [" << timing << "] "
              << criteria[k].first << ": " << o.detail << std::endl;
    all = all && o.pass;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
