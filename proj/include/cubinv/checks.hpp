#pragma once

/**
 * @file checks.hpp
 * @brief Self-contained verifications of the structural claims about
 * F[V]^{SL_2(F_p)}, each reported with the first counterexample found, and
 * the named suites that group them.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubinv/sagbi.hpp"

namespace cubinv {

struct Check {
  std::string claim;
  bool pass = false;
  /// Summary on success, first counterexample on failure.
  std::string detail;
};

Check check_invariance(std::uint32_t p);
Check check_named_leads(std::uint32_t p);
Check check_family_leads(std::uint32_t p);
Check check_k_identities(std::uint32_t p);
Check check_trace_identity(std::uint32_t p);
Check check_family3_exclusion(std::uint32_t p);
/// LT(h_i) = 2 a3^p a1^{p+2+(i-1)(p-1)} and h_i invariant, i = 1..i_max.
Check check_tete_leads(std::uint32_t p, int i_max);
/// The Groebner basis of (D, K, N a0, delta) has a pure power of every variable.
Check check_hsop(std::uint32_t p);
/// Standard monomials of (D, K, N a0, delta) number the product of the degrees.
Check check_hsop_quotient(std::uint32_t p);
/// LM(h_i) is outside the semigroup of lm(C) and the lower h_k, i = 1..i_max.
Check check_indecomposable(std::uint32_t p, int i_max);
/// C generates through d_max, no element is redundant, and the Noether number
/// equals the largest degree in C. The report is stored in *out if given.
Check check_noether(std::uint32_t p, int d_max, NoetherReport* out = nullptr);
Check check_brute_vs_closed(std::uint32_t p, int d_max);
/// Per-j lattice counts equal the resolved per-j series, and the assembled
/// totals equal the closed form. Disagreements of the printed displays are
/// listed in the detail without failing the check.
Check check_cones(std::uint32_t p, int d_max);

struct SuiteOptions {
  int i_max = 3;
  std::optional<int> d_max;
};

struct Suite {
  std::string name;
  std::string description;
  std::function<std::vector<Check>(std::uint32_t, const SuiteOptions&)> run;
};

const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);

}  // namespace cubinv
