#pragma once

/**
 * @file invariants.hpp
 * @brief The named SL_2(F_p) invariants of the binary cubic, the four transfer
 * families of the generating set, the tete-a-tete sequence h_i, and closed
 * forms for their lead monomials.
 *
 * Every family member is computed as tr_B^G(N^j tr^P(seed)). Since tr_P^B
 * multiplies a B-invariant by p - 1 = -1, this is -tr^G(N^j seed); the two
 * differ only by sign and have the same lead monomial.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubinv/group.hpp"
#include "cubinv/poly.hpp"

namespace cubinv {

enum class Family { named, fam1, fam2, fam3, fam4, h };

std::string to_string(Family f);

struct GeneratorRecord {
  std::string name;
  Family family = Family::named;
  int j = 0;  // transfer index, 0 when not applicable
  int m = 0;  // 2 + floor(3j/(p-1)) for families 1 and 3
  int i = 0;  // index of h_i
  Poly poly{5};
  int degree = 0;
  Monomial lead;
};

/// True when p = -1 mod 3.
inline bool is_minus_one_mod3(std::uint32_t p) { return p % 3 == 2; }

/// Least positive c with 3c = 0 mod (p-1); checked against (p-1)/3 or p-1.
unsigned delta_exponent(std::uint32_t p);

/// m = 2 + floor(3j/(p-1)).
int family_m(int j, std::uint32_t p);

/// The set of named invariants accepted by build_named:
/// D, L, K, N, xi, d, e, delta, Na0, etilde, dtilde.
const std::vector<std::string>& named_invariants();

/// Throws std::invalid_argument for an unknown name and std::domain_error for
/// dtilde when p = 1 mod 3.
GeneratorRecord build_named(std::string_view name, std::uint32_t p);

/// Orbit product of a3 over P.
Poly norm_n(std::uint32_t p);

/// The monomial fed to tr^P in family fam at index j.
Monomial family_seed(int fam, int j, std::uint32_t p);

/// Throws std::out_of_range naming the violated bound, or std::domain_error
/// for family 4 when p = 1 mod 3.
void check_family_index(int fam, int j, std::uint32_t p);

/// The valid j for a family, in increasing order; empty for family 4 when
/// p = 1 mod 3.
std::vector<int> family_range(int fam, std::uint32_t p);

/// j = ceil((m-2)(p-1)/3), the exclusion in the lead-monomial lemma for family 3.
bool family3_lemma_excludes(int j, std::uint32_t p);

/// One line per family listing the resolved j values.
std::string describe_ranges(std::uint32_t p);

GeneratorRecord build_transfer_family(int fam, int j, std::uint32_t p);

/// Named generators D, K, L, delta, Na0, etilde (and dtilde for p = -1 mod 3)
/// followed by every family member. Throws std::logic_error if a record fails
/// the invariance check.
std::vector<GeneratorRecord> build_generating_set(std::uint32_t p);

/// h_1, ..., h_{i_max} from the recurrence.
std::vector<GeneratorRecord> build_h_sequence(int i_max, std::uint32_t p);
GeneratorRecord build_h(int i, std::uint32_t p);

enum class LmSymbol { gamma, beta, Delta, phi, alpha, epsilon, lambda, mu, eta, n };

std::string to_string(LmSymbol s);
std::optional<LmSymbol> parse_lm_symbol(std::string_view s);

/// Closed-form lead monomials. Indices not used by a symbol are ignored;
/// out-of-range indices throw std::out_of_range.
Monomial predicted_lm(LmSymbol s, int i, int j, std::uint32_t p);

/// Lead monomial the construction of a named invariant should produce.
Monomial predicted_named_lm(std::string_view name, std::uint32_t p);

/// The family's lead-monomial symbol: gamma, beta, Delta, phi for 1..4.
LmSymbol family_symbol(int fam);

/// Fixed by sigma and sigma^T, which generate SL_2(F_p).
bool verify_invariance(const Poly& f);

}  // namespace cubinv
