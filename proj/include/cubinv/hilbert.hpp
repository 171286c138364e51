#pragma once

/**
 * @file hilbert.hpp
 * @brief Hilbert series of F[V]^{SL_2(F_p)}: graded fixed-space dimensions by
 * linear algebra, the closed-form rational functions, the per-j cone series
 * of the lead-term module, and a direct lattice count of those cones.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubinv/linalg.hpp"
#include "cubinv/poly.hpp"

namespace cubinv {

/// Integer polynomial in t; index = exponent. Arithmetic is overflow-checked
/// and throws std::overflow_error.
using IntPoly = std::vector<std::int64_t>;

IntPoly t_pow(int k, std::int64_t c = 1);
/// 1 - t^k.
IntPoly one_minus_t(int k);
IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

struct PowerSeries {
  std::vector<std::int64_t> coeffs;

  int truncation() const { return int(coeffs.size()) - 1; }
  std::int64_t operator[](std::size_t d) const { return d < coeffs.size() ? coeffs[d] : 0; }
  bool operator==(const PowerSeries&) const = default;
};

struct RationalSeries {
  IntPoly numerator;
  IntPoly denominator;
};

/// Power-series expansion through t^{d_max}. Throws std::domain_error unless
/// the denominator's constant term is +-1.
PowerSeries expand(const RationalSeries& rs, int d_max);

/// Quotient a / q as power series through a's truncation degree.
PowerSeries divide(const PowerSeries& a, const IntPoly& q);
PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);

/// First degree at which the two series differ (up to the shorter truncation).
std::optional<int> first_difference(const PowerSeries& a, const PowerSeries& b);

/// The closed-form Hilbert series for the congruence class of p.
RationalSeries closed_form(std::uint32_t p);

/// dim of the degree-d invariants, as the nullity of (M_sigma - I; M_sigma^T - I).
/// The domain is restricted to weight-zero monomials: the torus lies in the
/// group, so every invariant is a combination of them.
std::size_t fixed_space_dim(std::uint32_t p, unsigned d);
/// Same nullity over the full monomial basis of degree d.
std::size_t fixed_space_dim_unrestricted(std::uint32_t p, unsigned d);
/// A basis of the degree-d invariants obtained from an explicit nullspace.
std::vector<Poly> fixed_space_basis(std::uint32_t p, unsigned d);
/// [fixed_space_dim(p, d)] for d = 0..d_max; degrees run in parallel.
PowerSeries brute_series(std::uint32_t p, int d_max);

/// Largest j with a cone summand: (p-1)/3 for p = 1 mod 3, p-1 otherwise.
int cone_max_j(std::uint32_t p);

/// printed: the per-j formulas as first entered. resolved: identical except that
/// the even-j display for (2p+2)/3 <= j <= p-2 (p = -1 mod 3), which repeats
/// t^{4p-4-3j}, is replaced by the combined form with t^{4p-2-3j}.
enum class ConeForm { printed, resolved };

std::string to_string(ConeForm f);

/// The per-j rational function; throws std::out_of_range outside 0..cone_max_j(p).
RationalSeries cone_closed_form(std::uint32_t p, int j, ConeForm form = ConeForm::resolved);
PowerSeries cone_series(std::uint32_t p, int j, int d_max, ConeForm form = ConeForm::resolved);

/// Seeds a3^{pj} a2^x a1^y of the lead-term module at index j, up to degree d_max.
std::vector<Monomial> cone_seeds(std::uint32_t p, int j, int d_max);

/// Number of monomials of each degree in the union of the cones
/// seed * LM(D)^l * LM(K)^k over cone_seeds(p, j, d_max). For j = cone_max_j(p)
/// the multiples of LM(delta) by the j = 0 cones are removed.
PowerSeries cone_count(std::uint32_t p, int j, int d_max);

enum class ConeSource { closed_forms, counts };

/// (sum over j of the cone series) / ((1 - t^{p+1})(1 - t^{pc})).
PowerSeries assemble_total(std::uint32_t p, int d_max, ConeSource source = ConeSource::closed_forms,
                           ConeForm form = ConeForm::resolved);

}  // namespace cubinv
