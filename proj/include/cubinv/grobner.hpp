#pragma once

/**
 * @file grobner.hpp
 * @brief Buchberger's algorithm for homogeneous ideals of F_p[a3, a2, a1, a0]
 * in grevlex, and the zero-dimensionality test built on it.
 */

#include <cstddef>
#include <vector>

#include "cubinv/poly.hpp"

namespace cubinv {

struct IdealBasis {
  /// Monic, sorted by increasing lead monomial.
  std::vector<Poly> polys;
  /// Set by buchberger once every critical pair has been processed.
  bool groebner = false;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

struct BuchbergerOptions {
  /// Abort with std::runtime_error if a critical pair of larger degree is reached.
  int max_degree = 256;
};

/// Reduced Groebner basis. Pairs are taken in order of increasing lcm (the
/// normal strategy) after the Buchberger product and chain criteria in the
/// Gebauer-Moeller form. Inputs must be nonzero, homogeneous and over one
/// field; std::invalid_argument otherwise.
IdealBasis buchberger(const std::vector<Poly>& gens, const BuchbergerOptions& opts = {});

Poly s_polynomial(const Poly& f, const Poly& g);

/// Full reduction of a homogeneous f modulo the polynomials' lead terms.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis);

/// Every S-polynomial of every pair reduces to zero, with no criteria applied.
bool s_polynomials_reduce_to_zero(const std::vector<Poly>& basis);

/// Some pure power of each variable is a lead monomial. Throws
/// std::logic_error if the basis is not flagged as Groebner.
bool is_zero_dimensional(const IdealBasis& basis);

/// Number of degree-d monomials outside the lead-monomial ideal, d = 0..d_max.
/// Throws std::logic_error if the basis is not flagged as Groebner.
std::vector<std::size_t> standard_monomial_counts(const IdealBasis& basis, int d_max);

}  // namespace cubinv
