#pragma once

/**
 * @file sagbi.hpp
 * @brief Subduction against a generator set, membership in the semigroup of
 * lead monomials, graded dimensions of the generated subalgebra, and the
 * Noether number and minimality analysis built on them.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubinv/invariants.hpp"
#include "cubinv/poly.hpp"

namespace cubinv {

/// Lead monomials generating a lead-term algebra. All must be nonconstant;
/// the constructor throws std::invalid_argument otherwise.
class LeadTermAlgebraBasis {
 public:
  LeadTermAlgebraBasis() = default;
  explicit LeadTermAlgebraBasis(std::vector<Monomial> monomials);
  static LeadTermAlgebraBasis of(const std::vector<Poly>& gens);

  const std::vector<Monomial>& monomials() const { return monos_; }
  std::size_t size() const { return monos_.size(); }

 private:
  std::vector<Monomial> monos_;
};

/// Exponents c with prod basis[k]^c[k] = m, or nullopt. Memoized search over
/// the divisors of m; the representation found is the first in the order
/// that tries basis elements by increasing index.
std::optional<std::vector<unsigned>> semigroup_factor(Monomial m, const LeadTermAlgebraBasis& basis);
bool semigroup_member(Monomial m, const LeadTermAlgebraBasis& basis);

std::vector<Poly> polys_of(const std::vector<GeneratorRecord>& records);

/// Repeatedly cancels the lead term of f by a scalar multiple of a product of
/// generators, stopping at zero or at a lead monomial outside the semigroup.
Poly subduct(const Poly& f, const std::vector<Poly>& gens);
Poly subduct(const Poly& f, const std::vector<GeneratorRecord>& gens);

/// dim of the degree-d part of the algebra generated by gens, d = 0..d_max.
/// Generators must be homogeneous of positive degree. Degree d is spanned by
/// g * (degree d - deg g) over all generators g.
std::vector<std::size_t> degreewise_dims(const std::vector<Poly>& gens, int d_max);

struct DegreeReport {
  int degree = 0;
  std::size_t dim_algebra = 0;
  std::size_t dim_invariants = 0;
  /// dim of the span of products of two or more generators.
  std::size_t dim_decomposable = 0;
  /// dim_invariants - dim_decomposable: generators any minimal set needs here.
  std::size_t new_generators_needed = 0;
  std::vector<std::string> generators;
  std::vector<std::string> redundant;
};

struct NoetherReport {
  std::vector<DegreeReport> degrees;
  /// dim_algebra == dim_invariants at every degree.
  bool generates = false;
  /// Largest degree with new_generators_needed > 0; 0 if none.
  int noether_number = 0;
  std::vector<std::string> redundant;
};

/// Compares the subalgebra generated by the named polynomials against the
/// target dimensions target[d], d = 0..d_max. Throws std::invalid_argument if
/// d_max is below the largest generator degree or target is too short.
NoetherReport noether_analysis(const std::vector<std::string>& names, const std::vector<Poly>& gens,
                               const std::vector<std::size_t>& target, int d_max);
/// The generating set of F[V]^{SL_2(F_p)} against the brute-force invariant
/// dimensions.
NoetherReport noether_analysis(std::uint32_t p, int d_max);

/// Throws std::invalid_argument for d_max below the largest generator degree
/// and std::runtime_error if the generating set falls short somewhere.
int noether_number(std::uint32_t p, int d_max);

std::string to_text(const NoetherReport& r);

}  // namespace cubinv
