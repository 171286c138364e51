#pragma once

/**
 * @file linalg.hpp
 * @brief Dense row echelon forms over F_p and coordinates on graded pieces of
 * the polynomial ring.
 */

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cubinv/poly.hpp"

namespace cubinv {

using Vec = std::vector<std::uint32_t>;

/// Incrementally built echelon basis of a subspace of F_p^n. Each stored row
/// is monic at its pivot, the first nonzero coordinate, and vanishes at the
/// pivots of every earlier row. When key_length < n, pivots are only searched
/// among the first key_length coordinates; the remaining coordinates are
/// carried along, which is how nullspace() tracks combinations.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t p, std::size_t n, std::optional<std::size_t> key_length = std::nullopt);

  std::uint32_t prime() const { return p_; }
  std::size_t dimension() const { return n_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduced form of v against the basis.
  Vec reduce(const Vec& v) const;
  /// Adds v to the span; returns false if it was already there (in the key
  /// coordinates).
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;

 private:
  struct Row {
    std::size_t pivot;
    Vec data;  // coordinates from pivot onward
  };
  /// Reduces in place; returns the pivot, or key_length_ if v reduces to zero.
  std::size_t reduce_in_place(std::vector<std::uint64_t>& acc, Vec& out) const;

  std::uint32_t p_;
  std::size_t n_;
  std::size_t key_length_;
  std::vector<Row> rows_;
};

/// Rank of the given vectors (all of one length).
std::size_t rank_of(std::uint32_t p, const std::vector<Vec>& vectors, std::size_t n);

/// Basis of {x : sum_j x_j columns[j] = 0}, each vector of length columns.size().
std::vector<Vec> nullspace(std::uint32_t p, const std::vector<Vec>& columns, std::size_t rows);

/// The monomials of one degree, optionally only those of weight 0 mod (p-1),
/// in descending grevlex order, with coordinates for homogeneous polynomials.
class DegreeBasis {
 public:
  DegreeBasis(unsigned degree, std::optional<std::uint32_t> weight_zero_prime = std::nullopt);

  unsigned degree() const { return degree_; }
  std::size_t size() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  /// -1 when m is not in the basis.
  std::ptrdiff_t index(Monomial m) const;

  /// Coordinates of the degree-d part of f. Throws std::invalid_argument if
  /// that part has a term outside the basis.
  Vec coordinates(const Poly& f) const;
  Poly polynomial(std::uint32_t p, const Vec& v) const;

 private:
  unsigned degree_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace cubinv
