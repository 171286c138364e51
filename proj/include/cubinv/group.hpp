#pragma once

/**
 * @file group.hpp
 * @brief SL_2(F_p), its subgroups P, Q, B, and their action on F_p[a3,a2,a1,a0].
 *
 * Conventions. A group element g acts on column vectors in F_p^2 with
 * X = (0,1)^T and Y = (1,0)^T. The induced matrix M_g is the matrix of g on the
 * basis (Y^3, 3Y^2X, 3YX^2, X^3) of the symmetric cube; row i of M_g is the
 * image of the dual variable a_{3-i}:
 *
 *     (a_i) g = sum_k M_g[i][k] a_k        (rows and columns in a3,a2,a1,a0 order)
 *
 * This is a right action: act(act(f, g), h) == act(f, g * h), and
 * induced_matrix(g * h) == induced_matrix(g) * induced_matrix(h).
 *
 * Transfers sum over right cosets H tau. The Borel representatives Q u {eta}
 * serve for both left and right cosets.
 */

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubinv/poly.hpp"

namespace cubinv {

class SL2Element {
 public:
  /// [[a, b], [c, d]]; throws std::invalid_argument unless ad - bc = 1.
  SL2Element(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static SL2Element identity(std::uint32_t p) { return {p, 1, 0, 0, 1}; }
  /// Upper unitriangular [[1, s], [0, 1]]; s = 1 gives the generator of P.
  static SL2Element sigma(std::uint32_t p, std::int64_t s = 1) { return {p, 1, s, 0, 1}; }
  /// Lower unitriangular [[1, 0], [s, 1]]; s = 1 gives the generator of Q.
  static SL2Element sigma_t(std::uint32_t p, std::int64_t s = 1) { return {p, 1, 0, s, 1}; }
  /// [[0, 1], [-1, 0]]
  static SL2Element eta(std::uint32_t p) { return {p, 0, 1, -1, 0}; }
  /// diag(w, 1/w); w must be nonzero.
  static SL2Element rho(std::uint32_t p, std::int64_t w);

  std::uint32_t prime() const { return p_; }
  const std::array<std::uint32_t, 4>& entries() const { return m_; }  // a, b, c, d

  SL2Element operator*(const SL2Element& o) const;
  SL2Element inverse() const;
  bool operator==(const SL2Element&) const = default;

  bool is_upper_triangular() const { return m_[2] == 0; }
  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::array<std::uint32_t, 4> m_;
};

struct ActionMatrix {
  std::uint32_t p;
  LinearForms rows;

  ActionMatrix operator*(const ActionMatrix& o) const;
  bool operator==(const ActionMatrix&) const = default;
  static ActionMatrix identity(std::uint32_t p);
};

/// Action on a3, a2, a1, a0 induced through the symmetric cube.
ActionMatrix induced_matrix(const SL2Element& g);

Poly act(const Poly& f, const ActionMatrix& m);
Poly act(const Poly& f, const SL2Element& g);

enum class Subgroup { P, Q, B, G };

std::string to_string(Subgroup s);

/// Fixed enumeration orders: P = sigma^s and Q = sigma_t^s for s = 0..p-1;
/// B = sigma^s rho_w for w = 1..p-1 ascending, then s; G lists every matrix
/// of determinant one in lexicographic (a, b, c, d) order.
std::vector<SL2Element> subgroup_elements(Subgroup s, std::uint32_t p);
std::size_t subgroup_order(Subgroup s, std::uint32_t p);

/// Q (s = 0..p-1) followed by eta.
std::vector<SL2Element> borel_coset_reps(std::uint32_t p);

/// sum over reps of act(f, tau). Summands may be computed in parallel; the
/// sum is formed in rep order.
Poly transfer(const Poly& f, std::span<const SL2Element> reps);

/// tr^P, over the P elements.
Poly transfer_p(const Poly& f);
/// tr_P^B, over rho_w for w in F_p^*.
Poly transfer_p_to_b(const Poly& f);
/// tr_B^G, over Q u {eta}.
Poly transfer_b_to_g(const Poly& f);
/// tr^G as tr_B^G . tr_P^B . tr^P.
Poly transfer_g(const Poly& f);
/// tr^G by summing over every element of SL_2(F_p); the cross-check oracle.
Poly transfer_g_full(const Poly& f);

/// Product of act(f, tau) over the subgroup's elements.
Poly orbit_product(const Poly& f, Subgroup s);

bool is_fixed_by(const Poly& f, const SL2Element& g);

}  // namespace cubinv
