#pragma once

/**
 * @file poly.hpp
 * @brief Sparse polynomials in F_p[a3, a2, a1, a0].
 *
 * A Poly is an immutable-by-convention value: a characteristic and a vector of
 * terms sorted by descending grevlex with every coefficient nonzero. Because
 * grevlex is graded, the terms of each degree form one contiguous run, and the
 * heavy kernels (multiplication, linear substitution) work on one homogeneous
 * run at a time.
 */

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cubinv/field.hpp"
#include "cubinv/monomial.hpp"

namespace cubinv {

struct Term {
  Monomial mono;
  std::uint32_t coeff;
  bool operator==(const Term&) const = default;
};

class Poly {
 public:
  /// The zero polynomial. Throws std::invalid_argument for unsupported p.
  explicit Poly(std::uint32_t p);

  static Poly constant(std::uint32_t p, std::int64_t c);
  static Poly monomial(std::uint32_t p, Monomial m, std::int64_t c = 1);
  static Poly variable(std::uint32_t p, Var v);
  /// Canonicalizes arbitrary terms: sorts, merges duplicates, drops zeros.
  /// Coefficients are reduced mod p.
  static Poly from_terms(std::uint32_t p, std::vector<Term> terms);
  /// Takes terms already in canonical form; only checked in debug builds.
  static Poly from_canonical(std::uint32_t p, std::vector<Term> terms);

  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Grevlex-maximal term. Throws std::domain_error on the zero polynomial.
  Term lead_term() const;
  Monomial lead_monomial() const { return lead_term().mono; }
  FieldElement lead_coefficient() const { return {p_, lead_term().coeff}; }
  FieldElement coefficient(Monomial m) const;

  /// Largest degree of a term; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : int(terms_.front().mono.degree()); }
  bool is_homogeneous() const;
  /// All terms share one weight mod (p-1). Zero counts as isobaric.
  bool is_isobaric() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(std::int64_t c) const;
  Poly scaled(const FieldElement& c) const;
  Poly times_monomial(Monomial m, std::uint32_t c = 1) const;
  Poly pow(unsigned k) const;
  /// Divides by the lead coefficient; zero stays zero.
  Poly monic() const;

  bool operator==(const Poly& o) const { return p_ == o.p_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  struct Unchecked {};
  Poly(Unchecked, std::uint32_t p, std::vector<Term> t) : p_(p), terms_(std::move(t)) {}
  void check_same(const Poly& o) const;
  Poly combine(const Poly& o, bool subtract) const;

  std::uint32_t p_;
  std::vector<Term> terms_;

  friend Poly set_var_zero(const Poly& f, Var v);
  friend Poly homogeneous_component(const Poly& f, unsigned d);
  friend Poly substitute_linear(const Poly& f, const std::array<std::array<std::uint32_t, 4>, 4>& rows);
};

/// Substitutes 0 for one variable.
Poly set_var_zero(const Poly& f, Var v);
Poly homogeneous_component(const Poly& f, unsigned d);

/// Row i holds the linear form that replaces variable i (a3, a2, a1, a0 order):
/// a_i -> sum_k rows[i][k] * a_k. The matrix must be invertible over F_p.
using LinearForms = std::array<std::array<std::uint32_t, 4>, 4>;

/// Simultaneous linear change of variables. The matrix is factored as P L U
/// and applied as a permutation, then a chain of transvections
/// a_i -> a_i + c a_k and diagonal scalings, each of which costs one binomial
/// expansion per term.
Poly substitute_linear(const Poly& f, const LinearForms& rows);

std::ostream& operator<<(std::ostream& os, const Poly& f);

}  // namespace cubinv
