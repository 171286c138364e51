#include "cubinv/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace cubinv {

EchelonBasis::EchelonBasis(std::uint32_t p, std::size_t n, std::optional<std::size_t> key_length)
    : p_(p), n_(n), key_length_(key_length.value_or(n)) {
  require_supported_prime(p);
  if (key_length_ > n_) throw std::invalid_argument("key length exceeds vector length");
}

std::size_t EchelonBasis::reduce_in_place(std::vector<std::uint64_t>& acc, Vec& out) const {
  // Entries of acc stay below p + count * (p-1)^2; fold before that can overflow.
  const std::uint64_t sq = std::uint64_t(p_ - 1) * (p_ - 1);
  const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() - p_) / (sq == 0 ? 1 : sq) - 1;
  std::uint64_t pending = 0;
  for (const Row& r : rows_) {
    const std::uint32_t c = std::uint32_t(acc[r.pivot] % p_);
    if (c == 0) continue;
    if (++pending >= limit) {
      for (auto& x : acc) x %= p_;
      pending = 1;
    }
    const std::uint64_t f = p_ - c;
    std::uint64_t* a = acc.data() + r.pivot;
    const std::uint32_t* d = r.data.data();
    const std::size_t len = r.data.size();
    for (std::size_t k = 0; k < len; ++k) a[k] += f * d[k];
  }
  out.resize(n_);
  std::size_t pivot = key_length_;
  for (std::size_t k = 0; k < n_; ++k) {
    out[k] = std::uint32_t(acc[k] % p_);
    if (pivot == key_length_ && k < key_length_ && out[k] != 0) pivot = k;
  }
  return pivot;
}

Vec EchelonBasis::reduce(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  Vec out;
  reduce_in_place(acc, out);
  return out;
}

bool EchelonBasis::insert(const Vec& v) {
  if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  Vec out;
  const std::size_t pivot = reduce_in_place(acc, out);
  if (pivot == key_length_) return false;
  const std::uint32_t inv = modp::inv(out[pivot], p_);
  Row r{pivot, Vec(out.begin() + std::ptrdiff_t(pivot), out.end())};
  for (auto& x : r.data) x = modp::mul(x, inv, p_);
  rows_.push_back(std::move(r));
  return true;
}

bool EchelonBasis::contains(const Vec& v) const {
  const Vec r = reduce(v);
  for (std::size_t k = 0; k < key_length_; ++k)
    if (r[k] != 0) return false;
  return true;
}

std::size_t rank_of(std::uint32_t p, const std::vector<Vec>& vectors, std::size_t n) {
  EchelonBasis e(p, n);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::vector<Vec> nullspace(std::uint32_t p, const std::vector<Vec>& columns, std::size_t rows) {
  const std::size_t m = columns.size();
  EchelonBasis e(p, rows + m, rows);
  std::vector<Vec> kernel;
  for (std::size_t j = 0; j < m; ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    Vec v(rows + m, 0);
    std::copy(columns[j].begin(), columns[j].end(), v.begin());
    v[rows + j] = 1;
    if (!e.insert(v)) {
      const Vec r = e.reduce(v);
      kernel.emplace_back(r.begin() + std::ptrdiff_t(rows), r.end());
    }
  }
  return kernel;
}

DegreeBasis::DegreeBasis(unsigned degree, std::optional<std::uint32_t> weight_zero_prime) : degree_(degree) {
  // Descending grevlex within a degree: for the packed layout this is
  // ascending (e0, e1, e2) lexicographically.
  for (unsigned e0 = 0; e0 <= degree; ++e0)
    for (unsigned e1 = 0; e0 + e1 <= degree; ++e1)
      for (unsigned e2 = 0; e0 + e1 + e2 <= degree; ++e2) {
        const Monomial m(degree - e0 - e1 - e2, e2, e1, e0);
        if (weight_zero_prime && m.weight(*weight_zero_prime) != 0) continue;
        index_.emplace(m, monos_.size());
        monos_.push_back(m);
      }
}

std::ptrdiff_t DegreeBasis::index(Monomial m) const {
  const auto it = index_.find(m);
  return it == index_.end() ? -1 : std::ptrdiff_t(it->second);
}

Vec DegreeBasis::coordinates(const Poly& f) const {
  Vec v(monos_.size(), 0);
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != degree_) continue;
    const std::ptrdiff_t k = index(t.mono);
    if (k < 0) throw std::invalid_argument("term " + t.mono.to_string() + " lies outside the basis");
    v[std::size_t(k)] = t.coeff;
  }
  return v;
}

Poly DegreeBasis::polynomial(std::uint32_t p, const Vec& v) const {
  if (v.size() != monos_.size()) throw std::invalid_argument("vector length mismatch");
  std::vector<Term> t;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] % p != 0) t.push_back({monos_[k], v[k] % p});
  return Poly::from_canonical(p, std::move(t));
}

}  // namespace cubinv
