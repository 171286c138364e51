#pragma once

// Internal helpers for degree-d homogeneous components.
//
// A degree-d monomial is addressed by the cube index (e0*B + e1)*B + e2 with
// B = d + 1. Within one degree, ascending cube index is descending grevlex,
// and the index of a product is the sum of the factors' indices when both
// are computed with the product's base.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubinv/poly.hpp"

namespace cubinv::detail {

struct Cube {
  unsigned degree;
  std::size_t base;

  explicit Cube(unsigned d) : degree(d), base(std::size_t(d) + 1) {}

  std::size_t cells() const { return base * base * base; }
  std::size_t index(Monomial m) const { return (m.e0() * base + m.e1()) * base + m.e2(); }
  Monomial monomial(std::size_t idx) const {
    unsigned e2 = unsigned(idx % base);
    idx /= base;
    unsigned e1 = unsigned(idx % base);
    unsigned e0 = unsigned(idx / base);
    return Monomial(degree - e0 - e1 - e2, e2, e1, e0);
  }
  std::int64_t stride(Var v) const {
    switch (v) {
      case Var::a3: return 0;
      case Var::a2: return 1;
      case Var::a1: return std::int64_t(base);
      case Var::a0: return std::int64_t(base * base);
    }
    return 0;
  }
};

inline constexpr std::size_t kMaxDenseCells = std::size_t(1) << 25;

/// Sums contributions v < 2^32 landing on cube cells of one degree. Picks a
/// dense array when the expected number of contributions is comparable to the
/// cube, otherwise collects pairs and sorts them.
class Accumulator {
 public:
  Accumulator(unsigned degree, std::uint32_t p, std::size_t expected)
      : cube_(degree), p_(p) {
    std::size_t cells = cube_.cells();
    dense_ = cells <= kMaxDenseCells && (cells <= 4096 || expected * 4 >= cells);
    if (dense_)
      cells_.assign(cells, 0);
    else
      pairs_.reserve(expected);
  }

  const Cube& cube() const { return cube_; }
  bool dense() const { return dense_; }
  std::uint64_t* data() { return cells_.data(); }

  void add(std::size_t idx, std::uint64_t v) {
    if (dense_) {
      cells_[idx] += v;
      if (++pending_ == kFlushEvery) fold();
    } else {
      pairs_.emplace_back(idx, std::uint32_t(v % p_));
    }
  }

  /// Records n raw additions into data() made by a caller-side loop. Each cell
  /// can receive at most one of them per call.
  void note_bulk(std::size_t n) {
    (void)n;
    if (++pending_ >= kFlushEvery) fold();
  }

  void append_to(std::vector<Term>& out) {
    if (dense_) {
      const std::size_t B = cube_.base;
      const unsigned d = cube_.degree;
      for (unsigned e0 = 0; e0 <= d; ++e0)
        for (unsigned e1 = 0; e0 + e1 <= d; ++e1) {
          std::size_t row = (e0 * B + e1) * B;
          for (unsigned e2 = 0; e0 + e1 + e2 <= d; ++e2) {
            std::uint64_t v = cells_[row + e2];
            if (v == 0) continue;
            v %= p_;
            if (v) out.push_back({Monomial(d - e0 - e1 - e2, e2, e1, e0), std::uint32_t(v)});
          }
        }
      return;
    }
    std::sort(pairs_.begin(), pairs_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t i = 0;
    while (i < pairs_.size()) {
      std::size_t idx = pairs_[i].first;
      std::uint64_t s = 0;
      for (; i < pairs_.size() && pairs_[i].first == idx; ++i) s += pairs_[i].second;
      s %= p_;
      if (s) out.push_back({cube_.monomial(idx), std::uint32_t(s)});
    }
  }

 private:
  // p < 2^16, so a cell holding < p plus 2^31 products of size < 2^32 fits.
  static constexpr std::size_t kFlushEvery = std::size_t(1) << 31;
  void fold() {
    for (auto& c : cells_) c %= p_;
    pending_ = 0;
  }

  Cube cube_;
  std::uint32_t p_;
  bool dense_;
  std::size_t pending_ = 0;
  std::vector<std::uint64_t> cells_;
  std::vector<std::pair<std::size_t, std::uint32_t>> pairs_;
};

/// Contiguous run of one degree inside a canonical term vector.
struct Run {
  unsigned degree;
  std::size_t begin, end;
  std::size_t size() const { return end - begin; }
};

inline std::vector<Run> degree_runs(const std::vector<Term>& t) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < t.size()) {
    unsigned d = t[i].mono.degree();
    std::size_t j = i;
    while (j < t.size() && t[j].mono.degree() == d) ++j;
    runs.push_back({d, i, j});
    i = j;
  }
  return runs;
}

}  // namespace cubinv::detail
