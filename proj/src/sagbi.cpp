#include "cubinv/sagbi.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cubinv/hilbert.hpp"
#include "cubinv/linalg.hpp"
#include "cubinv/parallel.hpp"

namespace cubinv {

LeadTermAlgebraBasis::LeadTermAlgebraBasis(std::vector<Monomial> monomials) : monos_(std::move(monomials)) {
  for (Monomial m : monos_)
    if (m.is_one()) throw std::invalid_argument("lead-term algebra basis contains the constant monomial");
}

LeadTermAlgebraBasis LeadTermAlgebraBasis::of(const std::vector<Poly>& gens) {
  std::vector<Monomial> lm;
  lm.reserve(gens.size());
  for (const Poly& g : gens) lm.push_back(g.lead_monomial());
  return LeadTermAlgebraBasis(std::move(lm));
}

namespace {

class FactorSearch {
 public:
  explicit FactorSearch(const LeadTermAlgebraBasis& b) : basis_(b.monomials()) {}

  // Index of a basis element whose cofactor is again in the semigroup, -1 if
  // there is none, -2 for the empty product.
  int step(Monomial m) {
    if (m.is_one()) return -2;
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    int found = -1;
    for (std::size_t k = 0; k < basis_.size() && found < 0; ++k)
      if (basis_[k].divides(m) && step(m / basis_[k]) != -1) found = int(k);
    memo_.emplace(m, found);
    return found;
  }

 private:
  const std::vector<Monomial>& basis_;
  std::unordered_map<Monomial, int, MonomialHash> memo_;
};

void require_gens(const std::vector<Poly>& gens) {
  for (const Poly& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("generator is zero");
    if (g.degree() <= 0 || !g.is_homogeneous())
      throw std::invalid_argument("generators must be homogeneous of positive degree");
  }
  for (std::size_t k = 1; k < gens.size(); ++k)
    if (gens[k].prime() != gens[0].prime()) throw std::invalid_argument("generators over different fields");
}

bool all_weight_zero(const std::vector<Poly>& gens) {
  for (const Poly& g : gens)
    for (const Term& t : g.terms())
      if (t.mono.weight(g.prime()) != 0) return false;
  return true;
}

// Spanning sets of the graded pieces of the subalgebra, built degree by
// degree. Only products that enlarged the span are kept.
class GradedSpan {
 public:
  GradedSpan(const std::vector<Poly>& gens) : gens_(gens) {
    require_gens(gens_);
    p_ = gens_.empty() ? 5 : gens_[0].prime();
    weight_zero_ = !gens_.empty() && all_weight_zero(gens_);
    kept_.push_back({Poly::constant(p_, 1)});
  }

  std::uint32_t prime() const { return p_; }

  DegreeBasis basis(int d) const {
    return weight_zero_ ? DegreeBasis(unsigned(d), p_) : DegreeBasis(unsigned(d));
  }

  // Products g * b with g of degree strictly between 0 and d (below_only) or
  // at most d, in generator then stored order.
  std::vector<Poly> products(int d, bool below_only) const {
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const int e = gens_[g].degree();
      if (e > d || (below_only && e == d)) continue;
      for (std::size_t b = 0; b < kept_[std::size_t(d - e)].size(); ++b) jobs.emplace_back(g, b);
    }
    std::vector<Poly> out(jobs.size(), Poly(p_));
    parallel_for(jobs.size(), [&](std::size_t k) {
      const auto [g, b] = jobs[k];
      out[k] = gens_[g] * kept_[std::size_t(d - gens_[g].degree())][b];
    });
    return out;
  }

  void insert_all(const DegreeBasis& db, EchelonBasis& e, std::vector<Poly>& kept,
                  const std::vector<Poly>& polys) const {
    for (const Poly& f : polys)
      if (e.insert(db.coordinates(f))) kept.push_back(f);
  }

  void push(std::vector<Poly> kept) { kept_.push_back(std::move(kept)); }

 private:
  const std::vector<Poly>& gens_;
  std::uint32_t p_;
  bool weight_zero_;
  std::vector<std::vector<Poly>> kept_;
};

}  // namespace

std::optional<std::vector<unsigned>> semigroup_factor(Monomial m, const LeadTermAlgebraBasis& basis) {
  FactorSearch search(basis);
  std::vector<unsigned> c(basis.size(), 0);
  for (;;) {
    const int k = search.step(m);
    if (k == -2) return c;
    if (k == -1) return std::nullopt;
    ++c[std::size_t(k)];
    m = m / basis.monomials()[std::size_t(k)];
  }
}

bool semigroup_member(Monomial m, const LeadTermAlgebraBasis& basis) {
  return semigroup_factor(m, basis).has_value();
}

std::vector<Poly> polys_of(const std::vector<GeneratorRecord>& records) {
  std::vector<Poly> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.poly);
  return out;
}

Poly subduct(const Poly& f, const std::vector<Poly>& gens) {
  for (const Poly& g : gens)
    if (g.is_zero()) throw std::invalid_argument("generator is zero");
  const LeadTermAlgebraBasis basis = LeadTermAlgebraBasis::of(gens);
  std::map<std::pair<std::size_t, unsigned>, Poly> powers;
  auto power = [&](std::size_t k, unsigned e) -> const Poly& {
    auto it = powers.find({k, e});
    if (it == powers.end()) it = powers.emplace(std::pair{k, e}, gens[k].pow(e)).first;
    return it->second;
  };
  Poly r = f;
  while (!r.is_zero()) {
    const auto c = semigroup_factor(r.lead_monomial(), basis);
    if (!c) break;
    Poly prod = Poly::constant(r.prime(), 1);
    for (std::size_t k = 0; k < c->size(); ++k)
      if ((*c)[k] > 0) prod *= power(k, (*c)[k]);
    r -= prod.scaled(r.lead_coefficient() * prod.lead_coefficient().inv());
  }
  return r;
}

Poly subduct(const Poly& f, const std::vector<GeneratorRecord>& gens) { return subduct(f, polys_of(gens)); }

std::vector<std::size_t> degreewise_dims(const std::vector<Poly>& gens, int d_max) {
  if (d_max < 0) return {};
  GradedSpan span(gens);
  std::vector<std::size_t> dims{1};
  for (int d = 1; d <= d_max; ++d) {
    const DegreeBasis db = span.basis(d);
    EchelonBasis e(span.prime(), db.size());
    std::vector<Poly> kept;
    span.insert_all(db, e, kept, span.products(d, false));
    dims.push_back(e.rank());
    span.push(std::move(kept));
  }
  return dims;
}

NoetherReport noether_analysis(const std::vector<std::string>& names, const std::vector<Poly>& gens,
                               const std::vector<std::size_t>& target, int d_max) {
  if (names.size() != gens.size()) throw std::invalid_argument("one name per generator is required");
  int top = 0;
  for (const Poly& g : gens) top = std::max(top, g.degree());
  if (d_max < top)
    throw std::invalid_argument("d_max = " + std::to_string(d_max) + " is below the largest generator degree " +
                                std::to_string(top));
  if (target.size() < std::size_t(d_max) + 1) throw std::invalid_argument("target dimensions end before d_max");

  GradedSpan span(gens);
  NoetherReport rep;
  rep.generates = target[0] == 1;
  rep.degrees.push_back({0, 1, target[0], 0, 0, {}, {}});
  for (int d = 1; d <= d_max; ++d) {
    const DegreeBasis db = span.basis(d);
    EchelonBasis e(span.prime(), db.size());
    std::vector<Poly> kept;
    span.insert_all(db, e, kept, span.products(d, true));

    DegreeReport row;
    row.degree = d;
    row.dim_decomposable = e.rank();
    row.dim_invariants = target[std::size_t(d)];
    row.new_generators_needed = row.dim_invariants > row.dim_decomposable ? row.dim_invariants - row.dim_decomposable : 0;

    std::vector<std::size_t> here;
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (gens[k].degree() == d) here.push_back(k);
    const EchelonBasis decomposable = e;
    for (std::size_t k : here) {
      row.generators.push_back(names[k]);
      EchelonBasis others = decomposable;
      for (std::size_t o : here)
        if (o != k) others.insert(db.coordinates(gens[o]));
      if (others.contains(db.coordinates(gens[k]))) row.redundant.push_back(names[k]);
    }
    std::vector<Poly> degree_d;
    for (std::size_t k : here) degree_d.push_back(gens[k]);
    span.insert_all(db, e, kept, degree_d);
    row.dim_algebra = e.rank();

    if (row.dim_algebra != row.dim_invariants) rep.generates = false;
    if (row.new_generators_needed > 0) rep.noether_number = d;
    rep.redundant.insert(rep.redundant.end(), row.redundant.begin(), row.redundant.end());
    rep.degrees.push_back(std::move(row));
    span.push(std::move(kept));
  }
  return rep;
}

NoetherReport noether_analysis(std::uint32_t p, int d_max) {
  const auto records = build_generating_set(p);
  std::vector<std::string> names;
  for (const auto& r : records) names.push_back(r.name);
  int top = 0;
  for (const auto& r : records) top = std::max(top, r.degree);
  if (d_max < top)
    throw std::invalid_argument("d_max = " + std::to_string(d_max) + " is below the largest generator degree " +
                                std::to_string(top));
  const PowerSeries brute = brute_series(p, d_max);
  std::vector<std::size_t> target;
  for (auto c : brute.coeffs) target.push_back(std::size_t(c));
  return noether_analysis(names, polys_of(records), target, d_max);
}

int noether_number(std::uint32_t p, int d_max) {
  const NoetherReport r = noether_analysis(p, d_max);
  if (!r.generates) throw std::runtime_error("the generating set does not span every degree up to d_max");
  return r.noether_number;
}

std::string to_text(const NoetherReport& r) {
  std::ostringstream os;
  os << "   d  algebra  invariants  new  generators\n";
  for (const auto& row : r.degrees) {
    os.width(4);
    os << row.degree;
    os.width(9);
    os << row.dim_algebra;
    os.width(12);
    os << row.dim_invariants;
    os.width(5);
    os << row.new_generators_needed << " ";
    for (std::size_t k = 0; k < row.generators.size(); ++k) {
      os << ' ' << row.generators[k];
      if (std::find(row.redundant.begin(), row.redundant.end(), row.generators[k]) != row.redundant.end())
        os << "(redundant)";
    }
    os << '\n';
  }
  os << "generates: " << (r.generates ? "yes" : "no") << "\nnoether number: " << r.noether_number << '\n';
  return os.str();
}

}  // namespace cubinv
