#include "cubinv/checks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cubinv/grobner.hpp"
#include "cubinv/hilbert.hpp"
#include "cubinv/invariants.hpp"

namespace cubinv {

namespace {

const std::vector<GeneratorRecord>& generating_set(std::uint32_t p) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<GeneratorRecord>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, build_generating_set(p)).first;
  return it->second;
}

std::string str(Monomial m) { return m.to_string(); }

Check passed(std::string claim, std::string detail) { return {std::move(claim), true, std::move(detail)}; }
Check failed(std::string claim, std::string detail) { return {std::move(claim), false, std::move(detail)}; }

std::vector<Poly> hsop_elements(std::uint32_t p) {
  std::vector<Poly> out;
  for (const char* n : {"D", "K", "Na0", "delta"}) out.push_back(build_named(n, p).poly);
  return out;
}

std::string first_mismatch(const PowerSeries& a, const PowerSeries& b, const char* an, const char* bn) {
  const auto d = first_difference(a, b);
  if (!d) return {};
  std::ostringstream os;
  os << "degree " << *d << ": " << an << " " << a[std::size_t(*d)] << ", " << bn << " " << b[std::size_t(*d)];
  return os.str();
}

std::string claim_at(const std::string& what, std::uint32_t p) { return what + " (p = " + std::to_string(p) + ")"; }

}  // namespace

Check check_invariance(std::uint32_t p) {
  const std::string claim = claim_at("every element of the generating set is SL_2-invariant", p);
  try {
    const auto& gens = generating_set(p);
    for (const auto& g : gens)
      if (!verify_invariance(g.poly)) return failed(claim, g.name + " is not fixed by sigma and sigma^T");
    return passed(claim, std::to_string(gens.size()) + " generators fixed by sigma and sigma^T");
  } catch (const std::logic_error& e) {
    return failed(claim, e.what());
  }
}

Check check_named_leads(std::uint32_t p) {
  const std::string claim = claim_at("named invariants have the predicted lead monomials", p);
  std::size_t n = 0;
  for (const auto& g : generating_set(p)) {
    if (g.family != Family::named) continue;
    const Monomial want = predicted_named_lm(g.name, p);
    if (g.lead != want) return failed(claim, g.name + ": lead " + str(g.lead) + ", predicted " + str(want));
    ++n;
  }
  return passed(claim, std::to_string(n) + " lead monomials match");
}

Check check_family_leads(std::uint32_t p) {
  const std::string claim = claim_at("transfer families have lead monomials gamma_j, beta_j, Delta_j, phi_j", p);
  std::size_t n = 0;
  for (const auto& g : generating_set(p)) {
    int fam = 0;
    switch (g.family) {
      case Family::fam1: fam = 1; break;
      case Family::fam2: fam = 2; break;
      case Family::fam3: fam = 3; break;
      case Family::fam4: fam = 4; break;
      default: continue;
    }
    const Monomial want = predicted_lm(family_symbol(fam), 0, g.j, p);
    if (g.lead != want) return failed(claim, g.name + ": lead " + str(g.lead) + ", predicted " + str(want));
    ++n;
  }
  return passed(claim, std::to_string(n) + " family members match; ranges " + [&] {
    std::string r = describe_ranges(p);
    std::replace(r.begin(), r.end(), '\n', ';');
    return r;
  }());
}

Check check_k_identities(std::uint32_t p) {
  const std::string claim = claim_at("K = -tr^P(a3^(p-1)) - a0^(p-1) and K(a0=0) = (3 xi)^((p-1)/2) + a1^(p-1)", p);
  const Poly K = build_named("K", p).poly;
  const Poly a0p = Poly::monomial(p, Monomial(0, 0, 0, p - 1));
  const Poly lhs = -transfer_p(Poly::monomial(p, Monomial(p - 1, 0, 0, 0))) - a0p;
  if (K != lhs) return failed(claim, "K - (-tr^P(a3^(p-1)) - a0^(p-1)) = " + (K - lhs).to_string());
  const Poly xi3 = build_named("xi", p).poly.scaled(3);
  const Poly restricted = xi3.pow((p - 1) / 2) + Poly::monomial(p, Monomial(0, 0, p - 1, 0));
  const Poly K0 = set_var_zero(K, Var::a0);
  if (K0 != restricted) return failed(claim, "difference at a0 = 0: " + (K0 - restricted).to_string());
  return passed(claim, "both identities hold exactly");
}

Check check_trace_identity(std::uint32_t p) {
  const std::string claim = claim_at("tr^P(a3^(p-2)) at a0 = 0 equals 6 a1 (3 xi)^((p-3)/2)", p);
  const Poly t = set_var_zero(transfer_p(Poly::monomial(p, Monomial(p - 2, 0, 0, 0))), Var::a0);
  const Poly want = (Poly::variable(p, Var::a1) * build_named("xi", p).poly.scaled(3).pow((p - 3) / 2)).scaled(6);
  if (t != want) return failed(claim, "difference: " + (t - want).to_string());
  return passed(claim, "identity holds exactly");
}

Check check_family3_exclusion(std::uint32_t p) {
  const std::string claim = claim_at("family 3 range omits exactly the j excluded by the lead-monomial rule", p);
  const int top = is_minus_one_mod3(p) ? int(p) - 2 : (int(p) - 4) / 3;
  const auto range = family_range(3, p);
  for (int j = 2; j <= top; ++j) {
    const bool kept = std::find(range.begin(), range.end(), j) != range.end();
    if (kept == family3_lemma_excludes(j, p))
      return failed(claim, "j = " + std::to_string(j) + (kept ? " is kept but excluded" : " is dropped but allowed"));
  }
  if (top < 2) return passed(claim, "no j to check");
  return passed(claim, "checked j = 2.." + std::to_string(top));
}

Check check_tete_leads(std::uint32_t p, int i_max) {
  const std::string claim = claim_at("LT(h_i) = 2 a3^p a1^(p+2+(i-1)(p-1)) with h_i invariant", p);
  const auto hs = build_h_sequence(i_max, p);
  for (const auto& h : hs) {
    const Monomial want(p, 0, p + 2 + unsigned(h.i - 1) * (p - 1), 0);
    const Term lt = h.poly.lead_term();
    if (lt.mono != want || lt.coeff != 2)
      return failed(claim, h.name + ": lead term " + std::to_string(lt.coeff) + "*" + str(lt.mono) + ", predicted 2*" +
                              str(want));
    if (!verify_invariance(h.poly)) return failed(claim, h.name + " is not invariant");
  }
  return passed(claim, std::to_string(hs.size()) + " lead terms match");
}

Check check_hsop(std::uint32_t p) {
  const std::string claim = claim_at("D, K, N a0, delta generate a zero-dimensional ideal", p);
  const IdealBasis b = buchberger(hsop_elements(p));
  std::string pure;
  for (const Poly& f : b.polys) {
    const Monomial m = f.lead_monomial();
    for (Var v : kAllVars)
      if (m.exponent(v) == m.degree()) pure += " " + str(m);
  }
  if (!is_zero_dimensional(b)) return failed(claim, "pure-power leads:" + (pure.empty() ? std::string(" none") : pure));
  return passed(claim, std::to_string(b.polys.size()) + " basis elements; pure-power leads:" + pure);
}

Check check_hsop_quotient(std::uint32_t p) {
  const std::string claim = claim_at("the quotient by D, K, N a0, delta has dimension the product of their degrees", p);
  const auto gens = hsop_elements(p);
  std::size_t product = 1;
  int top = 0;
  for (const Poly& g : gens) {
    product *= std::size_t(g.degree());
    top += g.degree();
  }
  const IdealBasis b = buchberger(gens);
  if (!is_zero_dimensional(b)) return failed(claim, "the ideal is not zero-dimensional");
  std::size_t total = 0;
  for (auto c : standard_monomial_counts(b, top)) total += c;
  if (total != product)
    return failed(claim, "standard monomials " + std::to_string(total) + ", product " + std::to_string(product));
  return passed(claim, "dimension " + std::to_string(total));
}

Check check_indecomposable(std::uint32_t p, int i_max) {
  const std::string claim = claim_at("LM(h_i) is indecomposable over lm(C) and the lower LM(h_k)", p);
  const auto& gens = generating_set(p);
  const auto hs = build_h_sequence(i_max, p);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    std::vector<Monomial> basis;
    for (const auto& g : gens) basis.push_back(g.lead);
    for (std::size_t k = 0; k < hs.size(); ++k)
      if (k != i && hs[k].degree <= hs[i].degree) basis.push_back(hs[k].lead);
    if (const auto c = semigroup_factor(hs[i].lead, LeadTermAlgebraBasis(basis))) {
      std::string factors;
      for (std::size_t k = 0; k < c->size(); ++k)
        if ((*c)[k] > 0) factors += " " + str(basis[k]) + "^" + std::to_string((*c)[k]);
      return failed(claim, hs[i].name + " lead " + str(hs[i].lead) + " =" + factors);
    }
  }
  return passed(claim, std::to_string(hs.size()) + " lead monomials indecomposable");
}

Check check_noether(std::uint32_t p, int d_max, NoetherReport* out) {
  const std::string claim = claim_at("the generating set is minimal and its top degree is the Noether number", p);
  const NoetherReport r = noether_analysis(p, d_max);
  if (out) *out = r;
  int top = 0;
  for (const auto& g : generating_set(p)) top = std::max(top, g.degree);
  if (!r.generates) {
    for (const auto& row : r.degrees)
      if (row.dim_algebra != row.dim_invariants)
        return failed(claim, "degree " + std::to_string(row.degree) + ": algebra " + std::to_string(row.dim_algebra) +
                                 ", invariants " + std::to_string(row.dim_invariants));
  }
  if (!r.redundant.empty()) return failed(claim, "redundant: " + r.redundant.front());
  if (r.noether_number != top)
    return failed(claim, "Noether number " + std::to_string(r.noether_number) + ", largest generator degree " +
                             std::to_string(top));
  return passed(claim, "Noether number " + std::to_string(r.noether_number) + " (checked through degree " +
                           std::to_string(d_max) + ")");
}

Check check_brute_vs_closed(std::uint32_t p, int d_max) {
  const std::string claim = claim_at("graded invariant dimensions equal the closed-form Hilbert series", p);
  const PowerSeries brute = brute_series(p, d_max);
  const PowerSeries closed = expand(closed_form(p), d_max);
  const std::string diff = first_mismatch(brute, closed, "brute", "closed form");
  if (!diff.empty()) return failed(claim, diff);
  return passed(claim, "agree through degree " + std::to_string(d_max));
}

Check check_cones(std::uint32_t p, int d_max) {
  const std::string claim = claim_at("per-j cone counts equal the per-j series and sum to the Hilbert series", p);
  std::string notes;
  for (int j = 0; j <= cone_max_j(p); ++j) {
    const PowerSeries count = cone_count(p, j, d_max);
    const PowerSeries resolved = cone_series(p, j, d_max, ConeForm::resolved);
    const std::string diff = first_mismatch(count, resolved, "count", "series");
    if (!diff.empty()) return failed(claim, "j = " + std::to_string(j) + ", " + diff);
    const std::string printed = first_mismatch(count, cone_series(p, j, d_max, ConeForm::printed), "count", "printed");
    if (!printed.empty()) notes += "; printed display at j = " + std::to_string(j) + " differs, " + printed;
  }
  const PowerSeries closed = expand(closed_form(p), d_max);
  for (ConeSource src : {ConeSource::closed_forms, ConeSource::counts}) {
    const std::string diff = first_mismatch(assemble_total(p, d_max, src), closed, "assembled", "closed form");
    if (!diff.empty()) return failed(claim, diff);
  }
  return passed(claim, "j = 0.." + std::to_string(cone_max_j(p)) + " agree through degree " + std::to_string(d_max) +
                           notes);
}

namespace {

int default_dmax(std::uint32_t p) {
  if (p == 5) return 24;
  if (p == 7) return 20;
  return 2 * int(p) + 2;
}

int noether_dmax(std::uint32_t p) {
  int top = 0;
  for (const auto& g : generating_set(p)) top = std::max(top, g.degree);
  return top + 2;
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"lemmas",
       "invariance of the generating set, lead monomials of the named invariants and transfer families, the K and "
       "trace identities, and the family 3 exclusions",
       [](std::uint32_t p, const SuiteOptions&) {
         return std::vector<Check>{check_invariance(p),   check_named_leads(p),    check_family_leads(p),
                                   check_k_identities(p), check_trace_identity(p), check_family3_exclusion(p)};
       }},
      {"hsop", "D, K, N a0, delta form a homogeneous system of parameters",
       [](std::uint32_t p, const SuiteOptions&) {
         return std::vector<Check>{check_hsop(p), check_hsop_quotient(p)};
       }},
      {"tete", "lead terms of the tete-a-tete sequence h_1..h_{i-max}",
       [](std::uint32_t p, const SuiteOptions& o) { return std::vector<Check>{check_tete_leads(p, o.i_max)}; }},
      {"noether", "degreewise generation and minimality of the generating set; reports the Noether number",
       [](std::uint32_t p, const SuiteOptions& o) {
         return std::vector<Check>{check_noether(p, o.d_max.value_or(noether_dmax(p)))};
       }},
      {"sagbi", "LM(h_i) is indecomposable in the lead-term algebra, so no finite SAGBI basis exists",
       [](std::uint32_t p, const SuiteOptions& o) { return std::vector<Check>{check_indecomposable(p, o.i_max)}; }},
      {"hilbert", "brute-force invariant dimensions, the closed-form Hilbert series and the per-j cone counts agree",
       [](std::uint32_t p, const SuiteOptions& o) {
         const int d = o.d_max.value_or(default_dmax(p));
         return std::vector<Check>{check_brute_vs_closed(p, d), check_cones(p, std::max(d, 40))};
       }},
  };
  return all;
}

const Suite* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace cubinv
