#include "cubinv/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "cubinv/parallel.hpp"

namespace cubinv {

namespace {

Poly term_sum(std::uint32_t p, std::initializer_list<std::pair<std::int64_t, Monomial>> terms) {
  std::vector<Term> t;
  for (const auto& [c, m] : terms) t.push_back({m, modp::reduce(c, p)});
  return Poly::from_terms(p, std::move(t));
}

Monomial a3_pow(unsigned e) { return Monomial::power(Var::a3, e); }

GeneratorRecord make_record(std::string name, Family fam, Poly f) {
  if (f.is_zero()) throw std::logic_error(name + " is zero");
  GeneratorRecord r;
  r.name = std::move(name);
  r.family = fam;
  r.lead = f.lead_monomial();
  r.degree = int(r.lead.degree());
  r.poly = std::move(f);
  return r;
}

std::string fam_name(int fam) { return "family " + std::to_string(fam); }

[[noreturn]] void out_of_range(const std::string& what, int j, std::uint32_t p) {
  throw std::out_of_range(what + " (got j = " + std::to_string(j) + ", p = " + std::to_string(p) + ")");
}

void require_index(bool ok, const std::string& what, int j, std::uint32_t p) {
  if (!ok) out_of_range(what, j, p);
}

/// tr_B^G of a B-invariant, after checking it is one.
Poly transfer_from_b(const Poly& f) {
  for (const auto& t : f.terms())
    if (t.mono.weight(f.prime()) != 0) throw std::logic_error("transfer_from_b: argument is not of weight zero");
  return transfer_b_to_g(f);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::named: return "named";
    case Family::fam1: return "fam1";
    case Family::fam2: return "fam2";
    case Family::fam3: return "fam3";
    case Family::fam4: return "fam4";
    case Family::h: return "h";
  }
  return "?";
}

unsigned delta_exponent(std::uint32_t p) {
  require_supported_prime(p);
  unsigned c = 1;
  while ((3 * c) % (p - 1) != 0) ++c;
  const unsigned expected = is_minus_one_mod3(p) ? p - 1 : (p - 1) / 3;
  if (c != expected) throw std::logic_error("delta exponent disagrees with the congruence case split");
  return c;
}

int family_m(int j, std::uint32_t p) { return 2 + (3 * j) / int(p - 1); }

const std::vector<std::string>& named_invariants() {
  static const std::vector<std::string> names{"D",     "L",   "K",      "N",     "xi",    "d",
                                              "e",     "delta", "Na0",  "etilde", "dtilde"};
  return names;
}

Poly norm_n(std::uint32_t p) { return orbit_product(Poly::variable(p, Var::a3), Subgroup::P); }

GeneratorRecord build_named(std::string_view name, std::uint32_t p) {
  require_supported_prime(p);
  const std::string n(name);
  const Monomial a3(1, 0, 0, 0), a2(0, 1, 0, 0), a1(0, 0, 1, 0), a0(0, 0, 0, 1);
  auto e_poly = [&] { return term_sum(p, {{2, a1.pow(3)}, {1, a3 * a0 * a0}, {-3, a2 * a1 * a0}}); };
  auto d_poly = [&] { return term_sum(p, {{1, a1 * a1}, {-1, a2 * a0}}); };
  if (n == "D")
    return make_record(n, Family::named,
                       term_sum(p, {{3, a2.pow(2) * a1.pow(2)},
                                    {-4, a3 * a1.pow(3)},
                                    {-4, a2.pow(3) * a0},
                                    {6, a3 * a2 * a1 * a0},
                                    {-1, a3.pow(2) * a0.pow(2)}}));
  if (n == "L")
    return make_record(n, Family::named,
                       term_sum(p, {{3, a2.pow(p) * a1},
                                    {-3, a2 * a1.pow(p)},
                                    {-1, a3.pow(p) * a0},
                                    {1, a3 * a0.pow(p)}}));
  if (n == "xi") return make_record(n, Family::named, term_sum(p, {{3, a2 * a2}, {-4, a3 * a1}}));
  if (n == "d") return make_record(n, Family::named, d_poly());
  if (n == "e") return make_record(n, Family::named, e_poly());
  if (n == "K") return make_record(n, Family::named, -transfer_g(Poly::monomial(p, a1.pow(p - 1))));
  if (n == "N") return make_record(n, Family::named, norm_n(p));
  if (n == "Na0") return make_record(n, Family::named, norm_n(p) * Poly::variable(p, Var::a0));
  if (n == "delta") return make_record(n, Family::named, transfer_from_b(norm_n(p).pow(delta_exponent(p))));
  if (n == "etilde") return make_record(n, Family::named, transfer_from_b(norm_n(p) * e_poly()));
  if (n == "dtilde") {
    if (!is_minus_one_mod3(p)) throw std::domain_error("dtilde is only defined for p = -1 mod 3");
    return make_record(n, Family::named, transfer_from_b(norm_n(p).pow((p + 1) / 3) * d_poly()));
  }
  throw std::invalid_argument("unknown invariant '" + n + "'");
}

Monomial predicted_named_lm(std::string_view name, std::uint32_t p) {
  const std::string n(name);
  if (n == "D") return {0, 2, 2, 0};
  if (n == "L") return {0, p, 1, 0};
  if (n == "xi") return {0, 2, 0, 0};
  if (n == "d") return {0, 0, 2, 0};
  if (n == "e") return {0, 0, 3, 0};
  if (n == "K") return {0, p - 1, 0, 0};
  if (n == "N") return {p, 0, 0, 0};
  if (n == "Na0") return {p, 0, 0, 1};
  if (n == "delta") return a3_pow(p * delta_exponent(p));
  if (n == "etilde") return {p, 0, 3, 0};
  if (n == "dtilde") {
    if (!is_minus_one_mod3(p)) throw std::domain_error("dtilde is only defined for p = -1 mod 3");
    return {p * (p + 1) / 3, 0, 2, 0};
  }
  throw std::invalid_argument("unknown invariant '" + n + "'");
}

void check_family_index(int fam, int j, std::uint32_t p) {
  require_supported_prime(p);
  const int P = int(p);
  const bool minus = is_minus_one_mod3(p);
  const std::string f = fam_name(fam);
  switch (fam) {
    case 1:
      require_index(j >= 1, f + " requires j >= 1", j, p);
      if (minus)
        require_index(j <= P - 2, f + " requires j <= p-2", j, p);
      else
        require_index(j <= (P - 4) / 3, f + " requires j <= (p-4)/3", j, p);
      return;
    case 2:
      require_index(j >= 1, f + " requires j >= 1", j, p);
      if (minus)
        require_index(j <= (P - 2) / 3, f + " requires j <= (p-2)/3", j, p);
      else
        require_index(j <= (P - 4) / 3, f + " requires j <= (p-4)/3", j, p);
      return;
    case 3:
      require_index(j >= 2, f + " requires j >= 2", j, p);
      if (minus) {
        require_index(j <= P - 2, f + " requires j <= p-2", j, p);
        require_index(j != (P + 1) / 3, f + " excludes j = (p+1)/3", j, p);
        require_index(j != (2 * P - 1) / 3, f + " excludes j = (2p-1)/3", j, p);
      } else {
        require_index(j <= (P - 4) / 3, f + " requires j <= (p-4)/3", j, p);
      }
      return;
    case 4:
      if (!minus) throw std::domain_error("family 4 is only defined for p = -1 mod 3");
      require_index(j >= (2 * P - 1) / 3, f + " requires j >= (2p-1)/3", j, p);
      require_index(j <= P - 2, f + " requires j <= p-2", j, p);
      return;
    default:
      throw std::invalid_argument("unknown transfer family " + std::to_string(fam));
  }
}

std::vector<int> family_range(int fam, std::uint32_t p) {
  if (fam < 1 || fam > 4) throw std::invalid_argument("unknown transfer family " + std::to_string(fam));
  std::vector<int> js;
  if (fam == 4 && !is_minus_one_mod3(p)) return js;
  for (int j = 1; j <= int(p); ++j) {
    try {
      check_family_index(fam, j, p);
      js.push_back(j);
    } catch (const std::out_of_range&) {
    }
  }
  return js;
}

bool family3_lemma_excludes(int j, std::uint32_t p) {
  const int num = (family_m(j, p) - 2) * int(p - 1);
  return j == (num + 2) / 3;
}

std::string describe_ranges(std::uint32_t p) {
  std::ostringstream os;
  for (int fam = 1; fam <= 4; ++fam) {
    os << "fam" << fam << ":";
    const auto js = family_range(fam, p);
    if (js.empty()) os << " (empty)";
    for (int j : js) os << " " << j;
    os << "\n";
  }
  return os.str();
}

Monomial family_seed(int fam, int j, std::uint32_t p) {
  check_family_index(fam, j, p);
  const int P = int(p);
  const int m = family_m(j, p);
  switch (fam) {
    case 1: return {unsigned(P - 1), unsigned((m - 1) * (P - 1) - 3 * j), 0, 0};
    case 2: return a3_pow(unsigned(P - 1 - j));
    case 3: return {unsigned(P - 2), unsigned((m - 1) * (P - 1) + 3 - 3 * j), 0, 0};
    default: return {unsigned((5 * P - 7 - 3 * j) / 3), 2, 0, 0};
  }
}

LmSymbol family_symbol(int fam) {
  switch (fam) {
    case 1: return LmSymbol::gamma;
    case 2: return LmSymbol::beta;
    case 3: return LmSymbol::Delta;
    case 4: return LmSymbol::phi;
  }
  throw std::invalid_argument("unknown transfer family " + std::to_string(fam));
}

GeneratorRecord build_transfer_family(int fam, int j, std::uint32_t p) {
  const Monomial seed = family_seed(fam, j, p);
  const Poly inner = norm_n(p).pow(unsigned(j)) * transfer_p(Poly::monomial(p, seed));
  GeneratorRecord r = make_record("fam" + std::to_string(fam) + "_j" + std::to_string(j),
                                  Family(int(Family::named) + fam), transfer_from_b(inner));
  r.j = j;
  if (fam == 1 || fam == 3) r.m = family_m(j, p);
  return r;
}

std::vector<GeneratorRecord> build_generating_set(std::uint32_t p) {
  require_supported_prime(p);
  std::vector<std::string> names{"D", "K", "L", "delta", "Na0", "etilde"};
  if (is_minus_one_mod3(p)) names.push_back("dtilde");
  std::vector<std::pair<int, int>> fams;
  for (int fam = 1; fam <= 4; ++fam)
    for (int j : family_range(fam, p)) fams.emplace_back(fam, j);

  std::vector<GeneratorRecord> out(names.size() + fams.size());
  parallel_for(out.size(), [&](std::size_t k) {
    out[k] = k < names.size() ? build_named(names[k], p)
                              : build_transfer_family(fams[k - names.size()].first, fams[k - names.size()].second, p);
    if (!verify_invariance(out[k].poly)) throw std::logic_error(out[k].name + " is not invariant");
  });
  return out;
}

std::vector<GeneratorRecord> build_h_sequence(int i_max, std::uint32_t p) {
  if (i_max < 1) throw std::out_of_range("h_i requires i >= 1");
  const Poly K = build_named("K", p).poly;
  const Poly D = build_named("D", p).poly;
  const Poly et = build_named("etilde", p).poly;
  const Poly d3 = D.scaled(3).pow((p - 1) / 2);
  const Poly t = transfer_from_b(norm_n(p) * transfer_p(Poly::monomial(p, a3_pow(p - 2))));

  std::vector<GeneratorRecord> out;
  Poly prev2 = et;
  Poly prev = K * et - D * t;
  for (int i = 1; i <= i_max; ++i) {
    if (i > 1) {
      Poly next = K * prev - d3 * prev2;
      prev2 = std::move(prev);
      prev = std::move(next);
    }
    GeneratorRecord r = make_record("h" + std::to_string(i), Family::h, prev);
    r.i = i;
    out.push_back(std::move(r));
  }
  return out;
}

GeneratorRecord build_h(int i, std::uint32_t p) { return build_h_sequence(i, p).back(); }

std::string to_string(LmSymbol s) {
  switch (s) {
    case LmSymbol::gamma: return "gamma";
    case LmSymbol::beta: return "beta";
    case LmSymbol::Delta: return "Delta";
    case LmSymbol::phi: return "phi";
    case LmSymbol::alpha: return "alpha";
    case LmSymbol::epsilon: return "epsilon";
    case LmSymbol::lambda: return "lambda";
    case LmSymbol::mu: return "mu";
    case LmSymbol::eta: return "eta";
    case LmSymbol::n: return "n";
  }
  return "?";
}

std::optional<LmSymbol> parse_lm_symbol(std::string_view s) {
  for (LmSymbol x : {LmSymbol::gamma, LmSymbol::beta, LmSymbol::Delta, LmSymbol::phi, LmSymbol::alpha,
                     LmSymbol::epsilon, LmSymbol::lambda, LmSymbol::mu, LmSymbol::eta, LmSymbol::n})
    if (to_string(x) == s) return x;
  return std::nullopt;
}

Monomial predicted_lm(LmSymbol s, int i, int j, std::uint32_t p) {
  require_supported_prime(p);
  const int P = int(p);
  const bool minus = is_minus_one_mod3(p);
  auto mono = [](int e3, int e2, int e1) {
    return Monomial(unsigned(e3), unsigned(e2), unsigned(e1), 0);
  };
  auto need_minus = [&](const char* what) {
    if (!minus) throw std::out_of_range(std::string(what) + " is only defined for p = -1 mod 3");
  };
  auto need_i = [&] {
    if (i < 0) throw std::out_of_range("i must be >= 0 (got i = " + std::to_string(i) + ")");
  };
  auto alpha = [&]() -> Monomial {
    need_i();
    const int top = minus ? P - 1 : (P - 1) / 3;
    require_index(j >= 1 && j <= top, minus ? "alpha/epsilon require 1 <= j <= p-1" : "alpha/epsilon require 1 <= j <= (p-1)/3", j, p);
    const int shift = minus ? (3 * j) / (P + 1) : 0;
    return mono(P * j, 0, 3 * j + (P - 1) * (i - shift));
  };
  switch (s) {
    case LmSymbol::gamma:
      check_family_index(1, j, p);
      return mono(P * j, family_m(j, p) * (P - 1) - 3 * j, 0);
    case LmSymbol::beta:
      check_family_index(2, j, p);
      return mono(P * j, P - 1 - 2 * j, j);
    case LmSymbol::Delta:
      check_family_index(3, j, p);
      return mono(P * j, family_m(j, p) * (P - 1) + 1 - 3 * j, 1);
    case LmSymbol::phi:
      check_family_index(4, j, p);
      return mono(P * j, (7 * P - 5) / 3 - 2 * j, j - (2 * P - 4) / 3);
    case LmSymbol::alpha: return alpha();
    case LmSymbol::epsilon: return alpha() * Monomial(0, p, 1, 0);
    case LmSymbol::lambda: need_minus("lambda"); return mono(P * (2 * P - 1) / 3, P, 2);
    case LmSymbol::mu: need_minus("mu"); return mono(P * (P + 1) / 3, 2 * P - 3, 1);
    case LmSymbol::eta:
      need_minus("eta");
      require_index(j >= (P + 4) / 3 && j <= (2 * P - 1) / 3, "eta requires (p+4)/3 <= j <= (2p-1)/3", j, p);
      return mono(P * j, (5 * P - 1) / 3 - 2 * j, j - (P - 5) / 3);
    case LmSymbol::n: need_i(); return mono(P, 0, 3 + i * (P - 1));
  }
  throw std::invalid_argument("unknown symbol");
}

bool verify_invariance(const Poly& f) {
  const std::uint32_t p = f.prime();
  return is_fixed_by(f, SL2Element::sigma(p)) && is_fixed_by(f, SL2Element::sigma_t(p));
}

}  // namespace cubinv
