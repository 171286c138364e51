#include "cubinv/json_io.hpp"

#include <stdexcept>

namespace cubinv {

using nlohmann::json;

json to_json(Monomial m) {
  const auto e = m.exponents();
  return json::array({e[0], e[1], e[2], e[3]});
}

json to_json(const Poly& f) {
  json out = json::array();
  for (const Term& t : f.terms()) out.push_back({{"m", to_json(t.mono)}, {"c", t.coeff}});
  return out;
}

json to_json(const GeneratorRecord& g) {
  return {{"name", g.name},     {"family", to_string(g.family)}, {"j", g.j},
          {"m", g.m},           {"i", g.i},                      {"degree", g.degree},
          {"lead", to_json(g.lead)}, {"poly", to_json(g.poly)}};
}

json to_json(const PowerSeries& s) { return s.coeffs; }

json to_json(const NoetherReport& r) {
  json rows = json::array();
  for (const auto& d : r.degrees)
    rows.push_back({{"d", d.degree},
                    {"dim_algebra", d.dim_algebra},
                    {"dim_invariants", d.dim_invariants},
                    {"dim_decomposable", d.dim_decomposable},
                    {"new_generators_needed", d.new_generators_needed},
                    {"generators", d.generators},
                    {"redundant", d.redundant}});
  return {{"degrees", rows},
          {"generates", r.generates},
          {"noether_number", r.noether_number},
          {"redundant", r.redundant}};
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("monomial must be an array of four exponents");
  std::array<unsigned, 4> e{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (!j[k].is_number_integer() || j[k].get<long long>() < 0)
      throw std::invalid_argument("exponents must be non-negative integers");
    e[k] = j[k].get<unsigned>();
  }
  return Monomial::from_exponents(e);
}

Poly poly_from_json(const json& j, std::uint32_t p) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("m") || !t.contains("c") || !t["c"].is_number_integer())
      throw std::invalid_argument("term must be an object with \"m\" and integer \"c\"");
    const long long c = t["c"].get<long long>() % static_cast<long long>(p);
    terms.push_back({monomial_from_json(t["m"]), std::uint32_t(c < 0 ? c + p : c)});
  }
  return Poly::from_terms(p, std::move(terms));
}

PowerSeries series_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("series must be an integer array");
  PowerSeries s;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw std::invalid_argument("series must be an integer array");
    s.coeffs.push_back(c.get<std::int64_t>());
  }
  return s;
}

}  // namespace cubinv
