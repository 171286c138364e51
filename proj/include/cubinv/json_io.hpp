#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings used by the command-line tool.
 *
 * Monomial: [e3, e2, e1, e0]. Poly: [{"m": [e3, e2, e1, e0], "c": c}, ...] in
 * descending grevlex with 0 < c < p. Generator: the poly under "poly" with
 * name, family, j, m, i, degree and lead. Series: an integer array indexed by
 * degree.
 */

#include <json.hpp>

#include "cubinv/hilbert.hpp"
#include "cubinv/invariants.hpp"
#include "cubinv/poly.hpp"
#include "cubinv/sagbi.hpp"

namespace cubinv {

nlohmann::json to_json(Monomial m);
nlohmann::json to_json(const Poly& f);
nlohmann::json to_json(const GeneratorRecord& g);
nlohmann::json to_json(const PowerSeries& s);
nlohmann::json to_json(const NoetherReport& r);

/// Throws std::invalid_argument on malformed input.
Monomial monomial_from_json(const nlohmann::json& j);
/// Accepts terms in any order; coefficients are reduced mod p.
Poly poly_from_json(const nlohmann::json& j, std::uint32_t p);
PowerSeries series_from_json(const nlohmann::json& j);

}  // namespace cubinv
