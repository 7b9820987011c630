#pragma once

#include <nlohmann/json.hpp>

#include "polyreg/oracle.hpp"
#include "polyreg/structure.hpp"

namespace polyreg {

/// `{"level": k}`, with null for ZeroFunction.
nlohmann::json to_json(const Level& level);

/// `{"I": "<quat>", "terms": [{"a": 2, "b": 0, "c": "1+2i"}]}`, terms ordered by (a+b, a).
nlohmann::json to_json(const SlicePoly& p);
/// Inverse of to_json; throws ParseError or InvalidArgument on malformed input.
SlicePoly slice_poly_from_json(const nlohmann::json& j);

/// Coefficient literals a_0..a_N.
nlohmann::json to_json(const SRPoly& p);

nlohmann::json to_json(const QbarDecomp& d);
nlohmann::json to_json(const SplitPair& s);

/// `{"global": {"level": 2}, "per_slice": [{"I": "...", "level": 0}], "paper_rho": [...],
/// "predicted_bound": 2, "bound_tight": true}`; the last two are omitted when unset.
nlohmann::json to_json(const IndexReport& r);

/// `{"suite": ..., "trials": ..., "failures": [{"instance", "expected", "actual"}], "notes": [...]}`
nlohmann::json to_json(const oracle::SuiteReport& r);

}  // namespace polyreg
