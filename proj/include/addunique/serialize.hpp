#ifndef ADDUNIQUE_SERIALIZE_HPP
#define ADDUNIQUE_SERIALIZE_HPP

#include <json.hpp>

#include "addunique/engine.hpp"
#include "addunique/multfunc.hpp"

namespace addunique {

// Integers that can grow with the inputs are written as decimal strings.
using Json = nlohmann::ordered_json;

/// {"atoms": [{"p": 2, "e": 1, "num": "2", "den": "1"}, ...]}
Json to_json(const PartialMultFn& f);
/// Inverse of to_json; throws std::invalid_argument on malformed input or a
/// repeated atom with differing values.
PartialMultFn multfn_from_json(const Json& j);

Json to_json(const Identity& id);
Json to_json(const SeedSolution& s);
Json to_json(const CertStep& step);

/// duration_ms is emitted only with include_timing, so that repeated runs
/// stay byte-identical by default.
Json to_json(const CertificationReport& report, bool include_timing = false);

}  // namespace addunique

#endif  // ADDUNIQUE_SERIALIZE_HPP
