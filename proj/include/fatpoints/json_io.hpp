#pragma once

#include <json.hpp>

#include "fatpoints/curves.hpp"
#include "fatpoints/mu_rank.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/resolution.hpp"

namespace fatpoints {

// JSON renderings with fixed key order, so output is byte-stable across runs.

// {"mults":[...],"alpha":A,"hilbert":[[t,h],...],
//  "generators":{"t":nu},"syzygies":{"t":s}}
[[nodiscard]] nlohmann::ordered_json render(const GradedResolution& res);

[[nodiscard]] nlohmann::ordered_json render(const DivisorClass& f);

[[nodiscard]] nlohmann::ordered_json render(const MuRankReport& rep, const DivisorClass& input);

[[nodiscard]] nlohmann::ordered_json render(const CurveClass& c);

[[nodiscard]] nlohmann::ordered_json render(const CompareLine& line);

}  // namespace fatpoints
