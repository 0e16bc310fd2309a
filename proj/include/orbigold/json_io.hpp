#pragma once

// JSON serialization for the user-facing data: loop combinations, graded
// algebras with their operators, and full Gysin structures. Coefficients are
// carried as exact rational strings ("p" or "p/q"), never as floats, so a
// round trip is lossless. Every document carries "schema": 1.

#include "orbigold/graded_bv.hpp"
#include "orbigold/loop_module.hpp"

#include <json.hpp>

namespace orbigold::json_io {

nlohmann::json loop_to_json(const loops::LoopCombination& combination);
loops::LoopCombination loop_from_json(const nlohmann::json& doc);

nlohmann::json bv_to_json(const bv::GradedBVData& algebra);
bv::GradedBVData bv_from_json(const nlohmann::json& doc);

nlohmann::json gysin_to_json(const bv::GysinData& data);
bv::GysinData gysin_from_json(const nlohmann::json& doc);

}  // namespace orbigold::json_io
