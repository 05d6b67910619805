#pragma once

#include <json.hpp>

#include "rtl/constructions.hpp"
#include "rtl/counting.hpp"
#include "rtl/harness.hpp"
#include "rtl/number_theory.hpp"

namespace rtl {

// JSON views of the library's result types, shared by the CLI and tests.
nlohmann::json to_json(const ConstructionReport& r);  // the sidecar; graph omitted
nlohmann::json to_json(const CycleInstance& c);
nlohmann::json to_json(const Pattern& p);
nlohmann::json to_json(const ExponentFit& f);
nlohmann::json to_json(const P2Report& r);
nlohmann::json to_json(const ExtremalRecord& r);
nlohmann::json to_json(const BkSet& b);
nlohmann::json edges_json(const ColoredGraph& g);  // [[u, v, c], ...]

}  // namespace rtl
