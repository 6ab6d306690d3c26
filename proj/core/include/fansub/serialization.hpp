#pragma once

#include <json.hpp>

#include "fansub/riemann.hpp"
#include "fansub/search.hpp"
#include "fansub/thresholds.hpp"

namespace fansub {

using nlohmann::json;

void to_json(json& j, const RiemannData& d);
void from_json(const json& j, RiemannData& d);

void to_json(json& j, const Wave& w);
void from_json(const json& j, Wave& w);

void to_json(json& j, const WaveFan& fan);

void to_json(json& j, const FanPartition& p);
void from_json(const json& j, FanPartition& p);

void to_json(json& j, const TracelessSym2& u);
void from_json(const json& j, TracelessSym2& u);

void to_json(json& j, const OuterState& s);
void from_json(const json& j, OuterState& s);

void to_json(json& j, const RegionState& s);
void from_json(const json& j, RegionState& s);

void to_json(json& j, const FanSubsolution& s);
void from_json(const json& j, FanSubsolution& s);

void to_json(json& j, const AnsatzPoint& p);
void from_json(const json& j, AnsatzPoint& p);

void to_json(json& j, const Certificate& c);
void from_json(const json& j, Certificate& c);

void to_json(json& j, const SearchDiagnostic& d);
void to_json(json& j, const SearchHit& h);
void to_json(json& j, const SearchResult& r);

void to_json(json& j, const FeasibilitySample& s);
void to_json(json& j, const ThresholdReport& r);

/// Formats a double with 17 significant digits ("%.17g").
std::string format_double(double x);

}  // namespace fansub
