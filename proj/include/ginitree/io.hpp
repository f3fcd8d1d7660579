#pragma once
#include <string>

#include <json.hpp>

#include "ginitree/experiments.hpp"

namespace ginitree {

// JSON round-trips losslessly (doubles at full precision); CSV prints
// numbers to 9 significant digits with '.' decimals, no locale.

void to_json(nlohmann::json& j, const EstimateRecord& r);
void from_json(const nlohmann::json& j, EstimateRecord& r);
void to_json(nlohmann::json& j, const DualityReport& r);
void from_json(const nlohmann::json& j, DualityReport& r);

std::string csv_estimate_header();
std::string csv_estimate_row(const EstimateRecord& r);
std::string csv_sweep_header();
std::string csv_sweep_row(const SweepRow& row);

std::string format_sig9(double v);

}  // namespace ginitree
