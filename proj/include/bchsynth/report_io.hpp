// Rendering of detection and sweep reports as CSV, JSON and human-readable
// text. All renderings are byte-deterministic for identical inputs.
#pragma once

#include <string>

#include "bchsynth/detector.hpp"

namespace bchsynth {

enum class ReportFormat { Human, Json, Csv };

ReportFormat parse_report_format(std::string_view name);   // "human" | "json" | "csv"

std::string report_csv(const DetectionReport& report, std::uint32_t seed);
std::string report_json(const DetectionReport& report, const DetectorConfig& cfg);
std::string report_human(const DetectionReport& report);

std::string sweep_csv(const SweepReport& report, std::uint32_t seed);
std::string sweep_json(const SweepReport& report, const DetectorConfig& cfg);
std::string sweep_human(const SweepReport& report);

}  // namespace bchsynth
