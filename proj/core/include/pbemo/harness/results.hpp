#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pbemo/harness/campaign.hpp"
#include "pbemo/harness/config.hpp"
#include "pbemo/harness/stats.hpp"

namespace pbemo {

// Shortest round-trip decimal form (std::to_chars); "nan"/"inf" spelled out.
auto FormatDouble(double v) -> std::string;

// Values joined by ';'.
auto FormatVector(ObjectiveVector const& v) -> std::string;

auto RunCsv(RunTrace const& trace) -> std::string;
auto FinalCsv(RunTrace const& trace) -> std::string;
auto SummaryCsv(std::vector<SummaryRow> const& rows) -> std::string;
auto RanksCsv(std::vector<RankRow> const& rows) -> std::string;

// Writes runs/, final/, summary.csv, ranks.csv and manifest.json under
// out_dir, each file via a temporary name and rename. ranks.csv covers every
// (suite, checkpoint) whose design is complete. Returns the written paths
// relative to out_dir, manifest last. Throws std::runtime_error naming the
// path on I/O failure.
auto WriteResults(ExperimentConfig const& cfg, std::vector<RunTrace> const& traces,
                  std::filesystem::path const& out_dir) -> std::vector<std::string>;

// Reads runs/*.csv back into traces (records only; no final population).
auto ReadRunDirectory(std::filesystem::path const& dir) -> std::vector<RunTrace>;

} // namespace pbemo
