#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pbemo/algorithms.hpp"
#include "pbemo/normalization.hpp"

namespace pbemo {

struct ProblemSpec {
    std::string name; // "dtlz2"
    std::size_t m = 2;

    [[nodiscard]] auto Key() const -> std::string { return name + "-m" + std::to_string(m); }
};

// An algorithm entry. `label` names the treatment in output files and
// defaults to the algorithm name.
struct AlgorithmEntry {
    std::string label;
    AlgorithmConfig config;
};

enum class Aggregate { Mean, Median };
enum class ReferenceSetting { Balanced, Extreme };

struct ExperimentConfig {
    std::vector<ProblemSpec> problems;
    std::vector<AlgorithmEntry> algorithms;
    std::vector<NormalizationKind> normalizations{NormalizationKind::PP, NormalizationKind::BP,
                                                  NormalizationKind::BA, NormalizationKind::NO};
    std::size_t runs = 31;
    std::size_t budget = 50000;
    std::vector<std::size_t> checkpoints;
    std::map<std::string, ObjectiveVector> reference_points; // problem key -> z, overrides the bundled table
    ReferenceSetting reference_setting = ReferenceSetting::Balanced;
    double roi_radius = 0.1;
    std::size_t pf_samples = 10000;
    std::uint64_t seed = 1;
    Aggregate aggregate = Aggregate::Mean;
};

// 1000, 3000, 5000, 8000, 10000, 15000, then every 5000, capped at the budget.
auto DefaultCheckpoints(std::size_t budget) -> std::vector<std::size_t>;

// Parses and validates a JSON config. Unknown keys and invalid values raise
// ConfigError naming the offending field path.
auto ParseConfig(std::string_view json_text) -> ExperimentConfig;
auto LoadConfig(std::filesystem::path const& path) -> ExperimentConfig;

// Canonical JSON of a parsed config (all defaults spelled out).
auto CanonicalConfigJson(ExperimentConfig const& cfg) -> std::string;

// 64-bit FNV-1a.
auto Fnv1a64(std::string_view data) -> std::uint64_t;

void Validate(ExperimentConfig const& cfg);

auto ToString(Aggregate a) -> std::string;
auto ToString(ReferenceSetting s) -> std::string;

} // namespace pbemo
