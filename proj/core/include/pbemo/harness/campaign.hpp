#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pbemo/algorithms.hpp"
#include "pbemo/harness/config.hpp"
#include "pbemo/indicators.hpp"
#include "pbemo/normalization.hpp"
#include "pbemo/problems.hpp"

namespace pbemo {

struct RunIdentity {
    std::string problem; // "sdtlz2"
    std::size_t m = 0;
    std::string algorithm; // label
    std::string normalization;
    std::size_t run = 0;
    std::uint64_t seed = 0;

    [[nodiscard]] auto ProblemKey() const -> std::string { return problem + "-m" + std::to_string(m); }
    [[nodiscard]] auto Treatment() const -> std::string { return algorithm + "-" + normalization; }
    // "<problem>-m<m>__<alg>-<norm>__run<k>"
    [[nodiscard]] auto FileStem() const -> std::string;
};

struct CheckpointRecord {
    std::size_t checkpoint = 0;
    std::size_t evaluations = 0;
    double igd_plus_c = 0.0;
    double e_ideal = 0.0;
    double e_nadir = 0.0;
    double ore = 0.0;
    ObjectiveVector z_lb;
    ObjectiveVector z_ub;
};

struct RunTrace {
    RunIdentity id;
    std::vector<CheckpointRecord> records;
    std::vector<ObjectiveVector> final_objectives;
    std::string error; // empty on success

    [[nodiscard]] auto Ok() const -> bool { return error.empty(); }
};

// Everything an individual run needs about its problem, computed once.
struct ProblemContext {
    Problem problem;
    ObjectiveVector reference_point;
    TrueScaler scaler;
    RoiReferenceSet roi;
};

auto MakeProblemContext(ProblemSpec const& spec, ExperimentConfig const& cfg) -> ProblemContext;

// Runs one (problem, algorithm, normalization, seed) cell, recording at the
// first generation boundary at or after each checkpoint.
auto ExecuteRun(ProblemContext const& ctx, AlgorithmEntry const& alg, NormalizationKind normalization,
                std::size_t run, std::uint64_t seed, std::vector<std::size_t> const& checkpoints, std::size_t budget)
    -> RunTrace;

// Seed of run k: shared by every treatment so comparisons use common random numbers.
auto RunSeed(std::uint64_t base, std::size_t run) -> std::uint64_t;

// Worker count from PBEMO_WORKERS, else 1.
auto DefaultWorkerCount() -> std::size_t;

// All cells of the design, in canonical order (problem, algorithm,
// normalization, run). Per-run failures are captured in RunTrace::error.
auto ExecuteCampaign(ExperimentConfig const& cfg, std::size_t workers,
                     std::function<void(RunTrace const&)> const& on_done = {}) -> std::vector<RunTrace>;

} // namespace pbemo
