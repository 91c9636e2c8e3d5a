#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbemo/core.hpp"
#include "pbemo/normalization.hpp"
#include "pbemo/problems.hpp"
#include "pbemo/variation.hpp"
#include "pbemo/weights.hpp"

namespace pbemo {

enum class AlgorithmKind { Nsga2, Rnsga2, R2nsga2, MoeadNums };

auto ParseAlgorithmKind(std::string_view s) -> AlgorithmKind; // "nsga2", "rnsga2", "r2nsga2", "moead-nums"
auto ToString(AlgorithmKind kind) -> std::string;

struct AlgorithmConfig {
    AlgorithmKind kind = AlgorithmKind::Rnsga2;
    std::size_t mu = 100;
    ObjectiveVector reference_point;  // z, raw objective units
    ObjectiveVector weights_w;        // importance weights of d^R; empty means 1/m each
    double epsilon_clear = 0.001;
    double delta = 0.3;
    double tau = 0.25;
    double rho = 1e-6;
    std::size_t neighborhood_t = 20;
    std::size_t max_replace = 2;
    double neighborhood_prob = 0.9; // MOEA/D mating restricted to the neighborhood
    GaOperatorConfig ga;
    DeOperatorConfig de;
};

// Throws ConfigError if the config cannot run with m objectives.
void Validate(AlgorithmConfig const& cfg, std::size_t m);

// sqrt(sum w_i ((f_i - z_i) / (z_ub_i - z_lb_i))^2), denominators floored at kEpsDen.
auto WeightedDistanceDR(std::span<double const> f, std::span<double const> z, std::span<double const> w,
                        std::span<double const> z_lb, std::span<double const> z_ub) -> double;

// max_i w_i (f~_i - z~_i) + rho sum_i (f~_i - z~_i), where ~ is normalization by (z_lb, z_ub).
auto Aasf(std::span<double const> f, std::span<double const> z, std::span<double const> w, double rho,
          std::span<double const> z_lb, std::span<double const> z_ub) -> double;

// R-NSGA-II survival on P u Q. Fronts come from Pareto sorting of raw
// objectives. Inside a front, members are visited in random order; a visited
// member that is still alive survives and clears every other member closer
// than epsilon_clear in normalized space. A front is then ordered as
// survivors by ascending d^R followed by cleared members by ascending d^R.
// Whole fronts are taken while they fit, the last one is cut in that order.
// Survivors carry rank and score = d^R.
auto RnsgaEnvironmentalSelection(Population const& parents, Population const& offspring,
                                 NormalizationState const& state, AlgorithmConfig const& cfg, RandomEngine& engine)
    -> Population;

// One MOEA/D replacement pass for a trial over `pool` (visited in the given
// order); returns the number of slots replaced, at most max_replace.
auto MoeadNumsReplacement(Individual const& trial, std::span<std::size_t const> pool, Population& population,
                          WeightSet const& weights, NormalizationState const& state, AlgorithmConfig const& cfg)
    -> std::size_t;

// One run of one algorithm on one problem. Owns its population, normalization
// state and random engine.
class Optimizer {
public:
    Optimizer(Problem const& problem, AlgorithmConfig cfg, NormalizationKind normalization, std::uint64_t seed);

    // Random initial population (mu evaluations) and first estimator update.
    void Initialize();

    // One generation. Returns false without doing anything when the
    // evaluation count has already reached `budget`.
    auto Step(std::size_t budget = std::numeric_limits<std::size_t>::max()) -> bool;

    [[nodiscard]] auto Evaluations() const noexcept -> std::size_t { return evaluations_; }
    [[nodiscard]] auto Pop() const -> Population const& { return population_; }
    [[nodiscard]] auto State() const -> NormalizationState const& { return state_; }
    [[nodiscard]] auto Config() const -> AlgorithmConfig const& { return cfg_; }
    [[nodiscard]] auto Engine() const -> RandomEngine const& { return engine_; }
    [[nodiscard]] auto ShiftedWeights() const -> WeightSet const& { return shifted_; }
    [[nodiscard]] auto Objectives() const -> std::vector<ObjectiveVector>;

private:
    auto Evaluate(DecisionVector x) -> Individual;
    auto Tournament() -> std::size_t;
    auto MakeGaOffspring() -> Population;
    void StepNsgaFamily();
    void StepMoead();
    void SelectNsga2(Population const& offspring);
    void SelectR2nsga2(Population const& offspring);
    void RefreshShiftedWeights();

    Problem const& problem_;
    AlgorithmConfig cfg_;
    Bounds bounds_;
    NormalizationState state_;
    RandomEngine engine_;
    Population population_;
    std::size_t evaluations_ = 0;
    bool initialized_ = false;

    // MOEA/D-NUMS
    WeightSet uniform_;
    WeightSet shifted_;
    std::vector<std::vector<std::size_t>> neighborhoods_;
};

} // namespace pbemo
