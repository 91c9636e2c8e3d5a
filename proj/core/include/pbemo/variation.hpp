#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pbemo/core.hpp"

namespace pbemo {

struct Bounds {
    std::vector<double> lower;
    std::vector<double> upper;
};

struct GaOperatorConfig {
    double crossover_prob = 1.0;
    double sbx_eta = 30.0;
    double mutation_prob = -1.0; // negative: 1/n
    double pm_eta = 20.0;
};

struct DeOperatorConfig {
    double scale_f = 0.5;
    double crossover_rate = 1.0;
    double pm_eta = 20.0;
    double mutation_prob = -1.0; // negative: 1/n
};

// Throws ConfigError on out-of-range fields.
void Validate(GaOperatorConfig const& cfg);
void Validate(DeOperatorConfig const& cfg);

// Bounded SBX. Each variable is recombined with probability 0.5 (and only when
// the parents differ), children swap at random, results are clipped.
auto SbxCrossover(std::span<double const> p1, std::span<double const> p2, Bounds const& bounds,
                  GaOperatorConfig const& cfg, RandomEngine& engine) -> std::pair<DecisionVector, DecisionVector>;

// Bounded polynomial mutation. `mutation_prob` < 0 means 1/n.
auto PolynomialMutation(std::span<double const> x, Bounds const& bounds, double mutation_prob, double eta,
                        RandomEngine& engine) -> DecisionVector;

// DE/rand/1/bin. r1, r2, r3 are distinct members of `neighborhood` (the
// neighborhood needs at least three distinct indices). At least one gene is
// always taken from the mutant. The trial is not repaired.
auto DeRand1(std::size_t target_index, std::span<DecisionVector const> population,
             std::span<std::size_t const> neighborhood, DeOperatorConfig const& cfg, RandomEngine& engine)
    -> DecisionVector;

// Clamps out-of-range genes to the violated bound.
auto RepairToBounds(DecisionVector x, Bounds const& bounds) -> DecisionVector;

} // namespace pbemo
