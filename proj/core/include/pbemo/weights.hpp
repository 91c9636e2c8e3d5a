#pragma once

#include <cstddef>
#include <vector>

#include "pbemo/core.hpp"

namespace pbemo {

// Points on the unit simplex {w : w_i >= 0, sum w_i = 1}.
struct WeightSet {
    std::vector<ObjectiveVector> vectors;
};

// Das-Dennis simplex lattice with `divisions` steps per axis, C(H+m-1, m-1) points.
auto DasDennisLattice(std::size_t m, std::size_t divisions) -> std::vector<ObjectiveVector>;

// Number of Das-Dennis points for (m, divisions).
auto DasDennisSize(std::size_t m, std::size_t divisions) -> std::size_t;

// Exactly `count` simplex points: the largest Das-Dennis lattice with at most
// `count` points, topped up by greedy farthest-point selection from random
// simplex candidates. Deterministic given the engine state. Throws ConfigError
// if count < m or m < 2.
auto GenerateUniformWeights(std::size_t m, std::size_t count, RandomEngine& engine) -> WeightSet;

// Greedy farthest-point subsampling: picks `count` of `candidates`, starting
// with the indices in `seeds` (kept in order), each next pick maximizing the
// distance to the already chosen set (lowest index on ties).
auto FarthestPointSubsample(std::vector<ObjectiveVector> const& candidates, std::size_t count,
                            std::vector<std::size_t> const& seeds = {}) -> std::vector<std::size_t>;

// Euclidean projection onto the unit simplex.
auto ProjectToSimplex(ObjectiveVector const& v) -> ObjectiveVector;

// Nonuniform mapping that pulls a weight set toward the simplex projection of z.
//
// Every weight w is written as pivot + t (b - pivot) where b is the point where
// the ray from the pivot through w leaves the simplex and t in [0, 1]. The
// mapped weight uses t' = t^(1/tau): tau = 1 is the identity, smaller tau
// packs the set more densely around the pivot while keeping the boundary rays.
// Throws ConfigError unless 0 < tau <= 1.
auto NumsShift(WeightSet const& weights, ObjectiveVector const& z, double tau) -> WeightSet;

// Indices of the `t` nearest weights (Euclidean) for every weight, self included first.
auto WeightNeighborhoods(WeightSet const& weights, std::size_t t) -> std::vector<std::vector<std::size_t>>;

} // namespace pbemo
