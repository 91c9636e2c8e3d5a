#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pbemo/core.hpp"

namespace pbemo {

enum class Ordering { FirstBetter, SecondBetter, Incomparable };

// a_i <= b_i for all i and a_i < b_i for some i. Throws DimensionError on length mismatch.
auto Dominates(std::span<double const> a, std::span<double const> b) -> bool;

// a_i <= b_i for all i.
auto WeaklyDominates(std::span<double const> a, std::span<double const> b) -> bool;

// Pareto comparison in one pass.
auto CompareDominance(std::span<double const> a, std::span<double const> b) -> Ordering;

struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;

    [[nodiscard]] auto RankOf(std::size_t count) const -> std::vector<std::size_t>;
};

// Fast non-dominated sort. Indices inside each front keep input order.
auto NondominatedSort(std::span<ObjectiveVector const> objs) -> FrontPartition;

// Layered sort under an asymmetric "i beats j" relation over 0..n-1. If the
// relation has a cycle among the remaining items, all of them form the last
// front.
auto SortByRelation(std::size_t n, std::function<bool(std::size_t, std::size_t)> const& beats) -> FrontPartition;

// Indices of the members of `objs` not dominated by any other member, in input order.
auto NondominatedIndices(std::span<ObjectiveVector const> objs) -> std::vector<std::size_t>;

// NSGA-II crowding distance of the members of one front. Boundary points get
// +inf; a zero objective range contributes nothing.
auto CrowdingDistance(std::span<ObjectiveVector const> front) -> std::vector<double>;

// r-dominance between a and b given their d^R values and the population's
// d^R extremes. A degenerate spread (max == min) yields plain Pareto dominance.
// Throws ArgumentError if delta is outside [0, 1] or dr_max < dr_min.
auto RDominanceCompare(std::span<double const> a, std::span<double const> b, double dr_a, double dr_b,
                       double dr_min, double dr_max, double delta) -> Ordering;

} // namespace pbemo
