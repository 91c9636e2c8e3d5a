#pragma once

#include <span>
#include <vector>

#include "pbemo/core.hpp"
#include "pbemo/normalization.hpp"

namespace pbemo {

// Reference points of the region of interest, in the space normalized by the true scaler.
struct RoiReferenceSet {
    std::vector<ObjectiveVector> s_prime;
    ObjectiveVector center;
    double radius = 0.0;
};

// Normalizes pf_samples and z with the true scaler; the center is the sample
// nearest z (lowest index on ties) and S' keeps samples strictly closer than r
// to it. Throws ArgumentError on empty samples or r <= 0.
auto BuildRoiReferenceSet(std::span<ObjectiveVector const> pf_samples, std::span<double const> z, double r,
                          TrueScaler const& scaler) -> RoiReferenceSet;

// Mean over S' of the smallest dist_plus from a normalized solution.
// Throws ArgumentError if solutions or S' is empty.
auto IgdPlusC(std::span<ObjectiveVector const> solutions, RoiReferenceSet const& ref, TrueScaler const& scaler)
    -> double;

// sum ((z_lb - ideal) / (nadir - ideal))^2
auto EIdeal(std::span<double const> z_lb, TrueScaler const& scaler) -> double;

// sum ((z_ub - nadir) / (nadir - ideal))^2
auto ENadir(std::span<double const> z_ub, TrueScaler const& scaler) -> double;

// population standard deviation of (z_ub - z_lb) / (nadir - ideal)
auto Ore(std::span<double const> z_lb, std::span<double const> z_ub, TrueScaler const& scaler) -> double;

} // namespace pbemo
