#include "pbemo/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pbemo/error.hpp"

namespace pbemo {

auto BuildRoiReferenceSet(std::span<ObjectiveVector const> pf_samples, std::span<double const> z, double r,
                          TrueScaler const& scaler) -> RoiReferenceSet
{
    if (pf_samples.empty()) {
        throw ArgumentError("BuildRoiReferenceSet: no samples");
    }
    if (!(r > 0.0)) {
        throw ArgumentError("BuildRoiReferenceSet: radius must be positive");
    }
    auto const zn = NormalizeValue(z, scaler.z_ideal, scaler.z_nadir);
    std::vector<ObjectiveVector> normed;
    normed.reserve(pf_samples.size());
    for (auto const& s : pf_samples) {
        normed.push_back(NormalizeValue(s, scaler.z_ideal, scaler.z_nadir));
    }
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < normed.size(); ++i) {
        auto const d = EuclideanDistance(normed[i], zn);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    RoiReferenceSet out;
    out.center = normed[best];
    out.radius = r;
    for (auto const& s : normed) {
        if (EuclideanDistance(s, out.center) < r) {
            out.s_prime.push_back(s);
        }
    }
    return out;
}

auto IgdPlusC(std::span<ObjectiveVector const> solutions, RoiReferenceSet const& ref, TrueScaler const& scaler)
    -> double
{
    if (solutions.empty()) {
        throw ArgumentError("IgdPlusC: empty solution set");
    }
    if (ref.s_prime.empty()) {
        throw ArgumentError("IgdPlusC: empty reference set");
    }
    std::vector<ObjectiveVector> normed;
    normed.reserve(solutions.size());
    for (auto const& f : solutions) {
        normed.push_back(NormalizeValue(f, scaler.z_ideal, scaler.z_nadir));
    }
    double total = 0.0;
    for (auto const& s : ref.s_prime) {
        double best = std::numeric_limits<double>::infinity();
        for (auto const& f : normed) {
            CheckSameLength(f, s, "IgdPlusC");
            double acc = 0.0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto const d = std::max(f[i] - s[i], 0.0);
                acc += d * d;
            }
            best = std::min(best, acc);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(ref.s_prime.size());
}

auto EIdeal(std::span<double const> z_lb, TrueScaler const& scaler) -> double
{
    CheckSameLength(z_lb, scaler.z_ideal, "EIdeal");
    double s = 0.0;
    for (std::size_t i = 0; i < z_lb.size(); ++i) {
        auto const d = (z_lb[i] - scaler.z_ideal[i]) / (scaler.z_nadir[i] - scaler.z_ideal[i]);
        s += d * d;
    }
    return s;
}

auto ENadir(std::span<double const> z_ub, TrueScaler const& scaler) -> double
{
    CheckSameLength(z_ub, scaler.z_nadir, "ENadir");
    double s = 0.0;
    for (std::size_t i = 0; i < z_ub.size(); ++i) {
        auto const d = (z_ub[i] - scaler.z_nadir[i]) / (scaler.z_nadir[i] - scaler.z_ideal[i]);
        s += d * d;
    }
    return s;
}

auto Ore(std::span<double const> z_lb, std::span<double const> z_ub, TrueScaler const& scaler) -> double
{
    CheckSameLength(z_lb, z_ub, "Ore");
    CheckSameLength(z_lb, scaler.z_ideal, "Ore");
    auto const m = z_lb.size();
    std::vector<double> ratio(m);
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        ratio[i] = (z_ub[i] - z_lb[i]) / (scaler.z_nadir[i] - scaler.z_ideal[i]);
        mean += ratio[i];
    }
    mean /= static_cast<double>(m);
    double var = 0.0;
    for (auto v : ratio) {
        var += (v - mean) * (v - mean);
    }
    return std::sqrt(var / static_cast<double>(m));
}

} // namespace pbemo
