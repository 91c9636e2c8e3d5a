#include "pbemo/normalization.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pbemo/error.hpp"
#include "pbemo/ranking.hpp"

namespace pbemo {

namespace {

void CheckNonEmpty(std::span<ObjectiveVector const> objs, char const* what)
{
    if (objs.empty()) {
        throw ArgumentError(std::string(what) + ": empty input");
    }
    for (auto const& f : objs) {
        CheckSameLength(f, objs.front(), what);
    }
}

} // namespace

auto ParseNormalizationKind(std::string_view s) -> NormalizationKind
{
    if (s == "pp") {
        return NormalizationKind::PP;
    }
    if (s == "bp") {
        return NormalizationKind::BP;
    }
    if (s == "ba") {
        return NormalizationKind::BA;
    }
    if (s == "no") {
        return NormalizationKind::NO;
    }
    throw ConfigError("unknown normalization '" + std::string(s) + "'", "normalizations");
}

auto ToString(NormalizationKind kind) -> std::string
{
    switch (kind) {
    case NormalizationKind::PP: return "pp";
    case NormalizationKind::BP: return "bp";
    case NormalizationKind::BA: return "ba";
    case NormalizationKind::NO: return "no";
    }
    return "?";
}

TrueScaler::TrueScaler(ObjectiveVector ideal, ObjectiveVector nadir)
    : z_ideal(std::move(ideal))
    , z_nadir(std::move(nadir))
{
    CheckSameLength(z_ideal, z_nadir, "TrueScaler");
    for (std::size_t i = 0; i < z_ideal.size(); ++i) {
        if (!(z_ideal[i] < z_nadir[i])) {
            throw ArgumentError("TrueScaler: ideal must be strictly below nadir");
        }
    }
}

auto EstimateIdealPop(std::span<ObjectiveVector const> objs) -> ObjectiveVector
{
    CheckNonEmpty(objs, "EstimateIdealPop");
    ObjectiveVector out = objs.front();
    for (auto const& f : objs) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = std::min(out[i], f[i]);
        }
    }
    return out;
}

auto EstimateNadirPop(std::span<ObjectiveVector const> objs) -> ObjectiveVector
{
    CheckNonEmpty(objs, "EstimateNadirPop");
    ObjectiveVector out = objs.front();
    for (auto const& f : objs) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = std::max(out[i], f[i]);
        }
    }
    return out;
}

auto UpdateBoundedArchive(std::vector<ObjectiveVector> const& archive, std::span<ObjectiveVector const> x)
    -> std::vector<ObjectiveVector>
{
    if (x.empty()) {
        throw ArgumentError("UpdateBoundedArchive: X must not be empty");
    }
    std::vector<ObjectiveVector> merged;
    merged.reserve(archive.size() + x.size());
    merged.insert(merged.end(), archive.begin(), archive.end());
    merged.insert(merged.end(), x.begin(), x.end());
    CheckNonEmpty(merged, "UpdateBoundedArchive");

    // per objective, the first member of Y with the largest value is the first
    // candidate in (value desc, index asc) order that nothing dominates; this
    // avoids a full non-dominated filter of B u X
    auto const m = merged.front().size();
    std::vector<signed char> nondominated(merged.size(), -1); // -1 unknown
    auto is_nondominated = [&](std::size_t j) {
        if (nondominated[j] < 0) {
            nondominated[j] = 1;
            for (std::size_t k = 0; k < merged.size(); ++k) {
                if (k != j && Dominates(merged[k], merged[j])) {
                    nondominated[j] = 0;
                    break;
                }
            }
        }
        return nondominated[j] == 1;
    };
    std::vector<std::size_t> order(merged.size());
    std::vector<ObjectiveVector> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (merged[a][i] != merged[b][i]) {
                return merged[a][i] > merged[b][i];
            }
            return a < b;
        });
        // a maximal element always exists, so the loop always finds one
        for (auto j : order) {
            if (is_nondominated(j)) {
                out.push_back(merged[j]);
                break;
            }
        }
    }
    return out;
}

auto EstimateNadirArchive(std::vector<ObjectiveVector> const& archive) -> ObjectiveVector
{
    if (archive.empty()) {
        throw StateError("EstimateNadirArchive: archive is empty");
    }
    return EstimateNadirPop(archive);
}

auto NormalizeValue(std::span<double const> f, std::span<double const> z_lb, std::span<double const> z_ub)
    -> ObjectiveVector
{
    CheckSameLength(f, z_lb, "NormalizeValue");
    CheckSameLength(f, z_ub, "NormalizeValue");
    ObjectiveVector out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto const den = std::max(z_ub[i] - z_lb[i], kEpsDen);
        out[i] = (f[i] - z_lb[i]) / den;
    }
    return out;
}

auto DenormalizeValue(std::span<double const> fn, std::span<double const> z_lb, std::span<double const> z_ub)
    -> ObjectiveVector
{
    CheckSameLength(fn, z_lb, "DenormalizeValue");
    CheckSameLength(fn, z_ub, "DenormalizeValue");
    ObjectiveVector out(fn.size());
    for (std::size_t i = 0; i < fn.size(); ++i) {
        auto const den = std::max(z_ub[i] - z_lb[i], kEpsDen);
        out[i] = fn[i] * den + z_lb[i];
    }
    return out;
}

NormalizationState::NormalizationState(NormalizationKind kind, std::size_t m)
    : kind_(kind)
    , m_(m)
    , z_lb_(m, 0.0)
    , z_ub_(m, 1.0)
{
    if (m < 2) {
        throw ArgumentError("NormalizationState: m must be at least 2");
    }
}

auto NormalizationState::UpdateIdealBestSoFar(std::span<ObjectiveVector const> objs) -> ObjectiveVector const&
{
    auto const batch = EstimateIdealPop(objs);
    if (batch.size() != m_) {
        throw DimensionError("NormalizationState: objective count mismatch");
    }
    if (best_so_far_min_.empty()) {
        best_so_far_min_ = batch;
    } else {
        for (std::size_t i = 0; i < m_; ++i) {
            best_so_far_min_[i] = std::min(best_so_far_min_[i], batch[i]);
        }
    }
    return best_so_far_min_;
}

void NormalizationState::Update(std::span<ObjectiveVector const> population, std::span<ObjectiveVector const> offspring)
{
    if (population.empty()) {
        throw ArgumentError("NormalizationState::Update: empty population");
    }
    std::vector<ObjectiveVector> u(population.begin(), population.end());
    u.insert(u.end(), offspring.begin(), offspring.end());
    CheckNonEmpty(u, "NormalizationState::Update");
    if (u.front().size() != m_) {
        throw DimensionError("NormalizationState: objective count mismatch");
    }

    switch (kind_) {
    case NormalizationKind::PP:
        z_lb_ = EstimateIdealPop(u);
        z_ub_ = EstimateNadirPop(u);
        break;
    case NormalizationKind::BP:
        z_lb_ = UpdateIdealBestSoFar(u);
        z_ub_ = EstimateNadirPop(u);
        break;
    case NormalizationKind::BA: {
        z_lb_ = UpdateIdealBestSoFar(u);
        auto const x = offspring.empty() ? population : offspring;
        archive_ = UpdateBoundedArchive(archive_, x);
        z_ub_ = EstimateNadirArchive(archive_);
        break;
    }
    case NormalizationKind::NO:
        z_lb_.assign(m_, 0.0);
        z_ub_.assign(m_, 1.0);
        break;
    }
    initialized_ = true;
}

auto NormalizationState::Normalize(std::span<double const> f) const -> ObjectiveVector
{
    return NormalizeValue(f, z_lb_, z_ub_);
}

} // namespace pbemo
