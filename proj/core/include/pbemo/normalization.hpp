#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbemo/core.hpp"

namespace pbemo {

// PP: population min / population max
// BP: best-so-far min / population max
// BA: best-so-far min / max over the bounded archive
// NO: identity (z_lb = 0, z_ub = 1)
enum class NormalizationKind { PP, BP, BA, NO };

auto ParseNormalizationKind(std::string_view s) -> NormalizationKind; // "pp", "bp", "ba", "no"
auto ToString(NormalizationKind kind) -> std::string;

// Smallest denominator used when z_ub - z_lb collapses.
inline constexpr double kEpsDen = 1e-12;

// Ground-truth ideal/nadir pair. Throws ArgumentError unless ideal < nadir everywhere.
struct TrueScaler {
    ObjectiveVector z_ideal;
    ObjectiveVector z_nadir;

    TrueScaler(ObjectiveVector ideal, ObjectiveVector nadir);
};

auto EstimateIdealPop(std::span<ObjectiveVector const> objs) -> ObjectiveVector;
auto EstimateNadirPop(std::span<ObjectiveVector const> objs) -> ObjectiveVector;

// Y = non-dominated members of B followed by X (in that order); the new B holds,
// for each objective, the first member of Y with the largest value. Throws
// ArgumentError if X is empty.
auto UpdateBoundedArchive(std::vector<ObjectiveVector> const& archive, std::span<ObjectiveVector const> x)
    -> std::vector<ObjectiveVector>;

// Componentwise max over the archive. Throws StateError if empty.
auto EstimateNadirArchive(std::vector<ObjectiveVector> const& archive) -> ObjectiveVector;

// (f - z_lb) / max(z_ub - z_lb, kEpsDen)
auto NormalizeValue(std::span<double const> f, std::span<double const> z_lb, std::span<double const> z_ub)
    -> ObjectiveVector;
auto DenormalizeValue(std::span<double const> fn, std::span<double const> z_lb, std::span<double const> z_ub)
    -> ObjectiveVector;

class NormalizationState {
public:
    NormalizationState(NormalizationKind kind, std::size_t m);

    [[nodiscard]] auto Kind() const noexcept -> NormalizationKind { return kind_; }
    [[nodiscard]] auto Initialized() const noexcept -> bool { return initialized_; }
    [[nodiscard]] auto ZLb() const -> ObjectiveVector const& { return z_lb_; }
    [[nodiscard]] auto ZUb() const -> ObjectiveVector const& { return z_ub_; }
    [[nodiscard]] auto BestSoFarMin() const -> ObjectiveVector const& { return best_so_far_min_; }
    [[nodiscard]] auto Archive() const -> std::vector<ObjectiveVector> const& { return archive_; }

    // One estimator update over P and Q. The first call (typically with the
    // initial population and no offspring) initializes the state. The archive
    // is fed Q, or P when Q is empty. Throws ArgumentError if P is empty.
    void Update(std::span<ObjectiveVector const> population, std::span<ObjectiveVector const> offspring);

    // Best-so-far ideal update alone; returns the new minimum.
    auto UpdateIdealBestSoFar(std::span<ObjectiveVector const> objs) -> ObjectiveVector const&;

    [[nodiscard]] auto Normalize(std::span<double const> f) const -> ObjectiveVector;

private:
    NormalizationKind kind_;
    std::size_t m_;
    bool initialized_ = false;
    ObjectiveVector z_lb_;
    ObjectiveVector z_ub_;
    ObjectiveVector best_so_far_min_;
    std::vector<ObjectiveVector> archive_;
};

} // namespace pbemo
