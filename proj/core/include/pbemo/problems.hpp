#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbemo/core.hpp"

namespace pbemo {

enum class ProblemFamily { Dtlz, Sdtlz, Idtlz };

// Box-constrained DTLZ-style test problem. Immutable after construction.
class Problem {
public:
    Problem(ProblemFamily family, int index, std::size_t m);

    [[nodiscard]] auto Name() const -> std::string;      // e.g. "sdtlz2"
    [[nodiscard]] auto Key() const -> std::string;       // e.g. "sdtlz2-m3"
    [[nodiscard]] auto Family() const noexcept -> ProblemFamily { return family_; }
    [[nodiscard]] auto Index() const noexcept -> int { return index_; }
    [[nodiscard]] auto M() const noexcept -> std::size_t { return m_; }
    [[nodiscard]] auto N() const noexcept -> std::size_t { return n_; }
    [[nodiscard]] auto Lower() const -> std::vector<double> const& { return lower_; }
    [[nodiscard]] auto Upper() const -> std::vector<double> const& { return upper_; }
    [[nodiscard]] auto Ideal() const -> ObjectiveVector const& { return ideal_; }
    [[nodiscard]] auto Nadir() const -> ObjectiveVector const& { return nadir_; }

    // Throws DimensionError on a length mismatch and PreconditionError when a
    // gene is outside its bounds (or not finite).
    [[nodiscard]] auto Evaluate(std::span<double const> x) const -> ObjectiveVector;

    // `count` points on the true Pareto front, deterministic given the engine.
    [[nodiscard]] auto SamplePf(std::size_t count, RandomEngine& engine) const -> std::vector<ObjectiveVector>;

private:
    [[nodiscard]] auto EvaluateBase(std::span<double const> x) const -> ObjectiveVector;
    [[nodiscard]] auto SampleBase(std::size_t count, RandomEngine& engine) const -> std::vector<ObjectiveVector>;
    [[nodiscard]] auto Transform(ObjectiveVector f, double g) const -> ObjectiveVector;

    ProblemFamily family_;
    int index_;
    std::size_t m_;
    std::size_t n_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    ObjectiveVector ideal_;
    ObjectiveVector nadir_;
};

// Name in {dtlz1..7, sdtlz1..4, idtlz1..4}, case-insensitive. Throws
// ConfigError for unknown names or m < 2.
auto MakeProblem(std::string_view name, std::size_t m) -> Problem;

// Parses a registry key such as "dtlz2-m3".
auto MakeProblemFromKey(std::string_view key) -> Problem;

// All valid problem names, in registry order.
auto ProblemNames() -> std::vector<std::string>;

auto ToString(ProblemFamily family) -> std::string;

namespace dtlz7 {
// Pareto-optimal values of each of the first m-1 objectives form [0, kT1] U [kT2, kTStar].
inline constexpr double kT1 = 0.25141183608891712;
inline constexpr double kT2 = 0.6316265307000612;
inline constexpr double kTStar = 0.85940085664472392;
inline constexpr double kPhiStar = 1.6929956344984224; // t (1 + sin 3 pi t) at kTStar
} // namespace dtlz7

} // namespace pbemo
