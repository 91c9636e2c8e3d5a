#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace pbemo {

using ObjectiveVector = std::vector<double>;
using DecisionVector = std::vector<double>;

struct Individual {
    DecisionVector x;
    ObjectiveVector f;
    std::optional<std::size_t> rank;   // non-domination level
    std::optional<double> score;       // crowding distance or d^R, algorithm dependent
};

using Population = std::vector<Individual>;

// Seeded pseudo random source owned by exactly one run.
//
// The bit generator is std::mt19937_64, whose output sequence is fixed by the
// C++ standard. All conversions to real and integer samples are done here
// rather than through <random> distributions, whose algorithms are
// implementation defined; this keeps every stream identical across standard
// libraries and platforms. Independent streams are obtained by deriving the
// seed with `DeriveSeed`.
class RandomEngine {
public:
    explicit RandomEngine(std::uint64_t seed);

    [[nodiscard]] auto Seed() const noexcept -> std::uint64_t { return seed_; }

    auto NextU64() -> std::uint64_t { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    auto Uniform01() -> double;

    // Uniform in [lo, hi); returns lo when lo == hi. Throws ArgumentError if lo > hi.
    auto Uniform(double lo, double hi) -> double;

    // Uniform integer in [0, n). Throws ArgumentError if n == 0.
    auto Below(std::size_t n) -> std::size_t;

    // Standard exponential variate.
    auto Exponential() -> double;

    // Fisher-Yates shuffle driven by Below().
    template <typename T>
    void Shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) {
            auto const j = Below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    [[nodiscard]] auto operator==(RandomEngine const& other) const -> bool
    {
        return seed_ == other.seed_ && gen_ == other.gen_;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

// splitmix64 finalizer over (base, stream): distinct streams get decorrelated seeds.
auto DeriveSeed(std::uint64_t base, std::uint64_t stream) noexcept -> std::uint64_t;

auto EuclideanDistance(std::span<double const> a, std::span<double const> b) -> double;

// Free-function spelling of RandomEngine::Uniform.
inline auto RngUniform(RandomEngine& engine, double lo, double hi) -> double { return engine.Uniform(lo, hi); }

void CheckSameLength(std::span<double const> a, std::span<double const> b, char const* what);

} // namespace pbemo
