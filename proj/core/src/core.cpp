#include "pbemo/core.hpp"

#include <cmath>
#include <string>

#include "pbemo/error.hpp"

namespace pbemo {

RandomEngine::RandomEngine(std::uint64_t seed)
    : seed_(seed)
    , gen_(seed)
{
}

auto RandomEngine::Uniform01() -> double
{
    return static_cast<double>(gen_() >> 11U) * 0x1.0p-53;
}

auto RandomEngine::Uniform(double lo, double hi) -> double
{
    if (!(lo <= hi)) {
        throw ArgumentError("Uniform: lo must not exceed hi");
    }
    if (lo == hi) {
        return lo;
    }
    auto const v = lo + (hi - lo) * Uniform01();
    return v < hi ? v : std::nextafter(hi, lo);
}

auto RandomEngine::Below(std::size_t n) -> std::size_t
{
    if (n == 0) {
        throw ArgumentError("Below: n must be positive");
    }
    auto const bound = static_cast<std::uint64_t>(n);
    // reject the top partial block so every residue is equally likely
    auto const limit = std::uint64_t(-1) - (std::uint64_t(-1) % bound);
    std::uint64_t r = 0;
    do {
        r = gen_();
    } while (r >= limit);
    return static_cast<std::size_t>(r % bound);
}

auto RandomEngine::Exponential() -> double
{
    return -std::log1p(-Uniform01());
}

auto DeriveSeed(std::uint64_t base, std::uint64_t stream) noexcept -> std::uint64_t
{
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

void CheckSameLength(std::span<double const> a, std::span<double const> b, char const* what)
{
    if (a.size() != b.size()) {
        throw DimensionError(std::string(what) + ": length mismatch (" + std::to_string(a.size()) + " vs "
                             + std::to_string(b.size()) + ")");
    }
}

auto EuclideanDistance(std::span<double const> a, std::span<double const> b) -> double
{
    CheckSameLength(a, b, "EuclideanDistance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto const d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace pbemo
