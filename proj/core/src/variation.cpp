#include "pbemo/variation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pbemo/error.hpp"

namespace pbemo {

namespace {

void CheckBounds(std::size_t n, Bounds const& bounds, char const* what)
{
    if (bounds.lower.size() != n || bounds.upper.size() != n) {
        throw DimensionError(std::string(what) + ": bounds length mismatch");
    }
}

auto SbxSpread(double rand, double beta, double eta) -> double
{
    auto const alpha = 2.0 - std::pow(beta, -(eta + 1.0));
    if (rand <= 1.0 / alpha) {
        return std::pow(rand * alpha, 1.0 / (eta + 1.0));
    }
    return std::pow(1.0 / (2.0 - rand * alpha), 1.0 / (eta + 1.0));
}

void CheckProbability(double p, char const* field)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("must lie in [0, 1]", field);
    }
}

} // namespace

void Validate(GaOperatorConfig const& cfg)
{
    CheckProbability(cfg.crossover_prob, "crossover_prob");
    if (cfg.mutation_prob >= 0.0) {
        CheckProbability(cfg.mutation_prob, "mutation_prob");
    }
    if (!(cfg.sbx_eta > 0.0)) {
        throw ConfigError("must be positive", "sbx_eta");
    }
    if (!(cfg.pm_eta > 0.0)) {
        throw ConfigError("must be positive", "pm_eta");
    }
}

void Validate(DeOperatorConfig const& cfg)
{
    if (!(cfg.scale_f >= 0.0) || !std::isfinite(cfg.scale_f)) {
        throw ConfigError("must be non-negative", "scale_f");
    }
    CheckProbability(cfg.crossover_rate, "crossover_rate");
    if (cfg.mutation_prob >= 0.0) {
        CheckProbability(cfg.mutation_prob, "mutation_prob");
    }
    if (!(cfg.pm_eta > 0.0)) {
        throw ConfigError("must be positive", "pm_eta");
    }
}

auto SbxCrossover(std::span<double const> p1, std::span<double const> p2, Bounds const& bounds,
                  GaOperatorConfig const& cfg, RandomEngine& engine) -> std::pair<DecisionVector, DecisionVector>
{
    CheckSameLength(p1, p2, "SbxCrossover");
    CheckBounds(p1.size(), bounds, "SbxCrossover");
    DecisionVector c1(p1.begin(), p1.end());
    DecisionVector c2(p2.begin(), p2.end());
    if (engine.Uniform01() >= cfg.crossover_prob) {
        return {c1, c2};
    }
    auto const eta = cfg.sbx_eta;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (engine.Uniform01() > 0.5) {
            continue;
        }
        if (std::fabs(p1[i] - p2[i]) <= 1e-14) {
            continue;
        }
        auto const y1 = std::min(p1[i], p2[i]);
        auto const y2 = std::max(p1[i], p2[i]);
        auto const lb = bounds.lower[i];
        auto const ub = bounds.upper[i];
        auto const rand = engine.Uniform01();

        auto beta = 1.0 + 2.0 * (y1 - lb) / (y2 - y1);
        auto betaq = SbxSpread(rand, beta, eta);
        auto a = 0.5 * ((y1 + y2) - betaq * (y2 - y1));

        beta = 1.0 + 2.0 * (ub - y2) / (y2 - y1);
        betaq = SbxSpread(rand, beta, eta);
        auto b = 0.5 * ((y1 + y2) + betaq * (y2 - y1));

        a = std::clamp(a, lb, ub);
        b = std::clamp(b, lb, ub);
        if (engine.Uniform01() <= 0.5) {
            c1[i] = b;
            c2[i] = a;
        } else {
            c1[i] = a;
            c2[i] = b;
        }
    }
    return {c1, c2};
}

auto PolynomialMutation(std::span<double const> x, Bounds const& bounds, double mutation_prob, double eta,
                        RandomEngine& engine) -> DecisionVector
{
    CheckBounds(x.size(), bounds, "PolynomialMutation");
    DecisionVector y(x.begin(), x.end());
    if (y.empty()) {
        return y;
    }
    auto const pm = mutation_prob < 0.0 ? 1.0 / static_cast<double>(y.size()) : mutation_prob;
    auto const mut_pow = 1.0 / (eta + 1.0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (engine.Uniform01() >= pm) {
            continue;
        }
        auto const lb = bounds.lower[i];
        auto const ub = bounds.upper[i];
        auto const width = ub - lb;
        if (!(width > 0.0)) {
            continue;
        }
        auto const delta1 = (y[i] - lb) / width;
        auto const delta2 = (ub - y[i]) / width;
        auto const r = engine.Uniform01();
        double deltaq = 0.0;
        if (r <= 0.5) {
            auto const xy = 1.0 - delta1;
            auto const val = 2.0 * r + (1.0 - 2.0 * r) * std::pow(xy, eta + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            auto const xy = 1.0 - delta2;
            auto const val = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * std::pow(xy, eta + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        y[i] = std::clamp(y[i] + deltaq * width, lb, ub);
    }
    return y;
}

auto DeRand1(std::size_t target_index, std::span<DecisionVector const> population,
             std::span<std::size_t const> neighborhood, DeOperatorConfig const& cfg, RandomEngine& engine)
    -> DecisionVector
{
    if (target_index >= population.size()) {
        throw ArgumentError("DeRand1: target index out of range");
    }
    std::vector<std::size_t> distinct(neighborhood.begin(), neighborhood.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) {
        throw ArgumentError("DeRand1: neighborhood needs at least three distinct members");
    }
    for (auto i : distinct) {
        if (i >= population.size()) {
            throw ArgumentError("DeRand1: neighborhood index out of range");
        }
    }
    auto const pick = [&] { return neighborhood[engine.Below(neighborhood.size())]; };
    auto const r1 = pick();
    auto r2 = pick();
    while (r2 == r1) {
        r2 = pick();
    }
    auto r3 = pick();
    while (r3 == r1 || r3 == r2) {
        r3 = pick();
    }

    auto const& target = population[target_index];
    auto const& a = population[r1];
    auto const& b = population[r2];
    auto const& c = population[r3];
    auto const n = target.size();
    if (a.size() != n || b.size() != n || c.size() != n) {
        throw DimensionError("DeRand1: decision vector length mismatch");
    }
    DecisionVector trial(target);
    auto const forced = engine.Below(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == forced || engine.Uniform01() < cfg.crossover_rate) {
            trial[j] = a[j] + cfg.scale_f * (b[j] - c[j]);
        }
    }
    return trial;
}

auto RepairToBounds(DecisionVector x, Bounds const& bounds) -> DecisionVector
{
    CheckBounds(x.size(), bounds, "RepairToBounds");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < bounds.lower[i]) {
            x[i] = bounds.lower[i];
        } else if (x[i] > bounds.upper[i]) {
            x[i] = bounds.upper[i];
        }
    }
    return x;
}

} // namespace pbemo
