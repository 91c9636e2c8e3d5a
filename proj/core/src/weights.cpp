#include "pbemo/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pbemo/error.hpp"

namespace pbemo {

namespace {

void EnumerateLattice(std::size_t m, std::size_t divisions, std::size_t left, std::vector<std::size_t>& parts,
                      std::vector<ObjectiveVector>& out)
{
    if (parts.size() + 1 == m) {
        parts.push_back(left);
        ObjectiveVector w(m);
        for (std::size_t i = 0; i < m; ++i) {
            w[i] = static_cast<double>(parts[i]) / static_cast<double>(divisions);
        }
        out.push_back(std::move(w));
        parts.pop_back();
        return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
        parts.push_back(k);
        EnumerateLattice(m, divisions, left - k, parts, out);
        parts.pop_back();
    }
}

auto SquaredDistance(ObjectiveVector const& a, ObjectiveVector const& b) -> double
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto const d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

auto RandomSimplexPoint(std::size_t m, RandomEngine& engine) -> ObjectiveVector
{
    ObjectiveVector w(m);
    double sum = 0.0;
    for (auto& v : w) {
        v = engine.Exponential();
        sum += v;
    }
    for (auto& v : w) {
        v /= sum;
    }
    return w;
}

} // namespace

auto DasDennisSize(std::size_t m, std::size_t divisions) -> std::size_t
{
    // C(divisions + m - 1, m - 1), computed incrementally to stay exact
    std::size_t r = 1;
    for (std::size_t i = 1; i < m; ++i) {
        r = r * (divisions + i) / i;
    }
    return r;
}

auto DasDennisLattice(std::size_t m, std::size_t divisions) -> std::vector<ObjectiveVector>
{
    if (m < 1 || divisions < 1) {
        throw ArgumentError("DasDennisLattice: m and divisions must be positive");
    }
    std::vector<ObjectiveVector> out;
    out.reserve(DasDennisSize(m, divisions));
    std::vector<std::size_t> parts;
    EnumerateLattice(m, divisions, divisions, parts, out);
    return out;
}

auto FarthestPointSubsample(std::vector<ObjectiveVector> const& candidates, std::size_t count,
                            std::vector<std::size_t> const& seeds) -> std::vector<std::size_t>
{
    auto const n = candidates.size();
    if (count > n) {
        throw ArgumentError("FarthestPointSubsample: count exceeds candidate count");
    }
    std::vector<std::size_t> chosen;
    chosen.reserve(count);
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    std::vector<bool> taken(n, false);

    auto take = [&](std::size_t idx) {
        chosen.push_back(idx);
        taken[idx] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!taken[i]) {
                nearest[i] = std::min(nearest[i], SquaredDistance(candidates[i], candidates[idx]));
            }
        }
    };

    for (auto s : seeds) {
        if (chosen.size() == count) {
            break;
        }
        if (s < n && !taken[s]) {
            take(s);
        }
    }
    if (chosen.empty() && count > 0) {
        take(0);
    }
    while (chosen.size() < count) {
        std::size_t best = n;
        double best_d = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!taken[i] && nearest[i] > best_d) {
                best_d = nearest[i];
                best = i;
            }
        }
        take(best);
    }
    return chosen;
}

auto GenerateUniformWeights(std::size_t m, std::size_t count, RandomEngine& engine) -> WeightSet
{
    if (m < 2) {
        throw ConfigError("objective count must be at least 2", "m");
    }
    if (count < m) {
        throw ConfigError("weight count " + std::to_string(count) + " is smaller than m = " + std::to_string(m),
                          "mu");
    }
    std::size_t divisions = 1;
    while (DasDennisSize(m, divisions + 1) <= count) {
        ++divisions;
    }
    WeightSet ws{DasDennisLattice(m, divisions)};
    auto const lattice_size = ws.vectors.size();
    if (lattice_size == count) {
        return ws;
    }

    auto const needed = count - lattice_size;
    auto const pool_size = std::max<std::size_t>(1000, 10 * needed);
    std::vector<ObjectiveVector> candidates = ws.vectors;
    candidates.reserve(lattice_size + pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) {
        candidates.push_back(RandomSimplexPoint(m, engine));
    }
    std::vector<std::size_t> seeds(lattice_size);
    std::iota(seeds.begin(), seeds.end(), 0);
    auto const picked = FarthestPointSubsample(candidates, count, seeds);
    for (std::size_t i = lattice_size; i < picked.size(); ++i) {
        ws.vectors.push_back(candidates[picked[i]]);
    }
    return ws;
}

auto ProjectToSimplex(ObjectiveVector const& v) -> ObjectiveVector
{
    if (v.empty()) {
        throw ArgumentError("ProjectToSimplex: empty vector");
    }
    // sort-based projection (Held, Wolfe & Crowder)
    ObjectiveVector u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cumulative += u[j];
        auto const t = (cumulative - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) {
            theta = t;
        }
    }
    ObjectiveVector out(v.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = std::max(v[i] - theta, 0.0);
        sum += out[i];
    }
    for (auto& x : out) {
        x /= sum;
    }
    return out;
}

auto NumsShift(WeightSet const& weights, ObjectiveVector const& z, double tau) -> WeightSet
{
    if (!(tau > 0.0 && tau <= 1.0)) {
        throw ConfigError("tau must lie in (0, 1]", "tau");
    }
    if (tau == 1.0) {
        return weights;
    }
    auto const pivot = ProjectToSimplex(z);
    auto const m = pivot.size();
    auto const exponent = 1.0 / tau - 1.0;

    WeightSet out;
    out.vectors.reserve(weights.vectors.size());
    for (auto const& w : weights.vectors) {
        CheckSameLength(w, pivot, "NumsShift");
        ObjectiveVector d(m);
        double reach = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            d[i] = w[i] - pivot[i];
            if (d[i] < 0.0) {
                reach = std::min(reach, pivot[i] / -d[i]);
            }
        }
        if (!std::isfinite(reach)) {
            out.vectors.push_back(w);
            continue;
        }
        auto const t = std::min(1.0 / reach, 1.0);
        auto const scale = t > 0.0 ? std::pow(t, exponent) : 0.0;
        ObjectiveVector mapped(m);
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            mapped[i] = std::max(pivot[i] + scale * d[i], 0.0);
            sum += mapped[i];
        }
        for (auto& x : mapped) {
            x /= sum;
        }
        out.vectors.push_back(std::move(mapped));
    }
    return out;
}

auto WeightNeighborhoods(WeightSet const& weights, std::size_t t) -> std::vector<std::vector<std::size_t>>
{
    auto const n = weights.vectors.size();
    t = std::min(t, n);
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> order(n);
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dist[j] = SquaredDistance(weights.vectors[i], weights.vectors[j]);
        }
        std::iota(order.begin(), order.end(), 0);
        // self first, then by distance, ties by index
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (a == i || b == i) {
                return a == i && b != i;
            }
            return dist[a] < dist[b];
        });
        out[i].assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
    }
    return out;
}

} // namespace pbemo
