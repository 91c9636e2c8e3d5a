#include "pbemo/ranking.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pbemo/error.hpp"

namespace pbemo {

auto CompareDominance(std::span<double const> a, std::span<double const> b) -> Ordering
{
    CheckSameLength(a, b, "CompareDominance");
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) {
            a_better = true;
        } else if (b[i] < a[i]) {
            b_better = true;
        }
        if (a_better && b_better) {
            return Ordering::Incomparable;
        }
    }
    if (a_better) {
        return Ordering::FirstBetter;
    }
    if (b_better) {
        return Ordering::SecondBetter;
    }
    return Ordering::Incomparable;
}

auto Dominates(std::span<double const> a, std::span<double const> b) -> bool
{
    return CompareDominance(a, b) == Ordering::FirstBetter;
}

auto WeaklyDominates(std::span<double const> a, std::span<double const> b) -> bool
{
    CheckSameLength(a, b, "WeaklyDominates");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

auto FrontPartition::RankOf(std::size_t count) const -> std::vector<std::size_t>
{
    std::vector<std::size_t> rank(count, std::numeric_limits<std::size_t>::max());
    for (std::size_t k = 0; k < fronts.size(); ++k) {
        for (auto i : fronts[k]) {
            rank[i] = k;
        }
    }
    return rank;
}

namespace {

// Peels fronts off a "beats" graph given as adjacency lists plus in-degrees.
auto LayerFronts(std::vector<std::vector<std::size_t>> const& beaten, std::vector<std::size_t> beaten_by_count)
    -> FrontPartition
{
    auto const n = beaten.size();
    FrontPartition out;
    std::vector<bool> placed(n, false);
    std::size_t remaining = n;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (beaten_by_count[i] == 0) {
            current.push_back(i);
        }
    }
    while (remaining > 0) {
        if (current.empty()) {
            // cycle: the leftovers cannot be layered any further
            for (std::size_t i = 0; i < n; ++i) {
                if (!placed[i]) {
                    current.push_back(i);
                }
            }
            out.fronts.push_back(std::move(current));
            break;
        }
        std::sort(current.begin(), current.end());
        std::vector<std::size_t> next;
        for (auto i : current) {
            placed[i] = true;
            for (auto j : beaten[i]) {
                if (--beaten_by_count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        remaining -= current.size();
        out.fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return out;
}

} // namespace

auto SortByRelation(std::size_t n, std::function<bool(std::size_t, std::size_t)> const& beats) -> FrontPartition
{
    std::vector<std::vector<std::size_t>> beaten(n);
    std::vector<std::size_t> beaten_by_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (beats(i, j)) {
                beaten[i].push_back(j);
                ++beaten_by_count[j];
            } else if (beats(j, i)) {
                beaten[j].push_back(i);
                ++beaten_by_count[i];
            }
        }
    }
    return LayerFronts(beaten, std::move(beaten_by_count));
}

auto NondominatedSort(std::span<ObjectiveVector const> objs) -> FrontPartition
{
    auto const n = objs.size();
    if (n > 0) {
        auto const m = objs.front().size();
        for (auto const& f : objs) {
            if (f.size() != m) {
                throw DimensionError("NondominatedSort: objective vectors differ in length");
            }
        }
    }
    // one pass per pair, no per-call length checks
    std::vector<std::vector<std::size_t>> beaten(n);
    std::vector<std::size_t> beaten_by_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto const* a = objs[i].data();
        for (std::size_t j = i + 1; j < n; ++j) {
            auto const* b = objs[j].data();
            bool a_better = false;
            bool b_better = false;
            for (std::size_t k = 0; k < objs[i].size() && !(a_better && b_better); ++k) {
                a_better = a_better || a[k] < b[k];
                b_better = b_better || b[k] < a[k];
            }
            if (a_better && !b_better) {
                beaten[i].push_back(j);
                ++beaten_by_count[j];
            } else if (b_better && !a_better) {
                beaten[j].push_back(i);
                ++beaten_by_count[i];
            }
        }
    }
    return LayerFronts(beaten, std::move(beaten_by_count));
}

auto NondominatedIndices(std::span<ObjectiveVector const> objs) -> std::vector<std::size_t>
{
    std::vector<bool> dominated(objs.size(), false);
    // pairs with an already dominated member can be skipped: whatever it
    // dominates is also dominated by some never-dominated member
    for (std::size_t i = 0; i < objs.size(); ++i) {
        if (dominated[i]) {
            continue;
        }
        for (std::size_t j = i + 1; j < objs.size() && !dominated[i]; ++j) {
            if (dominated[j]) {
                continue;
            }
            switch (CompareDominance(objs[i], objs[j])) {
            case Ordering::FirstBetter: dominated[j] = true; break;
            case Ordering::SecondBetter: dominated[i] = true; break;
            case Ordering::Incomparable: break;
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        if (!dominated[i]) {
            out.push_back(i);
        }
    }
    return out;
}

auto CrowdingDistance(std::span<ObjectiveVector const> front) -> std::vector<double>
{
    auto const n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n == 0) {
        return dist;
    }
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
        return dist;
    }
    auto const m = front.front().size();
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < m; ++k) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return front[a][k] < front[b][k]; });
        auto const lo = front[order.front()][k];
        auto const hi = front[order.back()][k];
        dist[order.front()] = std::numeric_limits<double>::infinity();
        dist[order.back()] = std::numeric_limits<double>::infinity();
        auto const range = hi - lo;
        if (!(range > 0.0)) {
            continue;
        }
        for (std::size_t r = 1; r + 1 < n; ++r) {
            dist[order[r]] += (front[order[r + 1]][k] - front[order[r - 1]][k]) / range;
        }
    }
    return dist;
}

auto RDominanceCompare(std::span<double const> a, std::span<double const> b, double dr_a, double dr_b,
                       double dr_min, double dr_max, double delta) -> Ordering
{
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw ArgumentError("RDominanceCompare: delta must lie in [0, 1]");
    }
    if (!(dr_max >= dr_min)) {
        throw ArgumentError("RDominanceCompare: dr_max must not be below dr_min");
    }
    auto const pareto = CompareDominance(a, b);
    if (pareto != Ordering::Incomparable) {
        return pareto;
    }
    auto const spread = dr_max - dr_min;
    auto const diff = spread > 0.0 ? (dr_a - dr_b) / spread : 0.0;
    if (diff < -delta) {
        return Ordering::FirstBetter;
    }
    if (-diff < -delta) {
        return Ordering::SecondBetter;
    }
    return Ordering::Incomparable;
}

} // namespace pbemo
