#include "pbemo/harness/reference_points.hpp"

#include <cmath>
#include <limits>

#include "pbemo/error.hpp"
#include "pbemo/normalization.hpp"

namespace pbemo {

namespace {

struct Row {
    std::size_t m;
    int group; // 1: DTLZ1, 2: DTLZ2-4, 5: DTLZ5-6, 7: DTLZ7
    ObjectiveVector z;
};

auto BalancedTable() -> std::vector<Row> const&
{
    static std::vector<Row> const rows{
        {3, 1, {0.24, 0.18, 0.18}},
        {3, 2, {0.8, 0.6, 0.6}},
        {3, 5, {0.65, 0.65, 0.74}},
        {3, 7, {0.75, 0.15, 6.0}},
        {5, 1, {0.134, 0.12, 0.16, 0.12, 0.134}},
        {5, 2, {0.556, 0.5, 0.666, 0.5, 0.556}},
        {5, 5, {0.4, 0.4, 0.56, 0.8, 0.7}},
        {8, 1, {0.08, 0.08, 0.074, 0.08, 0.086, 0.074, 0.068, 0.068}},
        {8, 2, {0.45, 0.45, 0.415, 0.45, 0.486, 0.415, 0.381, 0.381}},
        {8, 5, {0.12, 0.12, 0.17, 0.24, 0.34, 0.48, 0.68, 0.42}},
        {10, 1, {0.06, 0.065, 0.06, 0.0436, 0.0545, 0.049, 0.0545, 0.049, 0.06, 0.049}},
        {10, 2, {0.4, 0.437, 0.4, 0.29, 0.364, 0.328, 0.364, 0.328, 0.4, 0.328}},
        {10, 5, {0, 0, 0, 0.0035, 0.01, 0.031, 0.0963, 0.29, 0.88, 0.7}},
    };
    return rows;
}

auto ExtremeTable() -> std::vector<Row> const&
{
    static std::vector<Row> const rows{
        {3, 1, {0.15, 0.15, 0.45}},
        {3, 2, {0.4, 1.2, 0.4}},
        {3, 5, {0.4, 0.4, 1.2}},
        {5, 1, {0.03, 0.18, 0.33, 0.03, 0.03}},
        {5, 2, {0.15, 1.2, 0.187, 0.168, 0.15}},
        {5, 5, {0.18, 0.18, 0.255, 0.36, 1.05}},
        {8, 1, {0.3, 0.042, 0.048, 0.042, 0.042, 0.036, 0.048, 0.042}},
        {8, 2, {0.15, 0.128, 0.173, 0.15, 1.071, 0.15, 0.173, 0.15}},
        {8, 5, {0.07, 0.07, 0.1, 0.1415, 0.2, 0.283, 0.4, 1.2}},
        {10, 1, {0.03, 0.036, 0.03, 0.036, 0.036, 0.3, 0.03, 0.036, 0.03, 0.036}},
        {10, 2, {0.14, 0.14, 1.164, 0.117, 0.14, 0.117, 0.14, 0.117, 0.14, 0.117}},
        {10, 5, {0, 0, 0, 0, 0.0144, 0.04, 0.12, 0.37, 1.13, 0.12}},
    };
    return rows;
}

auto Group(int index) -> int
{
    switch (index) {
    case 1: return 1;
    case 2:
    case 3:
    case 4: return 2;
    case 5:
    case 6: return 5;
    default: return 7;
    }
}

auto ScaleForFamily(ObjectiveVector z, ProblemFamily family) -> ObjectiveVector
{
    if (family == ProblemFamily::Sdtlz) {
        double s = 1.0;
        for (auto& v : z) {
            v *= s;
            s *= 10.0;
        }
    }
    return z;
}

} // namespace

auto TabulatedReferencePoint(Problem const& problem, ReferenceSetting setting) -> std::optional<ObjectiveVector>
{
    auto const& table = setting == ReferenceSetting::Balanced ? BalancedTable() : ExtremeTable();
    auto const group = Group(problem.Index());
    for (auto const& row : table) {
        if (row.m == problem.M() && row.group == group) {
            return ScaleForFamily(row.z, problem.Family());
        }
    }
    return std::nullopt;
}

auto ReconstructedBalancedPoint(Problem const& problem) -> ObjectiveVector
{
    auto const m = problem.M();
    Problem const base(ProblemFamily::Dtlz, problem.Index(), m);
    ObjectiveVector center(m, 0.0);
    switch (problem.Index()) {
    case 1: center.assign(m, 0.5 / static_cast<double>(m)); break;
    case 2:
    case 3:
    case 4: center.assign(m, 1.0 / std::sqrt(static_cast<double>(m))); break;
    case 5:
    case 6: {
        // DTLZ5 and DTLZ6 share the front; all-0.5 is g = 0 and theta_1 = pi/4 for DTLZ5
        Problem const d5(ProblemFamily::Dtlz, 5, m);
        center = d5.Evaluate(std::vector<double>(d5.N(), 0.5));
        break;
    }
    default: {
        RandomEngine engine(DeriveSeed(0x7d71, m));
        auto const pts = base.SamplePf(2000, engine);
        ObjectiveVector const mid(m, 0.5);
        double best = std::numeric_limits<double>::infinity();
        for (auto const& p : pts) {
            auto const d = EuclideanDistance(NormalizeValue(p, base.Ideal(), base.Nadir()), mid);
            if (d < best) {
                best = d;
                center = p;
            }
        }
        break;
    }
    }
    ObjectiveVector z(m);
    for (std::size_t i = 0; i < m; ++i) {
        z[i] = base.Ideal()[i] + 1.2 * (center[i] - base.Ideal()[i]);
    }
    return ScaleForFamily(z, problem.Family());
}

auto ResolveReferencePoint(Problem const& problem, ExperimentConfig const& cfg) -> ObjectiveVector
{
    if (auto it = cfg.reference_points.find(problem.Key()); it != cfg.reference_points.end()) {
        return it->second;
    }
    if (auto z = TabulatedReferencePoint(problem, cfg.reference_setting)) {
        return *z;
    }
    if (cfg.reference_setting == ReferenceSetting::Extreme) {
        throw ConfigError("no extreme reference point for " + problem.Key() + "; give one explicitly",
                          "reference_points." + problem.Key());
    }
    return ReconstructedBalancedPoint(problem);
}

} // namespace pbemo
