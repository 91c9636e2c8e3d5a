#include "pbemo/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "pbemo/error.hpp"
#include "pbemo/ranking.hpp"
#include "pbemo/weights.hpp"

namespace pbemo {

namespace {

constexpr double kPi = std::numbers::pi;

auto DistanceVariables(int index) -> std::size_t
{
    switch (index) {
    case 1: return 5;
    case 7: return 20;
    default: return 10;
    }
}

auto MaxIndex(ProblemFamily family) -> int
{
    return family == ProblemFamily::Dtlz ? 7 : 4;
}

// g of DTLZ1 and DTLZ3 (Rastrigin-like)
auto GMultimodal(std::span<double const> xm) -> double
{
    double s = 0.0;
    for (auto v : xm) {
        auto const d = v - 0.5;
        s += d * d - std::cos(20.0 * kPi * d);
    }
    return 100.0 * (static_cast<double>(xm.size()) + s);
}

auto GSphere(std::span<double const> xm) -> double
{
    double s = 0.0;
    for (auto v : xm) {
        s += (v - 0.5) * (v - 0.5);
    }
    return s;
}

// f_i = r * prod_{j < m-1-i} cos(theta_j) * (i > 0 ? sin(theta_{m-1-i}) : 1)
auto SphericalObjectives(std::span<double const> theta, double radius) -> ObjectiveVector
{
    auto const m = theta.size() + 1;
    ObjectiveVector f(m, radius);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j + 1 + i < m; ++j) {
            f[i] *= std::cos(theta[j]);
        }
        if (i > 0) {
            f[i] *= std::sin(theta[m - 1 - i]);
        }
    }
    return f;
}

auto Phi7(double t) -> double
{
    return t * (1.0 + std::sin(3.0 * kPi * t));
}

auto PowerOfTen(std::size_t e) -> double
{
    double r = 1.0;
    for (std::size_t i = 0; i < e; ++i) {
        r *= 10.0;
    }
    return r;
}

auto Lowercase(std::string_view s) -> std::string
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

} // namespace

Problem::Problem(ProblemFamily family, int index, std::size_t m)
    : family_(family)
    , index_(index)
    , m_(m)
{
    if (index < 1 || index > MaxIndex(family)) {
        throw ConfigError("unknown problem " + ToString(family) + std::to_string(index), "problem");
    }
    if (m < 2) {
        throw ConfigError("objective count must be at least 2", "m");
    }
    n_ = m + DistanceVariables(index) - 1;
    lower_.assign(n_, 0.0);
    upper_.assign(n_, 1.0);

    ideal_.assign(m, 0.0);
    nadir_.assign(m, 1.0);
    switch (index) {
    case 1: nadir_.assign(m, 0.5); break;
    case 5:
    case 6: {
        auto const c = std::numbers::sqrt2 / 2.0;
        nadir_[0] = std::pow(c, static_cast<double>(m - 2));
        for (std::size_t j = 1; j + 1 < m; ++j) {
            nadir_[j] = std::pow(c, static_cast<double>(m - 1 - j));
        }
        nadir_[m - 1] = 1.0;
        break;
    }
    case 7: {
        for (std::size_t j = 0; j + 1 < m; ++j) {
            nadir_[j] = dtlz7::kTStar;
        }
        auto const md = static_cast<double>(m);
        nadir_[m - 1] = 2.0 * md;
        ideal_[m - 1] = 2.0 * md - (md - 1.0) * dtlz7::kPhiStar;
        break;
    }
    default: break;
    }
    if (family_ == ProblemFamily::Sdtlz) {
        for (std::size_t i = 0; i < m; ++i) {
            ideal_[i] *= PowerOfTen(i);
            nadir_[i] *= PowerOfTen(i);
        }
    }
}

auto Problem::Name() const -> std::string
{
    return ToString(family_) + std::to_string(index_);
}

auto Problem::Key() const -> std::string
{
    return Name() + "-m" + std::to_string(m_);
}

auto Problem::Evaluate(std::span<double const> x) const -> ObjectiveVector
{
    if (x.size() != n_) {
        throw DimensionError(Name() + ": expected " + std::to_string(n_) + " variables, got "
                             + std::to_string(x.size()));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) {
            throw PreconditionError(Name() + ": variable " + std::to_string(i) + " out of bounds");
        }
    }
    double g = 0.0;
    auto const m = m_;
    auto const xm = x.subspan(m - 1);
    ObjectiveVector f;
    switch (index_) {
    case 1: {
        g = GMultimodal(xm);
        f.assign(m, 0.5 * (1.0 + g));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j + 1 + i < m; ++j) {
                f[i] *= x[j];
            }
            if (i > 0) {
                f[i] *= 1.0 - x[m - 1 - i];
            }
        }
        break;
    }
    case 2:
    case 3:
    case 4: {
        g = index_ == 3 ? GMultimodal(xm) : GSphere(xm);
        std::vector<double> theta(m - 1);
        for (std::size_t j = 0; j + 1 < m; ++j) {
            auto const v = index_ == 4 ? std::pow(x[j], 100.0) : x[j];
            theta[j] = v * kPi / 2.0;
        }
        f = SphericalObjectives(theta, 1.0 + g);
        break;
    }
    case 5:
    case 6: {
        if (index_ == 5) {
            g = GSphere(xm);
        } else {
            for (auto v : xm) {
                g += std::pow(v, 0.1);
            }
        }
        std::vector<double> theta(m - 1);
        theta[0] = x[0] * kPi / 2.0;
        for (std::size_t j = 1; j + 1 < m; ++j) {
            theta[j] = kPi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[j]);
        }
        f = SphericalObjectives(theta, 1.0 + g);
        break;
    }
    case 7: {
        double s = 0.0;
        for (auto v : xm) {
            s += v;
        }
        g = 1.0 + 9.0 / static_cast<double>(xm.size()) * s;
        f.assign(m, 0.0);
        double h = static_cast<double>(m);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            f[i] = x[i];
            h -= Phi7(x[i]) / (1.0 + g);
        }
        f[m - 1] = (1.0 + g) * h;
        break;
    }
    default: throw StateError("unreachable problem index");
    }
    return Transform(std::move(f), g);
}

auto Problem::Transform(ObjectiveVector f, double g) const -> ObjectiveVector
{
    switch (family_) {
    case ProblemFamily::Dtlz: break;
    case ProblemFamily::Sdtlz:
        for (std::size_t i = 0; i < m_; ++i) {
            f[i] *= PowerOfTen(i);
        }
        break;
    case ProblemFamily::Idtlz: {
        auto const top = index_ == 1 ? 0.5 * (1.0 + g) : 1.0 + g;
        for (auto& v : f) {
            v = top - v;
        }
        break;
    }
    }
    return f;
}

auto Problem::SamplePf(std::size_t count, RandomEngine& engine) const -> std::vector<ObjectiveVector>
{
    if (count == 0) {
        throw ArgumentError("SamplePf: count must be positive");
    }
    auto pts = SampleBase(count, engine);
    for (auto& p : pts) {
        p = Transform(std::move(p), 0.0);
    }
    return pts;
}

auto Problem::SampleBase(std::size_t count, RandomEngine& engine) const -> std::vector<ObjectiveVector>
{
    auto const m = m_;
    std::vector<ObjectiveVector> out;
    out.reserve(count);
    switch (index_) {
    case 1:
    case 2:
    case 3:
    case 4: {
        auto ws = GenerateUniformWeights(m, std::max(count, m), engine).vectors;
        ws.resize(count);
        for (auto& w : ws) {
            if (index_ == 1) {
                for (auto& v : w) {
                    v *= 0.5;
                }
            } else {
                double norm = 0.0;
                for (auto v : w) {
                    norm += v * v;
                }
                norm = std::sqrt(norm);
                for (auto& v : w) {
                    v /= norm;
                }
            }
            out.push_back(std::move(w));
        }
        return out;
    }
    case 5:
    case 6: {
        // g = 0 pins theta_2.. at pi/4; the image is a quarter circle of unit
        // radius parameterized by theta_1, so an even theta_1 grid is already
        // spaced evenly along the front
        std::vector<double> theta(m - 1, kPi / 4.0);
        for (std::size_t k = 0; k < count; ++k) {
            auto const t = count == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(count - 1);
            theta[0] = t * kPi / 2.0;
            out.push_back(SphericalObjectives(theta, 1.0));
        }
        return out;
    }
    case 7: {
        auto const md = static_cast<double>(m);
        auto make = [&](std::vector<double> const& t) {
            ObjectiveVector f(m);
            double s = 0.0;
            for (std::size_t i = 0; i + 1 < m; ++i) {
                f[i] = t[i];
                s += Phi7(t[i]);
            }
            f[m - 1] = 2.0 * md - s;
            return f;
        };
        std::vector<ObjectiveVector> cand;
        // anchors: the corners that carry the ideal and nadir values
        cand.push_back(make(std::vector<double>(m - 1, 0.0)));
        cand.push_back(make(std::vector<double>(m - 1, dtlz7::kTStar)));
        for (std::size_t i = 0; i + 1 < m; ++i) {
            std::vector<double> t(m - 1, 0.0);
            t[i] = dtlz7::kTStar;
            cand.push_back(make(t));
        }
        auto const anchors = cand.size();
        // each coordinate uniform (by length) over the record set
        auto const len1 = dtlz7::kT1;
        auto const len2 = dtlz7::kTStar - dtlz7::kT2;
        std::vector<double> t(m - 1);
        for (std::size_t k = 0; k < 2 * count; ++k) {
            for (auto& v : t) {
                auto const u = engine.Uniform01() * (len1 + len2);
                v = u < len1 ? u : dtlz7::kT2 + (u - len1);
            }
            cand.push_back(make(t));
        }
        std::vector<std::size_t> seeds(anchors);
        for (std::size_t i = 0; i < anchors; ++i) {
            seeds[i] = i;
        }
        auto const picked = FarthestPointSubsample(cand, std::min(count, cand.size()), seeds);
        std::vector<ObjectiveVector> chosen;
        chosen.reserve(picked.size());
        for (auto i : picked) {
            chosen.push_back(cand[i]);
        }
        // phi is flat near kTStar, rounding can make a neighbour dominate
        for (auto i : NondominatedIndices(chosen)) {
            out.push_back(chosen[i]);
        }
        return out;
    }
    default: throw StateError("unreachable problem index");
    }
}

auto ToString(ProblemFamily family) -> std::string
{
    switch (family) {
    case ProblemFamily::Dtlz: return "dtlz";
    case ProblemFamily::Sdtlz: return "sdtlz";
    case ProblemFamily::Idtlz: return "idtlz";
    }
    return "?";
}

auto MakeProblem(std::string_view name, std::size_t m) -> Problem
{
    auto const lower = Lowercase(name);
    ProblemFamily family{};
    std::string_view rest;
    if (lower.rfind("sdtlz", 0) == 0) {
        family = ProblemFamily::Sdtlz;
        rest = std::string_view(lower).substr(5);
    } else if (lower.rfind("idtlz", 0) == 0) {
        family = ProblemFamily::Idtlz;
        rest = std::string_view(lower).substr(5);
    } else if (lower.rfind("dtlz", 0) == 0) {
        family = ProblemFamily::Dtlz;
        rest = std::string_view(lower).substr(4);
    } else {
        throw ConfigError("unknown problem '" + std::string(name) + "'", "problem");
    }
    if (rest.size() != 1 || rest[0] < '1' || rest[0] > '9') {
        throw ConfigError("unknown problem '" + std::string(name) + "'", "problem");
    }
    auto const index = rest[0] - '0';
    if (index > MaxIndex(family)) {
        throw ConfigError("unknown problem '" + std::string(name) + "'", "problem");
    }
    return Problem(family, index, m);
}

auto MakeProblemFromKey(std::string_view key) -> Problem
{
    auto const pos = key.rfind("-m");
    if (pos == std::string_view::npos || pos + 2 >= key.size()) {
        throw ConfigError("bad problem key '" + std::string(key) + "', expected e.g. dtlz2-m3", "problem");
    }
    std::size_t m = 0;
    for (auto c : key.substr(pos + 2)) {
        if (c < '0' || c > '9') {
            throw ConfigError("bad problem key '" + std::string(key) + "'", "problem");
        }
        m = m * 10 + static_cast<std::size_t>(c - '0');
    }
    return MakeProblem(key.substr(0, pos), m);
}

auto ProblemNames() -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (auto fam : {ProblemFamily::Dtlz, ProblemFamily::Sdtlz, ProblemFamily::Idtlz}) {
        for (int i = 1; i <= MaxIndex(fam); ++i) {
            out.push_back(ToString(fam) + std::to_string(i));
        }
    }
    return out;
}

} // namespace pbemo
