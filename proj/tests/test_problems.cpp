#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "pbemo/error.hpp"
#include "pbemo/problems.hpp"
#include "pbemo/ranking.hpp"

using namespace pbemo;

namespace {

auto Phi(double t) -> double { return t * (1.0 + std::sin(3.0 * std::numbers::pi * t)); }

auto DPhi(double t) -> double
{
    return 1.0 + std::sin(3.0 * std::numbers::pi * t) + 3.0 * std::numbers::pi * t * std::cos(3.0 * std::numbers::pi * t);
}

// x with the distance genes at their optimum (0.5 for all but DTLZ6/7, where it is 0)
auto OptimalX(Problem const& p, std::vector<double> const& pos) -> std::vector<double>
{
    double opt = (p.Index() == 6 || p.Index() == 7) ? 0.0 : 0.5;
    std::vector<double> x(p.N(), opt);
    for (std::size_t i = 0; i < pos.size(); ++i) {
        x[i] = pos[i];
    }
    return x;
}

} // namespace

TEST_SUITE("problems")
{
    TEST_CASE("dimensions and reference vectors")
    {
        auto const p = MakeProblem("dtlz2", 3);
        CHECK(p.N() == 12);
        CHECK(p.Ideal() == std::vector{0.0, 0.0, 0.0});
        CHECK(p.Nadir() == std::vector{1.0, 1.0, 1.0});
        CHECK(MakeProblem("dtlz1", 3).N() == 7);
        CHECK(MakeProblem("dtlz7", 3).N() == 22);

        auto const s = MakeProblem("SDTLZ2", 3);
        CHECK(s.Nadir() == std::vector{1.0, 10.0, 100.0});
        CHECK(s.Key() == "sdtlz2-m3");

        auto const d5 = MakeProblem("dtlz5", 3);
        auto const c = 1.0 / std::sqrt(2.0);
        CHECK(d5.Nadir()[0] == doctest::Approx(c));
        CHECK(d5.Nadir()[1] == doctest::Approx(c));
        CHECK(d5.Nadir()[2] == doctest::Approx(1.0));
    }

    TEST_CASE("registry")
    {
        CHECK(ProblemNames().size() == 15);
        CHECK(MakeProblemFromKey("idtlz3-m5").M() == 5);
        CHECK(MakeProblemFromKey("idtlz3-m5").Family() == ProblemFamily::Idtlz);
        CHECK_THROWS_AS(MakeProblem("dtlz8", 3), ConfigError);
        CHECK_THROWS_AS(MakeProblem("sdtlz5", 3), ConfigError);
        CHECK_THROWS_AS(MakeProblem("dtlz2", 1), ConfigError);
        CHECK_THROWS_AS(MakeProblemFromKey("dtlz2m3"), ConfigError);
    }

    TEST_CASE("evaluate rejects bad input")
    {
        auto const p = MakeProblem("dtlz2", 2);
        CHECK_THROWS_AS((void)p.Evaluate(std::vector<double>(3, 0.5)), DimensionError);
        std::vector<double> x(p.N(), 0.5);
        x[0] = 1.5;
        CHECK_THROWS_AS((void)p.Evaluate(x), PreconditionError);
        x[0] = std::nan("");
        CHECK_THROWS_AS((void)p.Evaluate(x), PreconditionError);
    }

    TEST_CASE("dtlz1 known points")
    {
        auto const p = MakeProblem("dtlz1", 2);
        auto const f = p.Evaluate(std::vector<double>(p.N(), 0.5));
        CHECK(f[0] == doctest::Approx(0.25));
        CHECK(f[1] == doctest::Approx(0.25));

        RandomEngine rng(1);
        for (int t = 0; t < 100; ++t) {
            auto const g0 = p.Evaluate(OptimalX(p, {rng.Uniform01()}));
            CHECK(g0[0] + g0[1] == doctest::Approx(0.5).epsilon(1e-12));
        }
    }

    TEST_CASE("dtlz2 boundary angle and sdtlz scaling")
    {
        auto const p = MakeProblem("dtlz2", 2);
        auto const f = p.Evaluate(OptimalX(p, {0.0}));
        CHECK(f[0] == doctest::Approx(1.0));
        CHECK(std::fabs(f[1]) < 1e-15);

        auto const d = MakeProblem("dtlz2", 3);
        auto const s = MakeProblem("sdtlz2", 3);
        RandomEngine rng(2);
        for (int t = 0; t < 50; ++t) {
            std::vector<double> x(d.N());
            for (auto& v : x) {
                v = rng.Uniform01();
            }
            auto const fd = d.Evaluate(x);
            auto const fs = s.Evaluate(x);
            CHECK(fs[0] == doctest::Approx(fd[0]));
            CHECK(fs[1] == doctest::Approx(10 * fd[1]));
            CHECK(fs[2] == doctest::Approx(100 * fd[2]));
        }
    }

    TEST_CASE("idtlz inverts the front")
    {
        auto const d = MakeProblem("dtlz1", 3);
        auto const i = MakeProblem("idtlz1", 3);
        RandomEngine rng(4);
        std::vector<double> x(d.N());
        for (auto& v : x) {
            v = rng.Uniform01();
        }
        auto const fd = d.Evaluate(x);
        auto const fi = i.Evaluate(x);
        // recover 1 + g from the DTLZ1 sum: sum f = 0.5 (1 + g)
        auto const half_one_plus_g = fd[0] + fd[1] + fd[2];
        for (int k = 0; k < 3; ++k) {
            CHECK(fi[k] == doctest::Approx(half_one_plus_g - fd[k]));
        }
    }

    TEST_CASE("pf samples: spheres, planes and inverted planes")
    {
        RandomEngine rng(9);
        auto const circle = MakeProblem("dtlz2", 2).SamplePf(5, rng);
        CHECK(circle.size() == 5);
        for (auto const& f : circle) {
            CHECK(f[0] * f[0] + f[1] * f[1] == doctest::Approx(1.0).epsilon(1e-9));
        }
        auto const inv = MakeProblem("idtlz1", 3).SamplePf(100, rng);
        CHECK(inv.size() == 100);
        for (auto const& f : inv) {
            // inverted plane: sum f' = 0.5 m - 0.5 = 1 for m = 3, each f' in [0, 0.5]
            CHECK(std::fabs(f[0] + f[1] + f[2] - 1.0) < 1e-9);
            for (auto v : f) {
                CHECK(v >= -1e-12);
                CHECK(v <= 0.5 + 1e-12);
            }
        }
        auto const d5 = MakeProblem("dtlz5", 3).SamplePf(50, rng);
        for (auto const& f : d5) {
            CHECK(f[0] == doctest::Approx(f[1]));
            CHECK(f[0] * f[0] + f[1] * f[1] + f[2] * f[2] == doctest::Approx(1.0));
        }
    }

    TEST_CASE("pf samples lie inside [ideal, nadir] for every problem")
    {
        for (auto const& name : ProblemNames()) {
            for (std::size_t m : {2, 3, 5}) {
                auto const p = MakeProblem(name, m);
                RandomEngine rng(DeriveSeed(77, m));
                auto const s = p.SamplePf(200, rng);
                CHECK(!s.empty());
                for (auto const& f : s) {
                    for (std::size_t i = 0; i < m; ++i) {
                        CHECK(f[i] >= p.Ideal()[i] - 1e-9);
                        CHECK(f[i] <= p.Nadir()[i] * (1 + 1e-9) + 1e-9);
                    }
                }
            }
        }
    }

    TEST_CASE("dtlz7 front sample is mutually non-dominated")
    {
        RandomEngine rng(10);
        auto const s = MakeProblem("dtlz7", 2).SamplePf(1000, rng);
        CHECK(s.size() > 900);
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (std::size_t b = 0; b < s.size(); ++b) {
                if (a != b && Dominates(s[a], s[b])) {
                    FAIL("dominated member in the dtlz7 sample");
                }
            }
        }
    }

    TEST_CASE("dtlz7 constants")
    {
        using namespace dtlz7;
        // t1 and t* are stationary points of t (1 + sin 3 pi t); t2 ties with t1
        CHECK(std::fabs(DPhi(kT1)) < 1e-9);
        CHECK(std::fabs(DPhi(kTStar)) < 1e-9);
        CHECK(std::fabs(Phi(kT2) - Phi(kT1)) < 1e-12);
        CHECK(kPhiStar == doctest::Approx(Phi(kTStar)).epsilon(1e-14));
        // record scan: nothing in [0, 1] beats phi(t*)
        for (int i = 0; i <= 100000; ++i) {
            REQUIRE(Phi(i / 100000.0) <= kPhiStar + 1e-12);
        }
        auto const p = MakeProblem("dtlz7", 3);
        CHECK(p.Ideal()[2] == doctest::Approx(6.0 - 2.0 * kPhiStar));
        CHECK(p.Nadir()[0] == doctest::Approx(kTStar));
        CHECK(p.Nadir()[2] == doctest::Approx(6.0));
    }
}
