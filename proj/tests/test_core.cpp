#include <doctest.h>

#include <cmath>
#include <vector>

#include "pbemo/core.hpp"
#include "pbemo/error.hpp"

using namespace pbemo;

TEST_SUITE("core")
{
    TEST_CASE("euclidean distance small cases")
    {
        CHECK(EuclideanDistance(std::vector{0.0, 0.0}, std::vector{0.0, 0.0}) == 0.0);
        CHECK(EuclideanDistance(std::vector{0.0, 0.0}, std::vector{3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-15));
        CHECK_THROWS_AS(EuclideanDistance(std::vector{0.0}, std::vector{0.0, 1.0}), DimensionError);
    }

    TEST_CASE("euclidean distance against compensated long double sum")
    {
        RandomEngine rng(11);
        for (int t = 0; t < 500; ++t) {
            std::vector<double> a(6), b(6);
            for (int i = 0; i < 6; ++i) {
                a[i] = rng.Uniform(-100.0, 100.0);
                b[i] = rng.Uniform(-100.0, 100.0);
            }
            // Kahan summation in long double
            long double sum = 0.0L, c = 0.0L;
            for (int i = 0; i < 6; ++i) {
                long double d = static_cast<long double>(a[i]) - b[i];
                long double y = d * d - c;
                long double s = sum + y;
                c = (s - sum) - y;
                sum = s;
            }
            auto const oracle = static_cast<double>(std::sqrt(sum));
            CHECK(std::fabs(EuclideanDistance(a, b) - oracle) <= 1e-12 * oracle);
        }
    }

    TEST_CASE("triangle inequality on random triples")
    {
        RandomEngine rng(12);
        for (int t = 0; t < 1000; ++t) {
            std::vector<double> a(4), b(4), c(4);
            for (int i = 0; i < 4; ++i) {
                a[i] = rng.Uniform(-1, 1);
                b[i] = rng.Uniform(-1, 1);
                c[i] = rng.Uniform(-1, 1);
            }
            auto const ab = EuclideanDistance(a, b);
            auto const bc = EuclideanDistance(b, c);
            auto const ac = EuclideanDistance(a, c);
            CHECK(ac <= (ab + bc) * (1 + 1e-12));
        }
    }

    TEST_CASE("rng uniform")
    {
        RandomEngine rng(42);
        CHECK(RngUniform(rng, 0.5, 0.5) == 0.5);
        CHECK_THROWS_AS(rng.Uniform(1.0, 0.0), ArgumentError);
        CHECK_THROWS_AS(rng.Below(0), ArgumentError);

        RandomEngine a(42), b(42);
        CHECK(a.Uniform01() == b.Uniform01());

        RandomEngine c(7);
        double sum = 0.0;
        for (int i = 0; i < 100000; ++i) {
            auto const u = c.Uniform01();
            REQUIRE(u >= 0.0);
            REQUIRE(u < 1.0);
            sum += u;
        }
        CHECK(std::fabs(sum / 100000 - 0.5) < 0.01);
    }

    TEST_CASE("below is uniform enough and in range")
    {
        RandomEngine rng(3);
        std::vector<int> hist(7, 0);
        for (int i = 0; i < 70000; ++i) {
            auto const k = rng.Below(7);
            REQUIRE(k < 7);
            ++hist[k];
        }
        for (auto h : hist) {
            CHECK(std::abs(h - 10000) < 500);
        }
    }

    TEST_CASE("derived seeds differ per stream")
    {
        CHECK(DeriveSeed(1, 0) != DeriveSeed(1, 1));
        CHECK(DeriveSeed(1, 0) != DeriveSeed(2, 0));
        CHECK(DeriveSeed(5, 9) == DeriveSeed(5, 9));
    }

    TEST_CASE("shuffle is a permutation")
    {
        RandomEngine rng(5);
        std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
        rng.Shuffle(v);
        std::vector<int> seen(8, 0);
        for (auto x : v) {
            ++seen[x];
        }
        for (auto s : seen) {
            CHECK(s == 1);
        }
    }
}
