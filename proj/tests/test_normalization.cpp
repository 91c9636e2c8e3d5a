#include <doctest.h>

#include <algorithm>
#include <vector>

#include "pbemo/error.hpp"
#include "pbemo/normalization.hpp"
#include "pbemo/ranking.hpp"

using namespace pbemo;

namespace {

using Objs = std::vector<ObjectiveVector>;

auto RandomObjs(RandomEngine& rng, std::size_t count, std::size_t m) -> Objs
{
    Objs out(count, ObjectiveVector(m));
    for (auto& f : out) {
        for (auto& v : f) {
            v = rng.Uniform(-5.0, 5.0);
        }
    }
    return out;
}

} // namespace

TEST_SUITE("normalization")
{
    TEST_CASE("population ideal and nadir")
    {
        Objs two{{1, 2}, {2, 1}};
        CHECK(EstimateIdealPop(two) == ObjectiveVector{1, 1});
        CHECK(EstimateNadirPop(two) == ObjectiveVector{2, 2});
        Objs single{{3, 4}};
        CHECK(EstimateIdealPop(single) == ObjectiveVector{3, 4});
        CHECK(EstimateNadirPop(single) == ObjectiveVector{3, 4});
        Objs none;
        CHECK_THROWS_AS(EstimateIdealPop(none), ArgumentError);

        RandomEngine rng(1);
        auto const objs = RandomObjs(rng, 200, 5);
        ObjectiveVector lo(5, 1e300), hi(5, -1e300);
        for (auto const& f : objs) {
            for (int i = 0; i < 5; ++i) {
                lo[i] = std::min(lo[i], f[i]);
                hi[i] = std::max(hi[i], f[i]);
            }
        }
        CHECK(EstimateIdealPop(objs) == lo);
        CHECK(EstimateNadirPop(objs) == hi);
    }

    TEST_CASE("best-so-far ideal")
    {
        NormalizationState s(NormalizationKind::BP, 2);
        Objs first{{1, 3}, {2, 1}};
        CHECK(s.UpdateIdealBestSoFar(first) == ObjectiveVector{1, 1});
        Objs batch{{2, 0}, {3, 5}};
        CHECK(s.UpdateIdealBestSoFar(batch) == ObjectiveVector{1, 0});

        RandomEngine rng(2);
        NormalizationState r(NormalizationKind::BA, 3);
        Objs all;
        for (int b = 0; b < 50; ++b) {
            auto const x = RandomObjs(rng, 10, 3);
            all.insert(all.end(), x.begin(), x.end());
            r.UpdateIdealBestSoFar(x);
            CHECK(r.BestSoFarMin() == EstimateIdealPop(all));
        }
    }

    TEST_CASE("bounded archive examples")
    {
        Objs x{{0, 1}, {1, 0}};
        auto const b = UpdateBoundedArchive({}, x);
        CHECK(b == Objs{{1, 0}, {0, 1}});
        CHECK(EstimateNadirArchive(b) == ObjectiveVector{1, 1});

        // every new point is dominated by B: maxima stay put
        Objs worse{{1.5, 0.5}, {0.5, 1.5}};
        Objs start{{1, 0}, {0, 1}, {0.4, 0.4}};
        auto const b0 = UpdateBoundedArchive({}, start);
        Objs dominated{{1.2, 0.1}, {0.1, 1.2}, {0.5, 0.5}};
        auto const b1 = UpdateBoundedArchive(b0, dominated);
        CHECK(EstimateNadirArchive(b1) == EstimateNadirArchive(b0));

        CHECK(EstimateNadirArchive(Objs{{2, 7}}) == ObjectiveVector{2, 7});
        CHECK_THROWS_AS(EstimateNadirArchive({}), StateError);
        Objs none;
        CHECK_THROWS_AS(UpdateBoundedArchive(b0, none), ArgumentError);
    }

    TEST_CASE("bounded archive update follows its definition")
    {
        // literal form: Y = non-dominated members of B ++ X, then the first argmax per objective
        auto literal = [](Objs const& b, Objs const& x) {
            Objs merged = b;
            merged.insert(merged.end(), x.begin(), x.end());
            auto const y = NondominatedIndices(merged);
            Objs out;
            for (std::size_t i = 0; i < merged.front().size(); ++i) {
                auto best = y.front();
                for (auto j : y) {
                    if (merged[j][i] > merged[best][i]) {
                        best = j;
                    }
                }
                out.push_back(merged[best]);
            }
            return out;
        };
        RandomEngine rng(31);
        for (int t = 0; t < 300; ++t) {
            auto const m = 2 + rng.Below(5);
            bool const coarse = rng.Below(2) == 0;
            Objs b;
            for (int batch = 0; batch < 10; ++batch) {
                Objs x(1 + rng.Below(40), ObjectiveVector(m));
                for (auto& f : x) {
                    for (auto& v : f) {
                        v = coarse ? static_cast<double>(rng.Below(4)) : rng.Uniform01();
                    }
                }
                auto const expect = literal(b, x);
                b = UpdateBoundedArchive(b, x);
                REQUIRE(b == expect);
            }
        }
    }

    TEST_CASE("bounded archive equals the unbounded archive for two objectives")
    {
        // general streams, dominated points included; the oracle keeps every
        // non-dominated point seen so far
        RandomEngine rng(3);
        for (int scenario = 0; scenario < 20; ++scenario) {
            Objs archive;
            Objs unbounded;
            for (int batch = 0; batch < 100; ++batch) {
                auto const x = RandomObjs(rng, 100, 2);
                archive = UpdateBoundedArchive(archive, x);
                Objs u = unbounded;
                u.insert(u.end(), x.begin(), x.end());
                unbounded.clear();
                for (auto i : NondominatedIndices(u)) {
                    unbounded.push_back(u[i]);
                }
                REQUIRE(EstimateNadirArchive(archive) == EstimateNadirPop(unbounded));
            }
        }
    }

    TEST_CASE("bounded archive can differ from the unbounded archive for three objectives")
    {
        // (1.1, .55, .55) is dominated by (.5, .5, .5), which the bounded archive dropped
        Objs a{{0.5, 0.5, 0.5}, {1, 0, 0.6}, {0, 1, 0.6}, {0.6, 0, 1}};
        Objs x{{1.1, 0.55, 0.55}};
        auto const b = UpdateBoundedArchive(UpdateBoundedArchive({}, a), x);
        CHECK(EstimateNadirArchive(b) == ObjectiveVector{1.1, 1, 1});

        Objs all = a;
        all.push_back(x[0]);
        Objs nd;
        for (auto i : NondominatedIndices(all)) {
            nd.push_back(all[i]);
        }
        CHECK(EstimateNadirPop(nd) == ObjectiveVector{1, 1, 1});
    }

    TEST_CASE("normalize value")
    {
        ObjectiveVector lb{1, 2}, ub{3, 6};
        CHECK(NormalizeValue(lb, lb, ub) == ObjectiveVector{0, 0});
        CHECK(NormalizeValue(ub, lb, ub) == ObjectiveVector{1, 1});
        CHECK(NormalizeValue(ObjectiveVector{2, 4}, lb, ub) == ObjectiveVector{0.5, 0.5});
        CHECK(DenormalizeValue(ObjectiveVector{0.5, 0.5}, lb, ub) == ObjectiveVector{2, 4});
        // collapsed range does not divide by zero
        auto const v = NormalizeValue(ObjectiveVector{1, 2}, ObjectiveVector{1, 1}, ObjectiveVector{1, 1});
        CHECK(v[0] == 0.0);
        CHECK(v[1] == doctest::Approx(1.0 / kEpsDen));
    }

    TEST_CASE("NO and PP states")
    {
        NormalizationState no(NormalizationKind::NO, 2);
        Objs p{{3, 7}, {5, 1}};
        no.Update(p, {});
        CHECK(no.Normalize(ObjectiveVector{3.5, -2}) == ObjectiveVector{3.5, -2});

        NormalizationState pp(NormalizationKind::PP, 2);
        CHECK_FALSE(pp.Initialized());
        Objs q{{0.5, 9}};
        pp.Update(p, q);
        CHECK(pp.Initialized());
        CHECK(pp.ZLb() == ObjectiveVector{0.5, 1});
        CHECK(pp.ZUb() == ObjectiveVector{5, 9});
        Objs later{{4, 4}, {4.5, 3}};
        pp.Update(later, {});
        CHECK(pp.ZLb() == ObjectiveVector{4, 3});
        CHECK(pp.ZUb() == ObjectiveVector{4.5, 4});
    }

    TEST_CASE("BP keeps the best ideal but tracks the population nadir")
    {
        NormalizationState bp(NormalizationKind::BP, 2);
        Objs p0{{1, 4}, {4, 1}};
        bp.Update(p0, {});
        Objs p1{{2, 3}, {3, 2}};
        bp.Update(p1, {});
        CHECK(bp.ZLb() == ObjectiveVector{1, 1});
        CHECK(bp.ZUb() == ObjectiveVector{3, 3});
    }

    TEST_CASE("BA hand-traced three generations")
    {
        NormalizationState ba(NormalizationKind::BA, 2);
        // generation 0: (3,3) is dominated by (2,2)
        Objs p0{{1, 4}, {2, 2}, {4, 1}, {3, 3}};
        ba.Update(p0, {});
        CHECK(ba.ZLb() == ObjectiveVector{1, 1});
        CHECK(ba.Archive() == Objs{{4, 1}, {1, 4}});
        CHECK(ba.ZUb() == ObjectiveVector{4, 4});

        // generation 1: two new extremes and one dominated offspring
        Objs p1{{1, 4}, {2, 2}, {4, 1}, {0.5, 5}};
        Objs q1{{0.5, 5}, {5, 0.5}, {6, 6}};
        ba.Update(p1, q1);
        CHECK(ba.ZLb() == ObjectiveVector{0.5, 0.5});
        CHECK(ba.Archive() == Objs{{5, 0.5}, {0.5, 5}});
        CHECK(ba.ZUb() == ObjectiveVector{5, 5});

        // generation 2: both archived extremes are dominated, the nadir shrinks
        Objs p2{{0.2, 4.5}, {3, 0.3}};
        Objs q2{{0.2, 4.5}, {3, 0.3}};
        ba.Update(p2, q2);
        CHECK(ba.ZLb() == ObjectiveVector{0.2, 0.3});
        CHECK(ba.Archive() == Objs{{3, 0.3}, {0.2, 4.5}});
        CHECK(ba.ZUb() == ObjectiveVector{3, 4.5});
    }

    TEST_CASE("true scaler and parsing")
    {
        CHECK_THROWS_AS(TrueScaler(ObjectiveVector{0, 0}, ObjectiveVector{1, 0}), ArgumentError);
        CHECK_NOTHROW(TrueScaler(ObjectiveVector{0, 0}, ObjectiveVector{1, 2}));
        CHECK(ParseNormalizationKind("ba") == NormalizationKind::BA);
        CHECK(ToString(NormalizationKind::NO) == "no");
        CHECK_THROWS_AS(ParseNormalizationKind("xx"), ConfigError);
    }
}
