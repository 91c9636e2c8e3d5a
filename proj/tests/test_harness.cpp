#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pbemo/error.hpp"
#include "pbemo/harness/campaign.hpp"
#include "pbemo/harness/config.hpp"
#include "pbemo/harness/reference_points.hpp"
#include "pbemo/harness/results.hpp"
#include "pbemo/harness/stats.hpp"

using namespace pbemo;
namespace fs = std::filesystem;

namespace {

auto ReadFile(fs::path const& p) -> std::string
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

auto Lines(std::string const& s) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line)) {
        out.push_back(line);
    }
    return out;
}

auto Split(std::string const& s, char sep) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, sep)) {
        out.push_back(cell);
    }
    return out;
}

auto TempDir(std::string const& name) -> fs::path
{
    auto const dir = fs::temp_directory_path() / ("pbemo_test_" + name);
    fs::remove_all(dir);
    return dir;
}

auto SmallConfig() -> ExperimentConfig
{
    return ParseConfig(R"({
        "problems": ["dtlz2-m2"],
        "algorithms": ["rnsga2", "r2nsga2"],
        "normalizations": ["bp", "no"],
        "runs": 2,
        "budget": 1000,
        "checkpoints": [300, 600, 1000],
        "pf_samples": 2000,
        "seed": 5
    })");
}

void CheckConfigError(std::string const& json, std::string const& field, std::string const& text = {})
{
    try {
        (void)ParseConfig(json);
        FAIL("accepted: " << json);
    } catch (ConfigError const& e) {
        CHECK(e.Field() == field);
        if (!text.empty()) {
            CHECK(std::string(e.what()).find(text) != std::string::npos);
        }
    }
}

} // namespace

TEST_SUITE("harness")
{
    TEST_CASE("config defaults")
    {
        auto const cfg = ParseConfig(R"({"problems": ["dtlz2-m3"], "algorithms": ["rnsga2"]})");
        CHECK(cfg.runs == 31);
        CHECK(cfg.budget == 50000);
        CHECK(cfg.algorithms.at(0).config.mu == 100);
        CHECK(cfg.algorithms.at(0).label == "rnsga2");
        CHECK(cfg.roi_radius == 0.1);
        CHECK(cfg.normalizations.size() == 4);
        CHECK(cfg.checkpoints.front() == 1000);
        CHECK(cfg.checkpoints.back() == 50000);
        CHECK(cfg.checkpoints == DefaultCheckpoints(50000));
        auto const grid = DefaultCheckpoints(50000);
        CHECK(grid == std::vector<std::size_t>{1000, 3000, 5000, 8000, 10000, 15000, 20000, 25000, 30000, 35000,
                                               40000, 45000, 50000});
    }

    TEST_CASE("config rejections")
    {
        CheckConfigError(R"({"problems": ["dtlz2-m3"], "algorithms": ["rnsga2"], "checkpoints": [3000, 1000]})",
                         "checkpoints");
        CheckConfigError(R"({"problems": ["dtlz2-m3"], "algorithms": ["nsga3"]})", "algorithms[0]", "nsga3");
        CheckConfigError(R"({"problems": ["dtlz2-m3"], "algorithms": ["rnsga2"], "bogus": 1})", "bogus");
        CheckConfigError(R"({"problems": ["dtlz2-m3"], "algorithms": [{"name": "rnsga2", "detla": 0.3}]})",
                         "algorithms[0].detla");
        CheckConfigError(R"({"problems": ["dtlz2-m3"], "algorithms": ["rnsga2"], "runs": 0})", "runs");
        CheckConfigError(R"({"problems": ["dtlz2-m3"], "algorithms": ["rnsga2"], "budget": 2000,
                             "checkpoints": [1000, 3000]})",
                         "checkpoints");
        CHECK_THROWS_AS(ParseConfig("{not json"), ConfigError);
        CHECK_THROWS_AS(LoadConfig("/nonexistent/config.json"), ConfigError);
    }

    TEST_CASE("canonical json is stable")
    {
        auto const a = CanonicalConfigJson(SmallConfig());
        auto const b = CanonicalConfigJson(ParseConfig(a));
        CHECK(a == b);
        CHECK(Fnv1a64("") == 0xcbf29ce484222325ULL);
        CHECK(Fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    }

    TEST_CASE("reference points")
    {
        auto const d2 = TabulatedReferencePoint(MakeProblem("dtlz2", 3), ReferenceSetting::Balanced);
        REQUIRE(d2);
        CHECK(*d2 == ObjectiveVector{0.8, 0.6, 0.6});
        auto const s2 = TabulatedReferencePoint(MakeProblem("sdtlz2", 3), ReferenceSetting::Balanced);
        REQUIRE(s2);
        CHECK((*s2)[1] == doctest::Approx(6.0));
        CHECK((*s2)[2] == doctest::Approx(60.0));
        auto const i1 = TabulatedReferencePoint(MakeProblem("idtlz1", 5), ReferenceSetting::Extreme);
        REQUIRE(i1);
        CHECK(*i1 == ObjectiveVector{0.03, 0.18, 0.33, 0.03, 0.03});
        CHECK_FALSE(TabulatedReferencePoint(MakeProblem("dtlz7", 5), ReferenceSetting::Balanced));
        CHECK_FALSE(TabulatedReferencePoint(MakeProblem("dtlz2", 2), ReferenceSetting::Balanced));

        auto const r = ReconstructedBalancedPoint(MakeProblem("dtlz2", 2));
        CHECK(r[0] == doctest::Approx(1.2 / std::sqrt(2.0)));
        auto const rs = ReconstructedBalancedPoint(MakeProblem("sdtlz2", 2));
        CHECK(rs[1] == doctest::Approx(12.0 / std::sqrt(2.0)));

        ExperimentConfig cfg;
        cfg.reference_setting = ReferenceSetting::Extreme;
        CHECK_THROWS_AS(ResolveReferencePoint(MakeProblem("dtlz2", 2), cfg), ConfigError);
        cfg.reference_points["dtlz2-m2"] = {0.1, 0.2};
        CHECK(ResolveReferencePoint(MakeProblem("dtlz2", 2), cfg) == ObjectiveVector{0.1, 0.2});
    }

    TEST_CASE("campaign: distinct seeds, shared grids, replay")
    {
        auto const cfg = SmallConfig();
        auto const a = ExecuteCampaign(cfg, 1);
        REQUIRE(a.size() == 8);
        for (auto const& t : a) {
            CHECK(t.Ok());
            REQUIRE(t.records.size() == 3);
            CHECK(t.records[0].evaluations >= 300);
            CHECK(t.records[2].checkpoint == 1000);
        }
        CHECK(a[0].id.seed != a[1].id.seed);
        CHECK(a[0].id.seed == a[2].id.seed); // common random numbers across treatments
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(a[0].records[k].evaluations == a[1].records[k].evaluations);
        }

        auto const b = ExecuteCampaign(cfg, 3);
        REQUIRE(b.size() == a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(RunCsv(a[i]) == RunCsv(b[i]));
            CHECK(FinalCsv(a[i]) == FinalCsv(b[i]));
        }
    }

    TEST_CASE("per-run failures are captured")
    {
        auto cfg = SmallConfig();
        cfg.checkpoints = {300, 1000};
        auto ctx = MakeProblemContext(cfg.problems[0], cfg);
        auto alg = cfg.algorithms[0];
        // the budget stops before the last checkpoint
        auto const t = ExecuteRun(ctx, alg, NormalizationKind::BA, 0, 1, {300, 5000}, 1000);
        CHECK_FALSE(t.Ok());
        CHECK(t.records.empty());
    }

    TEST_CASE("r-nsga-ii with NO on dtlz2 reaches the 1e-3 range")
    {
        auto const cfg = ParseConfig(R"({
            "problems": ["dtlz2-m2"], "algorithms": ["rnsga2"], "normalizations": ["no"],
            "runs": 31, "budget": 50000, "checkpoints": [50000], "seed": 2024
        })");
        auto const traces = ExecuteCampaign(cfg, DefaultWorkerCount());
        std::vector<double> finals;
        for (auto const& t : traces) {
            REQUIRE(t.Ok());
            finals.push_back(t.records.back().igd_plus_c);
        }
        auto const mean = Mean(finals);
        MESSAGE("mean final IGD+C = " << mean);
        CHECK(mean > 1e-4);
        CHECK(mean < 1e-2);
    }

    TEST_CASE("midranks and friedman ranks")
    {
        CHECK(Midranks(std::vector{0.3, 0.1, 0.2}) == std::vector{3.0, 1.0, 2.0});
        CHECK(Midranks(std::vector{0.5, 0.5, 0.1}) == std::vector{2.5, 2.5, 1.0});

        MeanTable better{{{"p1", "A"}, 0.1}, {{"p1", "B"}, 0.2}, {{"p2", "A"}, 1.0}, {{"p2", "B"}, 3.0}};
        CHECK(FriedmanAverageRanks({"p1", "p2"}, {"A", "B"}, better) == std::vector{1.0, 2.0});

        MeanTable tie{{{"p1", "A"}, 0.1}, {{"p1", "B"}, 0.1}};
        CHECK(FriedmanAverageRanks({"p1"}, {"A", "B"}, tie) == std::vector{1.5, 1.5});

        MeanTable missing{{{"p1", "A"}, 0.1}, {{"p1", "B"}, 0.2}, {{"p2", "A"}, 1.0}};
        CHECK_THROWS_AS(FriedmanAverageRanks({"p1", "p2"}, {"A", "B"}, missing), IncompleteDesignError);
    }

    TEST_CASE("friedman ranks on a 4 x 7 table")
    {
        // hand ranks per problem (A, B, C, D):
        // p1 1 2 3 4 | p2 4 3 2 1 | p3 1.5 1.5 3.5 3.5 | p4 2 2 2 4
        // p5 2 1 4 3 | p6 3 4 1 2 | p7 2.5 2.5 2.5 2.5
        // sums 16 16 18 20, averages over 7 problems
        std::vector<std::string> const probs{"p1", "p2", "p3", "p4", "p5", "p6", "p7"};
        std::vector<std::string> const treats{"A", "B", "C", "D"};
        std::vector<std::vector<double>> const means{{1, 2, 3, 4},     {4, 3, 2, 1}, {0.5, 0.5, 0.7, 0.7},
                                                     {1, 1, 1, 9},     {2, 1, 4, 3}, {0.3, 0.4, 0.1, 0.2},
                                                     {7, 7, 7, 7}};
        MeanTable table;
        for (std::size_t p = 0; p < 7; ++p) {
            for (std::size_t t = 0; t < 4; ++t) {
                table[{probs[p], treats[t]}] = means[p][t];
            }
        }
        auto const r = FriedmanAverageRanks(probs, treats, table);
        CHECK(r == std::vector{16.0 / 7, 16.0 / 7, 18.0 / 7, 20.0 / 7});
    }

    TEST_CASE("write results")
    {
        auto const cfg = SmallConfig();

        auto const empty_dir = TempDir("empty");
        auto const files = WriteResults(cfg, {}, empty_dir);
        CHECK(files == std::vector<std::string>{"manifest.json"});
        std::size_t entries = 0;
        for ([[maybe_unused]] auto const& e : fs::directory_iterator(empty_dir)) {
            ++entries;
        }
        CHECK(entries == 1);
        CHECK(ReadFile(empty_dir / "manifest.json").find("\"runs\": []") != std::string::npos);

        auto const traces = ExecuteCampaign(cfg, 1);
        auto const dir = TempDir("full");
        WriteResults(cfg, traces, dir);

        auto const run_lines = Lines(ReadFile(dir / "runs" / (traces[0].id.FileStem() + ".csv")));
        CHECK(run_lines.size() == 1 + cfg.checkpoints.size());

        auto const summary = Lines(ReadFile(dir / "summary.csv"));
        auto const header = Split(summary.at(0), ',');
        for (auto const* col : {"problem", "m", "treatment", "mean_igdpc", "std_igdpc", "rank"}) {
            CHECK(std::find(header.begin(), header.end(), col) != header.end());
        }
        // 4 treatments x 3 checkpoints
        CHECK(summary.size() == 1 + 12);

        // summary means equal a recomputation from the per-run files
        auto const back = ReadRunDirectory(dir);
        REQUIRE(back.size() == traces.size());
        std::map<std::pair<std::string, std::size_t>, std::vector<double>> igd;
        for (auto const& t : back) {
            for (auto const& r : t.records) {
                igd[{t.id.Treatment(), r.checkpoint}].push_back(r.igd_plus_c);
            }
        }
        auto const col = [&](char const* name) {
            return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
        };
        std::map<std::tuple<std::size_t>, std::vector<double>> ranks_by_cp;
        for (std::size_t i = 1; i < summary.size(); ++i) {
            auto const cells = Split(summary[i], ',');
            auto const& v = igd.at({cells[col("treatment")], std::stoul(cells[col("checkpoint")])});
            double s = 0.0;
            for (auto x : v) {
                s += x;
            }
            CHECK(std::fabs(std::stod(cells[col("mean_igdpc")]) - s / v.size()) <= 1e-12);
            ranks_by_cp[{std::stoul(cells[col("checkpoint")])}].push_back(std::stod(cells[col("rank")]));
        }
        for (auto& [cp, r] : ranks_by_cp) {
            double total = 0.0;
            for (auto x : r) {
                CHECK(x >= 1.0);
                CHECK(x <= 4.0);
                total += x;
            }
            CHECK(total == doctest::Approx(10.0)); // 1 + 2 + 3 + 4
        }

        auto const ranks = Lines(ReadFile(dir / "ranks.csv"));
        CHECK(ranks.size() == 1 + 12);

        auto const rows = RankTable(back, "dtlz", 1000);
        CHECK(rows.size() == 4);

        // treatment "y-no" never ran dtlz5
        auto fake = [](std::string problem, std::string alg, double v) {
            RunTrace t;
            t.id = RunIdentity{std::move(problem), 2, std::move(alg), "no", 0, 1};
            CheckpointRecord r;
            r.checkpoint = 1000;
            r.igd_plus_c = v;
            t.records.push_back(r);
            return t;
        };
        std::vector<RunTrace> const holes{fake("dtlz2", "x", 0.1), fake("dtlz2", "y", 0.2), fake("dtlz5", "x", 0.3)};
        CHECK_THROWS_AS(RankTable(holes, "dtlz", 1000), IncompleteDesignError);
        fs::remove_all(empty_dir);
        fs::remove_all(dir);
    }

    TEST_CASE("format double round trips")
    {
        for (double v : {0.1, 1e-300, 123456.789, -2.5}) {
            CHECK(std::stod(FormatDouble(v)) == v);
        }
        CHECK(FormatDouble(std::nan("")) == "nan");
        CHECK(FormatVector({1.5, 2}) == "1.5;2");
    }
}
