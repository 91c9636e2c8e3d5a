#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pbemo/error.hpp"
#include "pbemo/pbemo.hpp"

namespace {

constexpr int kConfigFailure = 1;
constexpr int kRuntimeFailure = 2;

auto CmdRun(std::string const& config_path, std::string const& out, std::size_t workers, std::uint64_t const* seed)
    -> int
{
    auto cfg = pbemo::LoadConfig(config_path);
    if (seed != nullptr) {
        cfg.seed = *seed;
    }
    std::size_t done = 0;
    std::size_t total = cfg.problems.size() * cfg.algorithms.size() * cfg.normalizations.size() * cfg.runs;
    auto const traces = pbemo::ExecuteCampaign(cfg, workers, [&](pbemo::RunTrace const& t) {
        ++done;
        std::cerr << "[" << done << "/" << total << "] " << t.id.FileStem();
        if (!t.Ok()) {
            std::cerr << " FAILED: " << t.error;
        }
        std::cerr << "\n";
    });
    auto const files = pbemo::WriteResults(cfg, traces, out);
    std::size_t failed = 0;
    for (auto const& t : traces) {
        failed += t.Ok() ? 0 : 1;
    }
    std::cout << "wrote " << files.size() << " files to " << out << "\n";
    if (failed > 0) {
        std::cerr << failed << " of " << traces.size() << " runs failed, see manifest.json\n";
        return kRuntimeFailure;
    }
    return 0;
}

auto CmdRank(std::string const& in, std::string const& suite, std::size_t checkpoint) -> int
{
    auto const traces = pbemo::ReadRunDirectory(in);
    auto const rows = pbemo::RankTable(traces, suite, checkpoint);
    if (rows.empty()) {
        std::cerr << "no " << suite << " runs recorded at checkpoint " << checkpoint << " in " << in << "\n";
        return kRuntimeFailure;
    }
    std::cout << pbemo::RanksCsv(rows);
    return 0;
}

auto CmdListProblems() -> int
{
    for (auto const& name : pbemo::ProblemNames()) {
        auto const p = pbemo::MakeProblem(name, 3);
        std::cout << name << "  (m=3: n=" << p.N() << ")\n";
    }
    return 0;
}

auto CmdValidate(std::string const& config_path) -> int
{
    auto const cfg = pbemo::LoadConfig(config_path);
    // resolving every reference point catches missing extreme rows early
    for (auto const& spec : cfg.problems) {
        auto const problem = pbemo::MakeProblem(spec.name, spec.m);
        auto const z = pbemo::ResolveReferencePoint(problem, cfg);
        std::cout << spec.Key() << " z=" << pbemo::FormatVector(z) << "\n";
    }
    std::cout << "ok: " << cfg.problems.size() << " problems, " << cfg.algorithms.size() << " algorithms, "
              << cfg.normalizations.size() << " normalizations, " << cfg.runs << " runs\n";
    return 0;
}

} // namespace

auto main(int argc, char** argv) -> int
{
    CLI::App app{"pbemo: preference-based EMO normalization experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "results";
    std::size_t workers = pbemo::DefaultWorkerCount();
    std::uint64_t seed = 0;
    auto* run = app.add_subcommand("run", "execute a campaign and write CSV results");
    run->add_option("--config", config_path, "JSON experiment config")->required()->check(CLI::ExistingFile);
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--workers", workers, "parallel runs (default: PBEMO_WORKERS or 1)")->check(CLI::PositiveNumber);
    auto* seed_opt = run->add_option("--seed", seed, "base seed, overrides the config");

    std::string in_dir;
    std::string suite;
    std::size_t checkpoint = 0;
    auto* rank = app.add_subcommand("rank", "average Friedman ranks from a results directory");
    rank->add_option("--in", in_dir, "results directory")->required()->check(CLI::ExistingDirectory);
    rank->add_option("--suite", suite, "problem suite")->required()->check(CLI::IsMember({"dtlz", "sdtlz", "idtlz"}));
    rank->add_option("--checkpoint", checkpoint, "evaluation checkpoint")->required();

    auto* list = app.add_subcommand("list-problems", "print the problem registry");

    auto* validate = app.add_subcommand("validate", "parse and check a config");
    validate->add_option("--config", config_path, "JSON experiment config")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        auto const code = app.exit(e);
        return code == 0 ? 0 : kConfigFailure;
    }

    try {
        if (run->parsed()) {
            return CmdRun(config_path, out_dir, workers, seed_opt->count() > 0 ? &seed : nullptr);
        }
        if (rank->parsed()) {
            return CmdRank(in_dir, suite, checkpoint);
        }
        if (list->parsed()) {
            return CmdListProblems();
        }
        if (validate->parsed()) {
            return CmdValidate(config_path);
        }
    } catch (pbemo::ConfigError const& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigFailure;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRuntimeFailure;
    }
    return kRuntimeFailure;
}
