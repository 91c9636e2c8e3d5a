#include "pbemo/harness/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "pbemo/error.hpp"
#include "pbemo/harness/reference_points.hpp"

namespace pbemo {

auto RunIdentity::FileStem() const -> std::string
{
    return ProblemKey() + "__" + Treatment() + "__run" + std::to_string(run);
}

auto MakeProblemContext(ProblemSpec const& spec, ExperimentConfig const& cfg) -> ProblemContext
{
    auto problem = MakeProblem(spec.name, spec.m);
    auto z = ResolveReferencePoint(problem, cfg);
    TrueScaler scaler(problem.Ideal(), problem.Nadir());
    // the front sample depends on the problem only, never on the campaign seed
    RandomEngine engine(DeriveSeed(Fnv1a64(problem.Key()), 0));
    auto const samples = problem.SamplePf(cfg.pf_samples, engine);
    auto roi = BuildRoiReferenceSet(samples, z, cfg.roi_radius, scaler);
    return ProblemContext{std::move(problem), std::move(z), std::move(scaler), std::move(roi)};
}

auto RunSeed(std::uint64_t base, std::size_t run) -> std::uint64_t
{
    return DeriveSeed(base, run);
}

auto DefaultWorkerCount() -> std::size_t
{
    if (char const* env = std::getenv("PBEMO_WORKERS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        auto const v = std::strtoul(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) {
            return v;
        }
    }
    return 1;
}

auto ExecuteRun(ProblemContext const& ctx, AlgorithmEntry const& alg, NormalizationKind normalization,
                std::size_t run, std::uint64_t seed, std::vector<std::size_t> const& checkpoints, std::size_t budget)
    -> RunTrace
{
    RunTrace trace;
    trace.id = RunIdentity{ctx.problem.Name(), ctx.problem.M(), alg.label, ToString(normalization), run, seed};
    try {
        auto cfg = alg.config;
        cfg.reference_point = ctx.reference_point;
        Optimizer opt(ctx.problem, cfg, normalization, seed);
        opt.Initialize();

        std::size_t next = 0;
        auto record = [&] {
            while (next < checkpoints.size() && opt.Evaluations() >= checkpoints[next]) {
                auto const objs = opt.Objectives();
                auto const& st = opt.State();
                CheckpointRecord rec;
                rec.checkpoint = checkpoints[next];
                rec.evaluations = opt.Evaluations();
                rec.igd_plus_c = IgdPlusC(objs, ctx.roi, ctx.scaler);
                rec.e_ideal = EIdeal(st.ZLb(), ctx.scaler);
                rec.e_nadir = ENadir(st.ZUb(), ctx.scaler);
                rec.ore = Ore(st.ZLb(), st.ZUb(), ctx.scaler);
                rec.z_lb = st.ZLb();
                rec.z_ub = st.ZUb();
                trace.records.push_back(std::move(rec));
                ++next;
            }
        };
        record();
        while (next < checkpoints.size() && opt.Step(budget)) {
            record();
        }
        while (opt.Step(budget)) {
        }
        if (next < checkpoints.size()) {
            throw StateError("budget exhausted before checkpoint " + std::to_string(checkpoints[next]));
        }
        trace.final_objectives = opt.Objectives();
    } catch (std::exception const& e) {
        trace.error = e.what();
        trace.records.clear();
        trace.final_objectives.clear();
    }
    return trace;
}

auto ExecuteCampaign(ExperimentConfig const& cfg, std::size_t workers,
                     std::function<void(RunTrace const&)> const& on_done) -> std::vector<RunTrace>
{
    Validate(cfg);
    std::vector<ProblemContext> contexts;
    contexts.reserve(cfg.problems.size());
    for (auto const& p : cfg.problems) {
        contexts.push_back(MakeProblemContext(p, cfg));
    }

    struct Task {
        std::size_t problem;
        std::size_t algorithm;
        NormalizationKind normalization;
        std::size_t run;
    };
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < cfg.problems.size(); ++p) {
        for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
            for (auto k : cfg.normalizations) {
                for (std::size_t r = 0; r < cfg.runs; ++r) {
                    tasks.push_back({p, a, k, r});
                }
            }
        }
    }

    std::vector<RunTrace> out(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex report;
    auto work = [&] {
        for (;;) {
            auto const i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            auto const& t = tasks[i];
            out[i] = ExecuteRun(contexts[t.problem], cfg.algorithms[t.algorithm], t.normalization, t.run,
                                RunSeed(cfg.seed, t.run), cfg.checkpoints, cfg.budget);
            if (on_done) {
                std::lock_guard lock(report);
                on_done(out[i]);
            }
        }
    };
    workers = std::max<std::size_t>(1, std::min(workers, tasks.size()));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    return out;
}

} // namespace pbemo
