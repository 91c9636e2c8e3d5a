#include "pbemo/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pbemo/error.hpp"
#include "pbemo/ranking.hpp"

namespace pbemo {

namespace {

auto ObjectivesOf(Population const& pop) -> std::vector<ObjectiveVector>
{
    std::vector<ObjectiveVector> out;
    out.reserve(pop.size());
    for (auto const& ind : pop) {
        out.push_back(ind.f);
    }
    return out;
}

auto ImportanceWeights(AlgorithmConfig const& cfg, std::size_t m) -> ObjectiveVector
{
    if (cfg.weights_w.empty()) {
        return ObjectiveVector(m, 1.0 / static_cast<double>(m));
    }
    return cfg.weights_w;
}

auto SquaredDistance(ObjectiveVector const& a, ObjectiveVector const& b) -> double
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return s;
}

// ascending by key, index breaks ties
void SortByKey(std::vector<std::size_t>& idx, std::vector<double> const& key)
{
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (key[a] != key[b]) {
            return key[a] < key[b];
        }
        return a < b;
    });
}

} // namespace

auto ParseAlgorithmKind(std::string_view s) -> AlgorithmKind
{
    if (s == "nsga2") {
        return AlgorithmKind::Nsga2;
    }
    if (s == "rnsga2") {
        return AlgorithmKind::Rnsga2;
    }
    if (s == "r2nsga2") {
        return AlgorithmKind::R2nsga2;
    }
    if (s == "moead-nums") {
        return AlgorithmKind::MoeadNums;
    }
    throw ConfigError("unknown algorithm '" + std::string(s) + "'", "algorithms");
}

auto ToString(AlgorithmKind kind) -> std::string
{
    switch (kind) {
    case AlgorithmKind::Nsga2: return "nsga2";
    case AlgorithmKind::Rnsga2: return "rnsga2";
    case AlgorithmKind::R2nsga2: return "r2nsga2";
    case AlgorithmKind::MoeadNums: return "moead-nums";
    }
    return "?";
}

void Validate(AlgorithmConfig const& cfg, std::size_t m)
{
    if (cfg.mu < 2 * m) {
        throw ConfigError("mu must be at least 2m", "mu");
    }
    if (cfg.kind != AlgorithmKind::Nsga2 && cfg.reference_point.size() != m) {
        throw ConfigError("reference point must have m = " + std::to_string(m) + " entries", "reference_point");
    }
    for (auto v : cfg.reference_point) {
        if (!std::isfinite(v)) {
            throw ConfigError("reference point must be finite", "reference_point");
        }
    }
    if (!cfg.weights_w.empty()) {
        if (cfg.weights_w.size() != m) {
            throw ConfigError("weights must have m entries", "weights_w");
        }
        double sum = 0.0;
        for (auto v : cfg.weights_w) {
            if (!(v >= 0.0)) {
                throw ConfigError("weights must be non-negative", "weights_w");
            }
            sum += v;
        }
        if (std::fabs(sum - 1.0) > 1e-9) {
            throw ConfigError("weights must sum to 1", "weights_w");
        }
    }
    if (!(cfg.epsilon_clear >= 0.0)) {
        throw ConfigError("must be non-negative", "epsilon_clear");
    }
    if (!(cfg.delta >= 0.0 && cfg.delta <= 1.0)) {
        throw ConfigError("must lie in [0, 1]", "delta");
    }
    if (!(cfg.tau > 0.0 && cfg.tau <= 1.0)) {
        throw ConfigError("must lie in (0, 1]", "tau");
    }
    if (!(cfg.rho > 0.0)) {
        throw ConfigError("must be positive", "rho");
    }
    if (!(cfg.neighborhood_prob >= 0.0 && cfg.neighborhood_prob <= 1.0)) {
        throw ConfigError("must lie in [0, 1]", "neighborhood_prob");
    }
    if (cfg.kind == AlgorithmKind::MoeadNums) {
        if (cfg.neighborhood_t < 3 || cfg.neighborhood_t > cfg.mu) {
            throw ConfigError("must lie in [3, mu]", "neighborhood_t");
        }
        if (cfg.max_replace < 1) {
            throw ConfigError("must be at least 1", "max_replace");
        }
    }
    Validate(cfg.ga);
    Validate(cfg.de);
}

auto WeightedDistanceDR(std::span<double const> f, std::span<double const> z, std::span<double const> w,
                        std::span<double const> z_lb, std::span<double const> z_ub) -> double
{
    CheckSameLength(f, z, "WeightedDistanceDR");
    CheckSameLength(f, w, "WeightedDistanceDR");
    CheckSameLength(f, z_lb, "WeightedDistanceDR");
    CheckSameLength(f, z_ub, "WeightedDistanceDR");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto const d = (f[i] - z[i]) / std::max(z_ub[i] - z_lb[i], kEpsDen);
        s += w[i] * d * d;
    }
    return std::sqrt(s);
}

auto Aasf(std::span<double const> f, std::span<double const> z, std::span<double const> w, double rho,
          std::span<double const> z_lb, std::span<double const> z_ub) -> double
{
    CheckSameLength(f, w, "Aasf");
    auto const fn = NormalizeValue(f, z_lb, z_ub);
    auto const zn = NormalizeValue(z, z_lb, z_ub);
    double worst = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (std::size_t i = 0; i < fn.size(); ++i) {
        auto const d = fn[i] - zn[i];
        worst = std::max(worst, w[i] * d);
        sum += d;
    }
    return worst + rho * sum;
}

auto RnsgaEnvironmentalSelection(Population const& parents, Population const& offspring,
                                 NormalizationState const& state, AlgorithmConfig const& cfg, RandomEngine& engine)
    -> Population
{
    Population all = parents;
    all.insert(all.end(), offspring.begin(), offspring.end());
    if (all.size() < cfg.mu) {
        throw ArgumentError("RnsgaEnvironmentalSelection: fewer candidates than mu");
    }
    auto const objs = ObjectivesOf(all);
    auto const m = objs.front().size();
    auto const w = ImportanceWeights(cfg, m);
    auto const& lb = state.ZLb();
    auto const& ub = state.ZUb();

    std::vector<double> dr(all.size());
    std::vector<ObjectiveVector> normed(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        dr[i] = WeightedDistanceDR(objs[i], cfg.reference_point, w, lb, ub);
        normed[i] = NormalizeValue(objs[i], lb, ub);
    }
    auto const eps2 = cfg.epsilon_clear * cfg.epsilon_clear;

    auto const partition = NondominatedSort(objs);
    Population out;
    out.reserve(cfg.mu);
    for (std::size_t k = 0; k < partition.fronts.size() && out.size() < cfg.mu; ++k) {
        auto const& front = partition.fronts[k];
        auto visit = front;
        engine.Shuffle(visit);
        std::vector<std::size_t> kept;
        std::vector<std::size_t> cleared;
        std::vector<char> state_of(all.size(), 0); // 0 open, 1 kept, 2 cleared
        for (auto i : visit) {
            if (state_of[i] != 0) {
                continue;
            }
            state_of[i] = 1;
            kept.push_back(i);
            if (cfg.epsilon_clear <= 0.0) {
                continue;
            }
            for (auto j : front) {
                if (state_of[j] == 0 && SquaredDistance(normed[i], normed[j]) < eps2) {
                    state_of[j] = 2;
                    cleared.push_back(j);
                }
            }
        }
        SortByKey(kept, dr);
        SortByKey(cleared, dr);
        kept.insert(kept.end(), cleared.begin(), cleared.end());
        for (auto i : kept) {
            if (out.size() == cfg.mu) {
                break;
            }
            auto ind = all[i];
            ind.rank = k;
            ind.score = dr[i];
            out.push_back(std::move(ind));
        }
    }
    return out;
}

auto MoeadNumsReplacement(Individual const& trial, std::span<std::size_t const> pool, Population& population,
                          WeightSet const& weights, NormalizationState const& state, AlgorithmConfig const& cfg)
    -> std::size_t
{
    std::size_t replaced = 0;
    for (auto j : pool) {
        if (replaced >= cfg.max_replace) {
            break;
        }
        auto const& w = weights.vectors.at(j);
        auto const mine = Aasf(trial.f, cfg.reference_point, w, cfg.rho, state.ZLb(), state.ZUb());
        auto const theirs = Aasf(population.at(j).f, cfg.reference_point, w, cfg.rho, state.ZLb(), state.ZUb());
        if (mine < theirs) {
            population[j] = trial;
            ++replaced;
        }
    }
    return replaced;
}

Optimizer::Optimizer(Problem const& problem, AlgorithmConfig cfg, NormalizationKind normalization, std::uint64_t seed)
    : problem_(problem)
    , cfg_(std::move(cfg))
    , bounds_{problem.Lower(), problem.Upper()}
    , state_(normalization, problem.M())
    , engine_(seed)
{
    Validate(cfg_, problem.M());
}

auto Optimizer::Evaluate(DecisionVector x) -> Individual
{
    Individual ind;
    ind.f = problem_.Evaluate(x);
    ind.x = std::move(x);
    ++evaluations_;
    return ind;
}

auto Optimizer::Objectives() const -> std::vector<ObjectiveVector>
{
    return ObjectivesOf(population_);
}

void Optimizer::Initialize()
{
    population_.clear();
    evaluations_ = 0;
    auto const n = problem_.N();
    for (std::size_t i = 0; i < cfg_.mu; ++i) {
        DecisionVector x(n);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = engine_.Uniform(bounds_.lower[j], bounds_.upper[j]);
        }
        population_.push_back(Evaluate(std::move(x)));
    }
    auto const objs = Objectives();
    state_.Update(objs, {});
    initialized_ = true;

    switch (cfg_.kind) {
    case AlgorithmKind::Nsga2: SelectNsga2({}); break;
    case AlgorithmKind::Rnsga2: population_ = RnsgaEnvironmentalSelection(population_, {}, state_, cfg_, engine_); break;
    case AlgorithmKind::R2nsga2: SelectR2nsga2({}); break;
    case AlgorithmKind::MoeadNums:
        uniform_ = GenerateUniformWeights(problem_.M(), cfg_.mu, engine_);
        neighborhoods_ = WeightNeighborhoods(uniform_, cfg_.neighborhood_t);
        RefreshShiftedWeights();
        break;
    }
}

auto Optimizer::Step(std::size_t budget) -> bool
{
    if (!initialized_) {
        throw StateError("Optimizer::Step before Initialize");
    }
    if (evaluations_ >= budget) {
        return false;
    }
    if (cfg_.kind == AlgorithmKind::MoeadNums) {
        StepMoead();
    } else {
        StepNsgaFamily();
    }
    return true;
}

auto Optimizer::Tournament() -> std::size_t
{
    auto const a = engine_.Below(population_.size());
    auto const b = engine_.Below(population_.size());
    auto const& x = population_[a];
    auto const& y = population_[b];
    auto const rx = x.rank.value_or(0);
    auto const ry = y.rank.value_or(0);
    if (rx != ry) {
        return rx < ry ? a : b;
    }
    auto const sx = x.score.value_or(0.0);
    auto const sy = y.score.value_or(0.0);
    if (cfg_.kind == AlgorithmKind::Nsga2) {
        return sy > sx ? b : a; // larger crowding wins
    }
    return sy < sx ? b : a; // smaller d^R wins
}

auto Optimizer::MakeGaOffspring() -> Population
{
    Population offspring;
    offspring.reserve(cfg_.mu);
    while (offspring.size() < cfg_.mu) {
        auto const& p1 = population_[Tournament()].x;
        auto const& p2 = population_[Tournament()].x;
        auto [c1, c2] = SbxCrossover(p1, p2, bounds_, cfg_.ga, engine_);
        for (auto* c : {&c1, &c2}) {
            if (offspring.size() == cfg_.mu) {
                break;
            }
            auto y = PolynomialMutation(*c, bounds_, cfg_.ga.mutation_prob, cfg_.ga.pm_eta, engine_);
            offspring.push_back(Evaluate(RepairToBounds(std::move(y), bounds_)));
        }
    }
    return offspring;
}

void Optimizer::StepNsgaFamily()
{
    auto const offspring = MakeGaOffspring();
    state_.Update(Objectives(), ObjectivesOf(offspring));
    switch (cfg_.kind) {
    case AlgorithmKind::Nsga2: SelectNsga2(offspring); break;
    case AlgorithmKind::Rnsga2:
        population_ = RnsgaEnvironmentalSelection(population_, offspring, state_, cfg_, engine_);
        break;
    case AlgorithmKind::R2nsga2: SelectR2nsga2(offspring); break;
    case AlgorithmKind::MoeadNums: break;
    }
}

void Optimizer::SelectNsga2(Population const& offspring)
{
    Population all = population_;
    all.insert(all.end(), offspring.begin(), offspring.end());
    auto const objs = ObjectivesOf(all);
    auto const partition = NondominatedSort(objs);
    Population out;
    out.reserve(cfg_.mu);
    for (std::size_t k = 0; k < partition.fronts.size() && out.size() < cfg_.mu; ++k) {
        auto const& front = partition.fronts[k];
        std::vector<ObjectiveVector> fo;
        fo.reserve(front.size());
        for (auto i : front) {
            fo.push_back(objs[i]);
        }
        auto const cd = CrowdingDistance(fo);
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), 0);
        if (out.size() + front.size() > cfg_.mu) {
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cd[a] > cd[b]; });
        }
        for (auto r : order) {
            if (out.size() == cfg_.mu) {
                break;
            }
            auto ind = all[front[r]];
            ind.rank = k;
            ind.score = cd[r];
            out.push_back(std::move(ind));
        }
    }
    population_ = std::move(out);
}

void Optimizer::SelectR2nsga2(Population const& offspring)
{
    Population all = population_;
    all.insert(all.end(), offspring.begin(), offspring.end());
    auto const objs = ObjectivesOf(all);
    auto const m = problem_.M();
    auto const w = ImportanceWeights(cfg_, m);
    std::vector<double> dr(all.size());
    std::vector<ObjectiveVector> normed(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        dr[i] = WeightedDistanceDR(objs[i], cfg_.reference_point, w, state_.ZLb(), state_.ZUb());
        normed[i] = state_.Normalize(objs[i]);
    }
    auto const [lo, hi] = std::minmax_element(dr.begin(), dr.end());
    auto const dr_min = *lo;
    auto const dr_max = *hi;
    auto const partition = SortByRelation(all.size(), [&](std::size_t i, std::size_t j) {
        return RDominanceCompare(objs[i], objs[j], dr[i], dr[j], dr_min, dr_max, cfg_.delta) == Ordering::FirstBetter;
    });
    Population out;
    out.reserve(cfg_.mu);
    for (std::size_t k = 0; k < partition.fronts.size() && out.size() < cfg_.mu; ++k) {
        auto const& front = partition.fronts[k];
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), 0);
        if (out.size() + front.size() > cfg_.mu) {
            std::vector<ObjectiveVector> fo;
            fo.reserve(front.size());
            for (auto i : front) {
                fo.push_back(normed[i]);
            }
            auto const cd = CrowdingDistance(fo);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cd[a] > cd[b]; });
        }
        for (auto r : order) {
            if (out.size() == cfg_.mu) {
                break;
            }
            auto ind = all[front[r]];
            ind.rank = k;
            ind.score = dr[front[r]];
            out.push_back(std::move(ind));
        }
    }
    population_ = std::move(out);
}

void Optimizer::RefreshShiftedWeights()
{
    auto const zn = state_.Normalize(cfg_.reference_point);
    shifted_ = NumsShift(uniform_, zn, cfg_.tau);
}

void Optimizer::StepMoead()
{
    auto const mu = population_.size();
    std::vector<DecisionVector> xs;
    xs.reserve(mu);
    for (auto const& ind : population_) {
        xs.push_back(ind.x);
    }
    std::vector<std::size_t> everyone(mu);
    std::iota(everyone.begin(), everyone.end(), 0);

    Population trials;
    trials.reserve(mu);
    std::vector<std::vector<std::size_t>> pools(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        pools[i] = engine_.Uniform01() < cfg_.neighborhood_prob ? neighborhoods_[i] : everyone;
        auto v = DeRand1(i, xs, pools[i], cfg_.de, engine_);
        v = RepairToBounds(std::move(v), bounds_);
        v = PolynomialMutation(v, bounds_, cfg_.de.mutation_prob, cfg_.de.pm_eta, engine_);
        trials.push_back(Evaluate(std::move(v)));
    }
    state_.Update(Objectives(), ObjectivesOf(trials));
    RefreshShiftedWeights();
    for (std::size_t i = 0; i < mu; ++i) {
        engine_.Shuffle(pools[i]);
        MoeadNumsReplacement(trials[i], pools[i], population_, shifted_, state_, cfg_);
    }
}

} // namespace pbemo
