#include "pbemo/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pbemo/error.hpp"
#include "pbemo/problems.hpp"

namespace pbemo {

namespace {

using nlohmann::json;

void RejectUnknown(json const& obj, std::set<std::string> const& allowed, std::string const& path)
{
    for (auto const& [key, _] : obj.items()) {
        if (allowed.count(key) == 0) {
            throw ConfigError("unknown key", path.empty() ? key : path + "." + key);
        }
    }
}

auto Number(json const& v, std::string const& path) -> double
{
    if (!v.is_number()) {
        throw ConfigError("expected a number", path);
    }
    return v.get<double>();
}

auto Count(json const& v, std::string const& path) -> std::size_t
{
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw ConfigError("expected a non-negative integer", path);
    }
    return v.get<std::size_t>();
}

auto Text(json const& v, std::string const& path) -> std::string
{
    if (!v.is_string()) {
        throw ConfigError("expected a string", path);
    }
    return v.get<std::string>();
}

auto Vector(json const& v, std::string const& path) -> ObjectiveVector
{
    if (!v.is_array()) {
        throw ConfigError("expected an array of numbers", path);
    }
    ObjectiveVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(Number(v[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

void ParseGa(json const& v, GaOperatorConfig& ga, std::string const& path)
{
    if (!v.is_object()) {
        throw ConfigError("expected an object", path);
    }
    RejectUnknown(v, {"crossover_prob", "sbx_eta", "mutation_prob", "pm_eta"}, path);
    if (v.contains("crossover_prob")) {
        ga.crossover_prob = Number(v["crossover_prob"], path + ".crossover_prob");
    }
    if (v.contains("sbx_eta")) {
        ga.sbx_eta = Number(v["sbx_eta"], path + ".sbx_eta");
    }
    if (v.contains("mutation_prob")) {
        ga.mutation_prob = Number(v["mutation_prob"], path + ".mutation_prob");
    }
    if (v.contains("pm_eta")) {
        ga.pm_eta = Number(v["pm_eta"], path + ".pm_eta");
    }
}

void ParseDe(json const& v, DeOperatorConfig& de, std::string const& path)
{
    if (!v.is_object()) {
        throw ConfigError("expected an object", path);
    }
    RejectUnknown(v, {"scale_f", "crossover_rate", "mutation_prob", "pm_eta"}, path);
    if (v.contains("scale_f")) {
        de.scale_f = Number(v["scale_f"], path + ".scale_f");
    }
    if (v.contains("crossover_rate")) {
        de.crossover_rate = Number(v["crossover_rate"], path + ".crossover_rate");
    }
    if (v.contains("mutation_prob")) {
        de.mutation_prob = Number(v["mutation_prob"], path + ".mutation_prob");
    }
    if (v.contains("pm_eta")) {
        de.pm_eta = Number(v["pm_eta"], path + ".pm_eta");
    }
}

auto ParseAlgorithm(json const& v, std::size_t default_mu, std::string const& path) -> AlgorithmEntry
{
    AlgorithmEntry e;
    e.config.mu = default_mu;
    if (v.is_string()) {
        auto const name = v.get<std::string>();
        try {
            e.config.kind = ParseAlgorithmKind(name);
        } catch (ConfigError const&) {
            throw ConfigError("unknown algorithm '" + name + "'", path);
        }
        e.label = name;
        return e;
    }
    if (!v.is_object()) {
        throw ConfigError("expected an algorithm name or object", path);
    }
    RejectUnknown(v,
                  {"name", "label", "mu", "weights_w", "epsilon_clear", "delta", "tau", "rho", "neighborhood_t",
                   "max_replace", "neighborhood_prob", "ga", "de"},
                  path);
    if (!v.contains("name")) {
        throw ConfigError("missing algorithm name", path + ".name");
    }
    auto const name = Text(v["name"], path + ".name");
    try {
        e.config.kind = ParseAlgorithmKind(name);
    } catch (ConfigError const&) {
        throw ConfigError("unknown algorithm '" + name + "'", path + ".name");
    }
    e.label = v.contains("label") ? Text(v["label"], path + ".label") : name;
    auto& c = e.config;
    if (v.contains("mu")) {
        c.mu = Count(v["mu"], path + ".mu");
    }
    if (v.contains("weights_w")) {
        c.weights_w = Vector(v["weights_w"], path + ".weights_w");
    }
    if (v.contains("epsilon_clear")) {
        c.epsilon_clear = Number(v["epsilon_clear"], path + ".epsilon_clear");
    }
    if (v.contains("delta")) {
        c.delta = Number(v["delta"], path + ".delta");
    }
    if (v.contains("tau")) {
        c.tau = Number(v["tau"], path + ".tau");
    }
    if (v.contains("rho")) {
        c.rho = Number(v["rho"], path + ".rho");
    }
    if (v.contains("neighborhood_t")) {
        c.neighborhood_t = Count(v["neighborhood_t"], path + ".neighborhood_t");
    }
    if (v.contains("max_replace")) {
        c.max_replace = Count(v["max_replace"], path + ".max_replace");
    }
    if (v.contains("neighborhood_prob")) {
        c.neighborhood_prob = Number(v["neighborhood_prob"], path + ".neighborhood_prob");
    }
    if (v.contains("ga")) {
        ParseGa(v["ga"], c.ga, path + ".ga");
    }
    if (v.contains("de")) {
        ParseDe(v["de"], c.de, path + ".de");
    }
    return e;
}

auto ParseProblem(json const& v, std::string const& path) -> ProblemSpec
{
    ProblemSpec p;
    if (v.is_string()) {
        auto const key = v.get<std::string>();
        try {
            auto const prob = MakeProblemFromKey(key);
            p.name = prob.Name();
            p.m = prob.M();
        } catch (ConfigError const& e) {
            throw ConfigError(e.what(), path);
        }
        return p;
    }
    if (!v.is_object()) {
        throw ConfigError("expected a problem key like \"dtlz2-m3\" or {\"name\", \"m\"}", path);
    }
    RejectUnknown(v, {"name", "m"}, path);
    if (!v.contains("name") || !v.contains("m")) {
        throw ConfigError("problem needs name and m", path);
    }
    auto const name = Text(v["name"], path + ".name");
    auto const m = Count(v["m"], path + ".m");
    try {
        auto const prob = MakeProblem(name, m);
        p.name = prob.Name();
        p.m = prob.M();
    } catch (ConfigError const& e) {
        throw ConfigError(e.what(), path);
    }
    return p;
}

auto GaJson(GaOperatorConfig const& ga) -> json
{
    return json{{"crossover_prob", ga.crossover_prob},
                {"sbx_eta", ga.sbx_eta},
                {"mutation_prob", ga.mutation_prob},
                {"pm_eta", ga.pm_eta}};
}

auto DeJson(DeOperatorConfig const& de) -> json
{
    return json{{"scale_f", de.scale_f},
                {"crossover_rate", de.crossover_rate},
                {"mutation_prob", de.mutation_prob},
                {"pm_eta", de.pm_eta}};
}

} // namespace

auto ToString(Aggregate a) -> std::string
{
    return a == Aggregate::Mean ? "mean" : "median";
}

auto ToString(ReferenceSetting s) -> std::string
{
    return s == ReferenceSetting::Balanced ? "balanced" : "extreme";
}

auto DefaultCheckpoints(std::size_t budget) -> std::vector<std::size_t>
{
    std::vector<std::size_t> grid{1000, 3000, 5000, 8000, 10000, 15000};
    for (std::size_t e = 20000; e <= std::max<std::size_t>(budget, 50000); e += 5000) {
        grid.push_back(e);
    }
    std::vector<std::size_t> out;
    for (auto c : grid) {
        if (c <= budget) {
            out.push_back(c);
        }
    }
    if (out.empty() && budget > 0) {
        out.push_back(budget);
    }
    return out;
}

auto Fnv1a64(std::string_view data) -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void Validate(ExperimentConfig const& cfg)
{
    if (cfg.problems.empty()) {
        throw ConfigError("at least one problem is required", "problems");
    }
    if (cfg.algorithms.empty()) {
        throw ConfigError("at least one algorithm is required", "algorithms");
    }
    if (cfg.normalizations.empty()) {
        throw ConfigError("at least one normalization is required", "normalizations");
    }
    if (cfg.runs < 1) {
        throw ConfigError("must be at least 1", "runs");
    }
    if (cfg.budget < 1) {
        throw ConfigError("must be positive", "budget");
    }
    if (cfg.checkpoints.empty()) {
        throw ConfigError("no checkpoint at or below the budget", "checkpoints");
    }
    for (std::size_t i = 0; i < cfg.checkpoints.size(); ++i) {
        if (i > 0 && cfg.checkpoints[i] <= cfg.checkpoints[i - 1]) {
            throw ConfigError("must be strictly ascending", "checkpoints");
        }
    }
    if (cfg.checkpoints.back() > cfg.budget) {
        throw ConfigError("last checkpoint exceeds the budget", "checkpoints");
    }
    if (!(cfg.roi_radius > 0.0)) {
        throw ConfigError("must be positive", "roi_radius");
    }
    if (cfg.pf_samples < 1) {
        throw ConfigError("must be positive", "pf_samples");
    }
    std::set<std::string> labels;
    for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) {
        auto const& a = cfg.algorithms[i];
        if (!labels.insert(a.label).second) {
            throw ConfigError("duplicate algorithm label '" + a.label + "'", "algorithms[" + std::to_string(i) + "]");
        }
        if (a.label.empty() || a.label.find_first_of(",/\\ \n") != std::string::npos
            || a.label.find("__") != std::string::npos) {
            throw ConfigError("label must be non-empty without separators", "algorithms[" + std::to_string(i) + "]");
        }
        for (auto const& p : cfg.problems) {
            auto c = a.config;
            c.reference_point.assign(p.m, 0.0); // actual z is resolved per problem
            try {
                Validate(c, p.m);
            } catch (ConfigError const& e) {
                throw ConfigError(std::string(e.what()) + " (problem " + p.Key() + ")",
                                  "algorithms[" + std::to_string(i) + "]." + e.Field());
            }
        }
    }
    std::set<std::string> seen;
    for (auto const& p : cfg.problems) {
        if (!seen.insert(p.Key()).second) {
            throw ConfigError("duplicate problem " + p.Key(), "problems");
        }
    }
    for (auto const& [key, z] : cfg.reference_points) {
        auto const prob = MakeProblemFromKey(key);
        if (z.size() != prob.M()) {
            throw ConfigError("expected " + std::to_string(prob.M()) + " entries", "reference_points." + key);
        }
    }
}

auto ParseConfig(std::string_view json_text) -> ExperimentConfig
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (json::parse_error const& e) {
        throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("top level must be an object");
    }
    RejectUnknown(root,
                  {"problems", "algorithms", "normalizations", "runs", "budget", "checkpoints", "reference_points",
                   "reference_setting", "roi_radius", "pf_samples", "seed", "aggregate", "mu"},
                  "");
    ExperimentConfig cfg;
    std::size_t default_mu = 100;
    if (root.contains("mu")) {
        default_mu = Count(root["mu"], "mu");
    }
    if (!root.contains("problems") || !root["problems"].is_array()) {
        throw ConfigError("expected an array", "problems");
    }
    for (std::size_t i = 0; i < root["problems"].size(); ++i) {
        cfg.problems.push_back(ParseProblem(root["problems"][i], "problems[" + std::to_string(i) + "]"));
    }
    if (!root.contains("algorithms") || !root["algorithms"].is_array()) {
        throw ConfigError("expected an array", "algorithms");
    }
    for (std::size_t i = 0; i < root["algorithms"].size(); ++i) {
        cfg.algorithms.push_back(
            ParseAlgorithm(root["algorithms"][i], default_mu, "algorithms[" + std::to_string(i) + "]"));
    }
    if (root.contains("normalizations")) {
        auto const& v = root["normalizations"];
        if (!v.is_array()) {
            throw ConfigError("expected an array", "normalizations");
        }
        cfg.normalizations.clear();
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto const path = "normalizations[" + std::to_string(i) + "]";
            auto const s = Text(v[i], path);
            try {
                cfg.normalizations.push_back(ParseNormalizationKind(s));
            } catch (ConfigError const&) {
                throw ConfigError("unknown normalization '" + s + "'", path);
            }
        }
        auto sorted = cfg.normalizations;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ConfigError("duplicate entry", "normalizations");
        }
    }
    if (root.contains("runs")) {
        cfg.runs = Count(root["runs"], "runs");
    }
    if (root.contains("budget")) {
        cfg.budget = Count(root["budget"], "budget");
    }
    if (root.contains("checkpoints")) {
        auto const& v = root["checkpoints"];
        if (!v.is_array()) {
            throw ConfigError("expected an array", "checkpoints");
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            cfg.checkpoints.push_back(Count(v[i], "checkpoints[" + std::to_string(i) + "]"));
        }
    } else {
        cfg.checkpoints = DefaultCheckpoints(cfg.budget);
    }
    if (root.contains("reference_points")) {
        auto const& v = root["reference_points"];
        if (!v.is_object()) {
            throw ConfigError("expected an object", "reference_points");
        }
        for (auto const& [key, z] : v.items()) {
            auto const path = "reference_points." + key;
            std::string canonical;
            try {
                canonical = MakeProblemFromKey(key).Key();
            } catch (ConfigError const& e) {
                throw ConfigError(e.what(), path);
            }
            cfg.reference_points[canonical] = Vector(z, path);
        }
    }
    if (root.contains("reference_setting")) {
        auto const s = Text(root["reference_setting"], "reference_setting");
        if (s == "balanced") {
            cfg.reference_setting = ReferenceSetting::Balanced;
        } else if (s == "extreme") {
            cfg.reference_setting = ReferenceSetting::Extreme;
        } else {
            throw ConfigError("expected \"balanced\" or \"extreme\", got '" + s + "'", "reference_setting");
        }
    }
    if (root.contains("roi_radius")) {
        cfg.roi_radius = Number(root["roi_radius"], "roi_radius");
    }
    if (root.contains("pf_samples")) {
        cfg.pf_samples = Count(root["pf_samples"], "pf_samples");
    }
    if (root.contains("seed")) {
        auto const& v = root["seed"];
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
            throw ConfigError("expected a non-negative integer", "seed");
        }
        cfg.seed = v.get<std::uint64_t>();
    }
    if (root.contains("aggregate")) {
        auto const s = Text(root["aggregate"], "aggregate");
        if (s == "mean") {
            cfg.aggregate = Aggregate::Mean;
        } else if (s == "median") {
            cfg.aggregate = Aggregate::Median;
        } else {
            throw ConfigError("expected \"mean\" or \"median\", got '" + s + "'", "aggregate");
        }
    }
    Validate(cfg);
    return cfg;
}

auto LoadConfig(std::filesystem::path const& path) -> ExperimentConfig
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ParseConfig(ss.str());
}

auto CanonicalConfigJson(ExperimentConfig const& cfg) -> std::string
{
    json root = json::object();
    json problems = json::array();
    for (auto const& p : cfg.problems) {
        problems.push_back(p.Key());
    }
    root["problems"] = problems;
    json algs = json::array();
    for (auto const& a : cfg.algorithms) {
        auto const& c = a.config;
        algs.push_back(json{{"name", ToString(c.kind)},
                            {"label", a.label},
                            {"mu", c.mu},
                            {"weights_w", c.weights_w},
                            {"epsilon_clear", c.epsilon_clear},
                            {"delta", c.delta},
                            {"tau", c.tau},
                            {"rho", c.rho},
                            {"neighborhood_t", c.neighborhood_t},
                            {"max_replace", c.max_replace},
                            {"neighborhood_prob", c.neighborhood_prob},
                            {"ga", GaJson(c.ga)},
                            {"de", DeJson(c.de)}});
    }
    root["algorithms"] = algs;
    json norms = json::array();
    for (auto k : cfg.normalizations) {
        norms.push_back(ToString(k));
    }
    root["normalizations"] = norms;
    root["runs"] = cfg.runs;
    root["budget"] = cfg.budget;
    root["checkpoints"] = cfg.checkpoints;
    json refs = json::object();
    for (auto const& [k, z] : cfg.reference_points) {
        refs[k] = z;
    }
    root["reference_points"] = refs;
    root["reference_setting"] = ToString(cfg.reference_setting);
    root["roi_radius"] = cfg.roi_radius;
    root["pf_samples"] = cfg.pf_samples;
    root["seed"] = cfg.seed;
    root["aggregate"] = ToString(cfg.aggregate);
    return root.dump(2);
}

} // namespace pbemo
