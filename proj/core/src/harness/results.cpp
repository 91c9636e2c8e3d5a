#include "pbemo/harness/results.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "pbemo/error.hpp"

namespace pbemo {

namespace fs = std::filesystem;

namespace {

void WriteAtomically(fs::path const& path, std::string const& content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

auto Split(std::string const& line, char sep) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::string cur;
    for (auto c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

auto ParseDouble(std::string const& s, std::string const& where) -> double
{
    if (s == "nan") {
        return std::nan("");
    }
    if (s == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (s == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    double v = 0.0;
    auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error(where + ": bad number '" + s + "'");
    }
    return v;
}

auto ParseUnsigned(std::string const& s, std::string const& where) -> std::uint64_t
{
    std::uint64_t v = 0;
    auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error(where + ": bad integer '" + s + "'");
    }
    return v;
}

auto ParseVector(std::string const& s, std::string const& where) -> ObjectiveVector
{
    ObjectiveVector out;
    for (auto const& part : Split(s, ';')) {
        out.push_back(ParseDouble(part, where));
    }
    return out;
}

constexpr char const* kRunHeader =
    "problem,m,algorithm,normalization,run,seed,checkpoint,evaluations,igd_plus_c,e_ideal,e_nadir,ore,z_lb,z_ub\n";

} // namespace

auto FormatDouble(double v) -> std::string
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto const [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw std::runtime_error("FormatDouble failed");
    }
    return std::string(buf, ptr);
}

auto FormatVector(ObjectiveVector const& v) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += FormatDouble(v[i]);
    }
    return out;
}

auto RunCsv(RunTrace const& trace) -> std::string
{
    std::string out = kRunHeader;
    auto const& id = trace.id;
    for (auto const& r : trace.records) {
        out += id.problem + ',' + std::to_string(id.m) + ',' + id.algorithm + ',' + id.normalization + ','
             + std::to_string(id.run) + ',' + std::to_string(id.seed) + ',' + std::to_string(r.checkpoint) + ','
             + std::to_string(r.evaluations) + ',' + FormatDouble(r.igd_plus_c) + ',' + FormatDouble(r.e_ideal) + ','
             + FormatDouble(r.e_nadir) + ',' + FormatDouble(r.ore) + ',' + FormatVector(r.z_lb) + ','
             + FormatVector(r.z_ub) + '\n';
    }
    return out;
}

auto FinalCsv(RunTrace const& trace) -> std::string
{
    std::string out;
    auto const m = trace.id.m;
    for (std::size_t i = 0; i < m; ++i) {
        out += (i > 0 ? ",f" : "f") + std::to_string(i + 1);
    }
    out += '\n';
    for (auto const& f : trace.final_objectives) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += FormatDouble(f[i]);
        }
        out += '\n';
    }
    return out;
}

auto SummaryCsv(std::vector<SummaryRow> const& rows) -> std::string
{
    std::string out = "problem,m,checkpoint,treatment,runs,mean_igdpc,std_igdpc,rank,e_ideal,e_nadir,ore\n";
    for (auto const& r : rows) {
        out += r.problem + ',' + std::to_string(r.m) + ',' + std::to_string(r.checkpoint) + ',' + r.treatment + ','
             + std::to_string(r.runs) + ',' + FormatDouble(r.mean_igdpc) + ',' + FormatDouble(r.std_igdpc) + ','
             + FormatDouble(r.rank) + ',' + FormatDouble(r.e_ideal) + ',' + FormatDouble(r.e_nadir) + ','
             + FormatDouble(r.ore) + '\n';
    }
    return out;
}

auto RanksCsv(std::vector<RankRow> const& rows) -> std::string
{
    std::string out = "suite,m,checkpoint,treatment,average_rank,problems\n";
    for (auto const& r : rows) {
        out += r.suite + ',' + std::to_string(r.m) + ',' + std::to_string(r.checkpoint) + ',' + r.treatment + ','
             + FormatDouble(r.average_rank) + ',' + std::to_string(r.problems) + '\n';
    }
    return out;
}

auto WriteResults(ExperimentConfig const& cfg, std::vector<RunTrace> const& traces, fs::path const& out_dir)
    -> std::vector<std::string>
{
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
    }
    std::vector<std::string> written;
    nlohmann::json runs = nlohmann::json::array();
    nlohmann::json failures = nlohmann::json::array();

    if (!traces.empty()) {
        fs::create_directories(out_dir / "runs", ec);
        if (!ec) {
            fs::create_directories(out_dir / "final", ec);
        }
        if (ec) {
            throw std::runtime_error("cannot create subdirectories of " + out_dir.string() + ": " + ec.message());
        }
        for (auto const& t : traces) {
            auto const stem = t.id.FileStem();
            nlohmann::json entry{{"id", stem}, {"seed", t.id.seed}, {"ok", t.Ok()}};
            if (t.Ok()) {
                auto const run_rel = "runs/" + stem + ".csv";
                auto const final_rel = "final/" + stem + ".csv";
                WriteAtomically(out_dir / run_rel, RunCsv(t));
                WriteAtomically(out_dir / final_rel, FinalCsv(t));
                written.push_back(run_rel);
                written.push_back(final_rel);
            } else {
                entry["error"] = t.error;
                failures.push_back(nlohmann::json{{"id", stem}, {"error", t.error}});
            }
            runs.push_back(entry);
        }
        WriteAtomically(out_dir / "summary.csv", SummaryCsv(Summarize(traces, cfg.aggregate)));
        written.emplace_back("summary.csv");

        std::set<std::string> suites;
        for (auto const& t : traces) {
            suites.insert(SuiteOf(t.id.problem));
        }
        std::vector<RankRow> ranks;
        for (auto const& s : suites) {
            for (auto cp : cfg.checkpoints) {
                try {
                    auto rows = RankTable(traces, s, cp);
                    ranks.insert(ranks.end(), rows.begin(), rows.end());
                } catch (IncompleteDesignError const&) {
                    // skipped: some cell failed
                }
            }
        }
        WriteAtomically(out_dir / "ranks.csv", RanksCsv(ranks));
        written.emplace_back("ranks.csv");
    }

    auto const canonical = CanonicalConfigJson(cfg);
    char hash[17];
    std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(Fnv1a64(canonical)));
    nlohmann::json manifest{{"config_hash", std::string(hash)},
                            {"config", nlohmann::json::parse(canonical)},
                            {"base_seed", cfg.seed},
                            {"runs", runs},
                            {"failures", failures},
                            {"files", written}};
    WriteAtomically(out_dir / "manifest.json", manifest.dump(2) + "\n");
    written.emplace_back("manifest.json");
    return written;
}

auto ReadRunDirectory(fs::path const& dir) -> std::vector<RunTrace>
{
    auto const runs_dir = dir / "runs";
    if (!fs::is_directory(runs_dir)) {
        throw std::runtime_error("no runs/ directory under " + dir.string());
    }
    std::vector<fs::path> files;
    for (auto const& e : fs::directory_iterator(runs_dir)) {
        if (e.is_regular_file() && e.path().extension() == ".csv") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<RunTrace> out;
    for (auto const& f : files) {
        std::ifstream in(f, std::ios::binary);
        if (!in) {
            throw std::runtime_error("cannot read " + f.string());
        }
        std::string line;
        std::getline(in, line);
        if (line + "\n" != kRunHeader) {
            throw std::runtime_error(f.string() + ": unexpected header");
        }
        RunTrace t;
        std::size_t lineno = 1;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) {
                continue;
            }
            auto const where = f.string() + ":" + std::to_string(lineno);
            auto const cols = Split(line, ',');
            if (cols.size() != 14) {
                throw std::runtime_error(where + ": expected 14 columns");
            }
            t.id.problem = cols[0];
            t.id.m = ParseUnsigned(cols[1], where);
            t.id.algorithm = cols[2];
            t.id.normalization = cols[3];
            t.id.run = ParseUnsigned(cols[4], where);
            t.id.seed = ParseUnsigned(cols[5], where);
            CheckpointRecord r;
            r.checkpoint = ParseUnsigned(cols[6], where);
            r.evaluations = ParseUnsigned(cols[7], where);
            r.igd_plus_c = ParseDouble(cols[8], where);
            r.e_ideal = ParseDouble(cols[9], where);
            r.e_nadir = ParseDouble(cols[10], where);
            r.ore = ParseDouble(cols[11], where);
            r.z_lb = ParseVector(cols[12], where);
            r.z_ub = ParseVector(cols[13], where);
            t.records.push_back(std::move(r));
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace pbemo
