#include "pbemo/harness/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "pbemo/error.hpp"

namespace pbemo {

auto Midranks(std::span<double const> values) -> std::vector<double>
{
    auto const n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        auto j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        // positions i..j (0-based) share rank mean(i+1 .. j+1)
        auto const r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (auto k = i; k <= j; ++k) {
            ranks[order[k]] = r;
        }
        i = j + 1;
    }
    return ranks;
}

auto Mean(std::span<double const> v) -> double
{
    if (v.empty()) {
        return std::nan("");
    }
    double s = 0.0;
    for (auto x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

auto SampleStd(std::span<double const> v) -> double
{
    if (v.size() < 2) {
        return 0.0;
    }
    auto const mu = Mean(v);
    double s = 0.0;
    for (auto x : v) {
        s += (x - mu) * (x - mu);
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

auto Median(std::vector<double> v) -> double
{
    if (v.empty()) {
        return std::nan("");
    }
    std::sort(v.begin(), v.end());
    auto const n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

auto AggregateValues(std::span<double const> v, Aggregate how) -> double
{
    return how == Aggregate::Mean ? Mean(v) : Median(std::vector<double>(v.begin(), v.end()));
}

auto FriedmanAverageRanks(std::vector<std::string> const& problems, std::vector<std::string> const& treatments,
                          MeanTable const& means) -> std::vector<double>
{
    if (problems.empty() || treatments.empty()) {
        throw IncompleteDesignError("FriedmanAverageRanks: empty design");
    }
    std::vector<double> total(treatments.size(), 0.0);
    std::vector<double> row(treatments.size());
    for (auto const& p : problems) {
        for (std::size_t t = 0; t < treatments.size(); ++t) {
            auto const it = means.find({p, treatments[t]});
            if (it == means.end()) {
                throw IncompleteDesignError("missing cell (" + p + ", " + treatments[t] + ")");
            }
            row[t] = it->second;
        }
        auto const r = Midranks(row);
        for (std::size_t t = 0; t < treatments.size(); ++t) {
            total[t] += r[t];
        }
    }
    for (auto& v : total) {
        v /= static_cast<double>(problems.size());
    }
    return total;
}

namespace {

struct CellValues {
    std::vector<double> igd;
    std::vector<double> e_ideal;
    std::vector<double> e_nadir;
    std::vector<double> ore;
};

// (problem, m, checkpoint, treatment)
using CellKey = std::tuple<std::string, std::size_t, std::size_t, std::string>;

auto CollectCells(std::vector<RunTrace> const& traces) -> std::map<CellKey, CellValues>
{
    std::map<CellKey, CellValues> cells;
    for (auto const& t : traces) {
        if (!t.Ok()) {
            continue;
        }
        for (auto const& r : t.records) {
            auto& c = cells[{t.id.problem, t.id.m, r.checkpoint, t.id.Treatment()}];
            c.igd.push_back(r.igd_plus_c);
            c.e_ideal.push_back(r.e_ideal);
            c.e_nadir.push_back(r.e_nadir);
            c.ore.push_back(r.ore);
        }
    }
    return cells;
}

} // namespace

auto Summarize(std::vector<RunTrace> const& traces, Aggregate how) -> std::vector<SummaryRow>
{
    auto const cells = CollectCells(traces);
    std::vector<SummaryRow> rows;
    for (auto const& [key, c] : cells) {
        SummaryRow row;
        std::tie(row.problem, row.m, row.checkpoint, row.treatment) = key;
        row.runs = c.igd.size();
        row.mean_igdpc = Mean(c.igd);
        row.std_igdpc = SampleStd(c.igd);
        row.e_ideal = AggregateValues(c.e_ideal, how);
        row.e_nadir = AggregateValues(c.e_nadir, how);
        row.ore = AggregateValues(c.ore, how);
        rows.push_back(std::move(row));
    }
    // rank treatments inside each (problem, m, checkpoint) block; rows are already grouped by the map order
    std::size_t i = 0;
    while (i < rows.size()) {
        auto j = i;
        while (j < rows.size() && rows[j].problem == rows[i].problem && rows[j].m == rows[i].m
               && rows[j].checkpoint == rows[i].checkpoint) {
            ++j;
        }
        std::vector<double> v;
        for (auto k = i; k < j; ++k) {
            v.push_back(rows[k].mean_igdpc);
        }
        auto const r = Midranks(v);
        for (auto k = i; k < j; ++k) {
            rows[k].rank = r[k - i];
        }
        i = j;
    }
    return rows;
}

auto SuiteOf(std::string const& problem) -> std::string
{
    if (problem.rfind("sdtlz", 0) == 0) {
        return "sdtlz";
    }
    if (problem.rfind("idtlz", 0) == 0) {
        return "idtlz";
    }
    return "dtlz";
}

auto RankTable(std::vector<RunTrace> const& traces, std::string const& suite, std::size_t checkpoint)
    -> std::vector<RankRow>
{
    auto const cells = CollectCells(traces);
    // m -> problems and treatments seen for this suite and checkpoint
    std::map<std::size_t, std::set<std::string>> problems;
    std::map<std::size_t, std::set<std::string>> treatments;
    std::map<std::size_t, MeanTable> means;
    for (auto const& t : traces) {
        if (SuiteOf(t.id.problem) != suite) {
            continue;
        }
        problems[t.id.m].insert(t.id.problem);
        treatments[t.id.m].insert(t.id.Treatment());
    }
    for (auto const& [key, c] : cells) {
        auto const& [problem, m, cp, treatment] = key;
        if (cp == checkpoint && SuiteOf(problem) == suite) {
            means[m][{problem, treatment}] = Mean(c.igd);
        }
    }
    std::vector<RankRow> out;
    for (auto const& [m, probs] : problems) {
        std::vector<std::string> const pv(probs.begin(), probs.end());
        std::vector<std::string> const tv(treatments[m].begin(), treatments[m].end());
        auto const avg = FriedmanAverageRanks(pv, tv, means[m]);
        for (std::size_t t = 0; t < tv.size(); ++t) {
            out.push_back(RankRow{suite, m, checkpoint, tv[t], avg[t], pv.size()});
        }
    }
    return out;
}

} // namespace pbemo
