#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbemo/harness/campaign.hpp"
#include "pbemo/harness/config.hpp"

namespace pbemo {

// Ranks 1..K of `values` ascending, ties share the mean of their positions.
auto Midranks(std::span<double const> values) -> std::vector<double>;

auto Mean(std::span<double const> v) -> double;
auto SampleStd(std::span<double const> v) -> double; // n - 1 denominator, 0 for n < 2
auto Median(std::vector<double> v) -> double;
auto AggregateValues(std::span<double const> v, Aggregate how) -> double;

// (problem, treatment) -> mean indicator value.
using MeanTable = std::map<std::pair<std::string, std::string>, double>;

// Per problem, treatments are ranked by ascending mean (midranks for ties);
// returns each treatment's rank averaged over the problems, in the order of
// `treatments`. Throws IncompleteDesignError on a missing cell.
auto FriedmanAverageRanks(std::vector<std::string> const& problems, std::vector<std::string> const& treatments,
                          MeanTable const& means) -> std::vector<double>;

struct SummaryRow {
    std::string problem;
    std::size_t m = 0;
    std::size_t checkpoint = 0;
    std::string treatment;
    std::size_t runs = 0;
    double mean_igdpc = 0.0;
    double std_igdpc = 0.0;
    double rank = 0.0; // among treatments of this (problem, m, checkpoint)
    double e_ideal = 0.0;
    double e_nadir = 0.0;
    double ore = 0.0;
};

// One row per (problem, m, checkpoint, treatment) over successful runs,
// sorted by that key. Error indicators use the configured aggregate.
auto Summarize(std::vector<RunTrace> const& traces, Aggregate how) -> std::vector<SummaryRow>;

struct RankRow {
    std::string suite;
    std::size_t m = 0;
    std::size_t checkpoint = 0;
    std::string treatment;
    double average_rank = 0.0;
    std::size_t problems = 0;
};

// Suite of a problem name: "dtlz", "sdtlz" or "idtlz".
auto SuiteOf(std::string const& problem) -> std::string;

// Average ranks for one suite and checkpoint, one group per m. Throws
// IncompleteDesignError when some treatment lacks a problem in the group.
auto RankTable(std::vector<RunTrace> const& traces, std::string const& suite, std::size_t checkpoint)
    -> std::vector<RankRow>;

} // namespace pbemo
