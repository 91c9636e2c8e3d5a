#pragma once

#include <optional>

#include "pbemo/core.hpp"
#include "pbemo/harness/config.hpp"
#include "pbemo/problems.hpp"

namespace pbemo {

// Published balanced/extreme reference points (m = 3, 5, 8, 10; DTLZ7 only
// m = 3 balanced). SDTLZ rows are the DTLZ row times 10^(i-1), IDTLZ rows
// reuse the DTLZ row. Empty when the table has no entry.
auto TabulatedReferencePoint(Problem const& problem, ReferenceSetting setting) -> std::optional<ObjectiveVector>;

// Reconstructed balanced point for problems without a table entry:
// z = ideal + 1.2 (c - ideal) on the underlying DTLZ problem, where c is a
// central front point (the simplex or sphere centroid direction, the
// theta_1 = pi/4 point of DTLZ5/6, or for DTLZ7 the front sample nearest the
// middle of the normalized box), then scaled like the problem family.
auto ReconstructedBalancedPoint(Problem const& problem) -> ObjectiveVector;

// Config override, else the table, else (balanced only) the reconstruction.
// Throws ConfigError for an extreme setting without a table entry.
auto ResolveReferencePoint(Problem const& problem, ExperimentConfig const& cfg) -> ObjectiveVector;

} // namespace pbemo
