#pragma once

#include "pbemo/algorithms.hpp"
#include "pbemo/core.hpp"
#include "pbemo/error.hpp"
#include "pbemo/harness/campaign.hpp"
#include "pbemo/harness/config.hpp"
#include "pbemo/harness/reference_points.hpp"
#include "pbemo/harness/results.hpp"
#include "pbemo/harness/stats.hpp"
#include "pbemo/indicators.hpp"
#include "pbemo/normalization.hpp"
#include "pbemo/problems.hpp"
#include "pbemo/ranking.hpp"
#include "pbemo/variation.hpp"
#include "pbemo/weights.hpp"
