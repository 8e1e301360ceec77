#pragma once

#include "erdos/census.hpp"
#include "erdos/claims.hpp"
#include "erdos/compression.hpp"
#include "erdos/error.hpp"
#include "erdos/estimates.hpp"
#include "erdos/generators.hpp"
#include "erdos/parallel.hpp"
#include "erdos/point_set.hpp"
#include "erdos/rational.hpp"
#include "erdos/report_io.hpp"
