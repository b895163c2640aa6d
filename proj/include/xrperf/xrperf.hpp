#ifndef XRPERF_XRPERF_HPP
#define XRPERF_XRPERF_HPP

#include "xrperf/aoi.hpp"
#include "xrperf/csv.hpp"
#include "xrperf/energy.hpp"
#include "xrperf/engine.hpp"
#include "xrperf/errors.hpp"
#include "xrperf/json_io.hpp"
#include "xrperf/latency.hpp"
#include "xrperf/ols.hpp"
#include "xrperf/regression.hpp"
#include "xrperf/scenario.hpp"
#include "xrperf/simoracle.hpp"
#include "xrperf/validation.hpp"

#endif // XRPERF_XRPERF_HPP
