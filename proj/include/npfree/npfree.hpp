#pragma once

// Umbrella header.
#include "npfree/bench.hpp"
#include "npfree/converter.hpp"
#include "npfree/csv.hpp"
#include "npfree/detector.hpp"
#include "npfree/engine.hpp"
#include "npfree/error.hpp"
#include "npfree/hyperparameters.hpp"
#include "npfree/lstm.hpp"
#include "npfree/metrics.hpp"
#include "npfree/series.hpp"
#include "npfree/threshold.hpp"
