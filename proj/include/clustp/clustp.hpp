#pragma once

// Umbrella header for the clustered shortest-path tree toolkit.

#include "clustp/bench.hpp"
#include "clustp/error.hpp"
#include "clustp/gen.hpp"
#include "clustp/instance.hpp"
#include "clustp/io.hpp"
#include "clustp/nrga.hpp"
#include "clustp/oracle.hpp"
#include "clustp/report.hpp"
#include "clustp/rng.hpp"
#include "clustp/solution.hpp"
#include "clustp/spt.hpp"
