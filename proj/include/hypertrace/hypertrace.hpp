#pragma once

#include "hypertrace/bench.hpp"
#include "hypertrace/combinatorics.hpp"
#include "hypertrace/degeneracy.hpp"
#include "hypertrace/distinguishing.hpp"
#include "hypertrace/domination.hpp"
#include "hypertrace/errors.hpp"
#include "hypertrace/generate.hpp"
#include "hypertrace/graph.hpp"
#include "hypertrace/hypergraph.hpp"
#include "hypertrace/io.hpp"
#include "hypertrace/report.hpp"
#include "hypertrace/trace_function.hpp"
#include "hypertrace/trace_keys.hpp"
#include "hypertrace/vc_dimension.hpp"
#include "hypertrace/version.hpp"
