#pragma once

#include "hypermst/algorithms.hpp"
#include "hypermst/disjoint_set_forest.hpp"
#include "hypermst/errors.hpp"
#include "hypermst/hyperedge.hpp"
#include "hypermst/oracles.hpp"
#include "hypermst/process.hpp"
#include "hypermst/rng.hpp"
#include "hypermst/theory/bounds.hpp"
#include "hypermst/theory/giant_component.hpp"
#include "hypermst/theory/quadrature.hpp"
#include "hypermst/theory/root_finding.hpp"
#include "hypermst/weight_distribution.hpp"
#include "hypermst/harness/config.hpp"
#include "hypermst/harness/experiments.hpp"
#include "hypermst/harness/parallel.hpp"
#include "hypermst/harness/table.hpp"
