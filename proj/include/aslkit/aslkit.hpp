#pragma once

#include "betti.hpp"
#include "bits.hpp"
#include "budget.hpp"
#include "complex.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "json.hpp"
#include "koszul.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "poset.hpp"
#include "ring_invariants.hpp"
#include "straightening.hpp"
#include "topology.hpp"
#include "verify/report.hpp"
#include "verify/suites.hpp"
