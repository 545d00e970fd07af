#pragma once

// Umbrella header: exact classification of the Galois group of weighted
// nearest-neighbour walks in the quarter plane.

#include "walkgroup/classify.hpp"
#include "walkgroup/curve.hpp"
#include "walkgroup/division.hpp"
#include "walkgroup/errors.hpp"
#include "walkgroup/kernel.hpp"
#include "walkgroup/polynomial.hpp"
#include "walkgroup/qrt.hpp"
#include "walkgroup/rational.hpp"
#include "walkgroup/report.hpp"
#include "walkgroup/sampling.hpp"
#include "walkgroup/scan.hpp"
#include "walkgroup/torsion.hpp"
#include "walkgroup/weights.hpp"
