#ifndef TLEIB_TLEIB_HPP
#define TLEIB_TLEIB_HPP

// Umbrella header: exact-arithmetic workbench for ternary Leibniz algebras
// given by structure constants.

#include "tleib/algebra.hpp"
#include "tleib/catalog.hpp"
#include "tleib/constraints.hpp"
#include "tleib/errors.hpp"
#include "tleib/format.hpp"
#include "tleib/linear_map.hpp"
#include "tleib/rational.hpp"
#include "tleib/spaces.hpp"
#include "tleib/subspace.hpp"
#include "tleib/verify.hpp"

#endif
