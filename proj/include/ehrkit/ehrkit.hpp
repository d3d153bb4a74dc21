#pragma once

#include "ehrkit/combinatorics.hpp"
#include "ehrkit/ehrhart.hpp"
#include "ehrkit/geometry.hpp"
#include "ehrkit/lattice.hpp"
#include "ehrkit/numeric.hpp"
#include "ehrkit/polynomial.hpp"
#include "ehrkit/simplex.hpp"
