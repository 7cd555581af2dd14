#pragma once

#include "linesum/continuous.hpp"
#include "linesum/errors.hpp"
#include "linesum/grid.hpp"
#include "linesum/json_io.hpp"
#include "linesum/lattice.hpp"
#include "linesum/linalg.hpp"
#include "linesum/poly.hpp"
#include "linesum/projection.hpp"
#include "linesum/scalar.hpp"
#include "linesum/stability.hpp"
#include "linesum/switching.hpp"
#include "linesum/torus.hpp"
