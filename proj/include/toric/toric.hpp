#pragma once

// Everything except the command-line front end (toric/cli.hpp).

#include "toric/additive.hpp"
#include "toric/builtin.hpp"
#include "toric/cox.hpp"
#include "toric/demazure.hpp"
#include "toric/fan.hpp"
#include "toric/io.hpp"
#include "toric/lattice.hpp"
#include "toric/polytope.hpp"
