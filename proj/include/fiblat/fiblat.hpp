#pragma once

// Umbrella header for the even/odd Fibonacci lattice toolkit.

#include "fiblat/errors.hpp"
#include "fiblat/graphs.hpp"
#include "fiblat/io.hpp"
#include "fiblat/lattice.hpp"
#include "fiblat/monoid.hpp"
#include "fiblat/schroeder.hpp"
#include "fiblat/sequences.hpp"
#include "fiblat/simples.hpp"
#include "fiblat/verify.hpp"
