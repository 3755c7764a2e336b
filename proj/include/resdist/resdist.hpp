#pragma once

// Umbrella header: exact resistance distances on strongly connected
// balanced digraphs, their distance-bound verification, and the block /
// one-point-union structure theory they rest on.

#include "resdist/rational.hpp"
#include "resdist/matrix.hpp"
#include "resdist/linalg.hpp"
#include "resdist/digraph.hpp"
#include "resdist/blocks.hpp"
#include "resdist/spectral.hpp"
#include "resdist/generators.hpp"
#include "resdist/verify.hpp"
#include "resdist/io.hpp"
