#ifndef LKCONVEX_LKCONVEX_HPP
#define LKCONVEX_LKCONVEX_HPP

// Umbrella header: graphs, l^k convexity operators, the convex-geometry
// oracle, the characterization-based recognizers and instance generators.

#include "chordal.hpp"
#include "convexity.hpp"
#include "crosscheck.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "oracle.hpp"
#include "paths.hpp"
#include "recognizers.hpp"
#include "serialize.hpp"
#include "vertex_set.hpp"

#endif // LKCONVEX_LKCONVEX_HPP
