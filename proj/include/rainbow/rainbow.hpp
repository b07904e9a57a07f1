#pragma once

#include "rainbow/colored_graph.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/common.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/designs.hpp"
#include "rainbow/diagnostics.hpp"
#include "rainbow/edge.hpp"
#include "rainbow/gf2geom.hpp"
#include "rainbow/patterns.hpp"
#include "rainbow/solver.hpp"
