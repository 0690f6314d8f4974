#ifndef SPINGRAPHS_SPINGRAPHS_HPP
#define SPINGRAPHS_SPINGRAPHS_HPP

#include "point.hpp"
#include "divisor.hpp"
#include "partitions.hpp"
#include "classes.hpp"
#include "graph.hpp"
#include "surface_types.hpp"
#include "render.hpp"

#endif
