#pragma once

#include "surfskew/constructions.hpp"
#include "surfskew/embedding.hpp"
#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"
#include "surfskew/graph.hpp"
#include "surfskew/search.hpp"
