#pragma once

#include <utility>
#include <vector>

namespace surfskew::detail {

// Planarity of a (multi)graph given as an edge list.
bool planar_edges(int p, const std::vector<std::pair<int, int>>& edges);

}  // namespace surfskew::detail
