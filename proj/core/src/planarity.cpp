#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "surfskew/error.hpp"
#include "surfskew/search.hpp"
#include "planarity_detail.hpp"

namespace surfskew {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;

BGraph to_boost(int p, const std::vector<std::pair<int, int>>& edges) {
    BGraph bg(p);
    for (auto [u, v] : edges) boost::add_edge(u, v, bg);
    int i = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(boost::edge_index, bg, *it, i++);
    return bg;
}

}  // namespace

namespace detail {

bool planar_edges(int p, const std::vector<std::pair<int, int>>& edges) {
    BGraph bg = to_boost(p, edges);
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace detail

bool planar(const Graph& g) {
    if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges()) es.emplace_back(e.u, e.v);
    return detail::planar_edges(g.order(), es);
}

PlanarityResult is_planar(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (const Edge& e : g.edges()) es.emplace_back(e.u, e.v);
    BGraph bg = to_boost(g.order(), es);
    using EdgeDesc = boost::graph_traits<BGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> emb(g.order());
    PlanarityResult r;
    r.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)));
    if (!r.planar) return r;
    std::vector<std::vector<int>> rot(g.order());
    for (int v = 0; v < g.order(); ++v)
        for (const EdgeDesc& e : emb[v]) {
            int a = static_cast<int>(boost::source(e, bg)), b = static_cast<int>(boost::target(e, bg));
            rot[v].push_back(a == v ? b : a);
        }
    RotationSystem rs(g.without_labels(), std::move(rot));
    if (euler_genus(rs) != 0) throw IntegrityError("planarity witness is not planar");
    r.witness = rs.relabeled_graph(g);
    return r;
}

}  // namespace surfskew
