#include "surfskew/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>

#include "surfskew/error.hpp"

namespace surfskew {

Graph::Graph(int p, std::vector<Edge> edges) : p_(p), edges_(std::move(edges)) {
    if (p < 0) throw ParameterError("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw ParameterError("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= p)
            throw ParameterError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                 " out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw ParameterError("repeated edge " + std::to_string(dup->u) + " " +
                             std::to_string(dup->v));
    adj_.assign(p, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= p_ || v >= p_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::with_family(FamilySpec spec) const {
    Graph g = *this;
    g.family_ = std::move(spec);
    return g;
}

Graph Graph::with_bipartition(Bipartition parts) const {
    std::vector<int> side(p_, -1);
    for (int v : parts.a) {
        if (v < 0 || v >= p_ || side[v] != -1) throw ParameterError("bad bipartition");
        side[v] = 0;
    }
    for (int v : parts.b) {
        if (v < 0 || v >= p_ || side[v] != -1) throw ParameterError("bad bipartition");
        side[v] = 1;
    }
    if (std::count(side.begin(), side.end(), -1) != 0)
        throw ParameterError("bipartition does not cover the vertex set");
    for (const Edge& e : edges_)
        if (side[e.u] == side[e.v]) throw ParameterError("edge inside a bipartition class");
    Graph g = *this;
    std::sort(parts.a.begin(), parts.a.end());
    std::sort(parts.b.begin(), parts.b.end());
    g.bipartition_ = std::move(parts);
    return g;
}

Graph Graph::without_labels() const {
    Graph g = *this;
    g.family_.reset();
    g.bipartition_.reset();
    return g;
}

namespace {

Graph complete(int n) {
    if (n < 1) throw ParameterError("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph cube(int d) {
    if (d < 0 || d > 20) throw ParameterError("cube dimension out of range");
    int n = 1 << d;
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
            if (!(v >> i & 1)) e.emplace_back(v, v | (1 << i));
    return Graph(n, std::move(e));
}

Bipartition parity_parts(int d) {
    Bipartition b;
    for (int v = 0; v < (1 << d); ++v) (std::popcount(unsigned(v)) % 2 ? b.b : b.a).push_back(v);
    return b;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    using namespace family;
    Graph g = std::visit(
        [](const auto& f) -> Graph {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Complete>) {
                return complete(f.n);
            } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
                if (f.a < 1 || f.b < 1) throw ParameterError("K_{a,b} needs a, b >= 1");
                std::vector<Edge> e;
                for (int i = 0; i < f.a; ++i)
                    for (int j = 0; j < f.b; ++j) e.emplace_back(i, f.a + j);
                Bipartition parts;
                for (int i = 0; i < f.a; ++i) parts.a.push_back(i);
                for (int j = 0; j < f.b; ++j) parts.b.push_back(f.a + j);
                return Graph(f.a + f.b, std::move(e)).with_bipartition(parts);
            } else if constexpr (std::is_same_v<T, Cube>) {
                return cube(f.d).with_bipartition(parity_parts(f.d));
            } else if constexpr (std::is_same_v<T, FoldedCube>) {
                if (f.d < 2) throw ParameterError("folded cube needs d >= 2");
                Graph q = cube(f.d);
                std::vector<Edge> e = q.edges();
                int n = 1 << f.d;
                for (int v = 0; v < n / 2; ++v) e.emplace_back(v, v ^ (n - 1));
                Graph g(n, std::move(e));
                if (f.d % 2 == 1) g = g.with_bipartition(parity_parts(f.d));
                return g;
            } else if constexpr (std::is_same_v<T, Octahedron>) {
                if (f.r < 2) throw ParameterError("octahedron needs r >= 2");
                std::vector<Edge> e;
                for (int i = 0; i < 2 * f.r; ++i)
                    for (int j = i + 1; j < 2 * f.r; ++j)
                        if (j != i + f.r) e.emplace_back(i, j);
                return Graph(2 * f.r, std::move(e));
            } else if constexpr (std::is_same_v<T, Circulant>) {
                if (f.n < 3) throw ParameterError("circulant needs n >= 3");
                if (f.jumps.empty()) throw ParameterError("circulant needs at least one jump");
                std::set<int> seen;
                std::set<Edge> e;
                for (int k : f.jumps) {
                    if (k < 1 || 2 * k > f.n)
                        throw ParameterError("circulant jump " + std::to_string(k) +
                                             " outside [1, n/2]");
                    if (!seen.insert(k).second) throw ParameterError("repeated circulant jump");
                    for (int i = 0; i < f.n; ++i) e.insert(Edge(i, (i + k) % f.n));
                }
                Graph g(f.n, std::vector<Edge>(e.begin(), e.end()));
                if (auto b = two_coloring(g)) g = g.with_bipartition(*b);
                return g;
            } else if constexpr (std::is_same_v<T, Cycle>) {
                if (f.n < 3) throw ParameterError("cycle needs n >= 3");
                std::vector<Edge> e;
                for (int i = 0; i < f.n; ++i) e.emplace_back(i, (i + 1) % f.n);
                Graph g(f.n, std::move(e));
                if (auto b = two_coloring(g)) g = g.with_bipartition(*b);
                return g;
            } else {
                if (f.n < 1) throw ParameterError("path needs n >= 1");
                std::vector<Edge> e;
                for (int i = 0; i + 1 < f.n; ++i) e.emplace_back(i, i + 1);
                Graph g(f.n, std::move(e));
                return g.with_bipartition(*two_coloring(g));
            }
        },
        spec);
    return g.with_family(spec);
}

std::optional<int> girth(const Graph& g) {
    int p = g.order();
    int best = -1;
    std::vector<int> dist(p), parent(p);
    for (int s = 0; s < p; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (best != -1 && 2 * dist[x] + 1 >= best) break;
            for (int y : g.neighbors(x)) {
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (parent[x] != y) {
                    int len = dist[x] + dist[y] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

Components components(const Graph& g) {
    Components c;
    c.label.assign(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (c.label[s] != -1) continue;
        std::vector<int> stack{s};
        c.label[s] = c.count;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x))
                if (c.label[y] == -1) {
                    c.label[y] = c.count;
                    stack.push_back(y);
                }
        }
        ++c.count;
    }
    return c;
}

bool is_connected(const Graph& g) { return components(g).count <= 1; }

int cycle_rank(const Graph& g) { return g.size() - g.order() + components(g).count; }

std::optional<Bipartition> two_coloring(const Graph& g) {
    std::vector<int> col(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (col[s] != -1) continue;
        col[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (col[y] == -1) {
                    col[y] = 1 - col[x];
                    stack.push_back(y);
                } else if (col[y] == col[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < g.order(); ++v) (col[v] ? b.b : b.a).push_back(v);
    return b;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& del) {
    std::set<Edge> d(del.begin(), del.end());
    std::vector<Edge> keep;
    for (const Edge& e : g.edges())
        if (!d.count(e)) keep.push_back(e);
    return Graph(g.order(), std::move(keep));
}

std::vector<Edge> edge_difference(const Graph& g, const Graph& h) {
    std::vector<Edge> out;
    std::set_difference(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end(),
                        std::back_inserter(out));
    return out;
}

Graph induced_component(const Graph& g, const Components& c, int index,
                        std::vector<int>* vertices) {
    std::vector<int> map(g.order(), -1);
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if (c.label[v] == index) {
            map[v] = static_cast<int>(verts.size());
            verts.push_back(v);
        }
    std::vector<Edge> e;
    for (const Edge& x : g.edges())
        if (map[x.u] != -1) e.emplace_back(map[x.u], map[x.v]);
    if (vertices) *vertices = verts;
    return Graph(static_cast<int>(verts.size()), std::move(e));
}

}  // namespace surfskew
