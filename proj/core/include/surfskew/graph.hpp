#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace surfskew {

struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

namespace family {
struct Complete { int n; };
struct CompleteBipartite { int a; int b; };
struct Cube { int d; };
struct FoldedCube { int d; };
struct Octahedron { int r; };
struct Circulant { int n; std::vector<int> jumps; };
struct Cycle { int n; };
struct Path { int n; };
}  // namespace family

using FamilySpec = std::variant<family::Complete, family::CompleteBipartite, family::Cube,
                                family::FoldedCube, family::Octahedron, family::Circulant,
                                family::Cycle, family::Path>;

// "cube 4", "complete-bipartite 5 3", "circulant 12 1 3", ...
std::string to_string(const FamilySpec& spec);
FamilySpec parse_family(const std::string& text);

struct Bipartition {
    std::vector<int> a;
    std::vector<int> b;
};

// Simple undirected graph on vertices 0..p-1. Immutable once built.
class Graph {
  public:
    Graph() = default;
    // Throws ParameterError on loops, repeated edges or out-of-range endpoints.
    Graph(int p, std::vector<Edge> edges);

    int order() const noexcept { return p_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    const std::optional<FamilySpec>& family() const noexcept { return family_; }
    const std::optional<Bipartition>& bipartition() const noexcept { return bipartition_; }

    Graph with_family(FamilySpec spec) const;
    // Validates that every edge crosses the partition.
    Graph with_bipartition(Bipartition parts) const;
    Graph without_labels() const;

    friend bool operator==(const Graph& x, const Graph& y) {
        return x.p_ == y.p_ && x.edges_ == y.edges_;
    }

  private:
    int p_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::optional<FamilySpec> family_;
    std::optional<Bipartition> bipartition_;
};

Graph generate(const FamilySpec& spec);

// std::nullopt stands for infinite girth (forests).
std::optional<int> girth(const Graph& g);

struct Components {
    int count = 0;
    std::vector<int> label;  // component index per vertex, numbered by least vertex
};

Components components(const Graph& g);
bool is_connected(const Graph& g);
int cycle_rank(const Graph& g);

// Returns the two colour classes, or nullopt if g has an odd cycle.
std::optional<Bipartition> two_coloring(const Graph& g);

Graph remove_edges(const Graph& g, const std::vector<Edge>& del);
std::vector<Edge> edge_difference(const Graph& g, const Graph& h);
Graph induced_component(const Graph& g, const Components& c, int index, std::vector<int>* vertices);

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace surfskew
