#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfskew/graph.hpp"

namespace surfskew {

// Half-edge at `vertex`, sitting at position `slot` in its rotation.
struct Dart {
    int vertex = 0;
    int slot = 0;
    auto operator<=>(const Dart&) const = default;
};

// Closed walk of a face, as the tail vertices of its darts in trace order.
struct FaceWalk {
    std::vector<int> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()); }
    bool operator==(const FaceWalk&) const = default;
};

// Same cyclic sequence up to rotation (not reversal).
bool cyclically_equal(const FaceWalk& x, const FaceWalk& y);

// Orientable combinatorial embedding: a cyclic neighbor order at every vertex.
// Rotations are stored rotated so that the smallest neighbor comes first.
class RotationSystem {
  public:
    RotationSystem() = default;
    // Builds the underlying graph from the rotations; throws ParameterError
    // unless the neighbor lists describe a simple symmetric graph.
    RotationSystem(int p, std::vector<std::vector<int>> rotations);
    // Keeps labels of `g`; rotations must use exactly g's edges.
    RotationSystem(Graph g, std::vector<std::vector<int>> rotations);

    const Graph& graph() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }
    int size() const noexcept { return graph_.size(); }
    const std::vector<int>& rotation(int v) const { return rot_.at(v); }
    const std::vector<std::vector<int>>& rotations() const noexcept { return rot_; }

    int dart_count() const noexcept { return 2 * graph_.size(); }
    Dart paired(Dart d) const;
    // Face-tracing step: cross to the paired dart, then take its rotation successor.
    Dart next_in_face(Dart d) const;
    int slot_of(int v, int neighbor) const;

    RotationSystem relabeled_graph(Graph g) const;  // swap labels, same edges

    friend bool operator==(const RotationSystem& x, const RotationSystem& y) {
        return x.rot_ == y.rot_;
    }

  private:
    Graph graph_;
    std::vector<std::vector<int>> rot_;
};

std::vector<FaceWalk> trace_faces(const RotationSystem& rs);
// Face walk containing the dart u -> w.
FaceWalk face_through(const RotationSystem& rs, int u, int w);
// True if `walk` is (cyclically) one of the faces of rs.
bool is_face(const RotationSystem& rs, const FaceWalk& walk);

int face_count(const RotationSystem& rs);
int euler_genus(const RotationSystem& rs);
std::map<int, int> face_census(const RotationSystem& rs);
bool is_quadrangulation(const RotationSystem& rs);
bool is_triangulation(const RotationSystem& rs);

// --- surgery; every operation returns a new value ---

RotationSystem mirror(const RotationSystem& rs);
RotationSystem disjoint_union(const RotationSystem& a, const RotationSystem& b);
// new_label[v] is the image of v; must be a permutation of 0..p-1.
RotationSystem relabel(const RotationSystem& rs, const std::vector<int>& new_label);

// Joins two faces by a handle carrying one edge per (a, b) pair. The a's must
// occur on faceA in walk order and the b's on faceB in the reverse order.
RotationSystem attach_tube(const RotationSystem& rs, const FaceWalk& faceA, const FaceWalk& faceB,
                           const std::vector<std::pair<int, int>>& matching);

// Adds vertex p inside `face`, joined to attach_to (listed in face order).
RotationSystem insert_vertex_in_face(const RotationSystem& rs, const FaceWalk& face,
                                     const std::vector<int>& attach_to);

// Adds chord u-w inside `face`, splitting it in two.
RotationSystem add_edge_in_face(const RotationSystem& rs, const FaceWalk& face, int u, int w);
// Same, for faces that pass a vertex more than once: corners are walk positions.
RotationSystem add_edge_at_corners(const RotationSystem& rs, const FaceWalk& face, int pos_u, int pos_w);

RotationSystem delete_edges(const RotationSystem& rs, const std::vector<Edge>& del);

// e1 = (x1, y1), e2 = (x2, y2) become (x1, y2) and (x2, y1). Orientation of the
// pairs matters. Rotations keep their corners; genus is not preserved in general.
RotationSystem swap_edge_ends(const RotationSystem& rs, std::pair<int, int> e1,
                              std::pair<int, int> e2);

// Wraps an existing graph's vertex set: extends rs with isolated vertices up to p.
RotationSystem pad_vertices(const RotationSystem& rs, int p);

using Vdqc = std::vector<FaceWalk>;

bool verify_vdqc(const RotationSystem& rs, const Vdqc& s);

struct VdqcSearch {
    std::optional<Vdqc> cover;
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;
};

// Exact cover of the vertex set by quad faces. Faces are tried in trace order,
// so the result is the lexicographically first cover in that order.
VdqcSearch find_vdqc(const RotationSystem& rs, std::uint64_t budget_nodes = 1'000'000);

RotationSystem parse_embedding(const std::string& text);
std::string serialize_embedding(const RotationSystem& rs);

}  // namespace surfskew
