#include <algorithm>
#include <set>

#include "surfskew/embedding.hpp"
#include "surfskew/error.hpp"

namespace surfskew {

namespace {

using Rot = std::vector<std::vector<int>>;

// Position of v on the walk; -1 if absent, -2 if it occurs more than once.
int position_on(const FaceWalk& f, int v) {
    int pos = -1;
    for (int i = 0; i < f.length(); ++i)
        if (f.vertices[i] == v) {
            if (pos != -1) return -2;
            pos = i;
        }
    return pos;
}

int require_position(const FaceWalk& f, int v, const char* what) {
    int pos = position_on(f, v);
    if (pos == -1)
        throw SurgeryError(std::string(what) + ": vertex " + std::to_string(v) + " not on the face");
    if (pos == -2)
        throw SurgeryError(std::string(what) + ": vertex " + std::to_string(v) +
                           " occurs more than once on the face");
    return pos;
}

int pred_on(const FaceWalk& f, int pos) { return f.vertices[(pos + f.length() - 1) % f.length()]; }

void insert_after(std::vector<int>& r, int anchor, int x) {
    auto it = std::find(r.begin(), r.end(), anchor);
    if (it == r.end()) throw SurgeryError("corner anchor missing from rotation");
    r.insert(it + 1, x);
}

// True if positions, read from index 0, wrap around at most once going up.
bool cyclically_increasing(const std::vector<int>& pos) {
    if (pos.size() <= 1) return true;
    int drops = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        int a = pos[i], b = pos[(i + 1) % pos.size()];
        if (a == b) return false;
        if (b < a) ++drops;
    }
    return drops == 1;
}

void require_face(const RotationSystem& rs, const FaceWalk& f, const char* what) {
    if (!is_face(rs, f)) throw SurgeryError(std::string(what) + ": walk is not a face");
}

}  // namespace

RotationSystem mirror(const RotationSystem& rs) {
    Rot r = rs.rotations();
    for (auto& x : r) std::reverse(x.begin(), x.end());
    return RotationSystem(rs.graph(), std::move(r));
}

RotationSystem disjoint_union(const RotationSystem& a, const RotationSystem& b) {
    Rot r = a.rotations();
    int shift = a.order();
    for (const auto& x : b.rotations()) {
        std::vector<int> y;
        for (int w : x) y.push_back(w + shift);
        r.push_back(std::move(y));
    }
    return RotationSystem(a.order() + b.order(), std::move(r));
}

RotationSystem relabel(const RotationSystem& rs, const std::vector<int>& new_label) {
    int p = rs.order();
    if (static_cast<int>(new_label.size()) != p) throw ParameterError("relabel: wrong length");
    std::vector<char> used(p, 0);
    for (int x : new_label) {
        if (x < 0 || x >= p || used[x]) throw ParameterError("relabel: not a permutation");
        used[x] = 1;
    }
    Rot r(p);
    for (int v = 0; v < p; ++v)
        for (int w : rs.rotation(v)) r[new_label[v]].push_back(new_label[w]);
    return RotationSystem(p, std::move(r));
}

RotationSystem pad_vertices(const RotationSystem& rs, int p) {
    if (p < rs.order()) throw ParameterError("pad_vertices: cannot shrink");
    Rot r = rs.rotations();
    r.resize(p);
    return RotationSystem(p, std::move(r));
}

RotationSystem attach_tube(const RotationSystem& rs, const FaceWalk& faceA, const FaceWalk& faceB,
                           const std::vector<std::pair<int, int>>& matching) {
    require_face(rs, faceA, "attach_tube");
    require_face(rs, faceB, "attach_tube");
    if (cyclically_equal(faceA, faceB)) throw SurgeryError("attach_tube: faces coincide");
    if (matching.empty()) throw SurgeryError("attach_tube: empty matching");

    std::vector<int> pa, pb;
    std::set<int> as, bs;
    for (auto [a, b] : matching) {
        if (a == b) throw SurgeryError("attach_tube: matching pairs a vertex with itself");
        if (rs.graph().has_edge(a, b))
            throw SurgeryError("attach_tube: edge " + std::to_string(a) + "-" + std::to_string(b) +
                               " already present");
        if (!as.insert(a).second || !bs.insert(b).second)
            throw SurgeryError("attach_tube: matching vertices must be distinct");
        pa.push_back(require_position(faceA, a, "attach_tube"));
        pb.push_back(require_position(faceB, b, "attach_tube"));
    }
    std::vector<int> pb_rev(pb.rbegin(), pb.rend());
    if (!cyclically_increasing(pa) || !cyclically_increasing(pb_rev))
        throw SurgeryError("attach_tube: matching orientation incompatible with the faces");

    int f0 = face_count(rs);
    Components c0 = components(rs.graph());
    bool same_component = c0.label[faceA.vertices[0]] == c0.label[faceB.vertices[0]];
    int g0 = euler_genus(rs);

    // Anchors are read from the original walks before any insertion.
    Rot r = rs.rotations();
    for (std::size_t i = 0; i < matching.size(); ++i) {
        auto [a, b] = matching[i];
        insert_after(r[a], pred_on(faceA, pa[i]), b);
        insert_after(r[b], pred_on(faceB, pb[i]), a);
    }
    RotationSystem out(rs.order(), std::move(r));
    int m = static_cast<int>(matching.size());
    if (face_count(out) != f0 - 2 + m)
        throw SurgeryError("attach_tube: face count " + std::to_string(face_count(out)) +
                           " differs from expected " + std::to_string(f0 - 2 + m));
    int expect = same_component ? g0 + 1 : g0;
    if (euler_genus(out) != expect) throw SurgeryError("attach_tube: genus accounting failed");
    return out;
}

RotationSystem insert_vertex_in_face(const RotationSystem& rs, const FaceWalk& face,
                                     const std::vector<int>& attach_to) {
    require_face(rs, face, "insert_vertex_in_face");
    if (attach_to.size() < 2) throw SurgeryError("insert_vertex_in_face: need at least 2 corners");
    std::vector<int> pos;
    for (int c : attach_to) pos.push_back(require_position(face, c, "insert_vertex_in_face"));
    if (!cyclically_increasing(pos))
        throw SurgeryError("insert_vertex_in_face: corners not listed in face order");
    int p = rs.order();
    int f0 = face_count(rs);
    Rot r = rs.rotations();
    for (std::size_t i = 0; i < attach_to.size(); ++i)
        insert_after(r[attach_to[i]], pred_on(face, pos[i]), p);
    r.emplace_back(attach_to.rbegin(), attach_to.rend());
    RotationSystem out(p + 1, std::move(r));
    if (face_count(out) != f0 + static_cast<int>(attach_to.size()) - 1)
        throw SurgeryError("insert_vertex_in_face: face count check failed");
    return out;
}

RotationSystem add_edge_in_face(const RotationSystem& rs, const FaceWalk& face, int u, int w) {
    require_face(rs, face, "add_edge_in_face");
    int pu = require_position(face, u, "add_edge_in_face");
    int pw = require_position(face, w, "add_edge_in_face");
    return add_edge_at_corners(rs, face, pu, pw);
}

RotationSystem add_edge_at_corners(const RotationSystem& rs, const FaceWalk& face, int pos_u, int pos_w) {
    require_face(rs, face, "add_edge_at_corners");
    if (pos_u < 0 || pos_w < 0 || pos_u >= face.length() || pos_w >= face.length())
        throw SurgeryError("add_edge_at_corners: corner out of range");
    int u = face.vertices[pos_u], w = face.vertices[pos_w];
    if (u == w || rs.graph().has_edge(u, w)) throw SurgeryError("add_edge_in_face: bad chord");
    int f0 = face_count(rs);
    Rot r = rs.rotations();
    insert_after(r[u], pred_on(face, pos_u), w);
    insert_after(r[w], pred_on(face, pos_w), u);
    RotationSystem out(rs.order(), std::move(r));
    if (face_count(out) != f0 + 1) throw SurgeryError("add_edge_in_face: face count check failed");
    return out;
}

RotationSystem delete_edges(const RotationSystem& rs, const std::vector<Edge>& del) {
    Rot r = rs.rotations();
    for (const Edge& e : del) {
        if (!rs.graph().has_edge(e.u, e.v))
            throw ParameterError("delete_edges: " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v) + " is not an edge");
        std::erase(r[e.u], e.v);
        std::erase(r[e.v], e.u);
    }
    return RotationSystem(rs.order(), std::move(r));
}

RotationSystem swap_edge_ends(const RotationSystem& rs, std::pair<int, int> e1,
                              std::pair<int, int> e2) {
    auto [x1, y1] = e1;
    auto [x2, y2] = e2;
    const Graph& g = rs.graph();
    if (!g.has_edge(x1, y1) || !g.has_edge(x2, y2))
        throw SurgeryError("swap_edge_ends: not an edge");
    std::set<int> ends{x1, y1, x2, y2};
    if (ends.size() != 4) throw SurgeryError("swap_edge_ends: endpoints must be distinct");
    if (g.has_edge(x1, y2) || g.has_edge(x2, y1))
        throw SurgeryError("swap_edge_ends: resulting edge already present");
    Rot r = rs.rotations();
    auto replace = [&](int v, int from, int to) {
        auto it = std::find(r[v].begin(), r[v].end(), from);
        *it = to;
    };
    replace(y1, x1, x2);
    replace(x2, y2, y1);
    replace(x1, y1, y2);
    replace(y2, x2, x1);
    return RotationSystem(rs.order(), std::move(r));
}

}  // namespace surfskew
