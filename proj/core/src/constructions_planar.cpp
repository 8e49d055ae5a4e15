#include <algorithm>

#include "surfskew/constructions.hpp"
#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"

namespace surfskew {

DeletionCertificate certificate_from_embedding(const Graph& host, const RotationSystem& emb,
                                               std::int64_t t) {
    if (emb.order() != host.order())
        throw IntegrityError("embedding has " + std::to_string(emb.order()) +
                             " vertices, host has " + std::to_string(host.order()));
    if (!edge_difference(emb.graph(), host).empty())
        throw IntegrityError("embedding uses an edge that is not in the host graph");
    DeletionCertificate c;
    c.host = host;
    if (host.family()) c.source = "family " + to_string(*host.family());
    c.deleted = edge_difference(host, emb.graph());
    c.t = t;
    c.embedding = emb;
    return c;
}

RotationSystem planar_c4() { return RotationSystem(4, {{1, 2}, {3, 0}, {0, 3}, {2, 1}}); }

RotationSystem planar_cube3() { return cube_genus_embedding(3).rs; }

namespace {

// The face through u -> w, or through w -> u, whichever holds `need` as well.
FaceWalk face_containing(const RotationSystem& rs, int u, int w, int need) {
    for (auto [x, y] : {std::pair{u, w}, std::pair{w, u}}) {
        FaceWalk f = face_through(rs, x, y);
        if (std::find(f.vertices.begin(), f.vertices.end(), need) != f.vertices.end()) return f;
    }
    throw IntegrityError("expected face not found");
}

// The two corners in the order they occur along the face.
std::vector<int> in_face_order(const FaceWalk& f, int x, int y) {
    auto px = std::find(f.vertices.begin(), f.vertices.end(), x);
    auto py = std::find(f.vertices.begin(), f.vertices.end(), y);
    return px < py ? std::vector<int>{x, y} : std::vector<int>{y, x};
}

}  // namespace

// A on the x-axis (0..a-1 from left to right), B on the y-axis (a = lowest, a+b-1 = highest).
Embedded guy_planar_quadrangulation(int a, int b) {
    if (a < 2 || b < 2) throw ParameterError("guy_planar_quadrangulation needs a, b >= 2");
    int m0 = (a - 1) / 2, m1 = m0 + 1;
    int bottom = a, top = a + b - 1;

    // Built on temporary labels 0,1,2,... then relabelled.
    std::vector<int> label{m0, top, m1, bottom};
    RotationSystem rs(4, {{1, 3}, {2, 0}, {3, 1}, {0, 2}});
    auto temp = [&](int final_label) {
        return static_cast<int>(std::find(label.begin(), label.end(), final_label) - label.begin());
    };
    // Outer face always has the current leftmost and rightmost A points as corners.
    int left = m0, right = m1;
    FaceWalk outer = trace_faces(rs)[1];
    FaceWalk inner = trace_faces(rs)[0];
    int next_left = m0 - 1, next_right = m1 + 1;
    bool go_left = true;
    while (next_left >= 0 || next_right < a) {
        bool left_side = (go_left && next_left >= 0) || next_right >= a;
        go_left = !go_left;
        int x = left_side ? next_left-- : next_right++;
        int nv = rs.order();
        label.push_back(x);
        rs = insert_vertex_in_face(rs, outer, in_face_order(outer, temp(top), temp(bottom)));
        (left_side ? left : right) = x;
        outer = face_containing(rs, nv, temp(top), temp(left_side ? right : left));
    }
    // B points go into the face around the origin, joined to the innermost pair.
    inner = face_containing(rs, temp(m0), temp(top), temp(m1));
    for (int y = a + 1; y < top; ++y) {
        int nv = rs.order();
        label.push_back(y);
        rs = insert_vertex_in_face(rs, inner, in_face_order(inner, temp(m0), temp(m1)));
        inner = face_containing(rs, nv, temp(m0), temp(m1));
    }
    RotationSystem out = relabel(rs, label);
    Graph host = generate(family::CompleteBipartite{a, b});
    if (euler_genus(out) != 0 || (a + b > 4 && !is_quadrangulation(out)) ||
        out.size() != 2 * (a + b) - 4)
        throw IntegrityError("guy_planar_quadrangulation postcondition failed");
    DeletionCertificate cert = certificate_from_embedding(host, out, 0);
    if (static_cast<std::int64_t>(cert.deleted.size()) != excess(host, 0).epsilon)
        throw IntegrityError("guy_planar_quadrangulation: certificate size differs from epsilon_0");
    return {out, cert};
}

}  // namespace surfskew
