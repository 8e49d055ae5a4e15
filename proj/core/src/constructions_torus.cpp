#include <algorithm>
#include <bit>

#include "surfskew/constructions.hpp"
#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"

namespace surfskew {

namespace {

bool contains(const FaceWalk& f, int v) {
    return std::find(f.vertices.begin(), f.vertices.end(), v) != f.vertices.end();
}

FaceWalk first_face_with(const RotationSystem& rs, std::initializer_list<int> vs) {
    for (const FaceWalk& f : trace_faces(rs))
        if (std::all_of(vs.begin(), vs.end(), [&](int v) { return contains(f, v); })) return f;
    throw IntegrityError("no face holds the requested corners");
}

std::vector<int> corners_in_order(const FaceWalk& f, std::vector<int> cs) {
    std::sort(cs.begin(), cs.end(), [&](int x, int y) {
        return std::find(f.vertices.begin(), f.vertices.end(), x) <
               std::find(f.vertices.begin(), f.vertices.end(), y);
    });
    return cs;
}

}  // namespace

// u_j = j, w_j = r + j. The u- and w-cycles run around the torus; the front band
// carries u_j w_j, u_j w_{j+1}, the back band w_j u_{j+1}, w_j u_{j+2}.
Embedded torus_complete_even(int r) {
    if (r < 4) throw ParameterError("torus_complete_even needs r >= 4");
    auto u = [r](int j) { return ((j % r) + r) % r; };
    auto w = [r](int j) { return r + ((j % r) + r) % r; };
    std::vector<std::vector<int>> rot(2 * r);
    for (int j = 0; j < r; ++j) {
        rot[u(j)] = {u(j + 1), w(j - 1), w(j - 2), u(j - 1), w(j), w(j + 1)};
        rot[w(j)] = {w(j + 1), u(j), u(j - 1), w(j - 1), u(j + 1), u(j + 2)};
    }
    RotationSystem rs(2 * r, std::move(rot));
    if (!is_triangulation(rs) || euler_genus(rs) != 1)
        throw IntegrityError("torus_complete_even: not a triangulation of the torus");
    Graph host = generate(family::Complete{2 * r});
    DeletionCertificate cert = certificate_from_embedding(host, rs, 1);
    if (static_cast<long>(cert.deleted.size()) != 2L * r * r - 7L * r)
        throw IntegrityError("torus_complete_even: wrong deletion count");
    return {rs, cert};
}

DeletionCertificate torus_complete_odd(int r) {
    if (r < 4) throw ParameterError("torus_complete_odd needs r >= 4");
    RotationSystem rs = torus_complete_even(r).rs;
    FaceWalk tri = trace_faces(rs).front();
    rs = insert_vertex_in_face(rs, tri, tri.vertices);
    if (!is_triangulation(rs) || euler_genus(rs) != 1)
        throw IntegrityError("torus_complete_odd: not a triangulation of the torus");
    DeletionCertificate cert =
        certificate_from_embedding(generate(family::Complete{2 * r + 1}), rs, 1);
    if (static_cast<long>(cert.deleted.size()) != 2L * r * r - 5L * r - 3)
        throw IntegrityError("torus_complete_odd: wrong deletion count");
    return cert;
}

// Planar K_{a,2} plus a third B vertex c = a+2 of degree 4: two edges to the
// outermost A points in the outer face, two through a handle to the innermost pair.
DeletionCertificate torus_kab_b3(int a) {
    if (a < 5) throw ParameterError("torus_kab_b3 needs a >= 5");
    RotationSystem rs = guy_planar_quadrangulation(a, 2).rs;
    int m0 = (a - 1) / 2, m1 = m0 + 1, c = a + 2;
    FaceWalk outer = first_face_with(rs, {0, a - 1});
    FaceWalk inner = first_face_with(rs, {m0, m1});
    rs = insert_vertex_in_face(rs, outer, corners_in_order(outer, {0, a - 1}));
    FaceWalk with_c = face_through(rs, c, rs.rotation(c).front());
    rs = attach_tube(rs, with_c, inner, {{c, m0}});
    FaceWalk merged = face_through(rs, c, m0);
    const auto& w = merged.vertices;
    int pc = static_cast<int>(std::find(w.begin(), w.end(), c) - w.begin());
    int pm = static_cast<int>(std::find(w.begin(), w.end(), m1) - w.begin());
    rs = add_edge_at_corners(rs, merged, pc, pm);
    if (euler_genus(rs) != 1 || !is_connected(rs.graph()))
        throw IntegrityError("torus_kab_b3: result is not a connected torus embedding");
    DeletionCertificate cert =
        certificate_from_embedding(generate(family::CompleteBipartite{a, 3}), rs, 1);
    if (static_cast<int>(cert.deleted.size()) != a - 4)
        throw IntegrityError("torus_kab_b3: wrong deletion count");
    return cert;
}

// Planar Q_3 with a handle joining the squares of last coordinate 0 and 1 along
// antipodal pairs; relabelled so that even-weight vertices come first.
RotationSystem torus_k44_quadrangulation() {
    RotationSystem q3 = planar_cube3();
    FaceWalk low;
    for (const FaceWalk& f : trace_faces(q3))
        if (std::all_of(f.vertices.begin(), f.vertices.end(), [](int v) { return v < 4; })) {
            low = f;
            break;
        }
    FaceWalk high;
    const auto& l = low.vertices;
    high.vertices = {7 - l[0], 7 - l[3], 7 - l[2], 7 - l[1]};
    std::vector<std::pair<int, int>> match;
    for (int v : l) match.emplace_back(v, 7 - v);
    RotationSystem f3 = attach_tube(q3, low, high, match);
    std::vector<int> label(8);
    int even = 0, odd = 4;
    for (int v = 0; v < 8; ++v) label[v] = std::popcount(unsigned(v)) % 2 ? odd++ : even++;
    RotationSystem k44 = relabel(f3, label);
    Graph host = generate(family::CompleteBipartite{4, 4});
    if (!(k44.graph() == host) || euler_genus(k44) != 1 || !is_quadrangulation(k44))
        throw IntegrityError("torus_k44_quadrangulation postcondition failed");
    return k44.relabeled_graph(host);
}

Embedded grow_quadrangulation(const RotationSystem& base, int part, int n_new) {
    if (part != 0 && part != 1) throw ParameterError("part must be 0 (A) or 1 (B)");
    if (n_new < 0) throw ParameterError("n_new must be non-negative");
    const auto& bp = base.graph().bipartition();
    if (!bp) throw ParameterError("grow_quadrangulation needs a recorded bipartition");
    if (!is_quadrangulation(base)) throw ParameterError("grow_quadrangulation needs a quadrangulation");
    std::vector<int> side(base.order());
    for (int v : bp->a) side[v] = 0;
    for (int v : bp->b) side[v] = 1;

    RotationSystem rs = base;
    for (int i = 0; i < n_new; ++i) {
        bool done = false;
        for (const FaceWalk& f : trace_faces(rs)) {
            std::vector<int> cs;
            for (int v : f.vertices)
                if (side[v] != part) cs.push_back(v);
            if (cs.size() != 2 || cs[0] == cs[1]) continue;
            rs = insert_vertex_in_face(rs, f, cs);
            side.push_back(part);
            done = true;
            break;
        }
        if (!done) throw ParameterError("no quad face has two corners opposite the requested part");
    }
    std::vector<int> label(rs.order());
    int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
    int b = rs.order() - a;
    int na = 0, nb = a;
    for (int v = 0; v < rs.order(); ++v) label[v] = side[v] == 0 ? na++ : nb++;
    RotationSystem out = relabel(rs, label);
    std::int64_t t = euler_genus(out);
    Graph host = generate(family::CompleteBipartite{a, b});
    if (!is_quadrangulation(out) || t != euler_genus(base))
        throw IntegrityError("grow_quadrangulation postcondition failed");
    Bipartition parts;
    for (int v = 0; v < a; ++v) parts.a.push_back(v);
    for (int v = a; v < a + b; ++v) parts.b.push_back(v);
    out = out.relabeled_graph(out.graph().with_bipartition(parts));
    return {out, certificate_from_embedding(host, out, t)};
}

Embedded torus_kab_quadrangulation(int a, int b) {
    if (a < 4 || b < 4) throw ParameterError("torus_kab_quadrangulation needs a, b >= 4");
    Embedded e = grow_quadrangulation(torus_k44_quadrangulation(), 0, a - 4);
    e = grow_quadrangulation(e.rs, 1, b - 4);
    if (static_cast<std::int64_t>(e.cert.deleted.size()) != excess(e.cert.host, 1).epsilon)
        throw IntegrityError("torus_kab_quadrangulation: certificate size differs from epsilon_1");
    return e;
}

}  // namespace surfskew
