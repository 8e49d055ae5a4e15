#include <algorithm>
#include <bit>
#include <set>

#include "surfskew/constructions.hpp"
#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"

namespace surfskew {

namespace {

// Twin face in the mirror copy (shift by p), read in the order a tube needs.
FaceWalk mirror_twin(const FaceWalk& f, int p) {
    FaceWalk t;
    t.vertices.push_back(f.vertices[0] + p);
    for (int i = f.length() - 1; i >= 1; --i) t.vertices.push_back(f.vertices[i] + p);
    return t;
}

struct Doubled {
    RotationSystem rs;
    Vdqc vdqc;
    std::vector<Edge> omitted;  // tube edges not added
};

// Doubling along s; the last n_drop quads get no tube and stay in the cover.
Doubled double_with_drops(const RotationSystem& rs, const Vdqc& s, int n_drop) {
    int p = rs.order();
    RotationSystem u = disjoint_union(rs, mirror(rs));
    Doubled out;
    int keep = static_cast<int>(s.size()) - n_drop;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        const FaceWalk& f = s[i];
        FaceWalk twin = mirror_twin(f, p);
        if (i >= keep) {
            out.vdqc.push_back(f);
            out.vdqc.push_back(twin);
            for (int v : f.vertices) out.omitted.emplace_back(v, v + p);
            continue;
        }
        std::vector<std::pair<int, int>> match;
        for (int v : f.vertices) match.emplace_back(v, v + p);
        u = attach_tube(u, f, twin, match);
        const auto& x = f.vertices;
        out.vdqc.push_back(FaceWalk{{x[0], x[1], x[1] + p, x[0] + p}});
        out.vdqc.push_back(FaceWalk{{x[2], x[3], x[3] + p, x[2] + p}});
    }
    out.rs = std::move(u);
    return out;
}

std::vector<Edge> shifted(const std::vector<Edge>& es, int p) {
    std::vector<Edge> out;
    for (const Edge& e : es) out.emplace_back(e.u + p, e.v + p);
    return out;
}

}  // namespace

EmbeddedVdqc vdqc_double(const RotationSystem& rs, const Vdqc& s) {
    if (!verify_vdqc(rs, s)) throw ParameterError("vdqc_double: not a VDQC of the embedding");
    if (!is_connected(rs.graph())) throw ParameterError("vdqc_double: embedding must be connected");
    int t = euler_genus(rs);
    int f = face_count(rs);
    bool quad = is_quadrangulation(rs);
    Doubled d = double_with_drops(rs, s, 0);
    int t2 = euler_genus(d.rs);
    if (t2 != 2 * t + static_cast<int>(s.size()) - 1)
        throw IntegrityError("vdqc_double: genus recurrence violated");
    if (quad && (!is_quadrangulation(d.rs) || face_count(d.rs) != 2 * f + 2 * static_cast<int>(s.size())))
        throw IntegrityError("vdqc_double: quadrangulation not preserved");
    if (d.vdqc.size() != 2 * s.size() || !verify_vdqc(d.rs, d.vdqc))
        throw IntegrityError("vdqc_double: produced cover is not a VDQC");
    RotationSystem out = d.rs;
    if (rs.graph().family())
        if (auto* c = std::get_if<family::Cube>(&*rs.graph().family())) {
            Graph q = generate(family::Cube{c->d + 1});
            if (q == out.graph()) out = out.relabeled_graph(q);
        }
    return {out, d.vdqc};
}

std::vector<int> cube_drop_plan(int d, std::int64_t k) {
    if (d < 3) throw ParameterError("cube_drop_plan needs d >= 3");
    std::int64_t gamma = t_cube(d);
    if (k < 0 || k > gamma) throw ParameterError("k must lie in [0, genus(Q_d)]");
    std::vector<int> plan(d + 1, 0);
    std::int64_t rest = k;
    for (int j = 4; j <= d; ++j) {
        std::int64_t weight = std::int64_t(1) << (d - j);
        std::int64_t cap = (std::int64_t(1) << (j - 3)) - 1;
        std::int64_t n = std::min(cap, rest / weight);
        plan[j] = static_cast<int>(n);
        rest -= n * weight;
    }
    if (rest != 0) throw IntegrityError("greedy drop decomposition left a remainder");
    return plan;
}

namespace {

struct CubeBuild {
    RotationSystem rs;
    Vdqc vdqc;
    std::vector<Edge> deleted;
};

CubeBuild build_cube(int d, const std::vector<int>& plan) {
    CubeBuild b{planar_c4(), {FaceWalk{{0, 1, 3, 2}}}, {}};
    for (int j = 3; j <= d; ++j) {
        int p = 1 << (j - 1);
        int drop = j < static_cast<int>(plan.size()) ? plan[j] : 0;
        Doubled dd = double_with_drops(b.rs, b.vdqc, drop);
        std::vector<Edge> del = b.deleted;
        for (const Edge& e : shifted(b.deleted, p)) del.push_back(e);
        for (const Edge& e : dd.omitted) del.push_back(e);
        std::sort(del.begin(), del.end());
        b = {std::move(dd.rs), std::move(dd.vdqc), std::move(del)};
    }
    return b;
}

}  // namespace

EmbeddedVdqc cube_genus_embedding(int d) {
    if (d < 3) throw ParameterError("cube_genus_embedding needs d >= 3");
    CubeBuild b = build_cube(d, {});
    Graph q = generate(family::Cube{d});
    if (!(b.rs.graph() == q) || euler_genus(b.rs) != t_cube(d) || !is_quadrangulation(b.rs) ||
        static_cast<int>(b.vdqc.size()) != (1 << (d - 2)) || !verify_vdqc(b.rs, b.vdqc))
        throw IntegrityError("cube_genus_embedding postcondition failed");
    return {b.rs.relabeled_graph(q), b.vdqc};
}

DeletionCertificate cube_with_drops(int d, std::int64_t k) {
    std::vector<int> plan = cube_drop_plan(d, k);
    CubeBuild b = build_cube(d, plan);
    Graph q = generate(family::Cube{d});
    std::int64_t t = t_cube(d) - k;
    if (!(b.rs.graph() == remove_edges(q, b.deleted)))
        throw IntegrityError("cube_with_drops: embedded graph is not Q_d minus the deleted set");
    if (static_cast<std::int64_t>(b.deleted.size()) != 4 * k || euler_genus(b.rs) != t ||
        !is_quadrangulation(b.rs) || !is_connected(b.rs.graph()))
        throw IntegrityError("cube_with_drops postcondition failed");
    return certificate_from_embedding(q, b.rs, t);
}

DeletionCertificate cube_in_kaa_certificate(int d) {
    if (d < 3) throw ParameterError("cube_in_kaa_certificate needs d >= 3");
    RotationSystem q = cube_genus_embedding(d).rs;
    int a = 1 << (d - 1);
    std::vector<int> label(2 * a);
    int even = 0, odd = a;
    for (int v = 0; v < 2 * a; ++v) label[v] = std::popcount(unsigned(v)) % 2 ? odd++ : even++;
    RotationSystem rs = relabel(q, label);
    Graph host = generate(family::CompleteBipartite{a, a});
    std::int64_t t = t_cube(d);
    DeletionCertificate c = certificate_from_embedding(host, rs, t);
    if (static_cast<std::int64_t>(c.deleted.size()) != excess(host, t).epsilon)
        throw IntegrityError("cube_in_kaa_certificate: size differs from epsilon");
    return c;
}

}  // namespace surfskew
