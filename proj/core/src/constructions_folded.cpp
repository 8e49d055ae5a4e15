#include <algorithm>
#include <bit>
#include <set>

#include "surfskew/constructions.hpp"
#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"

namespace surfskew {

namespace {

std::int64_t folded_genus(int d) { return genus_formula(family::FoldedCube{d}); }

// Antipodal image of a face, read in the order a tube needs.
FaceWalk antipodal_twin(const FaceWalk& f, int mask) {
    const auto& x = f.vertices;
    return FaceWalk{{x[0] ^ mask, x[3] ^ mask, x[2] ^ mask, x[1] ^ mask}};
}

struct AntipodalCover {
    std::vector<std::pair<FaceWalk, FaceWalk>> pairs;
    std::size_t candidates = 0;
};

// Exact cover of V(Q_d) by face pairs (R, antipodal R) of the cube embedding.
AntipodalCover antipodal_cover(const RotationSystem& rs, int mask) {
    AntipodalCover out;
    int p = rs.order();
    std::vector<std::pair<FaceWalk, FaceWalk>> cand;
    for (const FaceWalk& f : trace_faces(rs)) {
        if (f.length() != 4) continue;
        std::set<int> vs(f.vertices.begin(), f.vertices.end());
        if (vs.size() != 4) continue;
        FaceWalk t = antipodal_twin(f, mask);
        bool disjoint = std::none_of(t.vertices.begin(), t.vertices.end(),
                                     [&](int v) { return vs.count(v) > 0; });
        if (disjoint && is_face(rs, t)) cand.emplace_back(f, t);
    }
    out.candidates = cand.size();
    std::vector<std::vector<int>> by_vertex(p);
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (int v : cand[i].first.vertices) by_vertex[v].push_back(static_cast<int>(i));
    std::vector<char> covered(p, 0);
    std::vector<int> chosen;
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, int from) -> bool {
        if (++nodes > 5'000'000) throw IntegrityError("antipodal cover search exceeded its budget");
        int v = from;
        while (v < p && covered[v]) ++v;
        if (v == p) return true;
        for (int i : by_vertex[v]) {
            std::vector<int> all = cand[i].first.vertices;
            all.insert(all.end(), cand[i].second.vertices.begin(), cand[i].second.vertices.end());
            if (std::any_of(all.begin(), all.end(), [&](int x) { return covered[x]; })) continue;
            for (int x : all) covered[x] = 1;
            chosen.push_back(i);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
            for (int x : all) covered[x] = 0;
        }
        return false;
    };
    if (rec(rec, 0))
        for (int i : chosen) out.pairs.push_back(cand[i]);
    return out;
}

struct FoldedBuild {
    RotationSystem rs;
    std::vector<Edge> deleted;
};

// Q_d genus embedding with the first (tubes - drop) antipodal handles attached.
FoldedBuild build_odd_folded(int d, int drop) {
    RotationSystem q = cube_genus_embedding(d).rs;
    int mask = (1 << d) - 1;
    AntipodalCover cover = antipodal_cover(q, mask);
    if (cover.pairs.empty())
        throw IntegrityError("folded cube F_" + std::to_string(d) +
                             ": no antipodal face pairs cover Q_" + std::to_string(d) + " (" +
                             std::to_string(cover.candidates) + " candidate faces)");
    FoldedBuild b{q, {}};
    int keep = static_cast<int>(cover.pairs.size()) - drop;
    for (int i = 0; i < static_cast<int>(cover.pairs.size()); ++i) {
        const auto& [f, t] = cover.pairs[i];
        std::vector<std::pair<int, int>> match;
        for (int v : f.vertices) match.emplace_back(v, v ^ mask);
        if (i >= keep) {
            for (auto [x, y] : match) b.deleted.emplace_back(x, y);
            continue;
        }
        b.rs = attach_tube(b.rs, f, t, match);
    }
    std::sort(b.deleted.begin(), b.deleted.end());
    return b;
}

std::vector<Edge> antipodal_edges(int d) {
    int n = 1 << d;
    std::vector<Edge> out;
    for (int v = 0; v < n / 2; ++v) out.emplace_back(v, v ^ (n - 1));
    return out;
}

}  // namespace

RotationSystem folded_cube_genus_embedding(int d) {
    if (d < 3) throw ParameterError("folded_cube_genus_embedding needs d >= 3");
    if (d % 2 == 0) {
        FoldedSwapReport rep = folded_cube_end_swap(d);
        throw IntegrityError(
            "folded cube F_" + std::to_string(d) + ": no embedding of genus " +
            std::to_string(folded_genus(d)) +
            " is constructed; the antipodal map sends no face of the Q_d embedding to a reversed "
            "face, and the doubling with end swaps reaches genus " +
            (rep.built ? std::to_string(rep.genus_after_swap) : std::string("?")) +
            (rep.built && rep.all_quads ? "" : " without a quadrangulation"));
    }
    FoldedBuild b = build_odd_folded(d, 0);
    Graph f = generate(family::FoldedCube{d});
    if (!(b.rs.graph() == f) || euler_genus(b.rs) != folded_genus(d) || !is_quadrangulation(b.rs))
        throw IntegrityError("folded_cube_genus_embedding postcondition failed");
    return b.rs.relabeled_graph(f);
}

namespace {

// Tube quads of every antipodal handle of the odd construction, two per handle.
std::optional<Vdqc> handle_vdqc(const RotationSystem& rs, int dm1) {
    int mask = (1 << dm1) - 1;
    std::set<int> seen;
    Vdqc s;
    std::vector<FaceWalk> faces = trace_faces(rs);
    // A tube quad has the shape (x, y, y^mask, x^mask) with xy a cube edge.
    std::vector<FaceWalk> tube;
    for (const FaceWalk& f : faces) {
        if (f.length() != 4) continue;
        const auto& v = f.vertices;
        for (int r = 0; r < 4; ++r) {
            int x = v[r], y = v[(r + 1) % 4], z = v[(r + 2) % 4], w = v[(r + 3) % 4];
            if (z == (y ^ mask) && w == (x ^ mask) && std::popcount(unsigned(x ^ y)) == 1) {
                tube.push_back(f);
                break;
            }
        }
    }
    std::sort(tube.begin(), tube.end(), [](const FaceWalk& a, const FaceWalk& b) {
        auto ka = a.vertices, kb = b.vertices;
        std::rotate(ka.begin(), std::min_element(ka.begin(), ka.end()), ka.end());
        std::rotate(kb.begin(), std::min_element(kb.begin(), kb.end()), kb.end());
        return ka < kb;
    });
    std::vector<char> covered(rs.order(), 0);
    for (const FaceWalk& f : tube) {
        if (std::any_of(f.vertices.begin(), f.vertices.end(), [&](int x) { return covered[x]; }))
            continue;
        for (int x : f.vertices) covered[x] = 1;
        s.push_back(f);
    }
    if (!verify_vdqc(rs, s)) return std::nullopt;
    return s;
}

}  // namespace

FoldedSwapReport folded_cube_end_swap(int d) {
    if (d < 4) throw ParameterError("folded_cube_end_swap needs d >= 4");
    FoldedSwapReport rep;
    rep.d = d;
    RotationSystem base;
    std::optional<Vdqc> s;
    if ((d - 1) % 2 == 1) {
        base = build_odd_folded(d - 1, 0).rs;
        s = handle_vdqc(base, d - 1);
    } else {
        FoldedSwapReport prev = folded_cube_end_swap(d - 1);
        if (!prev.built) {
            rep.note = "F_" + std::to_string(d - 1) + " was not built";
            return rep;
        }
        base = prev.result;
        VdqcSearch vs = find_vdqc(base, 2'000'000);
        s = vs.cover;
    }
    if (!s) {
        rep.note = "no VDQC in the F_" + std::to_string(d - 1) + " embedding";
        return rep;
    }
    int p = base.order();
    RotationSystem u = disjoint_union(base, mirror(base));
    for (const FaceWalk& f : *s) {
        FaceWalk twin{{f.vertices[0] + p, f.vertices[3] + p, f.vertices[2] + p, f.vertices[1] + p}};
        std::vector<std::pair<int, int>> match;
        for (int v : f.vertices) match.emplace_back(v, v + p);
        u = attach_tube(u, f, twin, match);
    }
    rep.genus_before_swap = euler_genus(u);
    int mask = p - 1;
    for (int v = 0; v < p; ++v) {
        int w = v ^ mask;
        if (v < w) u = swap_edge_ends(u, {v, w}, {v + p, w + p});
    }
    rep.genus_after_swap = euler_genus(u);
    rep.graph_is_folded_cube = u.graph() == generate(family::FoldedCube{d});
    rep.all_quads = is_quadrangulation(u);
    rep.built = true;
    rep.result = u;
    return rep;
}

DeletionCertificate folded_cube_with_drops(int d, std::int64_t k) {
    if (d < 3) throw ParameterError("folded_cube_with_drops needs d >= 3");
    std::int64_t gamma = folded_genus(d);
    if (k < 0 || k > gamma) throw ParameterError("k must lie in [0, genus formula of F_d]");
    std::int64_t handles = std::int64_t(1) << (d - 3);
    Graph host = generate(family::FoldedCube{d});
    std::int64_t t = gamma - k;
    RotationSystem rs;
    std::vector<Edge> del;
    if (d % 2 == 1 && k <= handles) {
        FoldedBuild b = build_odd_folded(d, static_cast<int>(k));
        rs = b.rs;
        del = b.deleted;
    } else if (k >= handles) {
        DeletionCertificate c = cube_with_drops(d, k - handles);
        rs = c.embedding;
        del = c.deleted;
        for (const Edge& e : antipodal_edges(d)) del.push_back(e);
        std::sort(del.begin(), del.end());
    } else {
        throw IntegrityError("folded cube F_" + std::to_string(d) + ": no construction reaches genus " +
                             std::to_string(t) + " with " + std::to_string(4 * k) +
                             " deletions (even d needs k >= " + std::to_string(handles) + ")");
    }
    if (!(rs.graph() == remove_edges(host, del)) ||
        static_cast<std::int64_t>(del.size()) != 4 * k || euler_genus(rs) != t ||
        !is_connected(rs.graph()))
        throw IntegrityError("folded_cube_with_drops postcondition failed");
    return certificate_from_embedding(host, rs, t);
}

}  // namespace surfskew
