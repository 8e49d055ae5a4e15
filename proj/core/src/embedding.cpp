#include "surfskew/embedding.hpp"

#include <algorithm>
#include <set>

#include "surfskew/error.hpp"

namespace surfskew {

namespace {

void canonicalize(std::vector<int>& r) {
    if (r.empty()) return;
    auto m = std::min_element(r.begin(), r.end());
    std::rotate(r.begin(), m, r.end());
}

Graph graph_of(int p, const std::vector<std::vector<int>>& rot) {
    if (static_cast<int>(rot.size()) != p) throw ParameterError("rotation count differs from p");
    std::vector<Edge> edges;
    for (int v = 0; v < p; ++v) {
        std::set<int> seen;
        for (int w : rot[v]) {
            if (w < 0 || w >= p) throw ParameterError("rotation of " + std::to_string(v) +
                                                      " names unknown vertex " + std::to_string(w));
            if (w == v) throw ParameterError("loop in rotation of " + std::to_string(v));
            if (!seen.insert(w).second)
                throw ParameterError("repeated neighbor " + std::to_string(w) + " at " +
                                     std::to_string(v));
            const auto& back = rot[w];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw ParameterError("edge " + std::to_string(v) + "-" + std::to_string(w) +
                                     " missing from rotation of " + std::to_string(w));
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph(p, std::move(edges));
}

struct DartTable {
    std::vector<int> offset;  // offset[v] .. offset[v+1]
    std::vector<int> tail;
    std::vector<int> next;
};

DartTable darts(const RotationSystem& rs) {
    DartTable t;
    int p = rs.order();
    t.offset.assign(p + 1, 0);
    for (int v = 0; v < p; ++v) t.offset[v + 1] = t.offset[v] + static_cast<int>(rs.rotation(v).size());
    t.tail.resize(t.offset[p]);
    t.next.resize(t.offset[p]);
    for (int v = 0; v < p; ++v) {
        const auto& r = rs.rotation(v);
        for (std::size_t i = 0; i < r.size(); ++i) {
            int w = r[i];
            const auto& rw = rs.rotation(w);
            int j = static_cast<int>(std::find(rw.begin(), rw.end(), v) - rw.begin());
            int d = t.offset[v] + static_cast<int>(i);
            t.tail[d] = v;
            t.next[d] = t.offset[w] + (j + 1) % static_cast<int>(rw.size());
        }
    }
    return t;
}

}  // namespace

bool cyclically_equal(const FaceWalk& x, const FaceWalk& y) {
    if (x.length() != y.length()) return false;
    if (x.vertices.empty()) return true;
    int n = x.length();
    for (int s = 0; s < n; ++s) {
        if (y.vertices[s] != x.vertices[0]) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = x.vertices[i] == y.vertices[(s + i) % n];
        if (ok) return true;
    }
    return false;
}

RotationSystem::RotationSystem(int p, std::vector<std::vector<int>> rotations)
    : graph_(graph_of(p, rotations)), rot_(std::move(rotations)) {
    for (auto& r : rot_) canonicalize(r);
}

RotationSystem::RotationSystem(Graph g, std::vector<std::vector<int>> rotations)
    : rot_(std::move(rotations)) {
    Graph h = graph_of(g.order(), rot_);
    if (!(h == g)) throw ParameterError("rotations do not match the graph's edge set");
    graph_ = std::move(g);
    for (auto& r : rot_) canonicalize(r);
}

int RotationSystem::slot_of(int v, int neighbor) const {
    const auto& r = rot_.at(v);
    auto it = std::find(r.begin(), r.end(), neighbor);
    if (it == r.end())
        throw ParameterError(std::to_string(neighbor) + " is not a neighbor of " + std::to_string(v));
    return static_cast<int>(it - r.begin());
}

Dart RotationSystem::paired(Dart d) const {
    int w = rot_.at(d.vertex).at(d.slot);
    return {w, slot_of(w, d.vertex)};
}

Dart RotationSystem::next_in_face(Dart d) const {
    Dart e = paired(d);
    int deg = static_cast<int>(rot_[e.vertex].size());
    return {e.vertex, (e.slot + 1) % deg};
}

RotationSystem RotationSystem::relabeled_graph(Graph g) const {
    if (!(g == graph_)) throw ParameterError("relabeled_graph: edge sets differ");
    RotationSystem r = *this;
    r.graph_ = std::move(g);
    return r;
}

std::vector<FaceWalk> trace_faces(const RotationSystem& rs) {
    DartTable t = darts(rs);
    std::vector<char> seen(t.tail.size(), 0);
    std::vector<FaceWalk> faces;
    for (std::size_t s = 0; s < t.tail.size(); ++s) {
        if (seen[s]) continue;
        FaceWalk f;
        for (int d = static_cast<int>(s); !seen[d]; d = t.next[d]) {
            seen[d] = 1;
            f.vertices.push_back(t.tail[d]);
        }
        faces.push_back(std::move(f));
    }
    return faces;
}

FaceWalk face_through(const RotationSystem& rs, int u, int w) {
    Dart start{u, rs.slot_of(u, w)};
    FaceWalk f;
    Dart d = start;
    do {
        f.vertices.push_back(d.vertex);
        d = rs.next_in_face(d);
    } while (d != start);
    return f;
}

bool is_face(const RotationSystem& rs, const FaceWalk& walk) {
    if (walk.length() < 2) return false;
    int u = walk.vertices[0], w = walk.vertices[1];
    if (!rs.graph().has_edge(u, w)) return false;
    return face_through(rs, u, w) == walk;
}

int face_count(const RotationSystem& rs) { return static_cast<int>(trace_faces(rs).size()); }

int euler_genus(const RotationSystem& rs) {
    Components c = components(rs.graph());
    std::vector<long> pc(c.count, 0), qc(c.count, 0), fc(c.count, 0);
    for (int v = 0; v < rs.order(); ++v) {
        ++pc[c.label[v]];
        qc[c.label[v]] += static_cast<long>(rs.rotation(v).size());
        if (rs.rotation(v).empty()) ++fc[c.label[v]];
    }
    for (const FaceWalk& f : trace_faces(rs)) ++fc[c.label[f.vertices[0]]];
    long total = 0;
    for (int i = 0; i < c.count; ++i) {
        long twice = 2 - pc[i] + qc[i] / 2 - fc[i];
        if (twice < 0 || twice % 2 != 0)
            throw IntegrityError("Euler characteristic parity violated in component " +
                                 std::to_string(i));
        total += twice / 2;
    }
    return static_cast<int>(total);
}

std::map<int, int> face_census(const RotationSystem& rs) {
    std::map<int, int> m;
    for (const FaceWalk& f : trace_faces(rs)) ++m[f.length()];
    return m;
}

bool is_quadrangulation(const RotationSystem& rs) {
    auto c = face_census(rs);
    return c.size() == 1 && c.begin()->first == 4;
}

bool is_triangulation(const RotationSystem& rs) {
    auto c = face_census(rs);
    return c.size() == 1 && c.begin()->first == 3;
}

bool verify_vdqc(const RotationSystem& rs, const Vdqc& s) {
    std::vector<int> hit(rs.order(), 0);
    for (const FaceWalk& f : s) {
        if (f.length() != 4) return false;
        std::set<int> vs(f.vertices.begin(), f.vertices.end());
        if (vs.size() != 4) return false;
        if (!is_face(rs, f)) return false;
        for (int v : f.vertices) ++hit[v];
    }
    return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

VdqcSearch find_vdqc(const RotationSystem& rs, std::uint64_t budget_nodes) {
    VdqcSearch out;
    int p = rs.order();
    if (p % 4 != 0) return out;
    std::vector<FaceWalk> cand;
    for (FaceWalk& f : trace_faces(rs)) {
        if (f.length() != 4) continue;
        std::set<int> vs(f.vertices.begin(), f.vertices.end());
        if (vs.size() == 4) cand.push_back(std::move(f));
    }
    std::vector<std::vector<int>> by_vertex(p);
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (int v : cand[i].vertices) by_vertex[v].push_back(static_cast<int>(i));
    std::vector<char> covered(p, 0);
    std::vector<int> chosen;
    bool exhausted = false;

    auto rec = [&](auto&& self, int from) -> bool {
        if (++out.nodes > budget_nodes) {
            exhausted = true;
            return false;
        }
        int v = from;
        while (v < p && covered[v]) ++v;
        if (v == p) return true;
        for (int i : by_vertex[v]) {
            const auto& vs = cand[i].vertices;
            if (std::any_of(vs.begin(), vs.end(), [&](int x) { return covered[x]; })) continue;
            for (int x : vs) covered[x] = 1;
            chosen.push_back(i);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
            for (int x : vs) covered[x] = 0;
            if (exhausted) return false;
        }
        return false;
    };
    if (rec(rec, 0)) {
        Vdqc s;
        for (int i : chosen) s.push_back(cand[i]);
        out.cover = std::move(s);
    }
    out.budget_exhausted = exhausted;
    return out;
}

}  // namespace surfskew
