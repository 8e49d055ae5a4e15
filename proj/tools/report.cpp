#include "cli.hpp"

#include <algorithm>
#include <sstream>

namespace surfskew::cli {

namespace {

using Row = std::vector<std::string>;

class Table {
  public:
    explicit Table(Row header) : rows_{std::move(header)} {}
    void add(Row r) { rows_.push_back(std::move(r)); }

    std::string str() const {
        std::vector<std::size_t> w(rows_[0].size(), 0);
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
        std::string out;
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) line += i + 1 < r.size() ? pad(r[i], w[i] + 2) : r[i];
            out += line + "\n";
        }
        return out;
    }

  private:
    std::vector<Row> rows_;
};

std::string str(std::int64_t v) { return std::to_string(v); }
const char* yn(bool b) { return b ? "yes" : "no"; }

std::pair<int, int> clamp_range(std::optional<std::pair<int, int>> r, int lo, int hi, int min_allowed,
                                int max_allowed, const char* what) {
    auto [a, b] = r.value_or(std::make_pair(lo, hi));
    if (a < min_allowed || b > max_allowed)
        throw ParameterError(std::string(what) + " range must lie in " + str(min_allowed) + ".." + str(max_allowed));
    return {a, b};
}

bool cert_ok(const DeletionCertificate& c) { return verify_deletion_certificate(c).ok; }

Suite planar_bipartite(std::optional<std::pair<int, int>> range) {
    auto [lo, hi] = clamp_range(range, 2, 12, 2, 12, "a");
    Suite s;
    s.text = "# K_{a,b} minus (a-2)(b-2) edges as a plane quadrangulation; mu0 by subset search when ab <= 24\n";
    Table t({"a", "b", "q", "delta0", "eps0", "deleted", "genus", "quads", "mu0", "status"});
    for (int a = lo; a <= hi; ++a)
        for (int b = 2; b <= a; ++b) {
            Graph g = generate(family::CompleteBipartite{a, b});
            Excess e = excess(g, 0);
            auto built = guy_planar_quadrangulation(a, b);
            auto m = static_cast<std::int64_t>(built.cert.deleted.size());
            int genus = euler_genus(built.rs);
            bool quads = is_quadrangulation(built.rs);
            std::string mu = "-";
            bool ok = cert_ok(built.cert) && genus == 0 && quads && m == e.epsilon;
            if (a * b <= 24) {
                auto r = skewness_exact(g, 0);
                mu = r.outcome.exact ? str(r.outcome.lower) : "?";
                ok = ok && r.outcome.exact && r.outcome.lower == e.epsilon;
            }
            s.ok = s.ok && ok;
            t.add({str(a), str(b), str(g.size()), to_string(e.delta), str(e.epsilon), str(m), str(genus), yn(quads),
                   mu, ok ? "ok" : "FAIL"});
        }
    s.text += t.str();
    return s;
}

Suite torus_complete(std::optional<std::pair<int, int>> range) {
    auto [lo, hi] = clamp_range(range, 4, 10, 4, 30, "r");
    Suite s;
    s.text = "# K_{2r} and K_{2r+1} minus edges as torus triangulations\n";
    Table t({"n", "r", "deleted", "formula", "eps1", "genus", "triangulation", "matching", "status"});
    for (int r = lo; r <= hi; ++r) {
        auto e = torus_complete_even(r);
        std::int64_t formula = 2LL * r * r - 7LL * r;
        auto m = static_cast<std::int64_t>(e.cert.deleted.size());
        std::vector<int> deg(2 * r, 0);
        for (const Edge& x : e.cert.deleted) ++deg[x.u], ++deg[x.v];
        bool matching = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
        std::int64_t eps = excess(e.cert.host, 1).epsilon;
        int genus = euler_genus(e.rs);
        bool tri = is_triangulation(e.rs);
        bool ok = cert_ok(e.cert) && m == formula && m == eps && genus == 1 && tri;
        s.ok = s.ok && ok;
        t.add({str(2 * r), str(r), str(m), str(formula), str(eps), str(genus), yn(tri), yn(matching),
               ok ? "ok" : "FAIL"});
    }
    for (int r = lo; r <= hi; ++r) {
        auto c = torus_complete_odd(r);
        std::int64_t formula = 2LL * r * r - 5LL * r - 3;
        auto m = static_cast<std::int64_t>(c.deleted.size());
        std::int64_t eps = excess(c.host, 1).epsilon;
        int genus = euler_genus(c.embedding);
        bool tri = is_triangulation(c.embedding);
        bool ok = cert_ok(c) && m == formula && m == eps && genus == 1 && tri;
        s.ok = s.ok && ok;
        t.add({str(2 * r + 1), str(r), str(m), str(formula), str(eps), str(genus), yn(tri), "-", ok ? "ok" : "FAIL"});
    }
    s.text += t.str();
    s.text += "# K_{a,3} on the torus: window a-6 <= mu1 <= a-4\n";
    Table k({"a", "eps1", "deleted", "genus", "status"});
    for (int a = 7; a <= 12; ++a) {
        auto c = torus_kab_b3(a);
        auto m = static_cast<std::int64_t>(c.deleted.size());
        std::int64_t eps = excess(c.host, 1).epsilon;
        bool ok = cert_ok(c) && m == a - 4 && eps == a - 6;
        s.ok = s.ok && ok;
        k.add({str(a), str(eps), str(m), str(euler_genus(c.embedding)), ok ? "ok" : "FAIL"});
    }
    s.text += k.str();
    return s;
}

Suite cube(std::optional<std::pair<int, int>> range) {
    auto [lo, hi] = clamp_range(range, 3, 7, 3, 8, "d");
    Suite s;
    s.text = "# Q_d by VDQC doubling; drops k = 0..gamma each give |E'| = 4k = eps at t = gamma - k\n";
    Table t({"d", "gamma", "genus", "quads", "vdqc", "drops", "status"});
    for (int d = lo; d <= hi; ++d) {
        std::int64_t gamma = genus_formula(family::Cube{d});
        auto e = cube_genus_embedding(d);
        int genus = euler_genus(e.rs);
        bool quads = is_quadrangulation(e.rs);
        std::int64_t good = 0;
        for (std::int64_t k = 0; k <= gamma; ++k) {
            auto c = cube_with_drops(d, k);
            bool ok = cert_ok(c) && static_cast<std::int64_t>(c.deleted.size()) == 4 * k &&
                      euler_genus(c.embedding) == gamma - k && is_connected(c.embedding.graph()) &&
                      excess(c.host, gamma - k).epsilon == 4 * k;
            good += ok;
        }
        bool ok = genus == gamma && quads && verify_vdqc(e.rs, e.vdqc) && good == gamma + 1;
        s.ok = s.ok && ok;
        t.add({str(d), str(gamma), str(genus), yn(quads), str(static_cast<std::int64_t>(e.vdqc.size())),
               str(good) + "/" + str(gamma + 1), ok ? "ok" : "FAIL"});
    }
    s.text += t.str();
    s.text += "# K_{a,a}, a = 2^{d-1}, minus the edges outside Q_d\n";
    Table k({"d", "a", "t", "deleted", "eps", "status"});
    for (int d = lo; d <= std::min(hi, 6); ++d) {
        auto c = cube_in_kaa_certificate(d);
        auto m = static_cast<std::int64_t>(c.deleted.size());
        std::int64_t eps = excess(c.host, c.t).epsilon;
        bool ok = cert_ok(c) && m == eps;
        s.ok = s.ok && ok;
        k.add({str(d), str(1 << (d - 1)), str(c.t), str(m), str(eps), ok ? "ok" : "FAIL"});
    }
    s.text += k.str();
    return s;
}

Suite folded_cube(std::optional<std::pair<int, int>> range) {
    auto [lo, hi] = clamp_range(range, 3, 7, 3, 8, "d");
    Suite s;
    s.text = "# F_d = Q_d plus antipodal edges; formula 1 + (d-3)2^{d-3}\n";
    Table t({"d", "formula", "genus", "quads", "drops", "status"});
    for (int d = lo; d <= hi; ++d) {
        std::int64_t gamma = genus_formula(family::FoldedCube{d});
        if (d % 2 == 1) {
            RotationSystem rs = folded_cube_genus_embedding(d);
            int genus = euler_genus(rs);
            bool quads = is_quadrangulation(rs);
            std::int64_t good = 0;
            for (std::int64_t k = 0; k <= gamma; ++k) {
                auto c = folded_cube_with_drops(d, k);
                good += cert_ok(c) && euler_genus(c.embedding) == gamma - k &&
                        static_cast<std::int64_t>(c.deleted.size()) == excess(c.host, gamma - k).epsilon;
            }
            bool ok = genus == gamma && quads && good == gamma + 1;
            s.ok = s.ok && ok;
            t.add({str(d), str(gamma), str(genus), yn(quads), str(good) + "/" + str(gamma + 1), ok ? "ok" : "FAIL"});
        } else {
            FoldedSwapReport r = folded_cube_end_swap(d);
            std::int64_t from = std::int64_t{1} << (d - 3);
            std::int64_t good = 0;
            for (std::int64_t k = from; k <= gamma; ++k) {
                auto c = folded_cube_with_drops(d, k);
                good += cert_ok(c) && euler_genus(c.embedding) == gamma - k;
            }
            std::string genus = r.built ? str(r.genus_before_swap) + "->" + str(r.genus_after_swap) : "-";
            t.add({str(d), str(gamma), genus, yn(r.all_quads), str(good) + "/" + str(gamma + 1), "not-reproduced"});
        }
    }
    s.text += t.str();
    s.text += "# even d: genus column is the doubling + end-swap recursion before -> after the swap;\n";
    s.text += "# drops counts only k >= 2^{d-3}, built from Q_d certificates plus all antipodal edges\n";
    return s;
}

Suite circulant(std::optional<std::pair<int, int>> range) {
    if (range) throw ParameterError("the circulant suite takes no range");
    Suite s;
    s.text = "# circulants c(n,k) with jumps 1 and k; mu0 and nu0 by exhaustive search\n";
    Table t({"graph", "p", "q", "girth", "eps0", "mu0", "nu0", "status"});
    struct Case {
        int n, k;
        bool crossing;
    };
    for (Case c : {Case{10, 3, true}, Case{12, 3, false}, Case{16, 4, false}}) {
        Graph g = generate(family::Circulant{c.n, {1, c.k}});
        std::int64_t eps = excess(g, 0).epsilon;
        auto mu = skewness_exact(g, 0);
        bool ok = mu.outcome.exact && mu.outcome.lower == eps;
        std::string nu = "-";
        if (c.crossing) {
            auto r = crossing_number_plane_exact(g, 6);
            nu = r.outcome.exact ? str(r.outcome.lower) : "?";
            ok = ok && r.outcome.exact && r.drawing && verify_drawing_certificate(*r.drawing).ok;
        }
        s.ok = s.ok && ok;
        t.add({"c(" + str(c.n) + "," + str(c.k) + ")", str(g.order()), str(g.size()), str(*girth(g)), str(eps),
               mu.outcome.exact ? str(mu.outcome.lower) : "?", nu, ok ? "ok" : "FAIL"});
    }
    s.text += t.str();
    return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"planar-bipartite", "torus-complete", "cube", "folded-cube",
                                                   "circulant"};
    return names;
}

Suite report_suite(const std::string& name, std::optional<std::pair<int, int>> range) {
    if (name == "planar-bipartite") return planar_bipartite(range);
    if (name == "torus-complete") return torus_complete(range);
    if (name == "cube") return cube(range);
    if (name == "folded-cube") return folded_cube(range);
    if (name == "circulant") return circulant(range);
    throw ParameterError("unknown suite '" + name + "'");
}

}  // namespace surfskew::cli
