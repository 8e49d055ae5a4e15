#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"
#include "surfskew/search.hpp"

namespace surfskew {

namespace {

std::string edge_text(const Edge& e) { return std::to_string(e.u) + " " + std::to_string(e.v); }

bool share_end(const Edge& a, const Edge& b) {
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

std::string census_text(const RotationSystem& rs) {
    std::string out;
    for (auto [len, n] : face_census(rs)) {
        if (!out.empty()) out += " ";
        out += std::to_string(len) + "x" + std::to_string(n);
    }
    return out.empty() ? "-" : out;
}

// Structural problems of a drawing, in a fixed order. Empty means planarize() is safe.
std::vector<std::string> drawing_defects(const DrawingCertificate& c) {
    std::vector<std::string> bad;
    const Graph& g = c.graph;
    std::set<std::pair<Edge, Edge>> pairs;
    std::map<Edge, std::vector<int>> involved;
    for (std::size_t i = 0; i < c.crossings.size(); ++i) {
        auto [a, b] = c.crossings[i];
        std::string tag = "crossing " + std::to_string(i);
        if (!g.has_edge(a.u, a.v) || !g.has_edge(b.u, b.v)) {
            bad.push_back(tag + ": edge not in graph");
            continue;
        }
        if (a == b) {
            bad.push_back(tag + ": edge crosses itself");
            continue;
        }
        if (share_end(a, b)) bad.push_back(tag + ": adjacent edges cross");
        if (!pairs.insert(std::minmax(a, b)).second) bad.push_back(tag + ": pair listed twice");
        involved[a].push_back(static_cast<int>(i));
        involved[b].push_back(static_cast<int>(i));
    }
    std::set<Edge> ordered;
    for (const auto& [e, seq] : c.order) {
        std::string tag = "order " + edge_text(e);
        if (!ordered.insert(e).second) {
            bad.push_back(tag + ": edge listed twice");
            continue;
        }
        std::vector<int> want = involved.count(e) ? involved[e] : std::vector<int>{};
        std::vector<int> got = seq;
        std::sort(got.begin(), got.end());
        if (got != want) bad.push_back(tag + ": does not list exactly the crossings on this edge");
    }
    for (const auto& [e, seq] : involved)
        if (!ordered.count(e)) bad.push_back("order " + edge_text(e) + ": missing");
    return bad;
}

}  // namespace

Graph planarize(const DrawingCertificate& c) {
    if (auto bad = drawing_defects(c); !bad.empty()) throw ParameterError("malformed drawing: " + bad.front());
    int p = c.graph.order();
    std::map<Edge, const std::vector<int>*> order;
    for (const auto& [e, seq] : c.order) order[e] = &seq;
    std::vector<Edge> out;
    for (const Edge& e : c.graph.edges()) {
        auto it = order.find(e);
        if (it == order.end()) {
            out.push_back(e);
            continue;
        }
        int prev = e.u;
        for (int i : *it->second) {
            out.emplace_back(prev, p + i);
            prev = p + i;
        }
        out.emplace_back(prev, e.v);
    }
    return Graph(p + static_cast<int>(c.crossings.size()), std::move(out));
}

std::string serialize_drawing(const DrawingCertificate& c) {
    if (c.source.empty()) throw ParameterError("drawing has no graph source");
    std::string out = "DRAWING crossings=" + std::to_string(c.crossings.size()) +
                      " ordered=" + std::to_string(c.order.size()) + "\n" + c.source + "\n";
    for (const auto& [a, b] : c.crossings) out += edge_text(a) + " " + edge_text(b) + "\n";
    for (const auto& [e, seq] : c.order) {
        out += edge_text(e) + ":";
        for (int i : seq) out += " " + std::to_string(i);
        out += "\n";
    }
    return out;
}

DrawingCertificate parse_drawing(const std::string& text, const std::string& base_dir) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line[0] != '#') return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(lineno, "empty drawing");
    static const std::regex head(R"(DRAWING crossings=(\d+) ordered=(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(line, m, head))
        throw ParseError(lineno, "expected 'DRAWING crossings=<k> ordered=<n>'");
    long k = std::stol(m[1]);
    long n = std::stol(m[2]);
    DrawingCertificate c;
    if (!next_line()) throw ParseError(lineno, "missing graph source line");
    c.source = line;
    try {
        c.graph = load_graph_source(c.source, base_dir);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
    for (long i = 0; i < k; ++i) {
        if (!next_line()) throw ParseError(lineno, "missing crossing line");
        std::istringstream ls(line);
        int a = 0, b = 0, x = 0, y = 0;
        std::string extra;
        if (!(ls >> a >> b >> x >> y) || (ls >> extra)) throw ParseError(lineno, "expected 'u1 v1 u2 v2'");
        if (a == b || x == y) throw ParseError(lineno, "loop in crossing");
        c.crossings.emplace_back(Edge(a, b), Edge(x, y));
    }
    for (long i = 0; i < n; ++i) {
        if (!next_line()) throw ParseError(lineno, "missing order line");
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected 'u v: i j ...'");
        std::istringstream hs(line.substr(0, colon));
        int a = 0, b = 0;
        std::string extra;
        if (!(hs >> a >> b) || (hs >> extra) || a == b) throw ParseError(lineno, "bad edge before ':'");
        std::istringstream ls(line.substr(colon + 1));
        std::vector<int> seq;
        for (std::string tok; ls >> tok;) {
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError(lineno, "bad crossing index '" + tok + "'");
            int idx = std::stoi(tok);
            if (idx >= k) throw ParseError(lineno, "crossing index out of range");
            seq.push_back(idx);
        }
        c.order.emplace_back(Edge(a, b), std::move(seq));
    }
    if (next_line()) throw ParseError(lineno, "trailing content");
    return c;
}

VerifyReport verify_deletion_certificate(const DeletionCertificate& c) {
    VerifyReport r;
    auto fail = [&](std::string what) {
        r.ok = false;
        r.failures.push_back(std::move(what));
    };
    const Graph& host = c.host;
    const RotationSystem& emb = c.embedding;
    r.lines.push_back("host: " + (c.source.empty() ? std::string("-") : c.source));
    r.lines.push_back("p: " + std::to_string(host.order()));
    r.lines.push_back("q: " + std::to_string(host.size()));
    r.lines.push_back("t: " + std::to_string(c.t));
    r.lines.push_back("deleted: " + std::to_string(c.deleted.size()));

    std::set<Edge> del;
    bool deleted_ok = true;
    for (const Edge& e : c.deleted) {
        if (!host.has_edge(e.u, e.v)) {
            fail("deleted edge " + edge_text(e) + " is not an edge of the host");
            deleted_ok = false;
        } else if (!del.insert(e).second) {
            fail("deleted edge " + edge_text(e) + " listed twice");
            deleted_ok = false;
        }
    }
    if (deleted_ok) {
        if (emb.order() != host.order() || !(emb.graph() == remove_edges(host, c.deleted)))
            fail("graph identity: embedding graph differs from host minus deleted edges");
    }
    if (c.t < 0) fail("t is negative");

    std::optional<int> genus;
    try {
        genus = euler_genus(emb);
    } catch (const Error& e) {
        fail(std::string("face trace: ") + e.what());
    }
    r.lines.push_back("genus: " + (genus ? std::to_string(*genus) : std::string("?")));
    r.lines.push_back("faces: " + std::to_string(face_count(emb)));
    r.lines.push_back("connected: " + std::string(is_connected(emb.graph()) ? "yes" : "no"));
    if (genus && *genus > c.t)
        fail("genus: embedding has genus " + std::to_string(*genus) + " > t = " + std::to_string(c.t));

    std::int64_t eps = 0;
    bool have_eps = true;
    try {
        eps = is_connected(host) ? excess(host, c.t).epsilon : epsilon_by_components(host, c.t);
    } catch (const DomainError&) {
        have_eps = false;
    }
    auto m = static_cast<std::int64_t>(c.deleted.size());
    if (have_eps) {
        r.lines.push_back("epsilon: " + std::to_string(eps));
        r.lines.push_back("chain: ε_" + std::to_string(c.t) + " = " + std::to_string(eps) + " ≤ μ_" +
                          std::to_string(c.t) + " ≤ " + std::to_string(m));
        r.lines.push_back(std::string("equality: ") + (m == eps ? "yes" : "no"));
        if (r.ok && m < eps) fail("excess bound: certificate smaller than ε");
    } else {
        r.lines.push_back("epsilon: -");
    }
    r.lines.push_back(std::string("status: ") + (r.ok ? "pass" : "fail"));
    return r;
}

VerifyReport verify_drawing_certificate(const DrawingCertificate& c) {
    VerifyReport r;
    r.lines.push_back("graph: " + (c.source.empty() ? std::string("-") : c.source));
    r.lines.push_back("p: " + std::to_string(c.graph.order()));
    r.lines.push_back("q: " + std::to_string(c.graph.size()));
    r.lines.push_back("crossings: " + std::to_string(c.crossings.size()));
    for (auto& d : drawing_defects(c)) {
        r.ok = false;
        r.failures.push_back(d);
    }
    if (r.ok) {
        Graph pl = planarize(c);
        bool ok = planar(pl);
        r.lines.push_back("planarization: p=" + std::to_string(pl.order()) + " q=" + std::to_string(pl.size()));
        r.lines.push_back(std::string("planar: ") + (ok ? "yes" : "no"));
        if (!ok) {
            r.ok = false;
            r.failures.push_back("planarization is not planar");
        } else {
            r.lines.push_back("bound: ν_0 ≤ " + std::to_string(c.crossings.size()));
        }
    }
    r.lines.push_back(std::string("status: ") + (r.ok ? "pass" : "fail"));
    return r;
}

VerifyReport verify_embedding(const RotationSystem& rs) {
    VerifyReport r;
    r.lines.push_back("p: " + std::to_string(rs.order()));
    r.lines.push_back("q: " + std::to_string(rs.size()));
    try {
        r.lines.push_back("genus: " + std::to_string(euler_genus(rs)));
    } catch (const Error& e) {
        r.ok = false;
        r.failures.push_back(std::string("face trace: ") + e.what());
    }
    r.lines.push_back("faces: " + std::to_string(face_count(rs)));
    r.lines.push_back("census: " + census_text(rs));
    r.lines.push_back("connected: " + std::string(is_connected(rs.graph()) ? "yes" : "no"));
    if (rs.graph().family()) {
        const Graph& g = rs.graph();
        if (!(generate(*g.family()) == g)) {
            r.ok = false;
            r.failures.push_back("graph identity: does not match family " + to_string(*g.family()));
        }
        r.lines.push_back("family: " + to_string(*g.family()));
    }
    r.lines.push_back(std::string("status: ") + (r.ok ? "pass" : "fail"));
    return r;
}

}  // namespace surfskew
