#include <charconv>
#include <set>
#include <sstream>

#include "surfskew/error.hpp"
#include "surfskew/graph.hpp"

namespace surfskew {

namespace {

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool to_int(const std::string& s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

int need_int(const std::string& s, const std::string& what) {
    int v = 0;
    if (!to_int(s, v)) throw ParameterError("bad " + what + ": '" + s + "'");
    return v;
}

}  // namespace

std::string to_string(const FamilySpec& spec) {
    using namespace family;
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Complete>) return "complete " + std::to_string(f.n);
            else if constexpr (std::is_same_v<T, CompleteBipartite>)
                return "complete-bipartite " + std::to_string(f.a) + " " + std::to_string(f.b);
            else if constexpr (std::is_same_v<T, Cube>) return "cube " + std::to_string(f.d);
            else if constexpr (std::is_same_v<T, FoldedCube>)
                return "folded-cube " + std::to_string(f.d);
            else if constexpr (std::is_same_v<T, Octahedron>)
                return "octahedron " + std::to_string(f.r);
            else if constexpr (std::is_same_v<T, Circulant>) {
                std::string s = "circulant " + std::to_string(f.n);
                for (int k : f.jumps) s += " " + std::to_string(k);
                return s;
            } else if constexpr (std::is_same_v<T, Cycle>) return "cycle " + std::to_string(f.n);
            else return "path " + std::to_string(f.n);
        },
        spec);
}

FamilySpec parse_family(const std::string& text) {
    auto w = words(text);
    if (w.empty()) throw ParameterError("empty family spec");
    const std::string& name = w[0];
    auto arity = [&](std::size_t n) {
        if (w.size() != n + 1)
            throw ParameterError("family '" + name + "' takes " + std::to_string(n) + " parameter(s)");
    };
    if (name == "complete") { arity(1); return family::Complete{need_int(w[1], "n")}; }
    if (name == "complete-bipartite") {
        arity(2);
        return family::CompleteBipartite{need_int(w[1], "a"), need_int(w[2], "b")};
    }
    if (name == "cube") { arity(1); return family::Cube{need_int(w[1], "d")}; }
    if (name == "folded-cube") { arity(1); return family::FoldedCube{need_int(w[1], "d")}; }
    if (name == "octahedron") { arity(1); return family::Octahedron{need_int(w[1], "r")}; }
    if (name == "cycle") { arity(1); return family::Cycle{need_int(w[1], "n")}; }
    if (name == "path") { arity(1); return family::Path{need_int(w[1], "n")}; }
    if (name == "circulant") {
        if (w.size() < 3) throw ParameterError("circulant needs n and at least one jump");
        family::Circulant c{need_int(w[1], "n"), {}};
        for (std::size_t i = 2; i < w.size(); ++i) c.jumps.push_back(need_int(w[i], "jump"));
        return c;
    }
    throw ParameterError("unknown family '" + name + "'");
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int p = -1, q = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::optional<FamilySpec> fam;
    int fam_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            auto c = words(line.substr(hash + 1));
            if (c.size() >= 2 && c[0] == "family") {
                std::string rest = line.substr(line.find("family", hash) + 6);
                try {
                    fam = parse_family(rest);
                } catch (const ParameterError& e) {
                    throw ParseError(lineno, e.what());
                }
                fam_line = lineno;
            }
            line = line.substr(0, hash);
        }
        auto w = words(line);
        if (w.empty()) continue;
        if (w.size() != 2) throw ParseError(lineno, "expected two integers");
        int x = 0, y = 0;
        if (!to_int(w[0], x) || !to_int(w[1], y)) throw ParseError(lineno, "expected two integers");
        if (p < 0) {
            if (x < 0 || y < 0) throw ParseError(lineno, "negative header value");
            p = x;
            q = y;
            continue;
        }
        if (x == y) throw ParseError(lineno, "loop at vertex " + std::to_string(x));
        if (x < 0 || y < 0 || x >= p || y >= p) throw ParseError(lineno, "vertex out of range");
        Edge e(x, y);
        if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
        if (static_cast<int>(edges.size()) == q) throw ParseError(lineno, "more edges than declared");
        edges.push_back(e);
    }
    if (p < 0) throw ParseError(lineno, "missing header line");
    if (static_cast<int>(edges.size()) != q)
        throw ParseError(lineno, "expected " + std::to_string(q) + " edges, found " +
                                     std::to_string(edges.size()));
    Graph g(p, std::move(edges));
    if (fam) {
        Graph ref;
        try {
            ref = generate(*fam);
        } catch (const ParameterError& e) {
            throw ParseError(fam_line, e.what());
        }
        if (!(ref == g)) throw ParseError(fam_line, "family comment does not match the edge list");
        return ref;
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    if (g.family()) out += "# family " + to_string(*g.family()) + "\n";
    return out;
}

}  // namespace surfskew
