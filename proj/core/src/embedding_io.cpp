#include <charconv>
#include <sstream>

#include "surfskew/embedding.hpp"
#include "surfskew/error.hpp"

namespace surfskew {

namespace {

bool to_int(const std::string& s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

RotationSystem parse_embedding(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int p = -1;
    std::vector<std::vector<int>> rot;
    std::vector<int> line_of;
    std::optional<FamilySpec> fam;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            std::istringstream c(line.substr(hash + 1));
            std::string key;
            c >> key;
            if (key == "family") {
                std::string rest;
                std::getline(c, rest);
                try {
                    fam = parse_family(rest);
                } catch (const ParameterError& e) {
                    throw ParseError(lineno, e.what());
                }
            }
            line = line.substr(0, hash);
        }
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (p < 0) {
            std::istringstream h(line);
            std::string w, extra;
            h >> w;
            if (!to_int(w, p) || p < 0 || (h >> extra)) throw ParseError(lineno, "expected vertex count");
            rot.assign(p, {});
            line_of.assign(p, 0);
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected 'v: neighbors'");
        std::istringstream head(line.substr(0, colon));
        std::string vs;
        head >> vs;
        int v = 0;
        if (!to_int(vs, v)) throw ParseError(lineno, "bad vertex label");
        if (v < 0 || v >= p) throw ParseError(lineno, "unknown vertex " + vs);
        if (line_of[v]) throw ParseError(lineno, "vertex " + vs + " listed twice");
        line_of[v] = lineno;
        std::istringstream body(line.substr(colon + 1));
        for (std::string w; body >> w;) {
            int x = 0;
            if (!to_int(w, x)) throw ParseError(lineno, "bad neighbor '" + w + "'");
            if (x < 0 || x >= p) throw ParseError(lineno, "unknown vertex " + w);
            for (int y : rot[v])
                if (y == x) throw ParseError(lineno, "repeated neighbor " + w);
            rot[v].push_back(x);
        }
    }
    if (p < 0) throw ParseError(lineno, "missing vertex count");
    for (int v = 0; v < p; ++v)
        if (!line_of[v]) throw ParseError(lineno, "no rotation line for vertex " + std::to_string(v));
    for (int v = 0; v < p; ++v)
        for (int w : rot[v]) {
            bool back = false;
            for (int y : rot[w]) back = back || y == v;
            if (!back)
                throw ParseError(line_of[w], "neighbor list of " + std::to_string(w) + " lacks " +
                                                 std::to_string(v));
        }
    RotationSystem rs(p, std::move(rot));
    if (fam) {
        Graph g;
        try {
            g = generate(*fam);
        } catch (const ParameterError& e) {
            throw ParseError(lineno, e.what());
        }
        if (!(g == rs.graph())) throw ParseError(lineno, "family comment does not match rotations");
        rs = rs.relabeled_graph(g);
    }
    return rs;
}

std::string serialize_embedding(const RotationSystem& rs) {
    std::string out = std::to_string(rs.order()) + "\n";
    for (int v = 0; v < rs.order(); ++v) {
        out += std::to_string(v) + ":";
        for (int w : rs.rotation(v)) out += " " + std::to_string(w);
        out += "\n";
    }
    if (rs.graph().family()) out += "# family " + to_string(*rs.graph().family()) + "\n";
    return out;
}

}  // namespace surfskew
