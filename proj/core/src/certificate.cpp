#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "surfskew/constructions.hpp"
#include "surfskew/error.hpp"

namespace surfskew {

Graph load_graph_source(const std::string& source, const std::string& base_dir) {
    if (source.rfind("family ", 0) == 0) return generate(parse_family(source.substr(7)));
    std::filesystem::path path(source);
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize_certificate(const DeletionCertificate& c) {
    if (c.source.empty()) throw ParameterError("certificate has no graph source");
    std::string out = "CERT t=" + std::to_string(c.t) + " deleted=" + std::to_string(c.deleted.size()) +
                      "\n" + c.source + "\n";
    for (const Edge& e : c.deleted) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    out += serialize_embedding(c.embedding);
    return out;
}

DeletionCertificate parse_certificate(const std::string& text, const std::string& base_dir) {
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
    if (!next_line()) throw ParseError(lineno, "empty certificate");
    static const std::regex head(R"(CERT t=(\d+) deleted=(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(line, m, head)) throw ParseError(lineno, "expected 'CERT t=<t> deleted=<m>'");
    DeletionCertificate c;
    c.t = std::stoll(m[1]);
    long count = std::stol(m[2]);
    if (!next_line()) throw ParseError(lineno, "missing graph source line");
    c.source = line;
    try {
        c.host = load_graph_source(c.source, base_dir);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
    for (long i = 0; i < count; ++i) {
        if (!next_line()) throw ParseError(lineno, "missing deleted edge");
        std::istringstream es(line);
        int u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra)) throw ParseError(lineno, "expected 'u v'");
        if (u == v) throw ParseError(lineno, "loop in deleted edge list");
        c.deleted.emplace_back(u, v);
    }
    std::string rest;
    int first_embedding_line = lineno + 1;
    for (std::string l; std::getline(in, l);) rest += l + "\n";
    try {
        c.embedding = parse_embedding(rest);
    } catch (const ParseError& e) {
        throw ParseError(first_embedding_line + e.line() - 1, e.message());
    } catch (const ParameterError& e) {
        throw ParseError(first_embedding_line, e.what());
    }
    return c;
}

}  // namespace surfskew
