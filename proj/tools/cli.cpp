#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

namespace surfskew::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ExitError{kNoInput, "cannot open " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) throw ExitError{kCantCreate, "cannot write " + path};
}

std::string dir_of(const std::string& path) {
    fs::path parent = fs::path(path).parent_path();
    return parent.empty() ? "." : parent.string();
}

struct Loaded {
    Graph g;
    std::string source;
};

// A graph argument is either "family <spec>" or a path to a graph file.
Loaded load_graph_arg(const std::string& arg) {
    if (arg.rfind("family ", 0) == 0) return {generate(parse_family(arg.substr(7))), arg};
    std::string text = read_file(arg);
    try {
        return {parse_graph(text), arg};
    } catch (const ParseError& e) {
        throw ExitError{kNoInput, arg + ": " + e.what()};
    }
}

// Certificate files refer to their graph relative to their own directory.
std::string source_for(const std::string& source, const std::string& out_path) {
    if (source.rfind("family ", 0) == 0 || out_path.empty() || out_path == "-") return source;
    fs::path rel = fs::relative(fs::absolute(source), fs::absolute(dir_of(out_path)));
    return rel.empty() ? source : rel.generic_string();
}

std::uint64_t env_number(const char* name) {
    const char* v = std::getenv(name);
    if (!v) return 0;
    std::string s(v);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
        throw ExitError{kUsage, std::string(name) + " must be a positive integer"};
    return std::stoull(s);
}

Budget budget_from(const std::optional<std::uint64_t>& flag) {
    Budget b;
    if (std::uint64_t e = env_number("SURFSKEW_BUDGET_NODES")) b.max_nodes = e;
    if (flag) b.max_nodes = *flag;
    if (b.max_nodes == 0) throw ExitError{kUsage, "--budget-nodes must be positive"};
    return b;
}

int max_k_from(const std::optional<int>& flag) {
    int k = 6;
    if (std::uint64_t e = env_number("SURFSKEW_MAX_K")) k = static_cast<int>(e);
    if (flag) k = *flag;
    if (k < 0) throw ExitError{kUsage, "--max-k must be non-negative"};
    return k;
}

std::string edges_text(const std::vector<Edge>& es) {
    if (es.empty()) return "-";
    std::string s;
    for (const Edge& e : es) {
        if (!s.empty()) s += ", ";
        s += std::to_string(e.u) + " " + std::to_string(e.v);
    }
    return s;
}

std::string bounds_text(std::int64_t lower, const std::optional<std::int64_t>& upper) {
    return "[" + std::to_string(lower) + "," + (upper ? std::to_string(*upper) : std::string("?")) + "]";
}

std::string first_word(const std::string& text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string w;
        ls >> w;
        return w;
    }
    return {};
}

void print_report(const VerifyReport& r, std::ostream& out) {
    for (const auto& l : r.lines) out << l << "\n";
    for (const auto& f : r.failures) out << "failure: " << f << "\n";
}

// ---- commands ----

struct GenArgs {
    std::string family;
    std::optional<int> n, a, b, d, r;
    std::vector<int> jumps;
    std::string output;
};

int cmd_gen(const GenArgs& g, std::ostream& out) {
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v) throw ParameterError("family " + g.family + " needs --" + flag);
        return std::to_string(*v);
    };
    std::string spec = g.family;
    if (g.family == "complete" || g.family == "cycle" || g.family == "path") spec += " " + need(g.n, "n");
    else if (g.family == "complete-bipartite") spec += " " + need(g.a, "a") + " " + need(g.b, "b");
    else if (g.family == "cube" || g.family == "folded-cube") spec += " " + need(g.d, "d");
    else if (g.family == "octahedron") spec += " " + need(g.r, "r");
    else if (g.family == "circulant") {
        spec += " " + need(g.n, "n");
        if (g.jumps.empty()) throw ParameterError("circulant needs --jumps");
        for (int j : g.jumps) spec += " " + std::to_string(j);
    } else {
        throw ParameterError("unknown family '" + g.family + "'");
    }
    emit(g.output, serialize_graph(generate(parse_family(spec))), out);
    return kOk;
}

int cmd_invariants(const std::string& arg, std::int64_t t, std::ostream& out) {
    if (t < 0) throw ParameterError("--t must be non-negative");
    Loaded L = load_graph_arg(arg);
    const Graph& g = L.g;
    auto gi = girth(g);
    Components c = components(g);
    out << "graph: " << L.source << "\n";
    out << "p: " << g.order() << "\n";
    out << "q: " << g.size() << "\n";
    out << "girth: " << (gi ? std::to_string(*gi) : std::string("inf")) << "\n";
    out << "components: " << c.count << "\n";
    out << "alpha: " << (gi ? to_string(alpha_of_girth(*gi)) : std::string("-")) << "\n";
    out << "t: " << t << "\n";
    if (c.count <= 1) {
        Excess e = excess(g, t);
        out << "delta: " << to_string(e.delta) << "\n";
        out << "epsilon: " << e.epsilon << "\n";
        std::optional<std::int64_t> h;
        if (gi) h = algebraic_genus(g);
        out << "h: " << (h ? std::to_string(*h) : std::string("-")) << "\n";
        out << "genus-lower: " << euler_genus_lower_bound(g) << "\n";
    } else {
        out << "delta: -\n";
        out << "epsilon: " << epsilon_by_components(g, t) << " (sum over components, extension)\n";
        out << "h: -\n";
        out << "genus-lower: -\n";
    }
    if (g.family()) {
        const FamilySpec& f = *g.family();
        out << "family: " << to_string(f) << "\n";
        auto known = known_genus_upper_bound(f);
        try {
            std::int64_t v = genus_formula(f);
            out << "genus: " << v << " (formula:" << genus_formula_name(f)
                << (known && *known == v ? "" : ", not realised") << ")\n";
        } catch (const DomainError&) {
            if (known) out << "genus: " << *known << " (planar)\n";
        }
    }
    return kOk;
}

int cmd_embed(const std::string& name, const ConstructionParams& p, bool vdqc, const std::string& output,
              std::ostream& out) {
    Built b = build_construction(name, p);
    if (!vdqc) {
        emit(output, serialize_embedding(b.rs), out);
        return kOk;
    }
    if (!b.vdqc) throw ParameterError("construction '" + name + "' has no VDQC");
    std::string text = "# vdqc " + std::to_string(b.vdqc->size()) + "\n";
    for (const FaceWalk& f : *b.vdqc) {
        for (std::size_t i = 0; i < f.vertices.size(); ++i) text += (i ? " " : "") + std::to_string(f.vertices[i]);
        text += "\n";
    }
    emit(output, text, out);
    return kOk;
}

int cmd_certify(const std::string& name, const ConstructionParams& p, const std::string& output,
                std::ostream& out) {
    Built b = build_construction(name, p);
    emit(output, serialize_certificate(b.cert), out);
    return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
    std::string text = read_file(path);
    std::string head = first_word(text);
    VerifyReport r;
    try {
        if (head == "CERT") {
            out << "kind: deletion-certificate\n";
            r = verify_deletion_certificate(parse_certificate(text, dir_of(path)));
        } else if (head == "DRAWING") {
            out << "kind: drawing\n";
            r = verify_drawing_certificate(parse_drawing(text, dir_of(path)));
        } else {
            out << "kind: embedding\n";
            r = verify_embedding(parse_embedding(text));
        }
    } catch (const ParseError& e) {
        throw ExitError{kNoInput, path + ": " + e.what()};
    }
    print_report(r, out);
    return r.ok ? kOk : kVerifyFailed;
}

int cmd_genus(const std::string& arg, const Budget& budget, bool no_halving, const std::string& cert,
              std::ostream& out) {
    Loaded L = load_graph_arg(arg);
    GenusOptions opts;
    opts.reflection_halving = !no_halving;
    GenusResult r = min_genus_exact(L.g, budget, opts);
    const auto& o = r.outcome;
    out << "graph: " << L.source << "\n";
    if (o.exact) {
        out << "genus: " << o.lower << "\nstatus: exact\n";
    } else {
        out << "genus: " << bounds_text(o.lower, o.upper) << "\nstatus: bounds (" << o.reason << ")\n";
    }
    out << "nodes: " << o.nodes << "\n";
    if (!cert.empty() && r.best) emit(cert, serialize_embedding(r.best->relabeled_graph(L.g)), out);
    return o.exact ? kOk : kBoundsOnly;
}

int cmd_skewness(const std::string& arg, std::int64_t t, const Budget& budget, const std::string& cert,
                 std::ostream& out) {
    if (t < 0) throw ParameterError("--t must be non-negative");
    Loaded L = load_graph_arg(arg);
    SkewnessResult r = skewness_exact(L.g, t, budget);
    const auto& o = r.outcome;
    out << "graph: " << L.source << "\n";
    out << "t: " << t << "\n";
    out << "epsilon: " << (is_connected(L.g) ? excess(L.g, t).epsilon : epsilon_by_components(L.g, t)) << "\n";
    if (o.exact) out << "mu: " << o.lower << "\nstatus: exact\n";
    else out << "mu: " << bounds_text(o.lower, o.upper) << "\nstatus: bounds (" << o.reason << ")\n";
    out << "deleted: " << edges_text(r.witness) << "\n";
    out << "nodes: " << o.nodes << "\n";
    if (!cert.empty()) {
        if (!o.upper) throw ExitError{kBoundsOnly, "no witness found within budget"};
        Graph rest = remove_edges(L.g, r.witness);
        std::optional<RotationSystem> emb;
        if (t == 0) {
            emb = is_planar(rest).witness;
        } else {
            if (!is_connected(rest)) throw ParameterError("--certificate for t > 0 needs a connected remainder");
            emb = min_genus_exact(rest, budget).best;
        }
        if (!emb) throw ExitError{kBoundsOnly, "could not embed the remainder within budget"};
        DeletionCertificate c{L.g, source_for(L.source, cert), r.witness, t, *emb};
        emit(cert, serialize_certificate(c), out);
    }
    return o.exact ? kOk : kBoundsOnly;
}

int cmd_crossing(const std::string& arg, int max_k, const Budget& budget, const std::string& cert,
                 std::ostream& out) {
    Loaded L = load_graph_arg(arg);
    CrossingResult r = crossing_number_plane_exact(L.g, max_k, budget);
    const auto& o = r.outcome;
    out << "graph: " << L.source << "\n";
    out << "epsilon: " << excess(L.g, 0).epsilon << "\n";
    if (o.exact) out << "nu: " << o.lower << "\nstatus: exact\n";
    else out << "nu: " << bounds_text(o.lower, o.upper) << "\nstatus: bounds (" << o.reason << ")\n";
    if (r.drawing) {
        std::string pairs;
        for (const auto& [a, b] : r.drawing->crossings) {
            if (!pairs.empty()) pairs += ", ";
            pairs += "(" + edges_text({a}) + " x " + edges_text({b}) + ")";
        }
        out << "crossings: " << (pairs.empty() ? "-" : pairs) << "\n";
    }
    out << "nodes: " << o.nodes << "\n";
    if (!cert.empty() && r.drawing) {
        DrawingCertificate d = *r.drawing;
        d.source = source_for(L.source, cert);
        emit(cert, serialize_drawing(d), out);
    }
    return o.exact ? kOk : kBoundsOnly;
}

struct ChainArgs {
    std::string graph;
    std::int64_t t = 0;
    std::vector<std::string> certificates;
    bool exact = false;
    std::optional<std::uint64_t> budget;
    std::optional<int> max_k;
};

int cmd_chain(const ChainArgs& a, std::ostream& out) {
    if (a.t < 0) throw ParameterError("--t must be non-negative");
    Loaded L = load_graph_arg(a.graph);
    const Graph& g = L.g;
    ChainEvidence ev;
    for (const auto& path : a.certificates) {
        std::string text = read_file(path);
        std::string tag = "certificate:" + path;
        try {
            if (first_word(text) == "DRAWING") {
                DrawingCertificate d = parse_drawing(text, dir_of(path));
                if (!verify_drawing_certificate(d).ok) throw ExitError{kVerifyFailed, path + " fails verification"};
                if (!(d.graph == g)) throw ExitError{kVerifyFailed, path + " is a drawing of a different graph"};
                ev.nu_upper.push_back({static_cast<std::int64_t>(d.crossings.size()), tag});
            } else {
                DeletionCertificate c = parse_certificate(text, dir_of(path));
                if (!verify_deletion_certificate(c).ok) throw ExitError{kVerifyFailed, path + " fails verification"};
                if (!(c.host == g)) throw ExitError{kVerifyFailed, path + " certifies a different graph"};
                if (c.t > a.t)
                    throw ParameterError(path + " is for t=" + std::to_string(c.t) + " > " + std::to_string(a.t));
                ev.mu_upper.push_back({static_cast<std::int64_t>(c.deleted.size()), tag});
            }
        } catch (const ParseError& e) {
            throw ExitError{kNoInput, path + ": " + e.what()};
        }
    }
    if (g.family()) {
        if (auto up = known_genus_upper_bound(*g.family())) {
            ev.genus_upper = *up;
            try {
                ev.genus_upper_source = "formula:" + genus_formula_name(*g.family());
            } catch (const DomainError&) {
                ev.genus_upper_source = "formula:planar";
            }
        }
    }
    bool bounds_only = false;
    if (a.exact) {
        Budget budget = budget_from(a.budget);
        SkewnessResult s = skewness_exact(g, a.t, budget);
        std::string src = s.outcome.exact ? "search:exhaustive" : "search:partial";
        ev.mu_lower = s.outcome.lower;
        ev.mu_lower_source = src;
        if (s.outcome.upper) ev.mu_upper.push_back({*s.outcome.upper, "search:exhaustive"});
        bounds_only |= !s.outcome.exact;
        if (a.t == 0) {
            CrossingResult c = crossing_number_plane_exact(g, max_k_from(a.max_k), budget);
            ev.nu_lower = c.outcome.lower;
            ev.nu_lower_source = c.outcome.exact ? "search:exhaustive" : "search:partial";
            if (c.outcome.exact) ev.nu_upper.push_back({c.outcome.lower, "search:exhaustive"});
            bounds_only |= !c.outcome.exact;
        }
    }
    ChainReport r = chain_report(g, a.t, ev, L.source);
    auto src = [](const std::string& s) { return s.empty() ? std::string() : " (" + s + ")"; };
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "graph: " << L.source << "\n";
    out << "t: " << a.t << "\n";
    out << "chain: " << render_chain(r) << "\n";
    out << "delta: " << to_string(r.delta) << "\n";
    out << "epsilon: " << r.epsilon << "\n";
    out << "mu-lower: " << r.mu.lower << src(r.mu.lower_source) << "\n";
    out << "mu-upper: " << (r.mu.upper ? std::to_string(*r.mu.upper) + src(r.mu.upper_source) : "?") << "\n";
    out << "nu-lower: " << r.nu.lower << src(r.nu.lower_source) << "\n";
    out << "nu-upper: " << (r.nu.upper ? std::to_string(*r.nu.upper) + src(r.nu.upper_source) : "?") << "\n";
    out << "delta=epsilon: " << yn(r.delta_eq_epsilon) << "\n";
    out << "epsilon=mu: " << yn(r.epsilon_eq_mu) << "\n";
    out << "mu=nu: " << yn(r.mu_eq_nu) << "\n";
    out << "vanishing: " << yn(r.vanishing) << "\n";
    return bounds_only ? kBoundsOnly : kOk;
}

std::optional<std::pair<int, int>> parse_range(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto dots = s.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return std::make_pair(v, v);
        }
        std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
        int a = std::stoi(lo, &used);
        if (used != lo.size()) throw std::invalid_argument(s);
        int b = std::stoi(hi, &used);
        if (used != hi.size()) throw std::invalid_argument(s);
        if (a > b) throw std::invalid_argument(s);
        return std::make_pair(a, b);
    } catch (const std::logic_error&) {
        throw ExitError{kUsage, "bad range '" + s + "' (expected N or A..B)"};
    }
}

}  // namespace

std::string pad(const std::string& s, std::size_t width) {
    // column widths count code points, not bytes
    std::size_t len = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++len;
    return len >= width ? s : s + std::string(width - len, ' ');
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"surfskew: Euler excess, skewness and crossing bounds for graphs on orientable surfaces"};
    app.name(args.empty() ? "surfskew" : fs::path(args[0]).filename().string());
    app.require_subcommand(1);

    GenArgs gen_a;
    auto* gen = app.add_subcommand("gen", "Write a family graph in graph file format");
    gen->add_option("--family", gen_a.family, "complete, complete-bipartite, cube, folded-cube, octahedron, "
                                              "circulant, cycle or path")
        ->required();
    gen->add_option("--n", gen_a.n);
    gen->add_option("--a", gen_a.a);
    gen->add_option("--b", gen_a.b);
    gen->add_option("--d", gen_a.d);
    gen->add_option("--r", gen_a.r);
    gen->add_option("--jumps", gen_a.jumps)->expected(1, -1);
    gen->add_option("-o,--output", gen_a.output, "Output file (default stdout)");

    std::string graph_arg;
    std::int64_t t = 0;
    auto* inv = app.add_subcommand("invariants", "Excess, integer excess and genus bounds");
    inv->add_option("graph", graph_arg, "Graph file or \"family <spec>\"")->required();
    inv->add_option("--t", t, "Surface genus");

    std::string construction;
    ConstructionParams cp;
    std::string output;
    bool want_vdqc = false;
    auto add_construction_opts = [&](CLI::App* sub) {
        sub->add_option("construction", construction)->required()->check(CLI::IsMember(construction_names()));
        sub->add_option("--a", cp.a);
        sub->add_option("--b", cp.b);
        sub->add_option("--d", cp.d);
        sub->add_option("--r", cp.r);
        sub->add_option("--k", cp.k, "Handles dropped");
        sub->add_option("-o,--output", output, "Output file (default stdout)");
    };
    auto* embed = app.add_subcommand("embed", "Write the embedding built by a construction");
    add_construction_opts(embed);
    embed->add_flag("--vdqc", want_vdqc, "List the vertex-disjoint quadrilateral cover instead");
    auto* certify = app.add_subcommand("certify", "Write the deletion certificate built by a construction");
    add_construction_opts(certify);

    std::string file_arg;
    auto* verify = app.add_subcommand("verify", "Recompute everything a certificate, drawing or embedding claims");
    verify->add_option("file", file_arg)->required();

    std::optional<std::uint64_t> budget_flag;
    std::optional<int> max_k_flag;
    std::string cert_out;
    bool no_halving = false;
    auto* genus = app.add_subcommand("genus", "Exact orientable genus by rotation enumeration");
    genus->add_option("graph", graph_arg)->required();
    genus->add_option("--budget-nodes", budget_flag);
    genus->add_flag("--no-halving", no_halving, "Do not skip mirror-image rotation systems");
    genus->add_option("--certificate", cert_out, "Write a minimum-genus embedding here");

    auto* skew = app.add_subcommand("skewness", "Exact skewness on S_t by subset search");
    skew->add_option("graph", graph_arg)->required();
    skew->add_option("--t", t);
    skew->add_option("--budget-nodes", budget_flag);
    skew->add_option("--certificate", cert_out, "Write a deletion certificate here");

    auto* cross = app.add_subcommand("crossing", "Exact plane crossing number by planarisation search");
    cross->add_option("graph", graph_arg)->required();
    cross->add_option("--max-k", max_k_flag);
    cross->add_option("--budget-nodes", budget_flag);
    cross->add_option("--certificate", cert_out, "Write a drawing certificate here");

    ChainArgs chain_a;
    auto* chain = app.add_subcommand("chain", "Assemble the excess / skewness / crossing chain");
    chain->add_option("graph", chain_a.graph)->required();
    chain->add_option("--t", chain_a.t);
    chain->add_option("--certificate", chain_a.certificates, "Deletion or drawing certificate (repeatable)");
    chain->add_flag("--exact", chain_a.exact, "Also run the exact oracles");
    chain->add_option("--budget-nodes", chain_a.budget);
    chain->add_option("--max-k", chain_a.max_k);

    std::string suite;
    std::string range_r, range_d, range_a;
    auto* report = app.add_subcommand("report", "Fixed tables for the constructions and oracles");
    report->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
    report->add_option("--r", range_r, "Range A..B for torus-complete");
    report->add_option("--d", range_d, "Range A..B for cube and folded-cube");
    report->add_option("--a", range_a, "Range A..B for planar-bipartite");

    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_gen(gen_a, out);
        if (*inv) return cmd_invariants(graph_arg, t, out);
        if (*embed) return cmd_embed(construction, cp, want_vdqc, output, out);
        if (*certify) return cmd_certify(construction, cp, output, out);
        if (*verify) return cmd_verify(file_arg, out);
        if (*genus) return cmd_genus(graph_arg, budget_from(budget_flag), no_halving, cert_out, out);
        if (*skew) return cmd_skewness(graph_arg, t, budget_from(budget_flag), cert_out, out);
        if (*cross) return cmd_crossing(graph_arg, max_k_from(max_k_flag), budget_from(budget_flag), cert_out, out);
        if (*chain) return cmd_chain(chain_a, out);
        if (*report) {
            std::string r = !range_r.empty() ? range_r : !range_d.empty() ? range_d : range_a;
            Suite s = report_suite(suite, parse_range(r));
            out << s.text;
            return s.ok ? kOk : kVerifyFailed;
        }
    } catch (const ExitError& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kNoInput;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}

}  // namespace surfskew::cli
