#include "cli.hpp"

namespace surfskew::cli {

namespace {

int need(const std::optional<int>& v, const char* flag, const std::string& name) {
    if (!v) throw ParameterError(name + " needs --" + flag);
    return *v;
}

std::int64_t need_k(const std::optional<std::int64_t>& v, const std::string& name) {
    if (!v) throw ParameterError(name + " needs --k");
    return *v;
}

Built from_cert(DeletionCertificate c) {
    Built b;
    b.rs = c.embedding;
    b.cert = std::move(c);
    return b;
}

Built from_embedding(RotationSystem rs, const FamilySpec& host) {
    Built b;
    b.cert = certificate_from_embedding(generate(host), rs, euler_genus(rs));
    b.rs = std::move(rs);
    return b;
}

}  // namespace

const std::vector<std::string>& construction_names() {
    static const std::vector<std::string> names = {
        "planar-c4",  "guy",        "torus-complete-even", "torus-complete-odd", "torus-kab3", "torus-k44",
        "torus-kab",  "cube",       "cube-drops",          "folded-cube",        "folded-drops",
        "cube-in-kaa"};
    return names;
}

Built build_construction(const std::string& name, const ConstructionParams& p) {
    if (name == "planar-c4") return from_embedding(relabel(planar_c4(), {0, 1, 3, 2}), family::Cycle{4});
    if (name == "guy") {
        auto e = guy_planar_quadrangulation(need(p.a, "a", name), need(p.b, "b", name));
        return Built{e.rs, e.cert, std::nullopt};
    }
    if (name == "torus-complete-even") {
        auto e = torus_complete_even(need(p.r, "r", name));
        return Built{e.rs, e.cert, std::nullopt};
    }
    if (name == "torus-complete-odd") return from_cert(torus_complete_odd(need(p.r, "r", name)));
    if (name == "torus-kab3") return from_cert(torus_kab_b3(need(p.a, "a", name)));
    if (name == "torus-k44") return from_embedding(torus_k44_quadrangulation(), family::CompleteBipartite{4, 4});
    if (name == "torus-kab") {
        auto e = torus_kab_quadrangulation(need(p.a, "a", name), need(p.b, "b", name));
        return Built{e.rs, e.cert, std::nullopt};
    }
    if (name == "cube") {
        int d = need(p.d, "d", name);
        auto e = cube_genus_embedding(d);
        Built b = from_embedding(e.rs, family::Cube{d});
        b.vdqc = e.vdqc;
        return b;
    }
    if (name == "cube-drops") return from_cert(cube_with_drops(need(p.d, "d", name), need_k(p.k, name)));
    if (name == "folded-cube") {
        int d = need(p.d, "d", name);
        return from_embedding(folded_cube_genus_embedding(d), family::FoldedCube{d});
    }
    if (name == "folded-drops") return from_cert(folded_cube_with_drops(need(p.d, "d", name), need_k(p.k, name)));
    if (name == "cube-in-kaa") return from_cert(cube_in_kaa_certificate(need(p.d, "d", name)));
    throw ParameterError("unknown construction '" + name + "'");
}

}  // namespace surfskew::cli
