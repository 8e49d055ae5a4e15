#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surfskew/embedding.hpp"
#include "surfskew/graph.hpp"

namespace surfskew {

// Witness that host - deleted embeds in S_t, hence mu_t(host) <= |deleted|.
struct DeletionCertificate {
    Graph host;
    std::string source;  // "family <spec>" or a path to a graph file
    std::vector<Edge> deleted;
    std::int64_t t = 0;
    RotationSystem embedding;
};

// Builds a certificate for host whose deleted set is everything not in the embedding.
DeletionCertificate certificate_from_embedding(const Graph& host, const RotationSystem& emb,
                                               std::int64_t t);

std::string serialize_certificate(const DeletionCertificate& c);
// Graph sources that are paths are resolved relative to base_dir.
DeletionCertificate parse_certificate(const std::string& text, const std::string& base_dir = ".");

// Resolves a graph source line: "family <spec>" or a path.
Graph load_graph_source(const std::string& source, const std::string& base_dir = ".");

struct Embedded {
    RotationSystem rs;
    DeletionCertificate cert;
};

struct EmbeddedVdqc {
    RotationSystem rs;
    Vdqc vdqc;
};

// C_4 with the rotation whose face (0,1,3,2) seeds every cube doubling.
RotationSystem planar_c4();
RotationSystem planar_cube3();

Embedded guy_planar_quadrangulation(int a, int b);
Embedded torus_complete_even(int r);
DeletionCertificate torus_complete_odd(int r);
DeletionCertificate torus_kab_b3(int a);

RotationSystem torus_k44_quadrangulation();
// part 0 grows side A, part 1 grows side B. Output is relabelled to K_{a,b} numbering.
Embedded grow_quadrangulation(const RotationSystem& rs, int part, int n_new);
Embedded torus_kab_quadrangulation(int a, int b);

EmbeddedVdqc vdqc_double(const RotationSystem& rs, const Vdqc& s);
EmbeddedVdqc cube_genus_embedding(int d);

// Tubes omitted at each doubling level j = 4..d (index j), chosen greedily.
std::vector<int> cube_drop_plan(int d, std::int64_t k);
DeletionCertificate cube_with_drops(int d, std::int64_t k);

// Q_d genus embedding plus antipodal handles. Odd d only; even d throws IntegrityError.
RotationSystem folded_cube_genus_embedding(int d);

// Outcome of the doubling-plus-end-swap recursion for F_d built from F_{d-1}.
struct FoldedSwapReport {
    int d = 0;
    bool built = false;  // false when no VDQC was available to double along
    std::string note;
    std::int64_t genus_before_swap = 0;
    std::int64_t genus_after_swap = 0;
    bool graph_is_folded_cube = false;
    bool all_quads = false;
    RotationSystem result;
};
FoldedSwapReport folded_cube_end_swap(int d);

DeletionCertificate folded_cube_with_drops(int d, std::int64_t k);

DeletionCertificate cube_in_kaa_certificate(int d);

}  // namespace surfskew
