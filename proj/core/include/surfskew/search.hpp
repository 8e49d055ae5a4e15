#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfskew/constructions.hpp"
#include "surfskew/embedding.hpp"
#include "surfskew/graph.hpp"

namespace surfskew {

struct Budget {
    std::uint64_t max_nodes = 50'000'000;
};

template <class V>
struct SearchOutcome {
    bool exact = false;
    V lower{};
    std::optional<V> upper;
    std::string reason;
    std::uint64_t nodes = 0;

    V value() const { return lower; }
};

struct PlanarityResult {
    bool planar = false;
    std::optional<RotationSystem> witness;
};

PlanarityResult is_planar(const Graph& g);
bool planar(const Graph& g);

struct GenusOptions {
    bool reflection_halving = true;
};

struct GenusResult {
    SearchOutcome<std::int64_t> outcome;
    std::optional<RotationSystem> best;
};

// Exhaustive rotation enumeration with face-count pruning. Connected input only.
GenusResult min_genus_exact(const Graph& g, const Budget& budget = {},
                            const GenusOptions& opts = {});

struct SkewnessResult {
    SearchOutcome<std::int64_t> outcome;
    std::vector<Edge> witness;  // deleted edges of a best solution found
};

SkewnessResult skewness_exact(const Graph& g, std::int64_t t, const Budget& budget = {});

struct DrawingCertificate {
    Graph graph;
    std::string source;
    std::vector<std::pair<Edge, Edge>> crossings;
    // For every crossed edge: indices into `crossings` in order from u to v.
    std::vector<std::pair<Edge, std::vector<int>>> order;
};

struct CrossingResult {
    SearchOutcome<std::int64_t> outcome;
    std::optional<DrawingCertificate> drawing;
};

// Unset max_k means "no cap"; the budget still applies.
CrossingResult crossing_number_plane_exact(const Graph& g, int max_k, const Budget& budget = {});

// Planarisation of a drawing: crossing i becomes vertex p + i.
Graph planarize(const DrawingCertificate& c);

std::string serialize_drawing(const DrawingCertificate& c);
DrawingCertificate parse_drawing(const std::string& text, const std::string& base_dir = ".");

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> lines;  // key: value lines, fixed order
};

VerifyReport verify_deletion_certificate(const DeletionCertificate& c);
VerifyReport verify_drawing_certificate(const DrawingCertificate& c);
VerifyReport verify_embedding(const RotationSystem& rs);

}  // namespace surfskew
