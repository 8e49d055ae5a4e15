#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "surfskew/graph.hpp"

namespace surfskew {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);
std::int64_t ceil_of(const Rational& r);
std::int64_t floor_of(const Rational& r);

struct Excess {
    Rational delta;
    std::int64_t epsilon = 0;
};

// alpha = g/(g-2); only meaningful for graphs with a cycle.
Rational alpha_of_girth(int g);

// Exact Euler excess of a connected graph. Throws DomainError if disconnected.
Excess excess(const Graph& g, std::int64_t t);
// Same arithmetic from the invariants alone; no girth means a forest.
Excess excess(std::int64_t p, std::int64_t q, std::optional<int> girth, std::int64_t t);
// Sum of epsilon over components (labelled as an extension in reports).
std::int64_t epsilon_by_components(const Graph& g, std::int64_t t);

// Largest t with delta_t >= 0; nullopt when delta_0 < 0 already.
// Throws DomainError for forests.
std::optional<std::int64_t> algebraic_genus(const Graph& g);

// Least t with delta_t <= 0, clamped at 0. Forests give 0.
std::int64_t euler_genus_lower_bound(const Graph& g);

// Closed-form genus for K_n, K_{a,b}, Q_d, F_d, O_r. Throws DomainError otherwise.
std::int64_t genus_formula(const FamilySpec& spec);
// Name of the formula used, e.g. "ringel-youngs".
std::string genus_formula_name(const FamilySpec& spec);

// Genus values that are actually backed by an embedding in this library.
// Differs from genus_formula where the closed form is not realised (F_d, d even).
std::optional<std::int64_t> known_genus_upper_bound(const FamilySpec& spec);

std::int64_t t_octahedron(std::int64_t r);
std::int64_t t_cube(std::int64_t d);
std::int64_t b_min_bipartite_quad(std::int64_t t);
std::int64_t xi(std::int64_t t);
std::int64_t tau_lookup(std::int64_t t);

struct Bound {
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;
    std::string lower_source;
    std::string upper_source;

    bool exact() const { return upper && *upper == lower; }
};

// Everything the chain report can be fed with. Each optional is an independent
// piece of evidence; provenance strings are copied into the report.
struct ChainEvidence {
    struct Upper {
        std::int64_t value;
        std::string source;
    };
    std::vector<Upper> mu_upper;
    std::vector<Upper> nu_upper;
    std::optional<std::int64_t> mu_lower;  // e.g. exhausted search
    std::string mu_lower_source;
    std::optional<std::int64_t> nu_lower;
    std::string nu_lower_source;
    std::optional<std::int64_t> genus_upper;  // enables the vanishing lemma
    std::string genus_upper_source;
};

struct ChainReport {
    std::string graph_id;
    std::int64_t t = 0;
    Rational delta;
    std::int64_t epsilon = 0;
    Bound mu;
    Bound nu;
    bool delta_eq_epsilon = false;
    bool epsilon_eq_mu = false;
    bool mu_eq_nu = false;
    bool vanishing = false;
};

// Throws IntegrityError when evidence contradicts itself.
ChainReport chain_report(const Graph& g, std::int64_t t, const ChainEvidence& ev,
                         std::string graph_id = {});

// "δ=4 ε=4 μ=4 [cert] ν∈[4,?]"
std::string render_chain(const ChainReport& r);

}  // namespace surfskew
