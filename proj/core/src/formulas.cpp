#include "surfskew/formulas.hpp"

#include <cmath>

#include "surfskew/error.hpp"

namespace surfskew {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor_of(const Rational& r) {
    std::int64_t n = r.numerator(), d = r.denominator();
    std::int64_t q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

Rational alpha_of_girth(int g) {
    if (g < 3) throw DomainError("girth must be at least 3");
    return Rational(g, g - 2);
}

Excess excess(const Graph& g, std::int64_t t) {
    if (t < 0) throw ParameterError("t must be non-negative");
    if (!is_connected(g)) throw DomainError("excess is defined for connected graphs");
    return excess(g.order(), g.size(), girth(g), t);
}

Excess excess(std::int64_t p, std::int64_t q, std::optional<int> girth, std::int64_t t) {
    if (t < 0) throw ParameterError("t must be non-negative");
    Excess e;
    if (!girth) return e;
    Rational a = alpha_of_girth(*girth);
    e.delta = Rational(q) - a * Rational(p - 2 + 2 * t);
    e.epsilon = std::max<std::int64_t>(0, ceil_of(e.delta));
    return e;
}

std::int64_t epsilon_by_components(const Graph& g, std::int64_t t) {
    Components c = components(g);
    std::int64_t sum = 0;
    for (int i = 0; i < c.count; ++i) sum += excess(induced_component(g, c, i, nullptr), t).epsilon;
    return sum;
}

namespace {

// (q/alpha - p + 2)/2: delta_t >= 0 exactly when t <= this value.
Rational genus_threshold(const Graph& g) {
    auto gi = girth(g);
    Rational a = alpha_of_girth(*gi);
    return (Rational(g.size()) / a - Rational(g.order()) + Rational(2)) / Rational(2);
}

}  // namespace

std::optional<std::int64_t> algebraic_genus(const Graph& g) {
    if (!is_connected(g)) throw DomainError("algebraic genus needs a connected graph");
    if (!girth(g)) throw DomainError("algebraic genus is undefined for forests");
    Rational x = genus_threshold(g);
    if (x < Rational(0)) return std::nullopt;
    return floor_of(x);
}

std::int64_t euler_genus_lower_bound(const Graph& g) {
    if (!girth(g)) return 0;
    if (!is_connected(g)) throw DomainError("genus lower bound needs a connected graph");
    return std::max<std::int64_t>(0, ceil_of(genus_threshold(g)));
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

std::int64_t genus_formula(const FamilySpec& spec) {
    using namespace family;
    return std::visit(
        [](const auto& f) -> std::int64_t {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Complete>) {
                if (f.n < 3) throw DomainError("genus formula for K_n needs n >= 3");
                return ceil_div(std::int64_t(f.n - 3) * (f.n - 4), 12);
            } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
                if (f.a < 2 || f.b < 2) throw DomainError("genus formula for K_{a,b} needs a, b >= 2");
                return ceil_div(std::int64_t(f.a - 2) * (f.b - 2), 4);
            } else if constexpr (std::is_same_v<T, Cube>) {
                if (f.d < 3) throw DomainError("genus formula for Q_d needs d >= 3");
                return t_cube(f.d);
            } else if constexpr (std::is_same_v<T, FoldedCube>) {
                if (f.d < 3) throw DomainError("genus formula for F_d needs d >= 3");
                return 1 + std::int64_t(f.d - 3) * (std::int64_t(1) << (f.d - 3));
            } else if constexpr (std::is_same_v<T, Octahedron>) {
                if (f.r < 3) throw DomainError("genus formula for O_r needs r >= 3");
                return ceil_div(std::int64_t(f.r - 1) * (f.r - 3), 3);
            } else {
                throw DomainError("no genus formula for this family");
            }
        },
        spec);
}

std::string genus_formula_name(const FamilySpec& spec) {
    switch (spec.index()) {
        case 0: return "ringel-youngs";
        case 1: return "ringel";
        case 2: return "cube";
        case 3: return "folded-cube";
        case 4: return "octahedron";
        default: throw DomainError("no genus formula for this family");
    }
}

std::optional<std::int64_t> known_genus_upper_bound(const FamilySpec& spec) {
    if (auto* c = std::get_if<family::Cycle>(&spec)) return c->n >= 3 ? std::optional<std::int64_t>(0) : std::nullopt;
    if (std::holds_alternative<family::Path>(spec)) return 0;
    if (auto* f = std::get_if<family::FoldedCube>(&spec))
        if (f->d >= 4 && f->d % 2 == 0) return std::nullopt;
    if (auto* q = std::get_if<family::Cube>(&spec))
        if (q->d >= 0 && q->d <= 2) return 0;
    try {
        return genus_formula(spec);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

std::int64_t t_octahedron(std::int64_t r) {
    if (r < 3 || r % 3 == 2) throw DomainError("t_O(r) needs r >= 3 and r not 2 mod 3");
    return (r - 1) * (r - 3) / 3;
}

std::int64_t t_cube(std::int64_t d) {
    if (d < 3 || d > 40) throw DomainError("t_Q(d) needs 3 <= d <= 40");
    return 1 + (d - 4) * (std::int64_t(1) << (d - 3));
}

namespace {

std::int64_t isqrt(std::int64_t n) {
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

}  // namespace

std::int64_t b_min_bipartite_quad(std::int64_t t) {
    if (t < 0) throw DomainError("b(S_t) needs t >= 0");
    std::int64_t n = 16 * t;  // 16 - 8 chi(S_t)
    std::int64_t s = isqrt(n);
    return 4 + (s * s == n ? s : s + 1);
}

std::int64_t xi(std::int64_t t) {
    if (t < 0) throw DomainError("xi(t) needs t >= 0");
    std::int64_t s = isqrt(t);
    if (s * s != t) throw DomainError("xi(t) is only known for t = (r-2)^2/4 with r even");
    return 2 * s + 2;
}

std::int64_t tau_lookup(std::int64_t t) {
    switch (t) {
        case 0: return 4;
        case 1: return 7;
        case 2: return 10;
        default: throw DomainError("tau(t) is only tabulated for t <= 2");
    }
}

}  // namespace surfskew
