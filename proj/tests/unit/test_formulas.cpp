#include <doctest.h>

#include <surfskew/surfskew.hpp>

using namespace surfskew;

namespace {

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

// delta_t with all terms scaled by (g - 2) to stay in integers.
std::int64_t scaled_delta(std::int64_t p, std::int64_t q, std::int64_t g, std::int64_t t) {
    return q * (g - 2) - g * (p - 2 + 2 * t);
}

}  // namespace

TEST_CASE("excess examples") {
    Excess k53 = excess(generate(family::CompleteBipartite{5, 3}), 0);
    CHECK(k53.delta == Rational(3));
    CHECK(k53.epsilon == 3);
    CHECK(excess(generate(family::Complete{9}), 2).delta == Rational(3));
    Excess pet = excess(petersen(), 0);
    CHECK(pet.delta == Rational(5, 3));
    CHECK(pet.epsilon == 2);
    Excess tree = excess(generate(family::Path{6}), 7);
    CHECK(tree.delta == Rational(0));
    CHECK(tree.epsilon == 0);
    CHECK_THROWS_AS(excess(Graph(4, {{0, 1}, {2, 3}}), 0), DomainError);
    CHECK(epsilon_by_components(Graph(10, petersen().edges()), 0) == 2);
    CHECK(excess(32, 80, 4, 4).delta == excess(generate(family::Cube{5}), 4).delta);
    CHECK(excess(6, 5, std::nullopt, 0).epsilon == 0);
}

TEST_CASE("excess agrees with scaled integer arithmetic") {
    for (int n = 3; n <= 12; ++n)
        for (int t = 0; t <= 5; ++t) {
            std::int64_t p = n, q = n * (n - 1) / 2;
            Excess e = excess(generate(family::Complete{n}), t);
            CHECK(e.delta == Rational(scaled_delta(p, q, 3, t), 1));
            CHECK(e.epsilon == std::max<std::int64_t>(0, scaled_delta(p, q, 3, t)));
        }
    for (int a = 2; a <= 12; ++a)
        for (int b = 2; b <= a; ++b) {
            Excess e = excess(generate(family::CompleteBipartite{a, b}), 0);
            CHECK(e.delta == Rational((a - 2) * (b - 2)));
            CHECK(e.delta == Rational(scaled_delta(a + b, a * b, 4, 0), 2));
        }
}

TEST_CASE("excess step and monotonicity") {
    for (const FamilySpec& f : std::vector<FamilySpec>{family::Complete{7}, family::CompleteBipartite{5, 4},
                                                       family::Cube{5}, family::FoldedCube{5}, family::Octahedron{5}}) {
        Graph g = generate(f);
        Rational alpha = alpha_of_girth(*girth(g));
        std::int64_t prev = excess(g, 0).epsilon;
        for (int t = 0; t < 12; ++t) {
            CHECK(excess(g, t + 1).delta == excess(g, t).delta - 2 * alpha);
            CHECK(excess(g, t + 1).epsilon <= prev);
            prev = excess(g, t + 1).epsilon;
        }
        CHECK(excess(g, genus_formula(f)).epsilon == 0);
    }
    for (int d = 3; d <= 8; ++d)
        for (int t = 0; t <= 4; ++t)
            CHECK(excess(generate(family::FoldedCube{d}), t).delta - excess(generate(family::Cube{d}), t).delta ==
                  Rational(1 << (d - 1)));
}

TEST_CASE("cube excess at gamma - k") {
    for (int d = 3; d <= 10; ++d) {
        Graph q = generate(family::Cube{d});
        std::int64_t gamma = genus_formula(family::Cube{d});
        for (std::int64_t k = 0; k <= gamma; k += std::max<std::int64_t>(1, gamma / 9))
            CHECK(excess(q, gamma - k).delta == Rational(4 * k));
    }
}

TEST_CASE("algebraic genus and the Euler lower bound") {
    CHECK(algebraic_genus(generate(family::Complete{9})) == 2);
    CHECK(algebraic_genus(generate(family::CompleteBipartite{5, 5})) == 2);
    CHECK(algebraic_genus(generate(family::Complete{4})) == 0);
    CHECK_THROWS_AS(algebraic_genus(generate(family::Path{3})), DomainError);
    CHECK(euler_genus_lower_bound(generate(family::Cube{4})) == 1);
    CHECK(euler_genus_lower_bound(generate(family::Complete{5})) == 1);
    CHECK(euler_genus_lower_bound(generate(family::CompleteBipartite{4, 4})) == 1);
    CHECK(euler_genus_lower_bound(generate(family::Path{3})) == 0);
    for (int n = 3; n <= 20; ++n) {
        std::int64_t x = (n - 3) * (n - 4);
        CHECK(algebraic_genus(generate(family::Complete{n})) == x / 12);
        CHECK(genus_formula(family::Complete{n}) == (x + 11) / 12);
    }
}

TEST_CASE("genus formulas") {
    CHECK(genus_formula(family::Complete{7}) == 1);
    CHECK(genus_formula(family::Cube{4}) == 1);
    CHECK(genus_formula(family::FoldedCube{4}) == 3);
    CHECK(genus_formula(family::CompleteBipartite{5, 5}) == 3);
    CHECK(genus_formula(family::Octahedron{4}) == 1);
    CHECK(genus_formula_name(family::Complete{7}) == "ringel-youngs");
    CHECK(genus_formula_name(family::CompleteBipartite{3, 3}) == "ringel");
    CHECK_THROWS_AS(genus_formula(family::Circulant{10, {1, 3}}), DomainError);
    CHECK(known_genus_upper_bound(family::Cube{2}) == 0);
    CHECK(known_genus_upper_bound(family::FoldedCube{5}) == 9);
    CHECK_FALSE(known_genus_upper_bound(family::FoldedCube{4}).has_value());
}

TEST_CASE("special points") {
    CHECK(t_octahedron(4) == 1);
    CHECK(excess(generate(family::Complete{8}), t_octahedron(4)).delta == Rational(4));
    for (int r : {3, 4, 6, 7, 9, 10})
        CHECK(excess(generate(family::Complete{2 * r}), t_octahedron(r)).delta == Rational(r));
    CHECK_THROWS_AS(t_octahedron(5), DomainError);
    CHECK(t_cube(4) == 1);
    CHECK(t_cube(5) == 5);
    CHECK(b_min_bipartite_quad(0) == 4);
    CHECK(b_min_bipartite_quad(1) == 8);
    CHECK(xi(1) == 4);
    CHECK(xi(4) == 6);
    CHECK_THROWS_AS(xi(2), DomainError);
    CHECK(tau_lookup(0) == 4);
    CHECK(tau_lookup(1) == 7);
    CHECK(tau_lookup(2) == 10);
    CHECK_THROWS_AS(tau_lookup(3), DomainError);
}

TEST_CASE("chain report") {
    Graph q5 = generate(family::Cube{5});
    ChainEvidence ev;
    ev.mu_upper.push_back({4, "certificate:q5.cert"});
    ChainReport r = chain_report(q5, 4, ev);
    CHECK(r.delta == Rational(4));
    CHECK(r.epsilon_eq_mu);
    CHECK(render_chain(r) == "δ=4 ε=4 μ=4 [cert] ν∈[4,?]");

    ChainEvidence k5;
    k5.genus_upper = 1;
    k5.genus_upper_source = "formula:ringel-youngs";
    ChainReport v = chain_report(generate(family::Complete{5}), 1, k5);
    CHECK(v.vanishing);
    CHECK(v.mu.exact());
    CHECK(v.nu.exact());
    CHECK(v.nu.lower == 0);
    CHECK(render_chain(v) == "δ=-5 ε=0 μ=0 [vanishing] ν=0 [vanishing]");

    ChainEvidence k53;
    k53.mu_lower = 3;
    k53.mu_lower_source = "search:exhaustive";
    k53.mu_upper.push_back({3, "search:exhaustive"});
    k53.nu_lower = 4;
    k53.nu_lower_source = "search:exhaustive";
    k53.nu_upper.push_back({4, "search:exhaustive"});
    ChainReport c = chain_report(generate(family::CompleteBipartite{5, 3}), 0, k53);
    CHECK(c.delta_eq_epsilon);
    CHECK(c.epsilon_eq_mu);
    CHECK_FALSE(c.mu_eq_nu);
    CHECK(render_chain(c) == "δ=3 ε=3 μ=3 [search] ν=4 [search]");

    ChainEvidence bad;
    bad.mu_upper.push_back({2, "certificate:x"});
    CHECK_THROWS_AS(chain_report(generate(family::CompleteBipartite{5, 3}), 0, bad), IntegrityError);
    ChainEvidence early;
    early.genus_upper = 0;
    CHECK_THROWS_AS(chain_report(generate(family::Complete{5}), 0, early), IntegrityError);
}
