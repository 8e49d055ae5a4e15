#include <algorithm>

#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"
#include "surfskew/search.hpp"

namespace surfskew {

namespace {

// Genus of every component is at most t. nullopt if some component is undecided.
std::optional<bool> embeds_in(const Graph& h, std::int64_t t, const Budget& budget,
                              std::uint64_t& nodes) {
    if (t == 0) {
        ++nodes;
        return planar(h);
    }
    Components c = components(h);
    std::int64_t total = 0;
    for (int i = 0; i < c.count; ++i) {
        Graph part = induced_component(h, c, i, nullptr);
        GenusResult r = min_genus_exact(part, budget);
        nodes += r.outcome.nodes + 1;
        if (!r.outcome.exact) {
            if (total + r.outcome.lower > t) return false;
            return std::nullopt;
        }
        total += r.outcome.lower;
        if (total > t) return false;
    }
    return true;
}

}  // namespace

SkewnessResult skewness_exact(const Graph& g, std::int64_t t, const Budget& budget) {
    if (t < 0) throw ParameterError("t must be non-negative");
    SkewnessResult res;
    auto& out = res.outcome;
    std::int64_t eps = is_connected(g) ? excess(g, t).epsilon : epsilon_by_components(g, t);
    std::int64_t upper_known = cycle_rank(g);

    std::vector<Edge> edges = g.edges();
    std::stable_sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) {
        return g.degree(x.u) + g.degree(x.v) > g.degree(y.u) + g.degree(y.v);
    });
    int q = static_cast<int>(edges.size());
    std::uint64_t nodes = 0;
    bool undecided = false;
    std::int64_t first_undecided = 0;

    for (std::int64_t k = eps; k <= std::min<std::int64_t>(upper_known, q); ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            if (nodes > budget.max_nodes) {
                out.lower = k;
                out.upper = upper_known;
                out.reason = "node budget exhausted";
                out.nodes = nodes;
                return res;
            }
            std::vector<Edge> del;
            for (int i : idx) del.push_back(edges[i]);
            Graph h = remove_edges(g, del);
            std::optional<bool> ok = embeds_in(h, t, budget, nodes);
            if (ok && *ok) {
                res.witness = del;
                std::sort(res.witness.begin(), res.witness.end());
                out.exact = !undecided;
                out.lower = undecided ? first_undecided : k;
                out.upper = k;
                if (undecided) out.reason = "some smaller subsets were undecided";
                out.nodes = nodes;
                return res;
            }
            if (!ok && !undecided) {
                undecided = true;
                first_undecided = k;
            }
            // next k-combination
            int i = static_cast<int>(k) - 1;
            while (i >= 0 && idx[i] == q - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (undecided) {
            out.lower = first_undecided;
            out.upper = upper_known;
            out.reason = "genus oracle undecided for some subsets";
            out.nodes = nodes;
            return res;
        }
    }
    throw IntegrityError("skewness search found no embeddable subgraph below the cycle rank");
}

}  // namespace surfskew
