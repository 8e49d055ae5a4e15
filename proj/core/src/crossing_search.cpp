#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "planarity_detail.hpp"
#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"
#include "surfskew/search.hpp"

namespace surfskew {

namespace {

struct BudgetExceeded {};

class CrossingSearch {
  public:
    CrossingSearch(const Graph& g, const Budget& b) : g_(g), budget_(b), e_(g.edges()) {
        q_ = static_cast<int>(e_.size());
    }

    std::uint64_t nodes() const { return nodes_; }

    // Tries every crossing set of size k; fills `found` on success.
    bool try_k(int k, int s_min, std::optional<DrawingCertificate>& found) {
        seen_.clear();
        for (int s = std::max(1, s_min); s <= k; ++s) {
            for (const auto& d : planarizing(s)) {
                if (with_cover(d, k, found)) return true;
            }
        }
        return false;
    }

  private:
    void tick() {
        if (++nodes_ > budget_.max_nodes) throw BudgetExceeded{};
    }

    bool adjacent(int i, int j) const {
        const Edge &a = e_[i], &b = e_[j];
        return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    }

    const std::vector<std::vector<int>>& planarizing(int s) {
        auto it = planarizing_.find(s);
        if (it != planarizing_.end()) return it->second;
        std::vector<std::vector<int>> out;
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (s <= q_) {
            tick();
            std::vector<char> del(q_, 0);
            for (int i : idx) del[i] = 1;
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < q_; ++i)
                if (!del[i]) es.emplace_back(e_[i].u, e_[i].v);
            if (detail::planar_edges(g_.order(), es)) out.push_back(idx);
            int i = s - 1;
            while (i >= 0 && idx[i] == q_ - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        return planarizing_.emplace(s, std::move(out)).first->second;
    }

    // D is a minimum vertex cover of the crossing graph: every d in D has a
    // partner outside D, and every crossing pair meets D.
    bool with_cover(const std::vector<int>& d, int k, std::optional<DrawingCertificate>& found) {
        int s = static_cast<int>(d.size());
        std::vector<char> in_d(q_, 0);
        for (int x : d) in_d[x] = 1;
        std::vector<std::vector<int>> partner(s);
        for (int i = 0; i < s; ++i)
            for (int x = 0; x < q_; ++x)
                if (!in_d[x] && !adjacent(d[i], x)) partner[i].push_back(x);
        std::vector<std::pair<int, int>> extra_pool;
        for (int a = 0; a < q_; ++a)
            for (int b = a + 1; b < q_; ++b)
                if ((in_d[a] || in_d[b]) && !adjacent(a, b)) extra_pool.emplace_back(a, b);

        std::vector<std::pair<int, int>> base;
        auto choose_partner = [&](auto&& self, int i) -> bool {
            if (i == s) return with_extras(base, extra_pool, k - s, found);
            for (int x : partner[i]) {
                base.emplace_back(std::min(d[i], x), std::max(d[i], x));
                bool ok = self(self, i + 1);
                base.pop_back();
                if (ok) return true;
            }
            return false;
        };
        return choose_partner(choose_partner, 0);
    }

    bool with_extras(const std::vector<std::pair<int, int>>& base,
                     const std::vector<std::pair<int, int>>& pool, int extra,
                     std::optional<DrawingCertificate>& found) {
        std::vector<std::pair<int, int>> pool2;
        for (const auto& pr : pool)
            if (std::find(base.begin(), base.end(), pr) == base.end()) pool2.push_back(pr);
        int n = static_cast<int>(pool2.size());
        if (extra > n) return false;
        std::vector<int> idx(extra);
        for (int i = 0; i < extra; ++i) idx[i] = i;
        while (true) {
            std::vector<std::pair<int, int>> x = base;
            for (int i : idx) x.push_back(pool2[i]);
            std::sort(x.begin(), x.end());
            std::string key;
            for (auto [a, b] : x) {
                int id = a * q_ + b;
                key.push_back(static_cast<char>(id & 0xff));
                key.push_back(static_cast<char>((id >> 8) & 0xff));
                key.push_back(static_cast<char>((id >> 16) & 0xff));
            }
            if (seen_.insert(key).second && test_orders(x, found)) return true;
            int i = extra - 1;
            while (i >= 0 && idx[i] == n - extra + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < extra; ++j) idx[j] = idx[j - 1] + 1;
        }
        return false;
    }

    bool test_orders(const std::vector<std::pair<int, int>>& x, std::optional<DrawingCertificate>& found) {
        int k = static_cast<int>(x.size());
        std::map<int, std::vector<int>> on_edge;
        for (int c = 0; c < k; ++c) {
            on_edge[x[c].first].push_back(c);
            on_edge[x[c].second].push_back(c);
        }
        std::vector<std::vector<int>*> multi;
        for (auto& [e, cs] : on_edge)
            if (cs.size() >= 2) multi.push_back(&cs);

        auto test = [&]() -> bool {
            tick();
            int p = g_.order();
            std::vector<std::pair<int, int>> es;
            for (int i = 0; i < q_; ++i) {
                auto it = on_edge.find(i);
                if (it == on_edge.end()) {
                    es.emplace_back(e_[i].u, e_[i].v);
                    continue;
                }
                int prev = e_[i].u;
                for (int c : it->second) {
                    es.emplace_back(prev, p + c);
                    prev = p + c;
                }
                es.emplace_back(prev, e_[i].v);
            }
            return detail::planar_edges(p + k, es);
        };
        auto rec = [&](auto&& self, std::size_t i) -> bool {
            if (i == multi.size()) return test();
            auto& cs = *multi[i];
            std::sort(cs.begin(), cs.end());
            do {
                if (self(self, i + 1)) return true;
            } while (std::next_permutation(cs.begin(), cs.end()));
            return false;
        };
        if (!rec(rec, 0)) return false;
        DrawingCertificate dc;
        dc.graph = g_;
        if (g_.family()) dc.source = "family " + to_string(*g_.family());
        for (auto [a, b] : x) dc.crossings.emplace_back(e_[a], e_[b]);
        for (auto& [e, cs] : on_edge) dc.order.emplace_back(e_[e], cs);
        found = std::move(dc);
        return true;
    }

    const Graph& g_;
    Budget budget_;
    std::vector<Edge> e_;
    int q_ = 0;
    std::uint64_t nodes_ = 0;
    std::map<int, std::vector<std::vector<int>>> planarizing_;
    std::unordered_set<std::string> seen_;
};

}  // namespace

CrossingResult crossing_number_plane_exact(const Graph& g, int max_k, const Budget& budget) {
    if (!is_connected(g)) throw DomainError("crossing_number_plane_exact needs a connected graph");
    CrossingResult res;
    auto& out = res.outcome;
    if (planar(g)) {
        out.exact = true;
        out.lower = 0;
        out.upper = 0;
        DrawingCertificate dc;
        dc.graph = g;
        if (g.family()) dc.source = "family " + to_string(*g.family());
        res.drawing = dc;
        return res;
    }
    std::int64_t eps = excess(g, 0).epsilon;
    int start = static_cast<int>(std::max<std::int64_t>(1, eps));
    CrossingSearch search(g, budget);
    int k = start;
    try {
        for (; k <= max_k; ++k) {
            std::optional<DrawingCertificate> found;
            if (search.try_k(k, static_cast<int>(eps), found)) {
                out.exact = true;
                out.lower = k;
                out.upper = k;
                out.nodes = search.nodes();
                res.drawing = std::move(found);
                return res;
            }
        }
        out.reason = "no drawing with at most max_k crossings";
    } catch (const BudgetExceeded&) {
        out.reason = "node budget exhausted";
    }
    out.lower = k;
    out.nodes = search.nodes();
    return res;
}

}  // namespace surfskew
