#include <algorithm>
#include <numeric>
#include <queue>

#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"
#include "surfskew/search.hpp"

namespace surfskew {

namespace {

// Partial face tracing: next() pointers are fixed one vertex at a time; open
// chains of darts are kept with their endpoints so closing a face is O(1).
class FaceTracker {
  public:
    explicit FaceTracker(int darts)
        : start_(darts), end_(darts), len_(darts, 1) {
        std::iota(start_.begin(), start_.end(), 0);
        std::iota(end_.begin(), end_.end(), 0);
    }

    void link(int d, int e) {
        int s = start_[d];
        if (s == e) {
            log_.push_back({true, s, 0, 0, 0, 0});
            ++closed_;
            closed_darts_ += len_[s];
            return;
        }
        int x = end_[e];
        log_.push_back({false, s, end_[s], x, start_[x], len_[s]});
        end_[s] = x;
        start_[x] = s;
        len_[s] += len_[e];
    }

    void undo() {
        Step st = log_.back();
        log_.pop_back();
        if (st.closed) {
            --closed_;
            closed_darts_ -= len_[st.s];
            return;
        }
        end_[st.s] = st.old_end;
        start_[st.x] = st.old_start;
        len_[st.s] = st.old_len;
    }

    int closed() const { return closed_; }
    int closed_darts() const { return closed_darts_; }

  private:
    struct Step {
        bool closed;
        int s, old_end, x, old_start, old_len;
    };
    std::vector<int> start_, end_, len_;
    std::vector<Step> log_;
    int closed_ = 0;
    int closed_darts_ = 0;
};

class GenusSearch {
  public:
    GenusSearch(const Graph& g, const Budget& budget, bool halving)
        : g_(g), budget_(budget), halving_(halving) {
        int p = g.order();
        offset_.assign(p + 1, 0);
        for (int v = 0; v < p; ++v) offset_[v + 1] = offset_[v] + g.degree(v);
        girth_ = girth(g).value_or(3);
        // BFS order from a vertex of maximum degree keeps faces closing early.
        int root = 0;
        for (int v = 0; v < p; ++v)
            if (g.degree(v) > g.degree(root)) root = v;
        std::vector<char> seen(p, 0);
        std::queue<int> q;
        q.push(root);
        seen[root] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order_.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        rot_.resize(p);
        for (int v = 0; v < p; ++v) rot_[v] = g.neighbors(v);
        halving_vertex_ = -1;
        if (halving_)
            for (int v : order_)
                if (g.degree(v) >= 3) {
                    halving_vertex_ = v;
                    break;
                }
    }

    // Looks for a rotation system of genus <= target. Returns true on success.
    bool run(int target) {
        target_ = target;
        FaceTracker ft(offset_.back());
        tracker_ = &ft;
        found_ = false;
        dfs(0);
        tracker_ = nullptr;
        return found_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<std::vector<int>>& best() const { return best_; }

  private:
    int dart(int v, int w) const {
        const auto& nb = g_.neighbors(v);
        return offset_[v] + static_cast<int>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
    }

    // Upper bound on faces of any completion.
    int face_bound() const {
        int open = offset_.back() - tracker_->closed_darts();
        return tracker_->closed() + open / girth_;
    }

    bool feasible() const {
        int p = g_.order(), q = g_.size();
        int twice = 2 - p + q - face_bound();
        return twice <= 2 * target_;
    }

    void dfs(std::size_t k) {
        if (found_ || exhausted_) return;
        if (k == order_.size()) {
            found_ = true;
            best_ = rot_;
            return;
        }
        int v = order_[k];
        std::vector<int>& r = rot_[v];
        std::sort(r.begin() + 1, r.end());
        do {
            if (v == halving_vertex_ && r.size() >= 3 && r[1] > r.back()) continue;
            if (++nodes_ > budget_.max_nodes) {
                exhausted_ = true;
                return;
            }
            int n = static_cast<int>(r.size());
            for (int i = 0; i < n; ++i) tracker_->link(dart(r[i], v), dart(v, r[(i + 1) % n]));
            if (feasible()) dfs(k + 1);
            for (int i = 0; i < n; ++i) tracker_->undo();
            if (found_ || exhausted_) return;
        } while (std::next_permutation(r.begin() + 1, r.end()));
    }

    const Graph& g_;
    Budget budget_;
    bool halving_;
    int halving_vertex_;
    int girth_ = 3;
    int target_ = 0;
    std::vector<int> offset_;
    std::vector<int> order_;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<int>> best_;
    FaceTracker* tracker_ = nullptr;
    bool found_ = false;
    bool exhausted_ = false;
    std::uint64_t nodes_ = 0;
};

}  // namespace

GenusResult min_genus_exact(const Graph& g, const Budget& budget, const GenusOptions& opts) {
    if (!is_connected(g)) throw DomainError("min_genus_exact needs a connected graph");
    GenusResult res;
    auto& out = res.outcome;
    PlanarityResult pr = is_planar(g);
    if (pr.planar) {
        out.exact = true;
        out.lower = 0;
        out.upper = 0;
        res.best = pr.witness;
        return res;
    }
    std::int64_t lower = std::max<std::int64_t>(1, euler_genus_lower_bound(g));
    // Any rotation gives an upper bound; the sorted one is cheap.
    std::vector<std::vector<int>> sorted_rot(g.order());
    for (int v = 0; v < g.order(); ++v) sorted_rot[v] = g.neighbors(v);
    RotationSystem first(g.without_labels(), sorted_rot);
    std::int64_t upper = euler_genus(first);
    res.best = first;

    GenusSearch search(g, budget, opts.reflection_halving);
    for (std::int64_t target = lower; target < upper; ++target) {
        if (search.run(static_cast<int>(target))) {
            upper = target;
            res.best = RotationSystem(g.without_labels(), search.best());
            break;
        }
        if (search.exhausted()) {
            out.lower = target;
            out.upper = upper;
            out.reason = "node budget exhausted";
            out.nodes = search.nodes();
            return res;
        }
        lower = target + 1;
    }
    out.exact = true;
    out.lower = upper;
    out.upper = upper;
    out.nodes = search.nodes();
    return res;
}

}  // namespace surfskew
