#include <algorithm>

#include "surfskew/error.hpp"
#include "surfskew/formulas.hpp"

namespace surfskew {

namespace {

void take_upper(Bound& b, std::int64_t value, const std::string& src) {
    if (!b.upper || value < *b.upper) {
        b.upper = value;
        b.upper_source = src;
    }
}

void take_lower(Bound& b, std::int64_t value, const std::string& src) {
    if (value > b.lower) {
        b.lower = value;
        b.lower_source = src;
    }
}

std::string tag(const std::string& source) {
    auto colon = source.find(':');
    std::string head = source.substr(0, colon);
    if (head == "certificate") return "cert";
    if (head == "bound") return source.substr(colon + 1);
    return head;
}

std::string render_bound(const Bound& b) {
    if (b.exact()) return "=" + std::to_string(b.lower) + " [" + tag(b.upper_source) + "]";
    std::string s = "\xE2\x88\x88[" + std::to_string(b.lower) + ",";
    s += b.upper ? std::to_string(*b.upper) + "] [" + tag(b.upper_source) + "]" : std::string("?]");
    return s;
}

}  // namespace

ChainReport chain_report(const Graph& g, std::int64_t t, const ChainEvidence& ev,
                         std::string graph_id) {
    ChainReport r;
    r.graph_id = std::move(graph_id);
    r.t = t;
    Excess e = excess(g, t);
    r.delta = e.delta;
    r.epsilon = e.epsilon;

    r.mu.lower = e.epsilon;
    r.mu.lower_source = "bound:excess";
    if (ev.mu_lower) take_lower(r.mu, *ev.mu_lower, ev.mu_lower_source);
    take_upper(r.mu, cycle_rank(g), "bound:cycle-rank");
    for (const auto& u : ev.mu_upper) take_upper(r.mu, u.value, u.source);
    for (const auto& u : ev.nu_upper) take_upper(r.mu, u.value, u.source);

    r.nu.lower = r.mu.lower;
    r.nu.lower_source = r.mu.lower_source;
    if (ev.nu_lower) take_lower(r.nu, *ev.nu_lower, ev.nu_lower_source);
    for (const auto& u : ev.nu_upper) take_upper(r.nu, u.value, u.source);

    if (ev.genus_upper && t >= *ev.genus_upper) {
        r.vanishing = true;
        if (r.epsilon != 0)
            throw IntegrityError("epsilon_" + std::to_string(t) + " = " + std::to_string(r.epsilon) +
                                 " although t is at least a genus upper bound (" +
                                 ev.genus_upper_source + ")");
        take_upper(r.mu, 0, "bound:vanishing");
        take_upper(r.nu, 0, "bound:vanishing");
    }

    if (r.delta > Rational(r.epsilon)) throw IntegrityError("delta exceeds epsilon");
    if (r.mu.upper && r.mu.lower > *r.mu.upper)
        throw IntegrityError("mu lower bound " + std::to_string(r.mu.lower) + " (" +
                             r.mu.lower_source + ") exceeds upper bound " +
                             std::to_string(*r.mu.upper) + " (" + r.mu.upper_source + ")");
    if (r.nu.upper && r.nu.lower > *r.nu.upper)
        throw IntegrityError("nu lower bound " + std::to_string(r.nu.lower) + " (" +
                             r.nu.lower_source + ") exceeds upper bound " +
                             std::to_string(*r.nu.upper) + " (" + r.nu.upper_source + ")");

    r.delta_eq_epsilon = r.delta == Rational(r.epsilon);
    r.epsilon_eq_mu = r.mu.exact() && r.mu.lower == r.epsilon;
    r.mu_eq_nu = r.mu.exact() && r.nu.exact() && r.mu.lower == r.nu.lower;
    return r;
}

std::string render_chain(const ChainReport& r) {
    return "\xCE\xB4=" + to_string(r.delta) + " \xCE\xB5=" + std::to_string(r.epsilon) +
           " \xCE\xBC" + render_bound(r.mu) + " \xCE\xBD" + render_bound(r.nu);
}

}  // namespace surfskew
