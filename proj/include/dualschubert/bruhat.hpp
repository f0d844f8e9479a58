#pragma once

// Bruhat intervals, saturated chains, greedy chains, generating multisets and
// the dominance order on multisets of transposition labels.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualschubert/perm.hpp"

namespace dualschubert {

/// u_0 < u_1 < ... < u_l joined by covers, with u_i = u_{i-1} t_{labels[i-1]}.
struct SaturatedChain {
    std::vector<Permutation> nodes;
    std::vector<InversionPair> labels;

    std::size_t size() const { return labels.size(); }
    const Permutation& bottom() const { return nodes.front(); }
    const Permutation& top() const { return nodes.back(); }

    auto operator<=>(const SaturatedChain&) const = default;
};

/// Checks the chain invariants; throws InvariantError describing the first violation.
inline void validate_chain(const SaturatedChain& c) {
    if (c.nodes.empty()) throw InvariantError("chain: no nodes");
    if (c.nodes.size() != c.labels.size() + 1) throw InvariantError("chain: label count mismatch");
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
        const auto& prev = c.nodes[i];
        const auto& next = c.nodes[i + 1];
        if (apply_t(prev, c.labels[i]) != next)
            throw InvariantError("chain: label does not map node " + to_string(prev) + " to " + to_string(next));
        if (next.length() != prev.length() + 1)
            throw InvariantError("chain: step " + to_string(prev) + " -> " + to_string(next) + " is not a cover");
    }
}

/// Builds a chain from its node list, reading labels off consecutive nodes.
inline SaturatedChain chain_from_nodes(const std::vector<Permutation>& nodes) {
    SaturatedChain c;
    c.nodes = nodes;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const auto& x = nodes[i].word();
        const auto& y = nodes[i + 1].word();
        std::vector<int> diff;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k] != y[k]) diff.push_back(static_cast<int>(k) + 1);
        if (diff.size() != 2) throw std::invalid_argument("chain: consecutive nodes differ by more than a transposition");
        c.labels.push_back({diff[0], diff[1]});
    }
    validate_chain(c);
    return c;
}

inline SaturatedChain trivial_chain(const Permutation& w) { return SaturatedChain{{w}, {}}; }

/// Elements of [u, w], sorted by (length, word). Empty when u is not below w.
inline std::vector<Permutation> interval_elements(const Permutation& u, const Permutation& w) {
    if (!bruhat_leq(u, w)) return {};
    std::set<Permutation> seen{u};
    std::vector<Permutation> frontier{u};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
            for (auto& cov : up_covers(x))
                if (bruhat_leq(cov.perm, w) && seen.insert(cov.perm).second) next.push_back(cov.perm);
        frontier = std::move(next);
    }
    std::vector<Permutation> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Permutation& x, const Permutation& y) { return x.length() < y.length(); });
    return out;
}

/// Depth-first enumeration of every saturated chain from u to w. The visitor
/// returns false to stop early. Returns the number of chains visited.
inline std::size_t for_each_chain(const Permutation& u, const Permutation& w,
                                  const std::function<bool(const SaturatedChain&)>& visit) {
    if (!bruhat_leq(u, w)) return 0;
    const int target = w.length();
    SaturatedChain cur = trivial_chain(u);
    std::size_t count = 0;
    bool stop = false;
    std::function<void()> dfs = [&] {
        const auto& top = cur.nodes.back();
        if (top.length() == target) {
            ++count;
            if (!visit(cur)) stop = true;
            return;
        }
        for (auto& cov : up_covers(top)) {
            if (!bruhat_leq(cov.perm, w)) continue;
            cur.nodes.push_back(cov.perm);
            cur.labels.push_back(cov.label);
            dfs();
            cur.nodes.pop_back();
            cur.labels.pop_back();
            if (stop) return;
        }
    };
    dfs();
    return count;
}

inline std::vector<SaturatedChain> enumerate_chains(const Permutation& u, const Permutation& w) {
    std::vector<SaturatedChain> out;
    for_each_chain(u, w, [&](const SaturatedChain& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

namespace detail {

// (a, b) is beaten by a longer label sharing an endpoint: (a, b') with b' > b
// or (a', b) with a' < a.
inline bool label_dominated(InversionPair t, const std::vector<InversionPair>& others) {
    return std::any_of(others.begin(), others.end(), [&](InversionPair o) {
        return (o.a == t.a && o.b > t.b) || (o.b == t.b && o.a < t.a);
    });
}

// Labels of the cocovers of x lying in [u, w] (x <= w is assumed).
inline std::vector<Cover> cocovers_in_interval(const Permutation& x, const Permutation& u) {
    std::vector<Cover> out;
    for (auto& c : down_covers(x))
        if (bruhat_leq(u, c.perm)) out.push_back(c);
    return out;
}

}  // namespace detail

/// Greedy chain from u to w, built top-down. Among admissible cocovers the
/// lexicographically smallest undominated label is taken.
inline SaturatedChain greedy_chain(const Permutation& u, const Permutation& w) {
    if (!bruhat_leq(u, w)) throw std::invalid_argument("greedy_chain: u is not below w in Bruhat order");
    std::vector<Permutation> nodes{w};
    std::vector<InversionPair> labels;
    Permutation x = w;
    while (x != u) {
        auto cands = detail::cocovers_in_interval(x, u);
        std::vector<InversionPair> all;
        for (auto& c : cands) all.push_back(c.label);
        const Cover* pick = nullptr;
        for (auto& c : cands) {
            if (detail::label_dominated(c.label, all)) continue;
            if (!pick || c.label < pick->label) pick = &c;
        }
        if (!pick) throw InvariantError("greedy_chain: no undominated cocover at " + to_string(x));
        labels.push_back(pick->label);
        x = pick->perm;
        nodes.push_back(x);
    }
    std::reverse(nodes.begin(), nodes.end());
    std::reverse(labels.begin(), labels.end());
    SaturatedChain c{std::move(nodes), std::move(labels)};
    validate_chain(c);
    return c;
}

/// Greedy condition checked at every step against all cocovers of the upper node in [u, w].
inline bool is_greedy(const SaturatedChain& c, const Permutation& u, const Permutation& w) {
    validate_chain(c);
    if (c.bottom() != u || c.top() != w) throw std::invalid_argument("is_greedy: chain does not run from u to w");
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
        const auto& upper = c.nodes[i + 1];
        std::vector<InversionPair> alt;
        for (auto& cc : detail::cocovers_in_interval(upper, u)) alt.push_back(cc.label);
        if (detail::label_dominated(c.labels[i], alt)) return false;
    }
    return true;
}

/// Multiset of transposition labels, kept sorted.
struct GeneratingMultiset {
    std::vector<InversionPair> pairs;

    std::size_t size() const { return pairs.size(); }
    auto operator<=>(const GeneratingMultiset&) const = default;
};

inline GeneratingMultiset make_multiset(std::vector<InversionPair> pairs) {
    std::sort(pairs.begin(), pairs.end());
    return GeneratingMultiset{std::move(pairs)};
}

inline GeneratingMultiset generating_multiset(const SaturatedChain& c) { return make_multiset(c.labels); }

/// [g.a, g.b] is contained in [h.a, h.b].
inline bool interval_within(InversionPair g, InversionPair h) { return h.a <= g.a && g.b <= h.b; }

/// G dominated by H: a perfect matching G -> H with each [a,b] inside its
/// partner interval. Decided by augmenting paths.
inline bool multiset_dominates(const GeneratingMultiset& g, const GeneratingMultiset& h) {
    if (g.size() != h.size()) throw std::invalid_argument("multiset_dominates: cardinality mismatch");
    const std::size_t m = g.size();
    std::vector<int> match_h(m, -1);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t gi) -> bool {
        for (std::size_t hj = 0; hj < m; ++hj) {
            if (seen[hj] || !interval_within(g.pairs[gi], h.pairs[hj])) continue;
            seen[hj] = 1;
            if (match_h[hj] < 0 || augment(static_cast<std::size_t>(match_h[hj]))) {
                match_h[hj] = static_cast<int>(gi);
                return true;
            }
        }
        return false;
    };
    for (std::size_t gi = 0; gi < m; ++gi) {
        seen.assign(m, 0);
        if (!augment(gi)) return false;
    }
    return true;
}

/// "123 <(1,2) 213 <(1,3) 312"
inline std::string render_chain(const SaturatedChain& c) {
    std::string out = to_string(c.nodes.front());
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
        out += " <" + to_string(c.labels[i]) + " " + to_string(c.nodes[i + 1]);
    }
    return out;
}

}  // namespace dualschubert
