#pragma once

// Single-chain Newton polytope (SCNP) search and the exhaustive sweeps that
// check the open conjectures and the proven statements at small rank.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dualschubert/bruhat.hpp"
#include "dualschubert/perm.hpp"
#include "dualschubert/poly.hpp"
#include "dualschubert/polytope.hpp"
#include "dualschubert/tiling.hpp"

namespace dualschubert {

struct ScnpVerdict {
    bool holds = false;
    std::optional<SaturatedChain> witness;
    std::size_t chains_examined = 0;
};

/// Support of a single chain's weight: Minkowski sum of its segment point sets.
inline LatticePointSet chain_support(const SaturatedChain& c) {
    const int nvars = c.nodes.front().rank() - 1;
    LatticePointSet acc{ExponentVector(nvars, 0)};
    for (auto l : c.labels) acc = minkowski_sum(acc, segment_points(l, nvars));
    return acc;
}

/// Searches [u, w] for a chain whose weight has the full support `target`.
/// The greedy chain is tried first. After that, covers growing the accumulated
/// support most are tried first, states (node, accumulated support) are
/// expanded at most once, and a state is dropped when acc + supp(x -> w)
/// no longer covers the target.
inline ScnpVerdict scnp_search(const Permutation& u, const Permutation& w, const LatticePointSet& target) {
    ScnpVerdict verdict;
    const int nvars = u.rank() - 1;
    const int top_len = w.length();

    auto greedy = greedy_chain(u, w);
    ++verdict.chains_examined;
    if (chain_support(greedy) == target) {
        verdict.holds = true;
        verdict.witness = std::move(greedy);
        return verdict;
    }

    // Union of chain supports over all chains from x up to w.
    std::map<Permutation, LatticePointSet> reach;
    std::function<const LatticePointSet&(const Permutation&)> reachable = [&](const Permutation& x) -> const LatticePointSet& {
        if (auto it = reach.find(x); it != reach.end()) return it->second;
        LatticePointSet acc;
        if (x.length() == top_len) {
            acc.insert(ExponentVector(nvars, 0));
        } else {
            for (const auto& cov : up_covers(x)) {
                if (!bruhat_leq(cov.perm, w)) continue;
                auto part = minkowski_sum(segment_points(cov.label, nvars), reachable(cov.perm));
                acc.insert(part.begin(), part.end());
            }
        }
        return reach.emplace(x, std::move(acc)).first->second;
    };
    auto can_reach_target = [&](const Permutation& x, const LatticePointSet& acc) {
        const auto bound = minkowski_sum(acc, reachable(x));
        return std::includes(bound.begin(), bound.end(), target.begin(), target.end());
    };

    std::set<std::pair<Permutation, LatticePointSet>> visited;
    std::vector<Permutation> nodes{u};
    std::vector<InversionPair> labels;
    std::function<bool(const LatticePointSet&)> dfs = [&](const LatticePointSet& acc) -> bool {
        const auto& x = nodes.back();
        if (x.length() == top_len) {
            ++verdict.chains_examined;
            return acc == target;
        }
        if (!visited.emplace(x, acc).second) return false;
        struct Step {
            Cover cover;
            LatticePointSet acc;
        };
        std::vector<Step> steps;
        for (auto& cov : up_covers(x)) {
            if (!bruhat_leq(cov.perm, w)) continue;
            auto next = minkowski_sum(acc, segment_points(cov.label, nvars));
            if (!can_reach_target(cov.perm, next)) continue;
            steps.push_back({cov, std::move(next)});
        }
        std::stable_sort(steps.begin(), steps.end(),
                         [](const Step& p, const Step& q) { return p.acc.size() > q.acc.size(); });
        for (auto& s : steps) {
            nodes.push_back(s.cover.perm);
            labels.push_back(s.cover.label);
            if (dfs(s.acc)) return true;
            nodes.pop_back();
            labels.pop_back();
        }
        return false;
    };
    if (dfs(LatticePointSet{ExponentVector(nvars, 0)})) {
        verdict.holds = true;
        verdict.witness = SaturatedChain{nodes, labels};
    }
    return verdict;
}

/// SCNP for D_u^w; the witness, when present, is a dominant chain.
inline ScnpVerdict is_scnp(const Permutation& u, const Permutation& w) {
    if (!bruhat_leq(u, w)) throw std::invalid_argument("is_scnp: u is not below w in Bruhat order");
    return scnp_search(u, w, support(postnikov_stanley_dp(u, w)));
}

struct Counterexample {
    Permutation u;
    Permutation w;
    std::string reason;

    auto operator<=>(const Counterexample&) const = default;
};

enum class VerifyMode { PsMConvex, ScnpPattern, PaperTheorems };

inline std::string to_string(VerifyMode m) {
    switch (m) {
        case VerifyMode::PsMConvex: return "ps-mconvex";
        case VerifyMode::ScnpPattern: return "scnp-pattern";
        case VerifyMode::PaperTheorems: return "paper-theorems";
    }
    return "?";
}

inline VerifyMode parse_verify_mode(const std::string& s) {
    if (s == "ps-mconvex") return VerifyMode::PsMConvex;
    if (s == "scnp-pattern") return VerifyMode::ScnpPattern;
    if (s == "paper-theorems") return VerifyMode::PaperTheorems;
    throw std::invalid_argument("unknown verify mode: " + s);
}

/// Result of a sweep over S_n. Work is split into units indexed by the
/// permutations of S_n in lexicographic order; `next_unit` is where a
/// resumed run picks up.
struct ConjectureReport {
    VerifyMode mode = VerifyMode::PsMConvex;
    int n = 0;
    std::size_t checked_pairs = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::pair<Permutation, Permutation>> non_scnp_pairs;
    std::chrono::duration<double> elapsed{0};
    std::size_t next_unit = 0;
    std::size_t total_units = 0;

    bool complete() const { return next_unit >= total_units; }
};

struct SweepOptions {
    unsigned jobs = 1;
    /// Zero means no budget.
    double max_seconds = 0;
    /// Called under the sweep lock after each finished unit.
    std::function<void(std::size_t done, std::size_t total)> progress;
};

namespace detail {

struct UnitResult {
    std::size_t checked_pairs = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::pair<Permutation, Permutation>> non_scnp_pairs;
};

// Unit i of the M-convexity sweep: every D_u^v with u the i-th permutation.
inline UnitResult ps_mconvex_unit(const Permutation& u) {
    UnitResult r;
    const auto table = postnikov_stanley_table(u, Permutation::longest(u.rank()));
    for (const auto& [v, poly] : table) {
        ++r.checked_pairs;
        auto res = check_m_convex(support(poly));
        if (!res.holds) r.counterexamples.push_back({u, v, res.reason});
    }
    return r;
}

// Unit i of the pattern sweep: SCNP of D_u^v for all v >= u.
inline UnitResult scnp_unit(const Permutation& u) {
    UnitResult r;
    const auto table = postnikov_stanley_table(u, Permutation::longest(u.rank()));
    for (const auto& [v, poly] : table) {
        ++r.checked_pairs;
        if (!scnp_search(u, v, support(poly)).holds) r.non_scnp_pairs.emplace_back(u, v);
    }
    return r;
}

// Unit i of the theorem sweep: the statements about D^w for w the i-th permutation.
inline UnitResult theorems_unit(const Permutation& w) {
    UnitResult r;
    r.checked_pairs = 1;
    const auto id = identity(w.rank());
    auto fail = [&](std::string why) { r.counterexamples.push_back({id, w, std::move(why)}); };
    const auto dw = dual_schubert(w);
    const auto gw = global_weight(w);
    const auto supp = support(dw);
    if (supp != support(gw)) fail("supp(D^w) != supp(GW(w))");
    const auto greedy = greedy_chain(id, w);
    if (chain_weight(greedy) != gw) fail("greedy chain weight != GW(w)");
    if (chain_support(greedy) != supp) fail("greedy chain is not a dominant chain");
    if (supp != minkowski_support(w)) fail("supp(D^w) != Minkowski sum of segments");
    if (gp_integer_points(gp_from_inversions(w)) != supp) fail("integer points of z_I polytope != supp(D^w)");
    if (!is_m_convex(supp)) fail("supp(D^w) is not M-convex");
    if (!is_snp(dw)) fail("D^w does not have SNP");
    const auto coeff1 = newton_vertices_coeff1(w);
    if (vertices_via_tilings(w) != coeff1) fail("tiling vertices != coefficient-1 exponents of GW(w)");
    if (hull_vertices(support(gw)) != coeff1) fail("hull vertices != coefficient-1 exponents of GW(w)");
    return r;
}

}  // namespace detail

/// Runs units [report.next_unit, total) of the given mode, appending to
/// `report`. Stops early when the time budget is exhausted; the report then
/// holds the first unfinished unit in next_unit.
inline void run_sweep(ConjectureReport& report, const SweepOptions& opts = {}) {
    if (report.n < 2) throw std::invalid_argument("verify: rank must be at least 2");
    const auto start = std::chrono::steady_clock::now();
    const auto perms = all_permutations(report.n);
    report.total_units = perms.size();

    std::function<detail::UnitResult(const Permutation&)> unit;
    switch (report.mode) {
        case VerifyMode::PsMConvex: unit = detail::ps_mconvex_unit; break;
        case VerifyMode::ScnpPattern: unit = detail::scnp_unit; break;
        case VerifyMode::PaperTheorems: unit = detail::theorems_unit; break;
    }

    const std::size_t first = report.next_unit;
    const std::size_t count = perms.size() > first ? perms.size() - first : 0;
    std::vector<std::optional<detail::UnitResult>> results(count);
    std::atomic<std::size_t> cursor{0};
    std::mutex mu;
    std::size_t finished = 0;

    auto over_budget = [&] {
        if (opts.max_seconds <= 0) return false;
        std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
        return spent.count() > opts.max_seconds;
    };
    auto worker = [&] {
        for (;;) {
            if (over_budget()) return;
            const std::size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            auto res = unit(perms[first + i]);
            std::lock_guard lock(mu);
            results[i] = std::move(res);
            ++finished;
            if (opts.progress) opts.progress(first + finished, perms.size());
        }
    };
    const unsigned jobs = std::max(1U, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Merge the finished prefix in unit order so reports are deterministic.
    std::size_t done = 0;
    for (; done < count && results[done]; ++done) {
        auto& r = *results[done];
        report.checked_pairs += r.checked_pairs;
        for (auto& c : r.counterexamples) report.counterexamples.push_back(std::move(c));
        for (auto& p : r.non_scnp_pairs) report.non_scnp_pairs.push_back(std::move(p));
    }
    report.next_unit = first + done;
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    std::sort(report.non_scnp_pairs.begin(), report.non_scnp_pairs.end());
    report.elapsed += std::chrono::steady_clock::now() - start;

    if (report.mode == VerifyMode::ScnpPattern && report.complete() && count > 0) {
        // Compare both sides of the pattern statement once every pair is known.
        std::set<Permutation> failing_u, failing_w;
        std::map<Permutation, Permutation> first_w_for_u, first_u_for_w;
        for (const auto& [u, w] : report.non_scnp_pairs) {
            failing_u.insert(u);
            failing_w.insert(w);
            first_w_for_u.emplace(u, w);
            first_u_for_w.emplace(w, u);
        }
        const auto p1324 = Permutation({1, 3, 2, 4});
        const auto p4231 = Permutation({4, 2, 3, 1});
        const bool long_enough = report.n >= 4;
        const auto id = identity(report.n);
        const auto top = Permutation::longest(report.n);
        for (const auto& x : perms) {
            const bool u_fails = failing_u.count(x) > 0;
            const bool u_has = long_enough && contains_pattern(x, p1324);
            if (u_fails && !u_has)
                report.counterexamples.push_back({x, first_w_for_u.at(x), "u avoids 1324 but D_u^w lacks SCNP"});
            if (!u_fails && u_has)
                report.counterexamples.push_back({x, top, "u contains 1324 but every D_u^w has SCNP"});
            const bool w_fails = failing_w.count(x) > 0;
            const bool w_has = long_enough && contains_pattern(x, p4231);
            if (w_fails && !w_has)
                report.counterexamples.push_back({first_u_for_w.at(x), x, "w avoids 4231 but D_u^w lacks SCNP"});
            if (!w_fails && w_has)
                report.counterexamples.push_back({id, x, "w contains 4231 but every D_u^w has SCNP"});
        }
        std::sort(report.counterexamples.begin(), report.counterexamples.end());
    }
}

inline ConjectureReport verify(VerifyMode mode, int n, const SweepOptions& opts = {}) {
    ConjectureReport report;
    report.mode = mode;
    report.n = n;
    run_sweep(report, opts);
    return report;
}

/// Every comparable pair u <= w in S_n: is supp(D_u^w) M-convex?
inline ConjectureReport verify_ps_mconvex(int n, const SweepOptions& opts = {}) {
    return verify(VerifyMode::PsMConvex, n, opts);
}

/// Non-SCNP pairs versus 1324 containment of u and 4231 containment of w.
inline ConjectureReport verify_scnp_pattern(int n, const SweepOptions& opts = {}) {
    return verify(VerifyMode::ScnpPattern, n, opts);
}

}  // namespace dualschubert
