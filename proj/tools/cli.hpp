#pragma once

// Command-line front end. `run` is kept separate from main() so the test
// suite can drive it with captured streams.
//
// Exit status: 0 success / property holds, 1 property violated or
// counterexample found, 2 usage error, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualschubert/dualschubert.hpp"

namespace dualschubert::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2, kInternal = 3 };

namespace detail {

struct PairArgs {
    std::vector<std::string> perms;
};

// One permutation means (id, w); two mean (u, w).
inline std::pair<Permutation, Permutation> interval_args(const std::vector<std::string>& args) {
    if (args.empty() || args.size() > 2) throw std::invalid_argument("expected one permutation w or two permutations u w");
    auto w = parse_permutation(args.back());
    auto u = args.size() == 2 ? parse_permutation(args.front()) : identity(w.rank());
    if (u.rank() != w.rank()) throw std::invalid_argument("u and w must have the same rank");
    if (!bruhat_leq(u, w)) throw std::invalid_argument(to_string(u) + " is not below " + to_string(w) + " in Bruhat order");
    return {u, w};
}

inline void print_points(std::ostream& out, const LatticePointSet& pts, bool json) {
    if (json) {
        out << points_to_json(pts).dump() << "\n";
        return;
    }
    for (const auto& p : pts) out << to_string(p) << "\n";
}

inline void print_interval(std::ostream& out, const Permutation& u, const Permutation& w) {
    const auto elems = interval_elements(u, w);
    int level = -1;
    std::string line;
    for (const auto& v : elems) {
        if (v.length() != level) {
            if (!line.empty()) out << line << "\n";
            level = v.length();
            line = "l=" + std::to_string(level) + ":";
        }
        line += " " + to_string(v);
    }
    if (!line.empty()) out << line << "\n";
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dual Schubert and Postnikov-Stanley polynomials, supports and Newton polytopes", "dsp"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    bool json = false;
    bool render = false;
    std::vector<std::string> perms;
    std::string method = "tilings";
    bool count_only = false;
    std::size_t limit = 0;
    int verify_n = 4;
    std::string verify_mode = "paper-theorems";
    unsigned jobs = 1;
    std::string resume_path, checkpoint_path;
    double max_seconds = 0;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Machine-readable JSON output"); };
    auto add_one = [&](CLI::App* sub) {
        sub->add_option("w", perms, "Permutation, e.g. 4213 or [4,2,1,3]")->required()->expected(1);
        add_json(sub);
    };
    auto add_pair = [&](CLI::App* sub, bool optional_u) {
        auto* opt = sub->add_option("perms", perms, optional_u ? "[u] w" : "u w")->required();
        if (optional_u) opt->expected(1, 2); else opt->expected(2);
        add_json(sub);
    };

    auto* c_dual = app.add_subcommand("dual-schubert", "Print D^w");
    add_one(c_dual);
    auto* c_ps = app.add_subcommand("ps", "Print D_u^w");
    add_pair(c_ps, false);
    c_ps->add_option("--method", method, "dp or chainsum")->check(CLI::IsMember({"dp", "chainsum"}))->default_val("dp");
    auto* c_support = app.add_subcommand("support", "Support of D_u^w (u defaults to the identity)");
    add_pair(c_support, true);
    auto* c_gw = app.add_subcommand("gw", "Print the global weight GW(w)");
    add_one(c_gw);
    auto* c_newton = app.add_subcommand("newton", "Inequality description of Newton(D^w)");
    add_one(c_newton);
    auto* c_vertices = app.add_subcommand("vertices", "Vertices of Newton(D^w)");
    add_one(c_vertices);
    c_vertices->add_option("--method", method, "tilings, coeff1 or hull")
        ->check(CLI::IsMember({"tilings", "coeff1", "hull"}))
        ->default_val("tilings");
    auto* c_tilings = app.add_subcommand("tilings", "Staircase tilings and their vertices for w");
    add_one(c_tilings);
    c_tilings->add_flag("--render", render, "ASCII diagrams");
    auto* c_greedy = app.add_subcommand("greedy", "A greedy chain in [u, w]");
    add_pair(c_greedy, true);
    auto* c_chains = app.add_subcommand("chains", "Saturated chains in [u, w]");
    add_pair(c_chains, true);
    c_chains->add_flag("--count", count_only, "Only print the number of chains");
    c_chains->add_option("--limit", limit, "Stop after this many chains (0: all)");
    c_chains->add_flag("--render", render, "Print the interval by rank level first");
    auto* c_snp = app.add_subcommand("check-snp", "Does D_u^w have SNP?");
    add_pair(c_snp, true);
    auto* c_mconvex = app.add_subcommand("check-mconvex", "Is supp(D_u^w) M-convex?");
    add_pair(c_mconvex, true);
    auto* c_scnp = app.add_subcommand("check-scnp", "Does D_u^w have SCNP?");
    add_pair(c_scnp, true);
    auto* c_verify = app.add_subcommand("verify", "Exhaustive sweep over S_n");
    c_verify->add_option("--n", verify_n, "Rank")->check(CLI::Range(2, 8));
    c_verify->add_option("--mode", verify_mode, "ps-mconvex, scnp-pattern or paper-theorems")
        ->check(CLI::IsMember({"ps-mconvex", "scnp-pattern", "paper-theorems"}));
    c_verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    c_verify->add_option("--resume", resume_path, "Continue from a checkpoint file");
    c_verify->add_option("--checkpoint", checkpoint_path, "Write the report here when stopping early or finishing");
    c_verify->add_option("--max-seconds", max_seconds, "Time budget; 0 for none");
    add_json(c_verify);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    if (!args.empty()) args.pop_back();  // program name
    // CLI11 reads "[a,b]" as a list; "[4,2,1,3]" is one permutation.
    for (auto& a : args)
        if (a.size() >= 2 && a.front() == '[' && a.back() == ']') a = a.substr(1, a.size() - 2);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (c_dual->parsed()) {
            auto w = parse_permutation(perms.at(0));
            auto f = dual_schubert(w);
            out << (json ? polynomial_to_json(f).dump() : to_string(f)) << "\n";
        } else if (c_ps->parsed()) {
            auto [u, w] = detail::interval_args(perms);
            auto f = method == "chainsum" ? postnikov_stanley_chainsum(u, w) : postnikov_stanley_dp(u, w);
            out << (json ? polynomial_to_json(f).dump() : to_string(f)) << "\n";
        } else if (c_support->parsed()) {
            auto [u, w] = detail::interval_args(perms);
            detail::print_points(out, support(postnikov_stanley_dp(u, w)), json);
        } else if (c_gw->parsed()) {
            auto f = global_weight(parse_permutation(perms.at(0)));
            out << (json ? polynomial_to_json(f).dump() : to_string(f)) << "\n";
        } else if (c_newton->parsed()) {
            auto gp = gp_from_inversions(parse_permutation(perms.at(0)));
            if (json) out << gp_to_json(gp).dump() << "\n";
            else out << render_inequalities(gp);
        } else if (c_vertices->parsed()) {
            auto w = parse_permutation(perms.at(0));
            LatticePointSet v;
            if (method == "tilings") v = vertices_via_tilings(w);
            else if (method == "coeff1") v = newton_vertices_coeff1(w);
            else v = hull_vertices(support(global_weight(w)));
            detail::print_points(out, v, json);
        } else if (c_tilings->parsed()) {
            auto w = parse_permutation(perms.at(0));
            if (w.rank() < 2) throw std::invalid_argument("tilings need rank at least 2");
            if (json) {
                out << tilings_to_json(w).dump() << "\n";
            } else {
                const auto d = build_diagram(w);
                if (render) out << render_diagram(d) << "\n";
                int idx = 0;
                for_each_tiling(w.rank(), [&](const RectTiling& t) {
                    out << "tiling " << ++idx << ": vertex " << to_string(tiling_vertex(d, t)) << "\n";
                    if (render) out << render_tiling(d, t) << "\n";
                });
            }
        } else if (c_greedy->parsed()) {
            auto [u, w] = detail::interval_args(perms);
            auto c = greedy_chain(u, w);
            if (!is_greedy(c, u, w)) throw InvariantError("constructed chain fails the greedy condition");
            out << (json ? chain_to_json(c).dump() : render_chain(c)) << "\n";
        } else if (c_chains->parsed()) {
            auto [u, w] = detail::interval_args(perms);
            if (render && !json) detail::print_interval(out, u, w);
            Json arr = Json::array();
            std::size_t seen = 0;
            for_each_chain(u, w, [&](const SaturatedChain& c) {
                ++seen;
                if (!count_only) {
                    if (json) arr.push_back(chain_to_json(c));
                    else out << render_chain(c) << "\n";
                }
                return limit == 0 || seen < limit;
            });
            if (count_only) out << (json ? Json(seen).dump() : std::to_string(seen)) << "\n";
            else if (json) out << arr.dump() << "\n";
        } else if (c_snp->parsed()) {
            auto [u, w] = detail::interval_args(perms);
            const bool holds = is_snp(postnikov_stanley_dp(u, w));
            out << (json ? Json{{"snp", holds}}.dump() : std::string("SNP: ") + (holds ? "true" : "false")) << "\n";
            return holds ? kOk : kViolated;
        } else if (c_mconvex->parsed()) {
            auto [u, w] = detail::interval_args(perms);
            auto res = check_m_convex(support(postnikov_stanley_dp(u, w)));
            if (json) {
                out << Json{{"m_convex", res.holds}, {"reason", res.reason}}.dump() << "\n";
            } else {
                out << "M-convex: " << (res.holds ? "true" : "false");
                if (!res.holds) out << " (" << res.reason << ")";
                out << "\n";
            }
            return res.holds ? kOk : kViolated;
        } else if (c_scnp->parsed()) {
            auto [u, w] = detail::interval_args(perms);
            auto v = is_scnp(u, w);
            if (v.holds && chain_support(*v.witness) != support(postnikov_stanley_dp(u, w)))
                throw InvariantError("SCNP witness does not carry the full support");
            if (json) {
                Json j{{"scnp", v.holds}, {"chains_examined", v.chains_examined}};
                j["witness"] = v.witness ? chain_to_json(*v.witness) : Json(nullptr);
                out << j.dump() << "\n";
            } else {
                out << "SCNP: " << (v.holds ? "true" : "false") << "\n";
                if (v.witness) out << "dominant chain: " << render_chain(*v.witness) << "\n";
            }
            return v.holds ? kOk : kViolated;
        } else if (c_verify->parsed()) {
            ConjectureReport report;
            if (!resume_path.empty()) {
                std::ifstream in(resume_path);
                if (!in) throw std::invalid_argument("cannot read checkpoint " + resume_path);
                report = report_from_json(Json::parse(in));
            } else {
                report.mode = parse_verify_mode(verify_mode);
                report.n = verify_n;
            }
            SweepOptions opts;
            opts.jobs = jobs;
            opts.max_seconds = max_seconds;
            opts.progress = [&](std::size_t done, std::size_t total) {
                err << "[" << to_string(report.mode) << " n=" << report.n << "] " << done << "/" << total << "\n";
            };
            run_sweep(report, opts);
            if (!checkpoint_path.empty()) {
                std::ofstream cp(checkpoint_path);
                cp << report_to_json(report).dump(2) << "\n";
            }
            if (json) {
                out << report_to_json(report).dump() << "\n";
            } else {
                out << "mode            " << to_string(report.mode) << "\n"
                    << "n               " << report.n << "\n"
                    << "checked pairs   " << report.checked_pairs << "\n"
                    << "units           " << report.next_unit << "/" << report.total_units
                    << (report.complete() ? "" : " (partial)") << "\n"
                    << "counterexamples " << report.counterexamples.size() << "\n";
                if (report.mode == VerifyMode::ScnpPattern) out << "non-SCNP pairs  " << report.non_scnp_pairs.size() << "\n";
                out << "elapsed         " << report.elapsed.count() << " s\n";
                for (const auto& c : report.counterexamples)
                    out << "  " << to_string(c.u) << " " << to_string(c.w) << ": " << c.reason << "\n";
            }
            return report.counterexamples.empty() ? kOk : kViolated;
        }
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}

}  // namespace dualschubert::cli
