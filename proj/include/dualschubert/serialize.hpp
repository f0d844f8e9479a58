#pragma once

// JSON encodings of the library's values.
//
//   polynomial  {"nvars": k, "terms": [{"exp": [..], "num": "1", "den": "2"}, ...]}
//               terms in graded reverse-lexicographic order
//   gp          {"nvars": k, "z": {"{1,3}": 2, ...}}  (every nonempty subset)
//   chain       {"nodes": ["123", "213", ...], "labels": [[1,2], ...]}
//   tilings     {"w": "4213", "tilings": [{"rects": [[top,left,bottom,right], ...], "vertex": [..]}, ...]}
//   report      sweep results; doubles as the resume checkpoint

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualschubert/bruhat.hpp"
#include "dualschubert/perm.hpp"
#include "dualschubert/poly.hpp"
#include "dualschubert/polytope.hpp"
#include "dualschubert/scnp.hpp"
#include "dualschubert/tiling.hpp"

namespace dualschubert {

using Json = nlohmann::ordered_json;

inline Json polynomial_to_json(const Polynomial& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.ordered_terms()) {
        terms.push_back({{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    return {{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

inline Polynomial polynomial_from_json(const Json& j) {
    Polynomial f(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        mpz_class num, den;
        if (num.set_str(t.at("num").get<std::string>(), 10) != 0 || den.set_str(t.at("den").get<std::string>(), 10) != 0)
            throw std::invalid_argument("polynomial json: coefficient is not a decimal integer");
        if (den == 0) throw std::invalid_argument("polynomial json: zero denominator");
        Rational c(num, den);
        c.canonicalize();
        f.add_term(t.at("exp").get<ExponentVector>(), c);
    }
    return f;
}

inline Json points_to_json(const LatticePointSet& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(p);
    return out;
}

inline Json gp_to_json(const GeneralizedPermutahedron& p) {
    Json z = Json::object();
    for (std::uint32_t mask = 1; mask <= p.full_mask(); ++mask) z[subset_key(mask)] = p.z(mask);
    return {{"nvars", p.nvars()}, {"z", std::move(z)}};
}

inline GeneralizedPermutahedron gp_from_json(const Json& j) {
    GeneralizedPermutahedron p(j.at("nvars").get<int>());
    for (const auto& [key, val] : j.at("z").items()) {
        if (key.size() < 2 || key.front() != '{' || key.back() != '}')
            throw std::invalid_argument("gp json: malformed subset key " + key);
        std::uint32_t mask = 0;
        std::string body = key.substr(1, key.size() - 2);
        std::size_t pos = 0;
        while (pos < body.size()) {
            auto next = body.find(',', pos);
            if (next == std::string::npos) next = body.size();
            const int i = std::stoi(body.substr(pos, next - pos));
            if (i < 1 || i > p.nvars()) throw std::invalid_argument("gp json: subset element out of range");
            mask |= std::uint32_t{1} << (i - 1);
            pos = next + 1;
        }
        p.set_z(mask, val.get<long long>());
    }
    return p;
}

inline Json chain_to_json(const SaturatedChain& c) {
    Json nodes = Json::array(), labels = Json::array();
    for (const auto& v : c.nodes) nodes.push_back(to_string(v));
    for (auto l : c.labels) labels.push_back({l.a, l.b});
    return {{"nodes", std::move(nodes)}, {"labels", std::move(labels)}};
}

inline SaturatedChain chain_from_json(const Json& j) {
    SaturatedChain c;
    for (const auto& s : j.at("nodes")) c.nodes.push_back(parse_permutation(s.get<std::string>()));
    for (const auto& l : j.at("labels")) c.labels.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
    validate_chain(c);
    return c;
}

inline Json tilings_to_json(const Permutation& w) {
    Json tilings = Json::array();
    if (w.rank() >= 2) {
        const auto d = build_diagram(w);
        for_each_tiling(w.rank(), [&](const RectTiling& t) {
            Json rects = Json::array();
            for (const auto& r : t.rects) rects.push_back({r.top, r.left, r.bottom, r.right});
            tilings.push_back({{"rects", std::move(rects)}, {"vertex", tiling_vertex(d, t)}});
        });
    }
    return {{"w", to_string(w)}, {"tilings", std::move(tilings)}};
}

inline Json report_to_json(const ConjectureReport& r) {
    Json ces = Json::array();
    for (const auto& c : r.counterexamples) ces.push_back({{"u", to_string(c.u)}, {"w", to_string(c.w)}, {"reason", c.reason}});
    Json non = Json::array();
    for (const auto& [u, w] : r.non_scnp_pairs) non.push_back({to_string(u), to_string(w)});
    return {{"mode", to_string(r.mode)},
            {"n", r.n},
            {"checked_pairs", r.checked_pairs},
            {"counterexamples", std::move(ces)},
            {"non_scnp_pairs", std::move(non)},
            {"elapsed_seconds", r.elapsed.count()},
            {"next_unit", r.next_unit},
            {"total_units", r.total_units},
            {"complete", r.complete()}};
}

inline ConjectureReport report_from_json(const Json& j) {
    ConjectureReport r;
    r.mode = parse_verify_mode(j.at("mode").get<std::string>());
    r.n = j.at("n").get<int>();
    r.checked_pairs = j.at("checked_pairs").get<std::size_t>();
    for (const auto& c : j.at("counterexamples"))
        r.counterexamples.push_back({parse_permutation(c.at("u").get<std::string>()),
                                     parse_permutation(c.at("w").get<std::string>()), c.at("reason").get<std::string>()});
    for (const auto& p : j.at("non_scnp_pairs"))
        r.non_scnp_pairs.emplace_back(parse_permutation(p.at(0).get<std::string>()),
                                      parse_permutation(p.at(1).get<std::string>()));
    r.elapsed = std::chrono::duration<double>(j.at("elapsed_seconds").get<double>());
    r.next_unit = j.at("next_unit").get<std::size_t>();
    r.total_units = j.at("total_units").get<std::size_t>();
    return r;
}

}  // namespace dualschubert
