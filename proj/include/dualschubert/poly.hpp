#pragma once

// Exact sparse multivariate polynomials over Q, and the chain-weight,
// global-weight and Postnikov-Stanley constructions built on them.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dualschubert/bruhat.hpp"
#include "dualschubert/perm.hpp"

namespace dualschubert {

using Rational = mpq_class;

/// Exponents of x_1..x_k.
using ExponentVector = std::vector<int>;

inline int degree(const ExponentVector& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

/// Graded reverse-lexicographic "greater than": higher total degree first;
/// within a degree, the vector whose last differing exponent is smaller comes first.
struct GrevlexGreater {
    bool operator()(const ExponentVector& x, const ExponentVector& y) const {
        const int dx = degree(x), dy = degree(y);
        if (dx != dy) return dx > dy;
        for (std::size_t i = x.size(); i-- > 0;)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    }
};

class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("polynomial: negative variable count");
    }

    static Polynomial constant(int nvars, const Rational& c) {
        Polynomial p(nvars);
        p.add_term(ExponentVector(nvars, 0), c);
        return p;
    }

    static Polynomial one(int nvars) { return constant(nvars, 1); }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const ExponentVector& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExponentVector& e, const Rational& c) {
        check_width(e);
        for (int v : e)
            if (v < 0) throw std::invalid_argument("polynomial: negative exponent");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial out(a.nvars_);
        ExponentVector e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// True iff every term has the same total degree (the zero polynomial counts).
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = degree(terms_.begin()->first);
        return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return degree(t.first) == d; });
    }

    /// Total degree of the highest term; -1 for zero.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, degree(e));
        return d;
    }

    /// Terms in graded reverse-lexicographic order, highest first.
    std::vector<std::pair<ExponentVector, Rational>> ordered_terms() const {
        std::vector<std::pair<ExponentVector, Rational>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return GrevlexGreater{}(x.first, y.first); });
        return out;
    }

private:
    void check_width(const ExponentVector& e) const {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("polynomial: exponent width mismatch");
    }
    void check_same(const Polynomial& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial: variable count mismatch");
    }

    int nvars_;
    TermMap terms_;
};

using ExponentSet = std::set<ExponentVector>;

inline ExponentSet support(const Polynomial& f) {
    ExponentSet out;
    for (const auto& [e, c] : f.terms()) out.insert(e);
    return out;
}

inline ExponentSet coeff_one_exponents(const Polynomial& f) {
    ExponentSet out;
    for (const auto& [e, c] : f.terms())
        if (c == 1) out.insert(e);
    return out;
}

/// x_a + x_{a+1} + ... + x_{b-1} in nvars variables.
inline Polynomial segment_poly(InversionPair s, int nvars) {
    if (s.a < 1 || s.a >= s.b || s.b > nvars + 1) throw std::invalid_argument("segment_poly: need 1 <= a < b <= nvars+1");
    Polynomial p(nvars);
    for (int i = s.a; i < s.b; ++i) {
        ExponentVector e(nvars, 0);
        e[i - 1] = 1;
        p.add_term(e, 1);
    }
    return p;
}

inline Polynomial segment_product(const std::vector<InversionPair>& segs, int nvars) {
    Polynomial p = Polynomial::one(nvars);
    for (auto s : segs) p *= segment_poly(s, nvars);
    return p;
}

/// Product of the cover weights along the chain.
inline Polynomial chain_weight(const SaturatedChain& c) {
    return segment_product(c.labels, c.nodes.front().rank() - 1);
}

/// GW(w): product of segment forms over Inv(w).
inline Polynomial global_weight(const Permutation& w) { return segment_product(inversions(w), w.rank() - 1); }

namespace detail {

inline Rational factorial(int k) {
    mpz_class f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

}  // namespace detail

/// D_u^w by literal chain enumeration, normalized by 1/(l(w)-l(u))!.
inline Polynomial postnikov_stanley_chainsum(const Permutation& u, const Permutation& w) {
    if (!bruhat_leq(u, w)) throw std::invalid_argument("postnikov_stanley: u is not below w in Bruhat order");
    const int nvars = u.rank() - 1;
    Polynomial sum(nvars);
    for_each_chain(u, w, [&](const SaturatedChain& c) {
        sum += chain_weight(c);
        return true;
    });
    sum *= Rational(1) / detail::factorial(w.length() - u.length());
    return sum;
}

using PolynomialTable = std::map<Permutation, Polynomial>;

/// D_u^v for every v in [u, w] via D_u^v = (1/k) sum_{x covered by v, x >= u} D_u^x m(x, v),
/// with k = l(v) - l(u).
inline PolynomialTable postnikov_stanley_table(const Permutation& u, const Permutation& w) {
    if (!bruhat_leq(u, w)) throw std::invalid_argument("postnikov_stanley: u is not below w in Bruhat order");
    const int nvars = u.rank() - 1;
    const int base = u.length();
    PolynomialTable table;
    for (const auto& v : interval_elements(u, w)) {
        if (v == u) {
            table.emplace(v, Polynomial::one(nvars));
            continue;
        }
        Polynomial acc(nvars);
        for (const auto& cov : down_covers(v)) {
            auto it = table.find(cov.perm);
            if (it == table.end()) continue;
            acc += it->second * segment_poly(cov.label, nvars);
        }
        acc *= Rational(1, v.length() - base);
        table.emplace(v, std::move(acc));
    }
    return table;
}

inline Polynomial postnikov_stanley_dp(const Permutation& u, const Permutation& w) {
    return postnikov_stanley_table(u, w).at(w);
}

/// D^w = D_id^w.
inline Polynomial dual_schubert(const Permutation& w) { return postnikov_stanley_dp(identity(w.rank()), w); }

/// Human-readable form: "1/2*x1^2*x2 + x1*x2^2". Zero prints as "0".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.ordered_terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

inline std::string to_string(const ExponentVector& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

}  // namespace dualschubert
