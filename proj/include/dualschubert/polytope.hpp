#pragma once

// Newton polytopes of supports: Minkowski sums of segment point sets,
// generalized permutahedra given by z_I data, SNP and M-convexity checks,
// exact hull membership and vertex extraction.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualschubert/lp.hpp"
#include "dualschubert/perm.hpp"
#include "dualschubert/poly.hpp"

namespace dualschubert {

using LatticePointSet = ExponentSet;

/// Minkowski sum of two point sets of equal width.
inline LatticePointSet minkowski_sum(const LatticePointSet& x, const LatticePointSet& y) {
    LatticePointSet out;
    for (const auto& p : x) {
        for (const auto& q : y) {
            if (p.size() != q.size()) throw std::invalid_argument("minkowski_sum: width mismatch");
            ExponentVector r(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i] + q[i];
            out.insert(std::move(r));
        }
    }
    return out;
}

/// {e_a, ..., e_{b-1}} in nvars coordinates.
inline LatticePointSet segment_points(InversionPair s, int nvars) {
    LatticePointSet out;
    for (int i = s.a; i < s.b; ++i) {
        ExponentVector e(nvars, 0);
        e.at(i - 1) = 1;
        out.insert(std::move(e));
    }
    return out;
}

/// Sum over Inv(w) of the basis-vector sets {e_a, ..., e_{b-1}}.
inline LatticePointSet minkowski_support(const Permutation& w) {
    const int nvars = w.rank() - 1;
    LatticePointSet acc{ExponentVector(nvars, 0)};
    for (auto inv : inversions(w)) acc = minkowski_sum(acc, segment_points(inv, nvars));
    return acc;
}

/// Rank in the rank-one matroid on [n] with bases {a}, ..., {b-1}.
inline int segment_rank(InversionPair s, const std::set<int>& subset) {
    for (int i = s.a; i < s.b; ++i)
        if (subset.count(i)) return 1;
    return 0;
}

/// {t : sum_{i in I} t_i >= z_I for proper I, sum_i t_i = z_[k]} in R^k,
/// with subsets I of [k] encoded as bitmasks (bit i-1 for element i).
class GeneralizedPermutahedron {
public:
    explicit GeneralizedPermutahedron(int nvars) : nvars_(nvars) {
        if (nvars < 0 || nvars > 20) throw std::invalid_argument("generalized permutahedron: unsupported dimension");
        z_.assign(std::size_t{1} << nvars, 0);
    }

    int nvars() const { return nvars_; }
    std::uint32_t full_mask() const { return (std::uint32_t{1} << nvars_) - 1; }

    long long z(std::uint32_t mask) const { return z_.at(mask); }
    void set_z(std::uint32_t mask, long long value) {
        if (mask == 0 && value != 0) throw std::invalid_argument("generalized permutahedron: z of the empty set must be 0");
        z_.at(mask) = value;
    }
    const std::vector<long long>& z_values() const { return z_; }

    bool operator==(const GeneralizedPermutahedron&) const = default;

private:
    int nvars_;
    std::vector<long long> z_;
};

inline std::uint32_t segment_mask(InversionPair s) {
    std::uint32_t m = 0;
    for (int i = s.a; i < s.b; ++i) m |= std::uint32_t{1} << (i - 1);
    return m;
}

/// z_I = #{(a,b) in Inv(w) : I contains [a, b)}.
inline GeneralizedPermutahedron gp_from_pairs(const std::vector<InversionPair>& pairs, int nvars) {
    GeneralizedPermutahedron gp(nvars);
    std::vector<std::uint32_t> masks;
    for (auto p : pairs) masks.push_back(segment_mask(p));
    for (std::uint32_t mask = 1; mask <= gp.full_mask(); ++mask) {
        long long count = 0;
        for (auto m : masks)
            if ((mask & m) == m) ++count;
        gp.set_z(mask, count);
    }
    return gp;
}

inline GeneralizedPermutahedron gp_from_inversions(const Permutation& w) {
    return gp_from_pairs(inversions(w), w.rank() - 1);
}

/// Minkowski sum of generalized permutahedra: z data adds.
inline GeneralizedPermutahedron gp_minkowski_sum(const GeneralizedPermutahedron& p, const GeneralizedPermutahedron& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("gp_minkowski_sum: dimension mismatch");
    GeneralizedPermutahedron out(p.nvars());
    for (std::uint32_t mask = 1; mask <= p.full_mask(); ++mask) out.set_z(mask, p.z(mask) + q.z(mask));
    return out;
}

inline bool gp_contains(const GeneralizedPermutahedron& p, const ExponentVector& t) {
    if (static_cast<int>(t.size()) != p.nvars()) throw std::invalid_argument("gp_contains: dimension mismatch");
    const std::uint32_t full = p.full_mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        long long s = 0;
        for (int i = 0; i < p.nvars(); ++i)
            if (mask >> i & 1U) s += t[i];
        if (mask == full ? s != p.z(mask) : s < p.z(mask)) return false;
    }
    return true;
}

namespace detail {

// Calls fn on every nonnegative integer vector of width k and coordinate sum
// total whose entries lie within [lo_i, hi_i].
inline void for_each_composition(int k, long long total, const std::vector<long long>& lo,
                                 const std::vector<long long>& hi,
                                 const std::function<void(const ExponentVector&)>& fn) {
    ExponentVector cur(k, 0);
    std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == k) {
            if (left == 0) fn(cur);
            return;
        }
        if (i == k - 1) {
            if (left >= lo[i] && left <= hi[i]) {
                cur[i] = static_cast<int>(left);
                fn(cur);
            }
            return;
        }
        for (long long v = lo[i]; v <= std::min(hi[i], left); ++v) {
            cur[i] = static_cast<int>(v);
            rec(i + 1, left - v);
        }
    };
    rec(0, total);
}

}  // namespace detail

/// Integer points of the permutahedron: stars-and-bars over vectors with
/// coordinate sum z_[k], filtered by gp_contains. Coordinates are bounded
/// below by z_{i} and above by z_[k] - z_{[k] minus i}.
inline LatticePointSet gp_integer_points(const GeneralizedPermutahedron& p) {
    const int k = p.nvars();
    LatticePointSet out;
    if (k == 0) {
        out.insert(ExponentVector{});
        return out;
    }
    const long long total = p.z(p.full_mask());
    if (total < 0) return out;
    std::vector<long long> lo(k), hi(k);
    for (int i = 0; i < k; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        lo[i] = std::max(0LL, p.z(bit));
        hi[i] = k == 1 ? total : total - p.z(p.full_mask() & ~bit);
    }
    detail::for_each_composition(k, total, lo, hi, [&](const ExponentVector& t) {
        if (gp_contains(p, t)) out.insert(t);
    });
    return out;
}

/// Exact test for t in conv(points): a convex combination exists.
inline bool hull_contains(const LatticePointSet& points, const ExponentVector& t) {
    if (points.empty()) throw std::invalid_argument("hull_contains: empty point set");
    const std::size_t d = points.begin()->size();
    if (t.size() != d) throw std::invalid_argument("hull_contains: dimension mismatch");
    if (points.count(t)) return true;
    lp::Matrix a(d + 1, std::vector<lp::Rational>(points.size(), 0));
    std::size_t j = 0;
    for (const auto& p : points) {
        if (p.size() != d) throw std::invalid_argument("hull_contains: mixed dimensions");
        for (std::size_t i = 0; i < d; ++i) a[i][j] = p[i];
        a[d][j] = 1;
        ++j;
    }
    std::vector<lp::Rational> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) b[i] = t[i];
    b[d] = 1;
    return lp::feasible(a, b);
}

/// Points of S that are not convex combinations of the others.
inline LatticePointSet hull_vertices(const LatticePointSet& points) {
    if (points.empty()) throw std::invalid_argument("hull_vertices: empty point set");
    LatticePointSet out;
    for (const auto& p : points) {
        LatticePointSet rest = points;
        rest.erase(p);
        if (rest.empty() || !hull_contains(rest, p)) out.insert(p);
    }
    return out;
}

/// Every integer point of conv(points). Homogeneous inputs only scan the
/// degree hyperplane inside the bounding box.
inline LatticePointSet hull_integer_points(const LatticePointSet& points) {
    if (points.empty()) throw std::invalid_argument("hull_integer_points: empty point set");
    const int k = static_cast<int>(points.begin()->size());
    std::vector<long long> lo(k, 0), hi(k, 0);
    for (int i = 0; i < k; ++i) {
        lo[i] = hi[i] = points.begin()->at(i);
        for (const auto& p : points) {
            lo[i] = std::min<long long>(lo[i], p.at(i));
            hi[i] = std::max<long long>(hi[i], p.at(i));
        }
    }
    long long dmin = degree(*points.begin()), dmax = dmin;
    for (const auto& p : points) {
        dmin = std::min<long long>(dmin, degree(p));
        dmax = std::max<long long>(dmax, degree(p));
    }
    LatticePointSet out;
    if (k == 0) {
        out.insert(ExponentVector{});
        return out;
    }
    // Shift to a nonnegative box so compositions enumerate it; shift back after.
    std::vector<long long> zero(k, 0), span(k);
    long long shift = 0;
    for (int i = 0; i < k; ++i) {
        span[i] = hi[i] - lo[i];
        shift += lo[i];
    }
    for (long long d = dmin; d <= dmax; ++d) {
        detail::for_each_composition(k, d - shift, zero, span, [&](const ExponentVector& s) {
            ExponentVector t(k);
            for (int i = 0; i < k; ++i) t[i] = static_cast<int>(s[i] + lo[i]);
            if (hull_contains(points, t)) out.insert(std::move(t));
        });
    }
    return out;
}

/// Saturated Newton polytope: every integer point of the hull of the support is in the support.
inline bool is_snp(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("is_snp: zero polynomial has an empty Newton polytope");
    const auto supp = support(f);
    return hull_integer_points(supp) == supp;
}

struct MConvexResult {
    bool holds = false;
    std::string reason;
};

/// Symmetric exchange axiom, with the first failing witness described in reason.
inline MConvexResult check_m_convex(const LatticePointSet& j) {
    if (j.empty()) throw std::invalid_argument("is_m_convex: empty point set");
    const std::size_t k = j.begin()->size();
    const int d = degree(*j.begin());
    for (const auto& p : j) {
        if (p.size() != k) throw std::invalid_argument("is_m_convex: mixed dimensions");
        if (degree(p) != d) return {false, "inhomogeneous: points have different coordinate sums"};
    }
    for (const auto& alpha : j) {
        for (const auto& beta : j) {
            for (std::size_t i = 0; i < k; ++i) {
                if (alpha[i] <= beta[i]) continue;
                bool found = false;
                for (std::size_t jj = 0; jj < k && !found; ++jj) {
                    if (alpha[jj] >= beta[jj]) continue;
                    ExponentVector x = alpha, y = beta;
                    --x[i];
                    ++x[jj];
                    --y[jj];
                    ++y[i];
                    found = j.count(x) && j.count(y);
                }
                if (!found) {
                    return {false, "exchange fails for alpha=" + to_string(alpha) + " beta=" + to_string(beta) +
                                       " i=" + std::to_string(i + 1)};
                }
            }
        }
    }
    return {true, {}};
}

inline bool is_m_convex(const LatticePointSet& j) { return check_m_convex(j).holds; }

/// Exponents with coefficient 1 in GW(w).
inline LatticePointSet newton_vertices_coeff1(const Permutation& w) {
    return coeff_one_exponents(global_weight(w));
}

inline std::string subset_key(std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (!(mask >> i & 1U)) continue;
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

/// One line per inequality, e.g. "x1 + x3 >= 2", and the final equality.
inline std::string render_inequalities(const GeneralizedPermutahedron& p) {
    std::string out;
    for (std::uint32_t mask = 1; mask <= p.full_mask(); ++mask) {
        std::string lhs;
        for (int i = 0; i < p.nvars(); ++i) {
            if (!(mask >> i & 1U)) continue;
            if (!lhs.empty()) lhs += " + ";
            lhs += "x" + std::to_string(i + 1);
        }
        out += lhs + (mask == p.full_mask() ? " = " : " >= ") + std::to_string(p.z(mask)) + "\n";
    }
    return out;
}

}  // namespace dualschubert
