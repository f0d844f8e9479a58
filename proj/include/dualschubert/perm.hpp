#pragma once

// Permutations of [n] in one-line notation, inversions, transposition action,
// Bruhat covers and comparison, and classical pattern containment.
//
// Positions and values are 1-based at the interface. The word is stored
// 0-based internally.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dualschubert {

/// Raised when a computation detects a broken internal invariant.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Inversion pair / transposition label (a, b) with 1 <= a < b.
struct InversionPair {
    int a = 0;
    int b = 0;

    constexpr auto operator<=>(const InversionPair&) const = default;
};

class Permutation {
public:
    Permutation() = default;

    /// Builds from a 1-based one-line word; throws if it is not a bijection on [n].
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        if (word_.empty()) {
            throw std::invalid_argument("permutation: rank must be at least 1");
        }
        std::vector<char> seen(word_.size(), 0);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1]) {
                throw std::invalid_argument("permutation: word is not a bijection on [n]");
            }
            seen[v - 1] = 1;
        }
    }

    static Permutation identity(int n) {
        if (n < 1) {
            throw std::invalid_argument("permutation: rank must be at least 1");
        }
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    /// Longest element n(n-1)...1.
    static Permutation longest(int n) {
        auto w = identity(n).word_;
        std::reverse(w.begin(), w.end());
        return Permutation(std::move(w));
    }

    int rank() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }

    /// w(i) for 1-based position i.
    int operator()(int i) const { return word_.at(i - 1); }

    int length() const {
        int count = 0;
        for (std::size_t i = 0; i < word_.size(); ++i)
            for (std::size_t j = i + 1; j < word_.size(); ++j)
                if (word_[i] > word_[j]) ++count;
        return count;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < word_.size(); ++i)
            if (word_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

inline Permutation identity(int n) { return Permutation::identity(n); }

inline int length(const Permutation& w) { return w.length(); }

/// All pairs (a, b), a < b, with w(a) > w(b), in lexicographic order.
inline std::vector<InversionPair> inversions(const Permutation& w) {
    std::vector<InversionPair> out;
    const int n = w.rank();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (w(a) > w(b)) out.push_back({a, b});
    return out;
}

/// w * t_ab: swaps the entries in positions a and b.
inline Permutation apply_t(const Permutation& w, int a, int b) {
    if (a < 1 || b > w.rank() || a >= b) {
        throw std::invalid_argument("apply_t: need 1 <= a < b <= n");
    }
    auto word = w.word();
    std::swap(word[a - 1], word[b - 1]);
    return Permutation(std::move(word));
}

inline Permutation apply_t(const Permutation& w, InversionPair t) { return apply_t(w, t.a, t.b); }

struct Cover {
    Permutation perm;
    InversionPair label;

    auto operator<=>(const Cover&) const = default;
};

namespace detail {

// w * t_ab is a cover of w (up) iff w(a) < w(b) and no position strictly
// between a and b carries a value strictly between w(a) and w(b).
inline bool is_up_cover_step(const Permutation& w, int a, int b) {
    const int lo = w(a);
    const int hi = w(b);
    if (lo > hi) return false;
    for (int k = a + 1; k < b; ++k)
        if (w(k) > lo && w(k) < hi) return false;
    return true;
}

inline bool is_down_cover_step(const Permutation& w, int a, int b) {
    const int hi = w(a);
    const int lo = w(b);
    if (hi < lo) return false;
    for (int k = a + 1; k < b; ++k)
        if (w(k) > lo && w(k) < hi) return false;
    return true;
}

}  // namespace detail

/// Covers v = w t_ab with length(v) = length(w) + 1, labels in lexicographic order.
inline std::vector<Cover> up_covers(const Permutation& w) {
    std::vector<Cover> out;
    for (int a = 1; a <= w.rank(); ++a)
        for (int b = a + 1; b <= w.rank(); ++b)
            if (detail::is_up_cover_step(w, a, b)) out.push_back({apply_t(w, a, b), {a, b}});
    return out;
}

/// Cocovers v = w t_ab with length(v) = length(w) - 1, labels in lexicographic order.
inline std::vector<Cover> down_covers(const Permutation& w) {
    std::vector<Cover> out;
    for (int a = 1; a <= w.rank(); ++a)
        for (int b = a + 1; b <= w.rank(); ++b)
            if (detail::is_down_cover_step(w, a, b)) out.push_back({apply_t(w, a, b), {a, b}});
    return out;
}

/// u <= w in strong Bruhat order, by the prefix criterion: for every k the
/// sorted values u(1..k) are entrywise <= the sorted values w(1..k).
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.rank() != w.rank()) {
        throw std::invalid_argument("bruhat_leq: rank mismatch");
    }
    const int n = u.rank();
    // Equivalent counting form: for all k and all thresholds v,
    // #{i <= k : u(i) >= v} <= #{i <= k : w(i) >= v}.
    std::vector<int> cu(n + 2, 0), cw(n + 2, 0);
    for (int k = 1; k <= n; ++k) {
        for (int v = 1; v <= u(k); ++v) ++cu[v];
        for (int v = 1; v <= w(k); ++v) ++cw[v];
        for (int v = 1; v <= n; ++v)
            if (cu[v] > cw[v]) return false;
    }
    return true;
}

/// True iff some subsequence of w is order-isomorphic to p.
inline bool contains_pattern(const Permutation& w, const Permutation& p) {
    const int n = w.rank();
    const int k = p.rank();
    if (k > n) {
        throw std::invalid_argument("contains_pattern: pattern longer than permutation");
    }
    std::vector<int> chosen;
    chosen.reserve(k);
    // Extend position by position; a partial choice is kept only while it is
    // order-isomorphic to the corresponding prefix of p.
    std::function<bool(int)> extend = [&](int start) -> bool {
        const int m = static_cast<int>(chosen.size());
        if (m == k) return true;
        for (int pos = start; pos <= n - (k - m) + 1; ++pos) {
            const int val = w(pos);
            bool ok = true;
            for (int j = 0; j < m && ok; ++j)
                ok = (w(chosen[j]) < val) == (p(j + 1) < p(m + 1));
            if (!ok) continue;
            chosen.push_back(pos);
            if (extend(pos + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return extend(1);
}

/// All permutations of [n] in lexicographic order of their words.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    auto word = identity(n).word();
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

/// Accepts "4213" (single digits, n <= 9) or "[4,2,1,3]" / "4,2,1,3".
inline Permutation parse_permutation(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("permutation: unbalanced bracket");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<int> word;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            auto tok = trim(text.substr(pos, next - pos));
            if (tok.empty()) throw std::invalid_argument("permutation: empty entry");
            int v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw std::invalid_argument("permutation: non-digit entry");
                v = v * 10 + (c - '0');
                if (v > 1000000) throw std::invalid_argument("permutation: entry too large");
            }
            word.push_back(v);
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("permutation: expected digits 1-9");
            word.push_back(c - '0');
        }
    }
    return Permutation(std::move(word));
}

/// Compact form for n <= 9, comma form "[..]" otherwise.
inline std::string to_string(const Permutation& w) {
    std::string out;
    if (w.rank() <= 9) {
        for (int v : w.word()) out.push_back(static_cast<char>('0' + v));
        return out;
    }
    out = "[";
    for (std::size_t i = 0; i < w.word().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.word()[i]);
    }
    out += ']';
    return out;
}

inline std::string to_comma_string(const Permutation& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.word().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.word()[i]);
    }
    return out + ']';
}

inline std::string to_string(InversionPair p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

struct PermutationHash {
    std::size_t operator()(const Permutation& w) const noexcept {
        std::size_t h = 0;
        for (int v : w.word()) h = h * 31 + static_cast<std::size_t>(v);
        return h;
    }
};

}  // namespace dualschubert
