#pragma once

// Staircase diagrams labeled by inversion pairs, rectangle tilings anchored at
// the staircase corners, and the vertex read-off from tilings.
//
// Cells are addressed (row, col), both 1-based; row i of a rank-n staircase
// holds columns 1..n-i, and the cell (i, c) carries the pair (i, n-c+1).
// Corner k is the last cell (k, n-k) of row k.

#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualschubert/perm.hpp"
#include "dualschubert/poly.hpp"
#include "dualschubert/polytope.hpp"

namespace dualschubert {

class StaircaseDiagram {
public:
    explicit StaircaseDiagram(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("staircase: rank must be at least 2");
        fill_.resize(n - 1);
        for (int r = 1; r < n; ++r) fill_[r - 1].assign(n - r, 0);
    }

    int rank() const { return n_; }
    int rows() const { return n_ - 1; }
    int row_length(int row) const { return n_ - row; }

    InversionPair label(int row, int col) const {
        check(row, col);
        return {row, n_ - col + 1};
    }

    int fill(int row, int col) const {
        check(row, col);
        return fill_[row - 1][col - 1];
    }

    void set_fill(int row, int col, int v) {
        check(row, col);
        if (v != 0 && v != 1) throw std::invalid_argument("staircase: fill must be 0 or 1");
        fill_[row - 1][col - 1] = v;
    }

    const std::vector<std::vector<int>>& fills() const { return fill_; }

    bool operator==(const StaircaseDiagram&) const = default;

private:
    void check(int row, int col) const {
        if (row < 1 || row >= n_ || col < 1 || col > n_ - row) throw std::out_of_range("staircase: cell outside diagram");
    }

    int n_;
    std::vector<std::vector<int>> fill_;
};

/// 1 in the cell labeled (a, b) iff (a, b) is an inversion of w.
inline StaircaseDiagram build_diagram(const Permutation& w) {
    StaircaseDiagram d(w.rank());
    for (auto inv : inversions(w)) d.set_fill(inv.a, w.rank() - inv.b + 1, 1);
    return d;
}

/// Inclusive cell ranges.
struct Rect {
    int top = 0;
    int left = 0;
    int bottom = 0;
    int right = 0;

    bool contains(int row, int col) const { return row >= top && row <= bottom && col >= left && col <= right; }
    int area() const { return (bottom - top + 1) * (right - left + 1); }
    auto operator<=>(const Rect&) const = default;
};

/// rects[k-1] is the rectangle whose bottom-right cell is corner k.
struct RectTiling {
    int n = 0;
    std::vector<Rect> rects;

    auto operator<=>(const RectTiling&) const = default;
};

/// Throws InvariantError unless the tiling partitions the staircase with one
/// rectangle anchored at each corner.
inline void validate_tiling(const RectTiling& t) {
    const int n = t.n;
    if (n < 2 || static_cast<int>(t.rects.size()) != n - 1) throw InvariantError("tiling: wrong rectangle count");
    std::vector<std::vector<int>> cover(n - 1);
    for (int r = 1; r < n; ++r) cover[r - 1].assign(n - r, 0);
    for (int k = 1; k < n; ++k) {
        const Rect& rc = t.rects[k - 1];
        if (rc.bottom != k || rc.right != n - k) throw InvariantError("tiling: rectangle not anchored at its corner");
        if (rc.top < 1 || rc.left < 1 || rc.top > rc.bottom || rc.left > rc.right)
            throw InvariantError("tiling: malformed rectangle");
        for (int r = rc.top; r <= rc.bottom; ++r)
            for (int c = rc.left; c <= rc.right; ++c) {
                if (c > n - r) throw InvariantError("tiling: rectangle leaves the staircase");
                if (cover[r - 1][c - 1]++) throw InvariantError("tiling: rectangles overlap");
            }
    }
    for (const auto& row : cover)
        for (int v : row)
            if (v != 1) throw InvariantError("tiling: cell left uncovered");
}

/// Visits every corner-anchored tiling of the rank-n staircase.
///
/// The rectangle holding the top-left cell of a staircase block must reach
/// down to one of the block's corners; it splits the rest into a smaller
/// staircase above-right and one below, which are tiled independently.
inline void for_each_tiling(int n, const std::function<void(const RectTiling&)>& visit) {
    if (n < 2) throw std::invalid_argument("tilings: rank must be at least 2");
    RectTiling cur{n, std::vector<Rect>(n - 1)};
    // Blocks still to tile, each (top row, left col, size).
    struct Block {
        int top, left, size;
    };
    std::function<void(std::vector<Block>&)> rec = [&](std::vector<Block>& todo) {
        if (todo.empty()) {
            visit(cur);
            return;
        }
        Block b = todo.back();
        todo.pop_back();
        for (int j = 0; j < b.size; ++j) {
            const int bottom = b.top + j;
            const int right = b.left + b.size - 1 - j;
            cur.rects[bottom - 1] = Rect{b.top, b.left, bottom, right};
            auto next = todo;
            if (j > 0) next.push_back({b.top, right + 1, j});
            if (b.size - 1 - j > 0) next.push_back({bottom + 1, b.left, b.size - 1 - j});
            rec(next);
        }
        todo.push_back(b);
    };
    std::vector<Block> start{{1, 1, n - 1}};
    rec(start);
}

inline std::vector<RectTiling> enumerate_tilings(int n) {
    std::vector<RectTiling> out;
    for_each_tiling(n, [&](const RectTiling& t) { out.push_back(t); });
    return out;
}

/// Coordinate k is the fill total of the rectangle anchored at corner k.
inline ExponentVector tiling_vertex(const StaircaseDiagram& d, const RectTiling& t) {
    if (d.rank() != t.n) throw std::invalid_argument("tiling_vertex: shape mismatch");
    ExponentVector v(t.n - 1, 0);
    for (int k = 1; k < t.n; ++k) {
        const Rect& rc = t.rects[k - 1];
        for (int r = rc.top; r <= rc.bottom; ++r)
            for (int c = rc.left; c <= rc.right; ++c) v[k - 1] += d.fill(r, c);
    }
    return v;
}

/// Per-tiling vectors in enumeration order (duplicates kept).
inline std::vector<ExponentVector> tiling_vertex_list(const Permutation& w) {
    std::vector<ExponentVector> out;
    if (w.rank() < 2) return {ExponentVector{}};
    const auto d = build_diagram(w);
    for_each_tiling(w.rank(), [&](const RectTiling& t) { out.push_back(tiling_vertex(d, t)); });
    return out;
}

inline LatticePointSet vertices_via_tilings(const Permutation& w) {
    auto list = tiling_vertex_list(w);
    return LatticePointSet(list.begin(), list.end());
}

/// Cells as "(a,b):f", one row per line.
inline std::string render_diagram(const StaircaseDiagram& d) {
    std::string out;
    for (int r = 1; r <= d.rows(); ++r) {
        for (int c = 1; c <= d.row_length(r); ++c) {
            if (c > 1) out += " ";
            out += to_string(d.label(r, c)) + ":" + std::to_string(d.fill(r, c));
        }
        out += "\n";
    }
    return out;
}

/// Box drawing with '+', '-', '|': rectangle borders are drawn, interior
/// cell boundaries are blank. Each cell shows its fill; corner sums follow
/// the row of their corner.
inline std::string render_tiling(const StaircaseDiagram& d, const RectTiling& t) {
    if (d.rank() != t.n) throw std::invalid_argument("render_tiling: shape mismatch");
    const int rows = d.rows();
    auto owner = [&](int r, int c) -> int {
        if (r < 1 || r > rows || c < 1 || c > d.row_length(r)) return -1;
        for (int k = 0; k < rows; ++k)
            if (t.rects[k].contains(r, c)) return k;
        return -1;
    };
    const auto vertex = tiling_vertex(d, t);
    std::string out;
    // Grid lines sit between cells: horizontal line y separates rows y and y+1.
    for (int y = 0; y <= rows; ++y) {
        std::string line;
        const int width = std::max(y == 0 ? d.row_length(1) : d.row_length(y), y < rows ? d.row_length(y + 1) : 0);
        for (int c = 1; c <= width; ++c) {
            line += "+";
            line += owner(y, c) != owner(y + 1, c) ? "---" : "   ";
        }
        line += "+";
        out += line + "\n";
        if (y == rows) break;
        const int r = y + 1;
        std::string cells = "|";
        for (int c = 1; c <= d.row_length(r); ++c) {
            cells += " " + std::to_string(d.fill(r, c)) + " ";
            cells += owner(r, c) != owner(r, c + 1) ? "|" : " ";
        }
        cells += "  " + std::to_string(vertex[r - 1]);
        out += cells + "\n";
    }
    return out;
}

}  // namespace dualschubert
