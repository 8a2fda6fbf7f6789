#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qdeg/matrix.hpp"
#include "qdeg/rep.hpp"
#include "qdeg/star.hpp"
#include "qdeg/zigzag.hpp"

namespace qdeg {

// The slice sits inside K\G for G = GL(a+b), K = GL(a) x GL(b).  A point is a
// pair (M, N) of full-width matrices, M of height a and N of height b, whose
// vertical stack is invertible; the K-coset is the pair of row spaces.

// Column labels of the slice: reversed x, then the second copies x^s, then
// reversed y, the merged label y0+y0', and the second copies y^s.
struct ColLabel {
    enum Kind { X, XS, Y, Y0, YS } kind;
    int index = 0;

    bool operator==(const ColLabel& o) const { return kind == o.kind && index == o.index; }
    std::string display() const {
        switch (kind) {
            case X: return "x" + std::to_string(index);
            case XS: return "x" + std::to_string(index) + "s";
            case Y: return "y" + std::to_string(index);
            case Y0: return "y0+y0'";
            case YS: return "y" + std::to_string(index) + "s";
        }
        return {};
    }
};

std::vector<ColLabel> column_labels(int n);

// Fixed numeric data of the slice for one (n, dstar): block widths, offsets,
// row structure of M and N.
struct SliceLayout {
    int n = 0;
    std::shared_ptr<const Quiver> star;
    DimVector dstar;
    int q = 0, r = 0, s = 0, t = 0, a = 0, b = 0;

    std::vector<ColLabel> cols;   // 4n+3 labels
    std::vector<int> col_width;
    std::vector<int> col_offset;  // size cols.size()+1

    // M block rows: y0, y1..yn, x0..xn.  N block rows: y0', y1..yn, x0..xn.
    std::vector<int> mrow_height, mrow_offset;
    std::vector<int> nrow_height, nrow_offset;

    int col_pos(ColLabel l) const;
    int mrow_y(int i) const { return i; }          // block index of row y_i (y0' in N at 0)
    int mrow_x(int j) const { return n + 1 + j; }  // block index of row x_j
};

std::shared_ptr<const SliceLayout> make_slice_layout(int n, const DimVector& dstar);

template <class F>
struct SlicePoint {
    std::shared_ptr<const SliceLayout> layout;
    Matrix<F> M, N;
};

namespace detail {

template <class F>
void fill_fixed_blocks(SlicePoint<F>& p, const F& f) {
    const SliceLayout& L = *p.layout;
    const int n = L.n;
    auto dx = [&](int j) { return L.dstar[static_cast<std::size_t>(L.star->vertex_index(star_x(j)))]; };
    auto dy = [&](int i) { return L.dstar[static_cast<std::size_t>(L.star->vertex_index(star_y(i)))]; };
    // x rows carry the full antidiagonal over the reversed-x column group.
    Matrix<F> Js = antidiag(f, static_cast<std::size_t>(L.s));
    for (int j = 0; j <= n; ++j) {
        int rm = L.mrow_offset[static_cast<std::size_t>(L.mrow_x(j))];
        int rn = L.nrow_offset[static_cast<std::size_t>(L.mrow_x(j))];
        int rr = L.mrow_offset[static_cast<std::size_t>(L.mrow_x(0))];
        for (int c = 0; c < dx(j); ++c)
            for (int cc = 0; cc < L.s; ++cc) {
                std::size_t local = static_cast<std::size_t>(rm - rr + c);
                if (!f.is_zero(Js.at(local, static_cast<std::size_t>(cc)))) {
                    p.M.at(static_cast<std::size_t>(rm + c), static_cast<std::size_t>(cc)) = f.one();
                    p.N.at(static_cast<std::size_t>(rn + c), static_cast<std::size_t>(cc)) = f.one();
                }
            }
        // N's x_j row also carries an identity in column block x_j^s.
        int cxs = L.col_offset[static_cast<std::size_t>(L.col_pos({ColLabel::XS, j}))];
        for (int c = 0; c < dx(j); ++c)
            p.N.at(static_cast<std::size_t>(rn + c), static_cast<std::size_t>(cxs + c)) = f.one();
    }
    // y_i rows carry J at column block y_i; N's also an identity at y_i^s.
    for (int i = 1; i <= n; ++i) {
        int rm = L.mrow_offset[static_cast<std::size_t>(L.mrow_y(i))];
        int rn = L.nrow_offset[static_cast<std::size_t>(L.mrow_y(i))];
        int cy = L.col_offset[static_cast<std::size_t>(L.col_pos({ColLabel::Y, i}))];
        int cys = L.col_offset[static_cast<std::size_t>(L.col_pos({ColLabel::YS, i}))];
        for (int c = 0; c < dy(i); ++c) {
            p.M.at(static_cast<std::size_t>(rm + c), static_cast<std::size_t>(cy + dy(i) - 1 - c)) =
                f.one();
            p.N.at(static_cast<std::size_t>(rn + c), static_cast<std::size_t>(cy + dy(i) - 1 - c)) =
                f.one();
            p.N.at(static_cast<std::size_t>(rn + c), static_cast<std::size_t>(cys + c)) = f.one();
        }
    }
    // Row y0 of M carries J in the y0 part of the merged column; row y0' of N
    // an identity in the y0' part.
    int cy0 = L.col_offset[static_cast<std::size_t>(L.col_pos({ColLabel::Y0, 0}))];
    for (int c = 0; c < L.q; ++c)
        p.M.at(static_cast<std::size_t>(c), static_cast<std::size_t>(cy0 + L.q - 1 - c)) = f.one();
    for (int c = 0; c < L.t; ++c)
        p.N.at(static_cast<std::size_t>(c), static_cast<std::size_t>(cy0 + L.q + c)) = f.one();
}

} // namespace detail

// The slice template with zero free blocks; this is also the image of the
// zero representation.
template <class F>
SlicePoint<F> slice_template(F f, std::shared_ptr<const SliceLayout> layout) {
    SlicePoint<F> p{layout, Matrix<F>(f, static_cast<std::size_t>(layout->a),
                                      static_cast<std::size_t>(layout->a + layout->b)),
                    Matrix<F>(f, static_cast<std::size_t>(layout->b),
                              static_cast<std::size_t>(layout->a + layout->b))};
    detail::fill_fixed_blocks(p, f);
    return p;
}

// Free blocks live in the x^s column group, rows y0..yn of M and y0', y1..yn
// of N.
template <class F>
SlicePoint<F> random_slice_point(F f, std::shared_ptr<const SliceLayout> layout,
                                 std::mt19937_64& rng) {
    SlicePoint<F> p = slice_template(f, layout);
    const SliceLayout& L = *layout;
    int c0 = L.col_offset[static_cast<std::size_t>(L.col_pos({ColLabel::XS, 0}))];
    for (int i = 0; i < L.q + L.r; ++i)
        for (int j = 0; j < L.s; ++j)
            p.M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c0 + j)) = f.random(rng);
    for (int i = 0; i < L.t + L.r; ++i)
        for (int j = 0; j < L.s; ++j)
            p.N.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c0 + j)) = f.random(rng);
    return p;
}

// The closed embedding of the star representation space into the slice: the
// evaluated zig-zag matrices fill the free blocks.
template <class F>
SlicePoint<F> slice_embed(const Rep<F>& v, std::shared_ptr<const SliceLayout> layout) {
    const SliceLayout& L = *layout;
    if (!(*v.quiver == *L.star) || v.dim != L.dstar)
        throw std::invalid_argument("representation does not match the slice layout");
    F f = v.mats.empty() ? F() : v.mats[0].field();
    SlicePoint<F> p = slice_template(f, layout);
    Matrix<F> av = evaluate(star_matrix_A(L.n), v);
    Matrix<F> bv = evaluate(star_matrix_B(L.n), v);
    int c0 = L.col_offset[static_cast<std::size_t>(L.col_pos({ColLabel::XS, 0}))];
    int dx0 = L.dstar[static_cast<std::size_t>(L.star->vertex_index(star_x(0)))];
    set_block(p.M, 0, static_cast<std::size_t>(c0), av);
    set_block(p.N, 0, static_cast<std::size_t>(c0 + dx0), bv);
    return p;
}

// Block-diagonal image of a base-change group element inside the parabolic,
// acting on slice points by right multiplication.
template <class F>
Matrix<F> group_embed(const GroupElement<F>& g, const SliceLayout& L) {
    if (g.factors.size() != L.dstar.size())
        throw std::invalid_argument("group element does not match the star quiver");
    F f = g.factors.empty() ? F() : g.factors[0].field();
    auto factor = [&](const std::string& name) -> const Matrix<F>& {
        return g.factors[static_cast<std::size_t>(L.star->vertex_index(name))];
    };
    Matrix<F> gx(f, 0, 0), gy(f, 0, 0);
    for (int j = 0; j <= L.n; ++j) gx = diag_sum(gx, factor(star_x(j)));
    for (int i = 1; i <= L.n; ++i) gy = diag_sum(gy, factor(star_y(i)));
    auto conj = [&](const Matrix<F>& m) {
        Matrix<F> J = antidiag(f, m.rows());
        return mul(mul(J, m), J);
    };
    Matrix<F> out(f, 0, 0);
    out = diag_sum(out, conj(gx));
    out = diag_sum(out, gx);
    out = diag_sum(out, conj(gy));
    out = diag_sum(out, conj(factor(star_y(0))));
    out = diag_sum(out, factor(star_y0p()));
    out = diag_sum(out, gy);
    return out;
}

// Right action of any element of GL(a+b) on a point of K\G.
template <class F>
SlicePoint<F> act_point(const SlicePoint<F>& p, const Matrix<F>& g) {
    return {p.layout, mul(p.M, g), mul(p.N, g)};
}

// Random element of the parabolic: block upper triangular for the column
// widths, with invertible diagonal blocks.
template <class F>
Matrix<F> random_parabolic(F f, const SliceLayout& L, std::mt19937_64& rng) {
    const std::size_t total = static_cast<std::size_t>(L.a + L.b);
    Matrix<F> m(f, total, total);
    for (std::size_t bi = 0; bi < L.cols.size(); ++bi) {
        std::size_t o = static_cast<std::size_t>(L.col_offset[bi]);
        std::size_t w = static_cast<std::size_t>(L.col_width[bi]);
        set_block(m, o, o, random_invertible(f, w, rng));
        for (std::size_t c = o + w; c < total; ++c)
            for (std::size_t rr = o; rr < o + w; ++rr) m.at(rr, c) = f.random(rng);
    }
    return m;
}

// --- Rank functions on K\G ----------------------------------------------------

// Rank of the column prefix of M (resp. N) up to label position v, and of the
// split-stack over a pair v < w.
template <class F>
std::size_t rank_upper(const SlicePoint<F>& p, int v) {
    const SliceLayout& L = *p.layout;
    return rank(submatrix(p.M, 0, p.M.rows(), 0, static_cast<std::size_t>(L.col_offset[static_cast<std::size_t>(v) + 1])));
}

template <class F>
std::size_t rank_lower(const SlicePoint<F>& p, int v) {
    const SliceLayout& L = *p.layout;
    return rank(submatrix(p.N, 0, p.N.rows(), 0, static_cast<std::size_t>(L.col_offset[static_cast<std::size_t>(v) + 1])));
}

template <class F>
std::size_t rank_both(const SlicePoint<F>& p, int v, int w) {
    if (!(0 <= v && v < w && w < static_cast<int>(p.layout->cols.size())))
        throw std::invalid_argument("rank_both requires label positions v < w");
    const SliceLayout& L = *p.layout;
    std::size_t wide = static_cast<std::size_t>(L.col_offset[static_cast<std::size_t>(w) + 1]);
    std::size_t shared = wide - static_cast<std::size_t>(L.col_offset[static_cast<std::size_t>(v) + 1]);
    return rank(stack_split(submatrix(p.M, 0, p.M.rows(), 0, wide),
                            submatrix(p.N, 0, p.N.rows(), 0, wide), shared));
}

// Every rank-function value of a point, in a fixed order: all uppers, all
// lowers, then all pairs (v, w) lexicographically.  Containment of parabolic
// orbit closures is componentwise comparison of these vectors.
template <class F>
std::vector<std::size_t> point_signature(const SlicePoint<F>& p) {
    const int k = static_cast<int>(p.layout->cols.size());
    std::vector<std::pair<int, int>> jobs;
    for (int v = 0; v < k; ++v) jobs.emplace_back(-1, v);
    for (int v = 0; v < k; ++v) jobs.emplace_back(-2, v);
    for (int v = 0; v < k; ++v)
        for (int w = v + 1; w < k; ++w) jobs.emplace_back(v, w);
    std::vector<std::size_t> out(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(jobs.size()); ++i) {
        auto [v, w] = jobs[static_cast<std::size_t>(i)];
        std::size_t val;
        if (v == -1) val = rank_upper(p, w);
        else if (v == -2) val = rank_lower(p, w);
        else val = rank_both(p, v, w);
        out[static_cast<std::size_t>(i)] = val;
    }
    return out;
}

template <class F>
bool porbit_leq(const SlicePoint<F>& p1, const SlicePoint<F>& p2) {
    if (p1.layout->n != p2.layout->n || p1.layout->dstar != p2.layout->dstar)
        throw std::invalid_argument("points live in different slices");
    auto s1 = point_signature(p1), s2 = point_signature(p2);
    for (std::size_t i = 0; i < s1.size(); ++i)
        if (s1[i] > s2[i]) return false;
    return true;
}

// --- Classification of the slice functions -------------------------------------

// Restricted to the slice, every rank function is constant, cuts out the
// image of the embedding, or agrees with a distinguished quiver rank function
// up to a constant.
struct FunctionClass {
    enum Type { Constant, Image, Quiver } type;
    std::optional<RankFunction> partner;
};

FunctionClass classify_upper(int n, int v);
FunctionClass classify_lower(int n, int v);
FunctionClass classify_both(int n, int v, int w);

// --- Structural membership ------------------------------------------------------

// Block of a slice matrix at (row block, column label position).
template <class F>
Matrix<F> slice_block(const Matrix<F>& m, const SliceLayout& L, bool is_M, int row_block,
                      int col_pos) {
    const auto& off = is_M ? L.mrow_offset : L.nrow_offset;
    const auto& hgt = is_M ? L.mrow_height : L.nrow_height;
    std::size_t r0 = static_cast<std::size_t>(off[static_cast<std::size_t>(row_block)]);
    std::size_t r1 = r0 + static_cast<std::size_t>(hgt[static_cast<std::size_t>(row_block)]);
    std::size_t c0 = static_cast<std::size_t>(L.col_offset[static_cast<std::size_t>(col_pos)]);
    std::size_t c1 = static_cast<std::size_t>(L.col_offset[static_cast<std::size_t>(col_pos) + 1]);
    return submatrix(m, r0, r1, c0, c1);
}

// Structural membership in the image of the embedding: the two free regions
// agree on rows y1..yn, the entries off the zig-zag vanish, and the x0^s
// column of N vanishes.
template <class F>
bool in_image(const SlicePoint<F>& p) {
    const SliceLayout& L = *p.layout;
    const int n = L.n;
    auto mb = [&](int i, int j) { return slice_block(p.M, L, true, L.mrow_y(i), L.col_pos({ColLabel::XS, j})); };
    auto nb = [&](int i, int j) { return slice_block(p.N, L, false, L.mrow_y(i), L.col_pos({ColLabel::XS, j})); };
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (mb(i, j) != nb(i, j)) return false; // (I1)
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            bool on_zigzag = (j == i) || (j == i + 1);
            if (!on_zigzag && !mb(i, j).is_zero()) return false; // (I2)/(I3) below and above
        }
    for (int j = 0; j <= n; ++j)
        if (j >= 2 && !slice_block(p.M, L, true, L.mrow_y(0), L.col_pos({ColLabel::XS, j})).is_zero())
            return false; // (I3) for y0
    for (int j = 0; j <= n; ++j) {
        bool allowed = (j == 1);
        if (!allowed && !slice_block(p.N, L, false, 0, L.col_pos({ColLabel::XS, j})).is_zero())
            return false; // (I3)/(I4) for y0'
    }
    return true;
}

// Structural membership in the intermediate subvariety between the slice and
// the image: only the x_n^s column and the y_n row are constrained.
template <class F>
bool in_R(const SlicePoint<F>& p) {
    const SliceLayout& L = *p.layout;
    const int n = L.n;
    if (n < 2) throw std::invalid_argument("R(dstar) is defined for n >= 2");
    auto mblk = [&](int i, int j) { return slice_block(p.M, L, true, L.mrow_y(i), L.col_pos({ColLabel::XS, j})); };
    auto nblk = [&](int i, int j) { return slice_block(p.N, L, false, L.mrow_y(i), L.col_pos({ColLabel::XS, j})); };
    for (int i = 1; i <= n; ++i)
        if (mblk(i, n) != nblk(i, n)) return false; // (R1)
    for (int i = 0; i <= n - 2; ++i)
        if (!mblk(i, n).is_zero() || !nblk(i, n).is_zero()) return false; // (R2)
    for (int j = 0; j <= n; ++j)
        if (mblk(n, j) != nblk(n, j)) return false; // (R3)
    for (int j = 0; j <= n - 1; ++j)
        if (!mblk(n, j).is_zero() || !nblk(n, j).is_zero()) return false; // (R4)
    return true;
}

} // namespace qdeg
