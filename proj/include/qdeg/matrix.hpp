#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qdeg/field.hpp"

namespace qdeg {

// Dense exact matrix over a field context F.  Zero rows or columns are
// allowed; every operation treats the empty matrix as rank 0.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(F f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix identity(F f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const Elem& at(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!field_.eq(a_[k], o.a_[k])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& e : a_)
            if (!field_.is_zero(e)) return false;
        return true;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
    Matrix<F> t(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

template <class F>
Matrix<F> mul(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    const F& f = a.field();
    Matrix<F> c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return c;
}

template <class F>
Matrix<F> add(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix<F> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
    return c;
}

template <class F>
Matrix<F> scale(const Matrix<F>& a, const typename F::Elem& s) {
    Matrix<F> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.field().mul(a.at(i, j), s);
    return c;
}

namespace detail {

// Row-echelon elimination.  `Parallel` switches the row-update loop to
// OpenMP; the serial instantiation is the reference the tests compare
// against.  Reduces in place and returns the rank.
template <class F, bool Parallel>
std::size_t echelonize(Matrix<F>& m) {
    const F& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!f.is_zero(m.at(i, c))) { piv = i; break; }
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        const auto pivinv = f.inv(m.at(r, c));
        const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(r) + 1;
        const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (Parallel && (hi - lo) * static_cast<std::ptrdiff_t>(cols - c) > 2048)
#endif
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
            auto& lead = m.at(static_cast<std::size_t>(i), c);
            if (f.is_zero(lead)) continue;
            const auto factor = f.mul(lead, pivinv);
            lead = f.zero();
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(static_cast<std::size_t>(i), j) =
                    f.sub(m.at(static_cast<std::size_t>(i), j), f.mul(factor, m.at(r, j)));
        }
        ++r;
    }
    return r;
}

} // namespace detail

template <class F>
std::size_t rank_serial(Matrix<F> m) {
    return detail::echelonize<F, false>(m);
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return detail::echelonize<F, true>(m);
}

template <class F>
std::size_t nullspace_dim(const Matrix<F>& m) {
    return m.cols() - rank(m);
}

// Reduced row echelon form: canonical representative of the row space.
template <class F>
Matrix<F> rref(Matrix<F> m) {
    const F& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!f.is_zero(m.at(i, c))) { piv = i; break; }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        const auto pivinv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) = f.mul(m.at(r, j), pivinv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            const auto factor = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivcol.push_back(c);
        ++r;
    }
    return m;
}

template <class F>
bool same_row_space(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) return false;
    Matrix<F> ra = rref(a), rb = rref(b);
    std::size_t qa = rank(a), qb = rank(b);
    if (qa != qb) return false;
    for (std::size_t i = 0; i < qa; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.field().eq(ra.at(i, j), rb.at(i, j))) return false;
    return true;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const F& f = m.field();
    const std::size_t n = m.rows();
    Matrix<F> work(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work.at(i, j) = m.at(i, j);
        work.at(i, n + i) = f.one();
    }
    work = rref(std::move(work));
    for (std::size_t i = 0; i < n; ++i)
        if (!f.eq(work.at(i, i), f.one())) return std::nullopt;
    Matrix<F> inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = work.at(i, n + j);
    return inv;
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

// Solve X A = B exactly.  Free variables are set to zero; returns nullopt
// when the system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve_xa_eq_b(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) return std::nullopt;
    const F& f = a.field();
    const std::size_t m = a.rows(), n = a.cols(), k = b.rows();
    // Transpose to A^T X^T = B^T and row-reduce the augmented system.
    Matrix<F> aug(f, n, m + k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug.at(i, j) = a.at(j, i);
        for (std::size_t j = 0; j < k; ++j) aug.at(i, m + j) = b.at(j, i);
    }
    aug = rref(std::move(aug));
    Matrix<F> xt(f, m, k);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = m + k;
        for (std::size_t j = 0; j < m + k; ++j)
            if (!f.is_zero(aug.at(i, j))) { piv = j; break; }
        if (piv == m + k) continue;
        if (piv >= m) return std::nullopt; // zero coefficients, nonzero right side
        for (std::size_t j = 0; j < k; ++j) xt.at(piv, j) = aug.at(i, m + j);
    }
    return transpose(xt);
}

template <class F>
void set_block(Matrix<F>& m, std::size_t i0, std::size_t j0, const Matrix<F>& b) {
    assert(i0 + b.rows() <= m.rows() && j0 + b.cols() <= m.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m.at(i0 + i, j0 + j) = b.at(i, j);
}

template <class F>
Matrix<F> submatrix(const Matrix<F>& m, std::size_t i0, std::size_t i1, std::size_t j0,
                    std::size_t j1) {
    assert(i0 <= i1 && i1 <= m.rows() && j0 <= j1 && j1 <= m.cols());
    Matrix<F> s(m.field(), i1 - i0, j1 - j0);
    for (std::size_t i = i0; i < i1; ++i)
        for (std::size_t j = j0; j < j1; ++j)
            s.at(i - i0, j - j0) = m.at(i, j);
    return s;
}

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix<F> c(a.field(), a.rows(), a.cols() + b.cols());
    set_block(c, 0, 0, a);
    set_block(c, 0, a.cols(), b);
    return c;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix<F> c(a.field(), a.rows() + b.rows(), a.cols());
    set_block(c, 0, 0, a);
    set_block(c, a.rows(), 0, b);
    return c;
}

// Block-diagonal sum, used for direct sums of representations.
template <class F>
Matrix<F> diag_sum(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    set_block(c, 0, 0, a);
    set_block(c, a.rows(), a.cols(), b);
    return c;
}

// Square matrix with ones on the antidiagonal.
template <class F>
Matrix<F> antidiag(F f, std::size_t n) {
    Matrix<F> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = m.field().one();
    return m;
}

template <class F>
Matrix<F> random_matrix(F f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix<F> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.random(rng);
    return m;
}

template <class F>
Matrix<F> random_invertible(F f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix<F> m = random_matrix(f, n, n, rng);
        if (is_invertible(m)) return m;
    }
}

// --- Block labels -----------------------------------------------------------

// Ordered list of (label, width) pairs annotating one side of a matrix.
struct BlockLabels {
    std::vector<std::pair<std::string, int>> blocks;

    int total() const {
        int t = 0;
        for (const auto& [_, w] : blocks) t += w;
        return t;
    }
    // Index into `blocks`, or -1.
    int find(const std::string& label) const {
        for (std::size_t k = 0; k < blocks.size(); ++k)
            if (blocks[k].first == label) return static_cast<int>(k);
        return -1;
    }
    // Element offset of block k.
    int offset(std::size_t k) const {
        int t = 0;
        for (std::size_t i = 0; i < k; ++i) t += blocks[i].second;
        return t;
    }
};

// Submatrix of the selected block rows/columns, in label order.
template <class F>
Matrix<F> extract_blocks(const Matrix<F>& m, const BlockLabels& rows, const BlockLabels& cols,
                         const std::vector<std::string>& rowsel,
                         const std::vector<std::string>& colsel) {
    if (rows.total() != static_cast<int>(m.rows()) || cols.total() != static_cast<int>(m.cols()))
        throw std::invalid_argument("block labels do not match matrix shape");
    std::vector<std::size_t> ri, ci;
    for (const auto& s : rowsel) {
        int k = rows.find(s);
        if (k < 0) throw std::invalid_argument("unknown row label: " + s);
        int off = rows.offset(static_cast<std::size_t>(k));
        for (int i = 0; i < rows.blocks[static_cast<std::size_t>(k)].second; ++i)
            ri.push_back(static_cast<std::size_t>(off + i));
    }
    for (const auto& s : colsel) {
        int k = cols.find(s);
        if (k < 0) throw std::invalid_argument("unknown column label: " + s);
        int off = cols.offset(static_cast<std::size_t>(k));
        for (int i = 0; i < cols.blocks[static_cast<std::size_t>(k)].second; ++i)
            ci.push_back(static_cast<std::size_t>(off + i));
    }
    Matrix<F> s(m.field(), ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j) s.at(i, j) = m.at(ri[i], ci[j]);
    return s;
}

// The 2x3 zero-padded block array
//
//   [ M_pre   0      M_shared ]
//   [ 0       N_pre  N_shared ]
//
// where the last `shared` columns of M and N are the common part.
template <class F>
Matrix<F> stack_split(const Matrix<F>& m, const Matrix<F>& n, std::size_t shared) {
    if (shared > m.cols() || shared > n.cols())
        throw std::invalid_argument("stack_split: shared part wider than an input");
    const std::size_t mpre = m.cols() - shared, npre = n.cols() - shared;
    Matrix<F> out(m.field(), m.rows() + n.rows(), mpre + npre + shared);
    set_block(out, 0, 0, submatrix(m, 0, m.rows(), 0, mpre));
    set_block(out, 0, mpre + npre, submatrix(m, 0, m.rows(), mpre, m.cols()));
    set_block(out, m.rows(), mpre, submatrix(n, 0, n.rows(), 0, npre));
    set_block(out, m.rows(), mpre + npre, submatrix(n, 0, n.rows(), npre, n.cols()));
    return out;
}

// Label-checked variant: the shared descriptor is the count of trailing
// column blocks, which must agree between the two label lists.
template <class F>
Matrix<F> stack_split(const Matrix<F>& m, const BlockLabels& mcols, const Matrix<F>& n,
                      const BlockLabels& ncols, std::size_t shared_blocks) {
    if (shared_blocks > mcols.blocks.size() || shared_blocks > ncols.blocks.size())
        throw std::invalid_argument("stack_split: shared descriptor too long");
    int width = 0;
    for (std::size_t k = 0; k < shared_blocks; ++k) {
        const auto& mb = mcols.blocks[mcols.blocks.size() - shared_blocks + k];
        const auto& nb = ncols.blocks[ncols.blocks.size() - shared_blocks + k];
        if (mb != nb)
            throw std::invalid_argument("stack_split: shared column blocks disagree at " +
                                        mb.first + " vs " + nb.first);
        width += mb.second;
    }
    return stack_split(m, n, static_cast<std::size_t>(width));
}

using RMatrix = Matrix<RationalField>;
using PMatrix = Matrix<PrimeField>;

} // namespace qdeg
