#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qdeg/matrix.hpp"
#include "qdeg/rep.hpp"
#include "qdeg/star.hpp"

namespace qdeg {

// --- Star arrows and their partial order -------------------------------------

// Arrows of the star quiver, ordered by the two maximal chains
//   b0 < a1 < b1 < a2 < ... < an < bn   and   a1' < b1 < a2 < ... < an < bn.
// b0 and a1 are incomparable with a1'.
struct StarArrow {
    enum Kind { Beta0, Alpha1p, Alpha, Beta } kind;
    int index = 0; // for Alpha (>= 1) and Beta (>= 1)

    static StarArrow beta0() { return {Beta0, 0}; }
    static StarArrow alpha1p() { return {Alpha1p, 0}; }
    static StarArrow alpha(int i) { return {Alpha, i}; }
    static StarArrow beta(int i) { return {Beta, i}; }

    bool operator==(const StarArrow& o) const { return kind == o.kind && index == o.index; }

    // Position along the b0-chain; -1 for a1'.
    int chain_pos() const {
        switch (kind) {
            case Beta0: return 0;
            case Alpha: return 2 * index - 1;
            case Beta: return 2 * index;
            case Alpha1p: return -1;
        }
        return -1;
    }

    std::string name() const {
        switch (kind) {
            case Beta0: return star_beta(0);
            case Alpha1p: return star_alpha1p();
            case Alpha: return star_alpha(index);
            case Beta: return star_beta(index);
        }
        return {};
    }
    std::string display() const {
        switch (kind) {
            case Beta0: return "b0";
            case Alpha1p: return "a1'";
            case Alpha: return "a" + std::to_string(index);
            case Beta: return "b" + std::to_string(index);
        }
        return {};
    }
};

bool arrow_leq(const StarArrow& g, const StarArrow& d);

// Canonical enumeration b0, a1, a1', b1, a2, b2, ..., an, bn.
std::vector<StarArrow> star_arrows_in_order(int n);

// --- Q-matrices ---------------------------------------------------------------

// A block matrix whose rows and columns are labeled by star-quiver vertices
// and whose entries are formal linear combinations of paths between the
// labels.  The constructions below only ever need single arrows or zeros,
// but evaluation supports the general form.
struct QPath {
    std::string source;               // for the length-0 path this is the whole datum
    std::vector<std::string> arrows;
};

struct QEntry {
    struct Term {
        mpq_class coef;
        QPath path;
    };
    std::vector<Term> terms; // empty = zero

    static QEntry zero() { return {}; }
    static QEntry arrow(const std::string& source, const std::string& name) {
        return {{{mpq_class(1), {source, {name}}}}};
    }
};

struct QMatrix {
    std::vector<std::string> row_labels; // vertex names, repetition allowed
    std::vector<std::string> col_labels;
    std::vector<QEntry> entries; // row-major

    QEntry& at(std::size_t i, std::size_t j) { return entries[i * col_labels.size() + j]; }
    const QEntry& at(std::size_t i, std::size_t j) const {
        return entries[i * col_labels.size() + j];
    }
    std::size_t block_rows() const { return row_labels.size(); }
    std::size_t block_cols() const { return col_labels.size(); }
};

// The bidiagonal zig-zag matrices: A(n) has rows y0..yn and columns x0..xn
// with beta_i on the diagonal and alpha_{i+1} above it; B(n) drops row y0 and
// column x0 and starts with alpha_1'.
QMatrix star_matrix_A(int n);
QMatrix star_matrix_B(int n);

// Rectangular submatrix of A or B with upper-left entry gamma and lower-right
// entry delta.  Throws when the pair is incomparable.
QMatrix interval(int n, const StarArrow& gamma, const StarArrow& delta);

// The doubled matrices [[gamma, delta]] for a1 <= gamma <= delta, and the
// variant with beta_0 replaced by zero.
QMatrix double_interval(int n, const StarArrow& gamma, const StarArrow& delta);
QMatrix double_interval_zero(int n, const StarArrow& delta);

// --- The distinguished family and rank signatures ------------------------------

struct RankFunction {
    enum Family { Interval, Double, DoubleZero } family;
    StarArrow gamma, delta;

    bool operator==(const RankFunction& o) const {
        return family == o.family && gamma == o.gamma && delta == o.delta;
    }
    std::string display() const {
        switch (family) {
            case Interval: return "|" + gamma.display() + "," + delta.display() + "|";
            case Double: return "||" + gamma.display() + "," + delta.display() + "||";
            case DoubleZero: return "||" + gamma.display() + "," + delta.display() + "||0";
        }
        return {};
    }
};

QMatrix rank_function_matrix(int n, const RankFunction& f);

inline constexpr int kEnumerationVersion = 1;

// Canonical order: interval functions first, then doubled, then the zeroed
// variants, each by (gamma, delta) position in the canonical arrow order.
std::vector<RankFunction> enumerate_rank_functions(int n);

// Block-wise evaluation of a Q-matrix at a representation of the star quiver.
template <class F>
Matrix<F> evaluate(const QMatrix& qm, const Rep<F>& v) {
    const Quiver& q = *v.quiver;
    F f = v.mats.empty() ? F() : v.mats[0].field();
    auto dim_of = [&](const std::string& label) {
        int vi = q.vertex_index(label);
        if (vi < 0) throw std::invalid_argument("label is not a vertex: " + label);
        return static_cast<std::size_t>(v.dim[static_cast<std::size_t>(vi)]);
    };

    std::vector<std::size_t> roff(qm.block_rows() + 1, 0), coff(qm.block_cols() + 1, 0);
    for (std::size_t i = 0; i < qm.block_rows(); ++i)
        roff[i + 1] = roff[i] + dim_of(qm.row_labels[i]);
    for (std::size_t j = 0; j < qm.block_cols(); ++j)
        coff[j + 1] = coff[j] + dim_of(qm.col_labels[j]);

    Matrix<F> out(f, roff.back(), coff.back());
    for (std::size_t i = 0; i < qm.block_rows(); ++i) {
        for (std::size_t j = 0; j < qm.block_cols(); ++j) {
            const QEntry& e = qm.at(i, j);
            if (e.terms.empty()) continue;
            std::size_t h = roff[i + 1] - roff[i];
            Matrix<F> block(f, h, coff[j + 1] - coff[j]);
            for (const auto& term : e.terms) {
                if (term.path.source != qm.row_labels[i])
                    throw std::invalid_argument("path does not start at its row label");
                Matrix<F> prod = Matrix<F>::identity(f, dim_of(term.path.source));
                std::string at_vertex = term.path.source;
                for (const auto& an : term.path.arrows) {
                    int ai = q.arrow_index(an);
                    if (ai < 0) throw std::invalid_argument("path uses unknown arrow: " + an);
                    const auto& arr = q.arrows[static_cast<std::size_t>(ai)];
                    if (q.vertices[static_cast<std::size_t>(arr.tail)] != at_vertex)
                        throw std::invalid_argument("path is not composable at arrow: " + an);
                    prod = mul(prod, v.mats[static_cast<std::size_t>(ai)]);
                    at_vertex = q.vertices[static_cast<std::size_t>(arr.head)];
                }
                if (at_vertex != qm.col_labels[j])
                    throw std::invalid_argument("path does not end at its column label");
                typename F::Elem c = f.from_long(static_cast<long>(term.coef.get_num().get_si()));
                if (term.coef.get_den() != 1)
                    c = f.div(c, f.from_long(static_cast<long>(term.coef.get_den().get_si())));
                block = add(block, scale(prod, c));
            }
            set_block(out, roff[i], coff[j], block);
        }
    }
    return out;
}

// The complete orbit invariant: ranks of every distinguished function,
// in enumeration order.
using RankSignature = std::vector<std::size_t>;

template <class F>
RankSignature signature(const Rep<F>& w, int n) {
    auto fns = enumerate_rank_functions(n);
    RankSignature sig(fns.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(fns.size()); ++i)
        sig[static_cast<std::size_t>(i)] =
            rank(evaluate(rank_function_matrix(n, fns[static_cast<std::size_t>(i)]), w));
    return sig;
}

inline bool signature_leq(const RankSignature& a, const RankSignature& b) {
    if (a.size() != b.size()) throw std::invalid_argument("signatures are not comparable");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace qdeg
