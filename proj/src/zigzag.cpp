#include "qdeg/zigzag.hpp"

#include <stdexcept>

namespace qdeg {

bool arrow_leq(const StarArrow& g, const StarArrow& d) {
    if (g.kind == StarArrow::Alpha1p) return d.kind == StarArrow::Alpha1p || d.chain_pos() >= 2;
    if (d.kind == StarArrow::Alpha1p) return false;
    return g.chain_pos() <= d.chain_pos();
}

std::vector<StarArrow> star_arrows_in_order(int n) {
    std::vector<StarArrow> order = {StarArrow::beta0(), StarArrow::alpha(1), StarArrow::alpha1p()};
    for (int i = 1; i <= n; ++i) {
        order.push_back(StarArrow::beta(i));
        if (i < n) order.push_back(StarArrow::alpha(i + 1));
    }
    return order;
}

namespace {

QMatrix qzero(std::vector<std::string> rows, std::vector<std::string> cols) {
    QMatrix m;
    m.row_labels = std::move(rows);
    m.col_labels = std::move(cols);
    m.entries.assign(m.row_labels.size() * m.col_labels.size(), QEntry::zero());
    return m;
}

QMatrix qsubmatrix(const QMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0,
                   std::size_t c1) {
    QMatrix s = qzero({m.row_labels.begin() + static_cast<std::ptrdiff_t>(r0),
                       m.row_labels.begin() + static_cast<std::ptrdiff_t>(r1)},
                      {m.col_labels.begin() + static_cast<std::ptrdiff_t>(c0),
                       m.col_labels.begin() + static_cast<std::ptrdiff_t>(c1)});
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) s.at(i - r0, j - c0) = m.at(i, j);
    return s;
}

// Assemble a block array of Q-matrices; absent cells are zero.  Row/column
// labels come from the first present cell in each band.
QMatrix qblocks(const std::vector<std::vector<const QMatrix*>>& cells) {
    std::vector<std::vector<std::string>> row_bands(cells.size());
    std::vector<std::vector<std::string>> col_bands(cells[0].size());
    for (std::size_t bi = 0; bi < cells.size(); ++bi)
        for (std::size_t bj = 0; bj < cells[bi].size(); ++bj) {
            if (!cells[bi][bj]) continue;
            if (row_bands[bi].empty()) row_bands[bi] = cells[bi][bj]->row_labels;
            if (col_bands[bj].empty()) col_bands[bj] = cells[bi][bj]->col_labels;
        }
    std::vector<std::string> rows, cols;
    std::vector<std::size_t> roff = {0}, coff = {0};
    for (const auto& band : row_bands) {
        rows.insert(rows.end(), band.begin(), band.end());
        roff.push_back(rows.size());
    }
    for (const auto& band : col_bands) {
        cols.insert(cols.end(), band.begin(), band.end());
        coff.push_back(cols.size());
    }
    QMatrix out = qzero(rows, cols);
    for (std::size_t bi = 0; bi < cells.size(); ++bi)
        for (std::size_t bj = 0; bj < cells[bi].size(); ++bj) {
            const QMatrix* cell = cells[bi][bj];
            if (!cell) continue;
            if (cell->row_labels != row_bands[bi] || cell->col_labels != col_bands[bj])
                throw std::logic_error("block assembly with inconsistent labels");
            for (std::size_t i = 0; i < cell->block_rows(); ++i)
                for (std::size_t j = 0; j < cell->block_cols(); ++j)
                    out.at(roff[bi] + i, coff[bj] + j) = cell->at(i, j);
        }
    return out;
}

// Position of an arrow within A (rows y0..yn, cols x0..xn).
std::pair<int, int> pos_in_A(const StarArrow& a) {
    switch (a.kind) {
        case StarArrow::Beta0: return {0, 0};
        case StarArrow::Alpha: return {a.index - 1, a.index};
        case StarArrow::Beta: return {a.index, a.index};
        default: throw std::invalid_argument("arrow not in the upper zig-zag matrix");
    }
}

// Position within B (rows y0', y1..yn; cols x1..xn).
std::pair<int, int> pos_in_B(const StarArrow& a) {
    switch (a.kind) {
        case StarArrow::Alpha1p: return {0, 0};
        case StarArrow::Alpha: return {a.index - 1, a.index - 1};
        case StarArrow::Beta: return {a.index, a.index - 1};
        default: throw std::invalid_argument("arrow not in the lower zig-zag matrix");
    }
}

void check_index(int n, const StarArrow& a) {
    if ((a.kind == StarArrow::Alpha || a.kind == StarArrow::Beta) &&
        (a.index < 1 || a.index > n))
        throw std::invalid_argument("arrow index out of range for this star quiver: " +
                                    a.display());
}

} // namespace

QMatrix star_matrix_A(int n) {
    std::vector<std::string> rows, cols;
    for (int i = 0; i <= n; ++i) rows.push_back(star_y(i));
    for (int j = 0; j <= n; ++j) cols.push_back(star_x(j));
    QMatrix m = qzero(rows, cols);
    m.at(0, 0) = QEntry::arrow(star_y(0), star_beta(0));
    for (int i = 1; i <= n; ++i) {
        m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) =
            QEntry::arrow(star_y(i - 1), star_alpha(i));
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
            QEntry::arrow(star_y(i), star_beta(i));
    }
    return m;
}

QMatrix star_matrix_B(int n) {
    std::vector<std::string> rows = {star_y0p()};
    std::vector<std::string> cols;
    for (int i = 1; i <= n; ++i) rows.push_back(star_y(i));
    for (int j = 1; j <= n; ++j) cols.push_back(star_x(j));
    QMatrix m = qzero(rows, cols);
    m.at(0, 0) = QEntry::arrow(star_y0p(), star_alpha1p());
    for (int i = 1; i <= n; ++i) {
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) =
            QEntry::arrow(star_y(i), star_beta(i));
        if (i >= 2)
            m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) =
                QEntry::arrow(star_y(i - 1), star_alpha(i));
    }
    return m;
}

QMatrix interval(int n, const StarArrow& gamma, const StarArrow& delta) {
    check_index(n, gamma);
    check_index(n, delta);
    if (!arrow_leq(gamma, delta))
        throw std::invalid_argument("zig-zag interval undefined for incomparable pair [" +
                                    gamma.display() + "," + delta.display() + "]");
    if (gamma.kind == StarArrow::Alpha1p) {
        QMatrix b = star_matrix_B(n);
        auto [r1, c1] = pos_in_B(gamma);
        auto [r2, c2] = pos_in_B(delta);
        return qsubmatrix(b, static_cast<std::size_t>(r1), static_cast<std::size_t>(r2 + 1),
                          static_cast<std::size_t>(c1), static_cast<std::size_t>(c2 + 1));
    }
    QMatrix a = star_matrix_A(n);
    auto [r1, c1] = pos_in_A(gamma);
    auto [r2, c2] = pos_in_A(delta);
    return qsubmatrix(a, static_cast<std::size_t>(r1), static_cast<std::size_t>(r2 + 1),
                      static_cast<std::size_t>(c1), static_cast<std::size_t>(c2 + 1));
}

QMatrix double_interval(int n, const StarArrow& gamma, const StarArrow& delta) {
    check_index(n, gamma);
    check_index(n, delta);
    if (!arrow_leq(StarArrow::alpha(1), gamma) || !arrow_leq(gamma, delta))
        throw std::invalid_argument("doubled interval requires a1 <= gamma <= delta");

    if (gamma == StarArrow::alpha(1)) {
        if (delta == StarArrow::alpha(1)) {
            QMatrix m = qzero({star_y(0), star_y0p()}, {star_x(0), star_x(1)});
            m.at(0, 0) = QEntry::arrow(star_y(0), star_beta(0));
            m.at(0, 1) = QEntry::arrow(star_y(0), star_alpha(1));
            m.at(1, 1) = QEntry::arrow(star_y0p(), star_alpha1p());
            return m;
        }
        QMatrix full = interval(n, StarArrow::beta0(), delta);
        QMatrix x0col = qsubmatrix(full, 0, full.block_rows(), 0, 1);
        QMatrix upper = interval(n, StarArrow::alpha(1), delta);
        QMatrix lower = interval(n, StarArrow::alpha1p(), delta);
        return qblocks({{&x0col, &upper}, {nullptr, &lower}});
    }

    QMatrix m = interval(n, StarArrow::beta0(), delta);
    QMatrix b = interval(n, StarArrow::alpha1p(), delta);
    if (gamma.kind == StarArrow::Alpha) {
        // Split the columns after x_{i-1}; the tails from x_i on are shared.
        const std::size_t mpre = static_cast<std::size_t>(gamma.index); // x0..x_{i-1}
        const std::size_t npre = static_cast<std::size_t>(gamma.index - 1); // x1..x_{i-1}
        QMatrix m_pre = qsubmatrix(m, 0, m.block_rows(), 0, mpre);
        QMatrix m_shared = qsubmatrix(m, 0, m.block_rows(), mpre, m.block_cols());
        QMatrix b_pre = qsubmatrix(b, 0, b.block_rows(), 0, npre);
        QMatrix b_shared = qsubmatrix(b, 0, b.block_rows(), npre, b.block_cols());
        return qblocks({{&m_pre, nullptr, &m_shared}, {nullptr, &b_pre, &b_shared}});
    }
    // gamma = beta_i: split the rows after y_{i-1}; rows from y_i on are shared.
    const std::size_t mpre = static_cast<std::size_t>(gamma.index); // y0..y_{i-1}
    const std::size_t npre = static_cast<std::size_t>(gamma.index); // y0', y1..y_{i-1}
    QMatrix m_pre = qsubmatrix(m, 0, mpre, 0, m.block_cols());
    QMatrix m_shared = qsubmatrix(m, mpre, m.block_rows(), 0, m.block_cols());
    QMatrix b_pre = qsubmatrix(b, 0, npre, 0, b.block_cols());
    QMatrix b_shared = qsubmatrix(b, npre, b.block_rows(), 0, b.block_cols());
    return qblocks({{&m_pre, nullptr}, {nullptr, &b_pre}, {&m_shared, &b_shared}});
}

QMatrix double_interval_zero(int n, const StarArrow& delta) {
    QMatrix m = double_interval(n, StarArrow::alpha(1), delta);
    const std::string b0 = star_beta(0);
    for (auto& e : m.entries) {
        std::erase_if(e.terms, [&](const QEntry::Term& t) {
            return t.path.arrows.size() == 1 && t.path.arrows[0] == b0;
        });
    }
    return m;
}

QMatrix rank_function_matrix(int n, const RankFunction& f) {
    switch (f.family) {
        case RankFunction::Interval: return interval(n, f.gamma, f.delta);
        case RankFunction::Double: return double_interval(n, f.gamma, f.delta);
        case RankFunction::DoubleZero: return double_interval_zero(n, f.delta);
    }
    throw std::logic_error("bad rank function family");
}

std::vector<RankFunction> enumerate_rank_functions(int n) {
    auto order = star_arrows_in_order(n);
    std::vector<RankFunction> fns;
    const StarArrow a1 = StarArrow::alpha(1);
    for (const auto& g : order) {
        if (g == a1) continue;
        for (const auto& d : order)
            if (arrow_leq(g, d)) fns.push_back({RankFunction::Interval, g, d});
    }
    for (const auto& g : order) {
        if (!arrow_leq(a1, g)) continue;
        for (const auto& d : order)
            if (arrow_leq(g, d)) fns.push_back({RankFunction::Double, g, d});
    }
    for (const auto& d : order)
        if (arrow_leq(a1, d)) fns.push_back({RankFunction::DoubleZero, a1, d});
    return fns;
}

} // namespace qdeg
