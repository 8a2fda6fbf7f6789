#include "qdeg/slice.hpp"

#include <stdexcept>

namespace qdeg {

std::vector<ColLabel> column_labels(int n) {
    if (n < 1) throw std::invalid_argument("column labels require n >= 1");
    std::vector<ColLabel> cols;
    for (int j = n; j >= 0; --j) cols.push_back({ColLabel::X, j});
    for (int j = 0; j <= n; ++j) cols.push_back({ColLabel::XS, j});
    for (int i = n; i >= 1; --i) cols.push_back({ColLabel::Y, i});
    cols.push_back({ColLabel::Y0, 0});
    for (int i = 1; i <= n; ++i) cols.push_back({ColLabel::YS, i});
    return cols;
}

int SliceLayout::col_pos(ColLabel l) const {
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (cols[k] == l) return static_cast<int>(k);
    throw std::invalid_argument("no such column label: " + l.display());
}

std::shared_ptr<const SliceLayout> make_slice_layout(int n, const DimVector& dstar) {
    auto L = std::make_shared<SliceLayout>();
    L->n = n;
    L->star = std::make_shared<const Quiver>(build_star(n));
    if (dstar.size() != L->star->vertices.size())
        throw std::invalid_argument("dimension vector does not match the star quiver");
    L->dstar = dstar;
    auto d = [&](const std::string& name) {
        return dstar[static_cast<std::size_t>(L->star->vertex_index(name))];
    };
    L->q = d(star_y(0));
    L->t = d(star_y0p());
    L->r = 0;
    L->s = 0;
    for (int i = 1; i <= n; ++i) L->r += d(star_y(i));
    for (int j = 0; j <= n; ++j) L->s += d(star_x(j));
    L->a = L->q + L->r + L->s;
    L->b = L->t + L->r + L->s;

    L->cols = column_labels(n);
    for (const auto& c : L->cols) {
        switch (c.kind) {
            case ColLabel::X: L->col_width.push_back(d(star_x(c.index))); break;
            case ColLabel::XS: L->col_width.push_back(d(star_x(c.index))); break;
            case ColLabel::Y: L->col_width.push_back(d(star_y(c.index))); break;
            case ColLabel::Y0: L->col_width.push_back(L->q + L->t); break;
            case ColLabel::YS: L->col_width.push_back(d(star_y(c.index))); break;
        }
    }
    L->col_offset.push_back(0);
    for (int w : L->col_width) L->col_offset.push_back(L->col_offset.back() + w);
    if (L->col_offset.back() != L->a + L->b)
        throw std::logic_error("slice column widths do not add up");

    L->mrow_height.push_back(L->q);
    L->nrow_height.push_back(L->t);
    for (int i = 1; i <= n; ++i) {
        L->mrow_height.push_back(d(star_y(i)));
        L->nrow_height.push_back(d(star_y(i)));
    }
    for (int j = 0; j <= n; ++j) {
        L->mrow_height.push_back(d(star_x(j)));
        L->nrow_height.push_back(d(star_x(j)));
    }
    L->mrow_offset.push_back(0);
    for (int h : L->mrow_height) L->mrow_offset.push_back(L->mrow_offset.back() + h);
    L->nrow_offset.push_back(0);
    for (int h : L->nrow_height) L->nrow_offset.push_back(L->nrow_offset.back() + h);
    return L;
}

// --- Classification -------------------------------------------------------------
//
// Restricted to the slice, the rank functions split into three classes.  The
// tables below record, for each label (pair), whether the function is
// constant, cuts out the image of the embedding, or matches a distinguished
// quiver rank function.

namespace {

FunctionClass constant() { return {FunctionClass::Constant, std::nullopt}; }
FunctionClass image() { return {FunctionClass::Image, std::nullopt}; }
FunctionClass quiver(RankFunction f) { return {FunctionClass::Quiver, f}; }

RankFunction interval_fn(StarArrow g, StarArrow d) { return {RankFunction::Interval, g, d}; }
RankFunction double_fn(StarArrow g, StarArrow d) { return {RankFunction::Double, g, d}; }
RankFunction double0_fn(StarArrow d) {
    return {RankFunction::DoubleZero, StarArrow::alpha(1), d};
}

} // namespace

FunctionClass classify_upper(int n, int v) {
    auto cols = column_labels(n);
    ColLabel l = cols.at(static_cast<std::size_t>(v));
    switch (l.kind) {
        case ColLabel::X: return constant();
        case ColLabel::XS:
            return quiver(interval_fn(StarArrow::beta0(), l.index == 0 ? StarArrow::beta0()
                                                                       : StarArrow::beta(l.index)));
        case ColLabel::Y:
            return quiver(interval_fn(StarArrow::beta0(), StarArrow::alpha(l.index)));
        case ColLabel::Y0:
        case ColLabel::YS: return constant();
    }
    throw std::logic_error("unclassified upper rank function");
}

FunctionClass classify_lower(int n, int v) {
    auto cols = column_labels(n);
    ColLabel l = cols.at(static_cast<std::size_t>(v));
    switch (l.kind) {
        case ColLabel::X: return constant();
        case ColLabel::XS:
            if (l.index == 0) return image();
            return quiver(interval_fn(StarArrow::alpha1p(), StarArrow::beta(l.index)));
        case ColLabel::Y:
            return quiver(interval_fn(StarArrow::alpha1p(), l.index == 1
                                                                ? StarArrow::alpha1p()
                                                                : StarArrow::alpha(l.index)));
        case ColLabel::Y0:
        case ColLabel::YS: return constant();
    }
    throw std::logic_error("unclassified lower rank function");
}

FunctionClass classify_both(int n, int v, int w) {
    auto cols = column_labels(n);
    if (!(0 <= v && v < w && w < static_cast<int>(cols.size())))
        throw std::invalid_argument("classify_both requires label positions v < w");
    ColLabel lv = cols.at(static_cast<std::size_t>(v));
    ColLabel lw = cols.at(static_cast<std::size_t>(w));
    const int pos_y0 = 3 * n + 2; // position of the merged label
    const int pos_y1 = pos_y0 - 1;

    // Constant families.
    if (lw.kind == ColLabel::YS && lw.index == n) return constant();
    if (lv.kind == ColLabel::X && lv.index >= 1) {
        int xs_pos = n + 1 + lv.index; // position of x_i^s in the label order
        if (w < xs_pos) return constant();
    }
    if (lv.kind == ColLabel::Y && lv.index >= 2 && lw.kind == ColLabel::YS &&
        lw.index >= lv.index - 1)
        return constant();
    if (lv.kind == ColLabel::Y && lv.index == 1 && lw.kind == ColLabel::Y0) return constant();
    if (v >= pos_y1) return constant();

    // Image families.
    const bool w_in_tail_window = (w >= pos_y0) && (w <= pos_y0 + (n - 1));
    if (lv.kind == ColLabel::X && w_in_tail_window) return image();
    if (lv.kind == ColLabel::XS && lv.index == 0 && w_in_tail_window) return image();
    if (lv.kind == ColLabel::XS && lw.kind == ColLabel::YS && 1 <= lv.index &&
        lv.index <= lw.index && lw.index <= n - 1)
        return image();
    if (lv.kind == ColLabel::X && lw.kind == ColLabel::Y && 1 <= lw.index && lw.index < lv.index)
        return image();

    // Quiver families.
    if (lv.kind == ColLabel::X && lw.kind == ColLabel::XS) {
        int i = lv.index, j = lw.index;
        if (i >= 2 && i <= j) return quiver(interval_fn(StarArrow::alpha(i), StarArrow::beta(j)));
        if (i == 1 && j >= 1) return quiver(double0_fn(StarArrow::beta(j)));
        if (i == 0 && j == 0) return quiver(interval_fn(StarArrow::beta0(), StarArrow::beta0()));
        if (i == 0 && j >= 1)
            return quiver(double_fn(StarArrow::alpha(1), StarArrow::beta(j)));
    }
    if (lv.kind == ColLabel::X && lw.kind == ColLabel::Y) {
        int i = lv.index, j = lw.index;
        if (i >= 2 && j >= i) return quiver(interval_fn(StarArrow::alpha(i), StarArrow::alpha(j)));
        if (i == 1) return quiver(double0_fn(StarArrow::alpha(j)));
        if (i == 0) return quiver(double_fn(StarArrow::alpha(1), StarArrow::alpha(j)));
    }
    if (lv.kind == ColLabel::XS && lw.kind == ColLabel::XS)
        return quiver(double_fn(StarArrow::alpha(lv.index + 1), StarArrow::beta(lw.index)));
    if (lv.kind == ColLabel::XS && lw.kind == ColLabel::Y) {
        int i = lv.index, j = lw.index;
        if (j >= i + 1)
            return quiver(double_fn(StarArrow::alpha(i + 1), StarArrow::alpha(j)));
        return quiver(double_fn(StarArrow::beta(j), StarArrow::beta(i)));
    }
    if (lv.kind == ColLabel::XS && lw.kind == ColLabel::Y0 && lv.index >= 1)
        return quiver(interval_fn(StarArrow::beta(1), StarArrow::beta(lv.index)));
    if (lv.kind == ColLabel::XS && lw.kind == ColLabel::YS && lw.index < lv.index)
        return quiver(interval_fn(StarArrow::beta(lw.index + 1), StarArrow::beta(lv.index)));
    if (lv.kind == ColLabel::Y && lw.kind == ColLabel::Y)
        return quiver(double_fn(StarArrow::beta(lw.index), StarArrow::alpha(lv.index)));
    if (lv.kind == ColLabel::Y && lw.kind == ColLabel::Y0 && lv.index >= 2)
        return quiver(interval_fn(StarArrow::beta(1), StarArrow::alpha(lv.index)));
    if (lv.kind == ColLabel::Y && lw.kind == ColLabel::YS && lw.index <= lv.index - 2)
        return quiver(interval_fn(StarArrow::beta(lw.index + 1), StarArrow::alpha(lv.index)));

    throw std::logic_error("unclassified rank function pair " + lv.display() + "," + lw.display());
}

} // namespace qdeg
