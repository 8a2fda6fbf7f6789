#pragma once

#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include "qdeg/matrix.hpp"
#include "qdeg/quiver.hpp"

namespace qdeg {

// A representation assigns to each arrow a matrix with dim(tail) rows and
// dim(head) columns (matrices act on row vectors by right multiplication).
template <class F>
struct Rep {
    std::shared_ptr<const Quiver> quiver;
    DimVector dim;
    std::vector<Matrix<F>> mats; // indexed like quiver->arrows

    const Matrix<F>& mat(const std::string& arrow) const {
        int ai = quiver->arrow_index(arrow);
        if (ai < 0) throw std::invalid_argument("unknown arrow: " + arrow);
        return mats[static_cast<std::size_t>(ai)];
    }
};

template <class F>
void check_shapes(const Rep<F>& v) {
    if (v.dim.size() != v.quiver->vertices.size())
        throw std::invalid_argument("dimension vector does not cover all vertices");
    if (v.mats.size() != v.quiver->arrows.size())
        throw std::invalid_argument("representation must assign a matrix to every arrow");
    for (std::size_t ai = 0; ai < v.mats.size(); ++ai) {
        const auto& a = v.quiver->arrows[ai];
        if (v.mats[ai].rows() != static_cast<std::size_t>(v.dim[static_cast<std::size_t>(a.tail)]) ||
            v.mats[ai].cols() != static_cast<std::size_t>(v.dim[static_cast<std::size_t>(a.head)]))
            throw std::invalid_argument("matrix over arrow " + a.name + " has the wrong shape");
    }
}

template <class F>
Rep<F> zero_rep(F f, std::shared_ptr<const Quiver> q, DimVector d) {
    Rep<F> v{std::move(q), std::move(d), {}};
    for (const auto& a : v.quiver->arrows)
        v.mats.emplace_back(f, static_cast<std::size_t>(v.dim[static_cast<std::size_t>(a.tail)]),
                            static_cast<std::size_t>(v.dim[static_cast<std::size_t>(a.head)]));
    return v;
}

template <class F>
Rep<F> random_rep(F f, std::shared_ptr<const Quiver> q, DimVector d, std::mt19937_64& rng) {
    Rep<F> v{std::move(q), std::move(d), {}};
    for (const auto& a : v.quiver->arrows)
        v.mats.push_back(random_matrix(f, static_cast<std::size_t>(v.dim[static_cast<std::size_t>(a.tail)]),
                                       static_cast<std::size_t>(v.dim[static_cast<std::size_t>(a.head)]),
                                       rng));
    return v;
}

// Base change group element: one invertible matrix per vertex.
template <class F>
struct GroupElement {
    std::vector<Matrix<F>> factors;

    static GroupElement make(std::vector<Matrix<F>> gs) {
        for (const auto& g : gs)
            if (!is_invertible(g))
                throw std::invalid_argument("group element factor is not invertible");
        return GroupElement{std::move(gs)};
    }

    static GroupElement identity(F f, const DimVector& d) {
        GroupElement g;
        for (int dv : d) g.factors.push_back(Matrix<F>::identity(f, static_cast<std::size_t>(dv)));
        return g;
    }

    static GroupElement random(F f, const DimVector& d, std::mt19937_64& rng) {
        GroupElement g;
        for (int dv : d)
            g.factors.push_back(random_invertible(f, static_cast<std::size_t>(dv), rng));
        return g;
    }

    GroupElement inverse() const {
        GroupElement g;
        for (const auto& m : factors) g.factors.push_back(*qdeg::inverse(m));
        return g;
    }

    GroupElement compose(const GroupElement& o) const {
        GroupElement g;
        for (std::size_t i = 0; i < factors.size(); ++i)
            g.factors.push_back(mul(factors[i], o.factors[i]));
        return g;
    }
};

// V . g = (g_tail^{-1} V_a g_head) per arrow.
template <class F>
Rep<F> act(const Rep<F>& v, const GroupElement<F>& g) {
    if (g.factors.size() != v.dim.size())
        throw std::invalid_argument("group element does not match dimension vector");
    std::vector<Matrix<F>> invs;
    invs.reserve(g.factors.size());
    for (const auto& m : g.factors) {
        auto mi = inverse(m);
        if (!mi) throw std::invalid_argument("group element factor is not invertible");
        invs.push_back(*mi);
    }
    Rep<F> w = v;
    for (std::size_t ai = 0; ai < v.mats.size(); ++ai) {
        const auto& a = v.quiver->arrows[ai];
        w.mats[ai] = mul(mul(invs[static_cast<std::size_t>(a.tail)], v.mats[ai]),
                         g.factors[static_cast<std::size_t>(a.head)]);
    }
    return w;
}

// Duality with the opposite quiver: arrows reversed, matrices transposed.
template <class F>
Rep<F> transpose_rep(const Rep<F>& v) {
    Rep<F> w;
    w.quiver = std::make_shared<const Quiver>(opposite(*v.quiver));
    w.dim = v.dim;
    for (const auto& m : v.mats) w.mats.push_back(transpose(m));
    return w;
}

template <class F>
Rep<F> direct_sum(const Rep<F>& v, const Rep<F>& w) {
    if (!(*v.quiver == *w.quiver)) throw std::invalid_argument("direct sum needs a common quiver");
    Rep<F> s;
    s.quiver = v.quiver;
    s.dim.resize(v.dim.size());
    for (std::size_t z = 0; z < v.dim.size(); ++z) s.dim[z] = v.dim[z] + w.dim[z];
    for (std::size_t ai = 0; ai < v.mats.size(); ++ai)
        s.mats.push_back(diag_sum(v.mats[ai], w.mats[ai]));
    return s;
}

// Dimension of Hom(V, W): the solution space of V_a phi_head = phi_tail W_a
// over all arrows, in unknowns phi_z of shape dimV(z) x dimW(z).
template <class F>
std::size_t hom_dim(const Rep<F>& v, const Rep<F>& w) {
    if (!(*v.quiver == *w.quiver)) throw std::invalid_argument("hom_dim needs a common quiver");
    const Quiver& q = *v.quiver;
    F f = v.mats.empty() ? F() : v.mats[0].field();

    std::vector<std::size_t> offset(q.vertices.size() + 1, 0);
    for (std::size_t z = 0; z < q.vertices.size(); ++z)
        offset[z + 1] = offset[z] + static_cast<std::size_t>(v.dim[z]) * static_cast<std::size_t>(w.dim[z]);
    const std::size_t unknowns = offset.back();

    std::size_t eqs = 0;
    for (const auto& a : q.arrows)
        eqs += static_cast<std::size_t>(v.dim[static_cast<std::size_t>(a.tail)]) *
               static_cast<std::size_t>(w.dim[static_cast<std::size_t>(a.head)]);

    Matrix<F> sys(f, eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const auto& a = q.arrows[ai];
        const auto ta = static_cast<std::size_t>(a.tail), ha = static_cast<std::size_t>(a.head);
        const std::size_t dv_t = static_cast<std::size_t>(v.dim[ta]);
        const std::size_t dw_h = static_cast<std::size_t>(w.dim[ha]);
        const std::size_t dv_h = static_cast<std::size_t>(v.dim[ha]);
        const std::size_t dw_t = static_cast<std::size_t>(w.dim[ta]);
        // Equation (i, j): sum_k V_a[i,k] phi_head[k,j] - sum_l phi_tail[i,l] W_a[l,j] = 0.
        for (std::size_t i = 0; i < dv_t; ++i) {
            for (std::size_t j = 0; j < dw_h; ++j) {
                for (std::size_t k = 0; k < dv_h; ++k) {
                    std::size_t col = offset[ha] + k * dw_h + j;
                    sys.at(row, col) = f.add(sys.at(row, col), v.mats[ai].at(i, k));
                }
                for (std::size_t l = 0; l < dw_t; ++l) {
                    std::size_t col = offset[ta] + i * dw_t + l;
                    sys.at(row, col) = f.sub(sys.at(row, col), w.mats[ai].at(l, j));
                }
                ++row;
            }
        }
    }
    return nullspace_dim(sys);
}

} // namespace qdeg
