#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qdeg/quiver.hpp"
#include "qdeg/rep.hpp"

namespace qdeg {

// Vertex and arrow names of the bipartite star quiver: vertices x0..xn, y0,
// y0', y1..yn; arrows b0: y0->x0, a1: y0->x1, a1': y0'->x1, bi: yi->xi,
// ai: y(i-1)->xi for i >= 2.
std::string star_x(int i);
std::string star_y(int i);
std::string star_y0p();
std::string star_alpha(int i);  // a1 is alpha_1
std::string star_alpha1p();
std::string star_beta(int i);   // b0 is beta_0

// The star quiver with 2n+3 vertices and 2n+2 arrows; n >= 1.
Quiver build_star(int n);

// Deterministic plan embedding a type D quiver into a star quiver by
// contraction.  The two length-1 branches map to the y0/y0' side; the long
// branch walks onto the x1 y1 x2 ... zig-zag greedily, contracting every
// zig-zag arrow whose direction disagrees with the walk.  n is the largest
// zig-zag index the walk consumes.
struct StarEmbedding {
    std::shared_ptr<const Quiver> source;     // the quiver handed in
    std::shared_ptr<const Quiver> normalized; // source or its opposite
    bool opposite = false;                    // normalized == opposite(source)
    bool composable = false;                  // short-branch case tag
    int n = 0;
    std::shared_ptr<const Quiver> star;
    std::vector<std::string> contracted;                         // the set A
    std::vector<int> star_vertex_to_source;                      // -1 for x0 in the both-inward case
    std::unordered_map<std::string, std::string> arrow_to_source; // non-contracted arrows, except b0 when dstar(x0) = 0
    DimVector dstar;                                             // on star
};

StarEmbedding embed_type_D(const Quiver& q, const DimVector& d);

// V*1: the matrices of v placed over their star arrows, identity matrices
// over contracted arrows, and the empty dstar(y0) x 0 matrix over b0 in the
// both-inward case.  Applies the opposite-quiver normalization first when
// the plan calls for it.
template <class F>
Rep<F> star_extend(const Rep<F>& v, const StarEmbedding& e) {
    if (v.dim.size() != e.source->vertices.size())
        throw std::invalid_argument("representation does not match the embedding's source quiver");
    Rep<F> src = e.opposite ? transpose_rep(v) : v;
    check_shapes(src);
    F f = src.mats.empty() ? F() : src.mats[0].field();

    Rep<F> w;
    w.quiver = e.star;
    w.dim = e.dstar;
    for (const auto& a : e.star->arrows) {
        const auto dt = static_cast<std::size_t>(e.dstar[static_cast<std::size_t>(a.tail)]);
        const auto dh = static_cast<std::size_t>(e.dstar[static_cast<std::size_t>(a.head)]);
        auto it = e.arrow_to_source.find(a.name);
        if (it != e.arrow_to_source.end()) {
            const Matrix<F>& m = src.mat(it->second);
            if (m.rows() != dt || m.cols() != dh)
                throw std::invalid_argument("matrix over " + it->second +
                                            " does not match the star dimension vector");
            w.mats.push_back(m);
        } else if (std::find(e.contracted.begin(), e.contracted.end(), a.name) !=
                   e.contracted.end()) {
            w.mats.push_back(Matrix<F>::identity(f, dt));
        } else {
            // b0 in the both-inward case: dstar(x0) = 0.
            w.mats.emplace_back(f, dt, dh);
        }
    }
    return w;
}

// Membership in the open set where the extension lands: the matrix over
// every contracted arrow must be square and invertible.
template <class F>
bool in_open_stratum(const Rep<F>& w, const StarEmbedding& e) {
    for (const auto& name : e.contracted) {
        const Matrix<F>& m = w.mat(name);
        if (m.rows() != m.cols() || !is_invertible(m)) return false;
    }
    return true;
}

} // namespace qdeg
