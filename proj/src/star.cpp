#include "qdeg/star.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdeg {

std::string star_x(int i) { return "x" + std::to_string(i); }
std::string star_y(int i) { return "y" + std::to_string(i); }
std::string star_y0p() { return "y0'"; }
std::string star_alpha(int i) { return "a" + std::to_string(i); }
std::string star_alpha1p() { return "a1'"; }
std::string star_beta(int i) { return "b" + std::to_string(i); }

Quiver build_star(int n) {
    if (n < 1) throw std::invalid_argument("star quiver requires n >= 1");
    Quiver q;
    q.add_vertex(star_x(0));
    q.add_vertex(star_y(0));
    q.add_vertex(star_y0p());
    for (int i = 1; i <= n; ++i) {
        q.add_vertex(star_x(i));
        q.add_vertex(star_y(i));
    }
    q.add_arrow(star_beta(0), star_y(0), star_x(0));
    q.add_arrow(star_alpha(1), star_y(0), star_x(1));
    q.add_arrow(star_alpha1p(), star_y0p(), star_x(1));
    for (int i = 1; i <= n; ++i) {
        q.add_arrow(star_beta(i), star_y(i), star_x(i));
        if (i >= 2) q.add_arrow(star_alpha(i), star_y(i - 1), star_x(i));
    }
    return q;
}

namespace {

// The zig-zag arrows after x1 in left-to-right order: b1, a2, b2, a3, ...
// ak points away from x1 (rightward), bk toward it.  Index k of the t-th
// list entry (t from 0): b ceil((t+2)/2) for even t, a (t+3)/2 for odd t.
struct ZigzagArrow {
    bool is_alpha; // alpha points away from the branch
    int index;
    std::string name() const { return is_alpha ? star_alpha(index) : star_beta(index); }
    // New vertex reached when walking left to right.
    std::string new_vertex() const { return is_alpha ? star_x(index) : star_y(index); }
};

ZigzagArrow zigzag_at(int t) {
    if (t % 2 == 0) return {false, t / 2 + 1};
    return {true, t / 2 + 2};
}

} // namespace

StarEmbedding embed_type_D(const Quiver& q, const DimVector& d) {
    if (d.size() != q.vertices.size())
        throw std::invalid_argument("dimension vector does not cover all vertices");

    StarEmbedding e;
    e.source = std::make_shared<const Quiver>(q);
    TypeDShape shape = analyze_type_D(q);
    if (!shape.short_inward[0] && !shape.short_inward[1]) {
        e.opposite = true;
        e.normalized = std::make_shared<const Quiver>(opposite(q));
        shape = analyze_type_D(*e.normalized);
    } else {
        e.normalized = e.source;
    }
    const Quiver& nq = *e.normalized;

    // Assign the two length-1 branches.  Composable case: the outward arrow
    // (gamma) maps onto b0 with a1 contracted; the inward arrow (delta) maps
    // onto a1'.  Both inward: gamma maps onto a1, delta onto a1', and x0
    // carries dimension 0.
    int gamma_k, delta_k;
    if (shape.short_inward[0] && shape.short_inward[1]) {
        e.composable = false;
        gamma_k = 0;
        delta_k = 1;
    } else {
        e.composable = true;
        gamma_k = shape.short_inward[0] ? 1 : 0;
        delta_k = 1 - gamma_k;
    }
    const int gamma_leaf = shape.short_leaf[gamma_k];
    const int delta_leaf = shape.short_leaf[delta_k];
    const std::string gamma_arrow = nq.arrows[static_cast<std::size_t>(shape.short_arrow[gamma_k])].name;
    const std::string delta_arrow = nq.arrows[static_cast<std::size_t>(shape.short_arrow[delta_k])].name;

    // vertex assignment: star vertex name -> normalized-quiver vertex (-1 for
    // the unused x0).
    std::vector<std::pair<std::string, int>> vmap;
    if (e.composable) {
        vmap = {{star_x(0), gamma_leaf}, {star_y(0), shape.branch}, {star_y0p(), delta_leaf},
                {star_x(1), shape.branch}};
        e.contracted.push_back(star_alpha(1));
        e.arrow_to_source[star_beta(0)] = gamma_arrow;
    } else {
        vmap = {{star_x(0), -1}, {star_y(0), gamma_leaf}, {star_y0p(), delta_leaf},
                {star_x(1), shape.branch}};
        e.arrow_to_source[star_alpha(1)] = gamma_arrow;
    }
    e.arrow_to_source[star_alpha1p()] = delta_arrow;

    // Greedy walk of the long branch onto the zig-zag.  Each zig-zag arrow
    // either matches the next long-branch arrow's direction (and maps onto
    // it) or is contracted, merging its new vertex into the current class.
    int cursor = shape.branch;
    std::size_t next = 0; // next long-branch arrow to place
    int t = 0;
    int last_index = 1; // ensures n >= 1
    while (next < shape.long_arrows.size()) {
        ZigzagArrow za = zigzag_at(t++);
        last_index = za.index;
        if (za.is_alpha == shape.long_away[next]) {
            cursor = shape.long_vertices[next];
            vmap.emplace_back(za.new_vertex(), cursor);
            e.arrow_to_source[za.name()] =
                nq.arrows[static_cast<std::size_t>(shape.long_arrows[next])].name;
            ++next;
        } else {
            vmap.emplace_back(za.new_vertex(), cursor);
            e.contracted.push_back(za.name());
        }
    }
    e.n = last_index;
    // A trailing y_n left over when the walk ends on an alpha.
    if (t % 2 == 0) {
        ZigzagArrow za = zigzag_at(t);
        vmap.emplace_back(za.new_vertex(), cursor);
        e.contracted.push_back(za.name());
    }

    e.star = std::make_shared<const Quiver>(build_star(e.n));
    e.star_vertex_to_source.assign(e.star->vertices.size(), -1);
    for (const auto& [name, src] : vmap) {
        int vi = e.star->vertex_index(name);
        if (vi < 0) throw std::logic_error("star embedding produced an unknown vertex: " + name);
        e.star_vertex_to_source[static_cast<std::size_t>(vi)] = src;
    }
    e.dstar.assign(e.star->vertices.size(), 0);
    for (std::size_t v = 0; v < e.dstar.size(); ++v) {
        int src = e.star_vertex_to_source[v];
        e.dstar[v] = src < 0 ? 0 : d[static_cast<std::size_t>(src)];
    }
    return e;
}

} // namespace qdeg
