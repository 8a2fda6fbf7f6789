#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "qdeg/rep.hpp"

namespace qdeg {

// Dimension vectors of indecomposables for Dynkin quivers are the positive
// roots of the underlying diagram: the nonzero vectors with Tits form value 1.
using Root = DimVector;

// Tits form q(d) = sum_z d(z)^2 - sum_a d(ta) d(ha).
long tits_form(const Quiver& q, const DimVector& d);

// True when the underlying graph is a simply-laced Dynkin diagram of type A
// or D (connected tree, max degree 3, at most one degree-3 vertex whose two
// short branches mark it as type D; a path is type A).
bool is_dynkin_AD(const Quiver& q);

// Positive roots as dimension vectors on q's vertices, enumerated by brute
// force over vectors with entries <= 2 and Tits form 1.  Deterministic
// lexicographic order.  Throws on non-Dynkin input.
std::vector<Root> positive_roots(const Quiver& q);

// Generic representation of a positive root, verified indecomposable by the
// brick test hom_dim(V, V) == 1.  Retries with fresh randomness up to the
// budget, then throws (the message carries the seed).
inline constexpr int kIndecomposableRetryBudget = 64;

template <class F>
Rep<F> sample_indecomposable(F f, std::shared_ptr<const Quiver> q, const Root& root,
                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kIndecomposableRetryBudget; ++attempt) {
        Rep<F> v = random_rep(f, q, root, rng);
        if (hom_dim(v, v) == 1) return v;
    }
    throw std::runtime_error("failed to sample an indecomposable after " +
                             std::to_string(kIndecomposableRetryBudget) +
                             " attempts (seed " + std::to_string(seed) + ")");
}

// One sampled indecomposable per positive root of a Dynkin quiver, plus the
// Hom matrix used to read off Krull-Schmidt multiplicities.
template <class F>
struct RootSystem {
    std::shared_ptr<const Quiver> quiver;
    std::vector<Root> roots;
    std::vector<Rep<F>> indecomposables;
    RMatrix hom_matrix;         // hom_matrix[y][x] = dim Hom(X_y, X_x)
    RMatrix hom_matrix_inverse;
};

template <class F>
RootSystem<F> build_root_system(F f, std::shared_ptr<const Quiver> q, std::uint64_t seed) {
    RootSystem<F> rs;
    rs.quiver = q;
    rs.roots = positive_roots(*q);
    for (std::size_t r = 0; r < rs.roots.size(); ++r)
        rs.indecomposables.push_back(sample_indecomposable(f, q, rs.roots[r], seed + 1000003 * r));

    const std::size_t k = rs.roots.size();
    rs.hom_matrix = RMatrix(RationalField{}, k, k);
    for (std::size_t y = 0; y < k; ++y)
        for (std::size_t x = 0; x < k; ++x)
            rs.hom_matrix.at(y, x) = mpq_class(static_cast<long>(
                hom_dim(rs.indecomposables[y], rs.indecomposables[x])));
    auto inv = inverse(rs.hom_matrix);
    if (!inv)
        throw std::runtime_error("Hom matrix of the root system is singular (bad sampling?)");
    rs.hom_matrix_inverse = *inv;
    return rs;
}

// Hom vector (dim Hom(X_y, v))_y against all sampled indecomposables; this is
// a complete orbit invariant and the substrate of the Bongartz criterion.
template <class F>
std::vector<std::size_t> hom_vector(const RootSystem<F>& rs, const Rep<F>& v) {
    std::vector<std::size_t> h(rs.roots.size());
    for (std::size_t y = 0; y < rs.roots.size(); ++y)
        h[y] = hom_dim(rs.indecomposables[y], v);
    return h;
}

// Krull-Schmidt multiplicities of v, recovered by solving
//   sum_x m_x dim Hom(X_y, X_x) = dim Hom(X_y, v)  over all y.
// Returns the multiset of roots as (root index, multiplicity) pairs.
template <class F>
std::vector<std::pair<std::size_t, int>> multiplicities(const RootSystem<F>& rs, const Rep<F>& v) {
    auto h = hom_vector(rs, v);
    const std::size_t k = rs.roots.size();
    std::vector<std::pair<std::size_t, int>> out;
    for (std::size_t x = 0; x < k; ++x) {
        mpq_class m = 0;
        for (std::size_t y = 0; y < k; ++y)
            m += rs.hom_matrix_inverse.at(x, y) * mpq_class(static_cast<long>(h[y]));
        if (m == 0) continue;
        if (m.get_den() != 1 || m < 0)
            throw std::runtime_error("inconsistent Hom system while computing multiplicities");
        out.emplace_back(x, static_cast<int>(m.get_num().get_si()));
    }
    return out;
}

} // namespace qdeg
