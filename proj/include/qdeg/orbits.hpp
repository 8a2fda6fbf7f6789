#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdeg/roots.hpp"
#include "qdeg/star.hpp"
#include "qdeg/zigzag.hpp"

namespace qdeg {

// Multiset of positive roots whose vector sum is the dimension vector;
// canonical sorted storage of (root index, multiplicity) pairs.
struct OrbitLabel {
    std::vector<std::pair<std::size_t, int>> parts;

    bool operator==(const OrbitLabel& o) const { return parts == o.parts; }
    bool operator<(const OrbitLabel& o) const { return parts < o.parts; }
};

inline constexpr std::size_t kDefaultOrbitBudget = 100000;

// All multisets of positive roots summing to d.  Counts first and refuses to
// materialize past the budget.
std::vector<OrbitLabel> enumerate_orbit_labels(const std::vector<Root>& roots, const DimVector& d,
                                               std::size_t budget = kDefaultOrbitBudget);

std::string label_to_string(const OrbitLabel& label, const std::vector<Root>& roots);

// Orbits of rep_Q(d) with representatives built as direct sums of sampled
// indecomposables, plus everything the order computations need.
template <class F>
struct OrbitSet {
    std::shared_ptr<const Quiver> quiver;
    DimVector dim;
    RootSystem<F> roots;
    std::vector<OrbitLabel> labels;
    std::vector<Rep<F>> reps;
};

template <class F>
OrbitSet<F> enumerate_orbits(F f, std::shared_ptr<const Quiver> q, const DimVector& d,
                             std::uint64_t seed, std::size_t budget = kDefaultOrbitBudget) {
    OrbitSet<F> os;
    os.quiver = q;
    os.dim = d;
    os.roots = build_root_system(f, q, seed);
    os.labels = enumerate_orbit_labels(os.roots.roots, d, budget);
    for (const auto& label : os.labels) {
        Rep<F> rep = zero_rep(f, q, DimVector(d.size(), 0));
        for (const auto& [ri, mult] : label.parts)
            for (int c = 0; c < mult; ++c) rep = direct_sum(rep, os.roots.indecomposables[ri]);
        os.reps.push_back(std::move(rep));
    }
    return os;
}

// --- Degeneration order ---------------------------------------------------------

template <class F>
RankSignature orbit_signature(const Rep<F>& v, const StarEmbedding& e) {
    return signature(star_extend(v, e), e.n);
}

// True when w lies in the closure of v's orbit: componentwise comparison of
// the rank signatures of the star extensions.
template <class F>
bool degenerates_to(const Rep<F>& v, const Rep<F>& w, const StarEmbedding& e) {
    if (!(*v.quiver == *w.quiver) || v.dim != w.dim)
        throw std::invalid_argument("degeneration order needs matching quiver and dimensions");
    return signature_leq(orbit_signature(w, e), orbit_signature(v, e));
}

template <class F>
bool same_orbit(const Rep<F>& v, const Rep<F>& w, const StarEmbedding& e) {
    if (!(*v.quiver == *w.quiver) || v.dim != w.dim)
        throw std::invalid_argument("orbit comparison needs matching quiver and dimensions");
    return orbit_signature(v, e) == orbit_signature(w, e);
}

// The independent oracle: w is in the closure of v's orbit iff every
// indecomposable has at least as many homs into w as into v.
template <class F>
bool bongartz_leq(const RootSystem<F>& rs, const Rep<F>& v, const Rep<F>& w) {
    auto hv = hom_vector(rs, v), hw = hom_vector(rs, w);
    for (std::size_t i = 0; i < hv.size(); ++i)
        if (hv[i] > hw[i]) return false;
    return true;
}

// --- Poset construction ---------------------------------------------------------

struct DegenerationPoset {
    std::vector<OrbitLabel> labels;
    std::vector<RankSignature> signatures;
    std::vector<std::pair<int, int>> edges; // cover v -> w: w degenerates from v
    int generic = -1;                       // index of the unique maximal node
};

// Hasse edges of the partial order given by a leq predicate on node indices;
// `leq(i, j)` means j is in the closure of i.  Checks antisymmetry and that
// a unique maximal element exists, throwing std::logic_error otherwise (a
// violation would contradict the orbit invariants, so it is a bug detector).
std::vector<std::pair<int, int>> hasse_edges(std::size_t count,
                                             const std::function<bool(int, int)>& leq);

template <class F>
DegenerationPoset hasse_poset(const OrbitSet<F>& os, const StarEmbedding& e) {
    DegenerationPoset p;
    p.labels = os.labels;
    p.signatures.resize(os.reps.size());
    const std::ptrdiff_t k = static_cast<std::ptrdiff_t>(os.reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < k; ++i)
        p.signatures[static_cast<std::size_t>(i)] =
            orbit_signature(os.reps[static_cast<std::size_t>(i)], e);

    auto leq = [&](int i, int j) {
        return signature_leq(p.signatures[static_cast<std::size_t>(j)],
                             p.signatures[static_cast<std::size_t>(i)]);
    };
    p.edges = hasse_edges(os.reps.size(), leq);
    for (std::size_t i = 0; i < os.reps.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < os.reps.size(); ++j)
            if (j != i && leq(static_cast<int>(j), static_cast<int>(i))) { maximal = false; break; }
        if (maximal) {
            if (p.generic >= 0) throw std::logic_error("degeneration poset has two maximal orbits");
            p.generic = static_cast<int>(i);
        }
    }
    if (p.generic < 0) throw std::logic_error("degeneration poset has no maximal orbit");
    return p;
}

// Same poset computed through the Hom-dimension oracle.
template <class F>
DegenerationPoset hasse_poset_bongartz(const OrbitSet<F>& os) {
    DegenerationPoset p;
    p.labels = os.labels;
    std::vector<std::vector<std::size_t>> homs(os.reps.size());
    const std::ptrdiff_t k = static_cast<std::ptrdiff_t>(os.reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < k; ++i)
        homs[static_cast<std::size_t>(i)] = hom_vector(os.roots, os.reps[static_cast<std::size_t>(i)]);
    auto leq = [&](int i, int j) {
        const auto& hi = homs[static_cast<std::size_t>(i)];
        const auto& hj = homs[static_cast<std::size_t>(j)];
        for (std::size_t x = 0; x < hi.size(); ++x)
            if (hi[x] > hj[x]) return false;
        return true;
    };
    p.edges = hasse_edges(os.reps.size(), leq);
    p.generic = -1;
    for (std::size_t i = 0; i < os.reps.size() && p.generic < 0; ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < os.reps.size(); ++j)
            if (j != i && leq(static_cast<int>(j), static_cast<int>(i))) { maximal = false; break; }
        if (maximal) p.generic = static_cast<int>(i);
    }
    return p;
}

} // namespace qdeg
