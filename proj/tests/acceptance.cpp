// Acceptance suite: end-to-end checks of the orbit invariants, the
// degeneration order, the Hom-dimension oracle, and the symmetric-variety
// slice, at desk scale.  Prints one PASS/FAIL line per criterion and exits
// with the number of failures.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "qdeg/orbits.hpp"
#include "qdeg/slice.hpp"
#include "qdeg/verify.hpp"

using namespace qdeg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
    std::string name;
    std::shared_ptr<const Quiver> quiver;
    DimVector dim;
};

// Three orientations each of D4, D5, D6.  Branch vertex "b", short leaves
// "p", "q", long branch v1..v(m-3); the orientation mask flips arrows.
Instance make_instance(int m, unsigned mask, DimVector d) {
    Quiver q;
    q.add_vertex("p");
    q.add_vertex("q");
    q.add_vertex("b");
    for (int i = 1; i <= m - 3; ++i) q.add_vertex("v" + std::to_string(i));
    auto arrow = [&](int bit, const std::string& name, const std::string& u, const std::string& w) {
        if (mask & (1u << bit))
            q.add_arrow(name, w, u);
        else
            q.add_arrow(name, u, w);
    };
    arrow(0, "s1", "p", "b");
    arrow(1, "s2", "q", "b");
    std::string prev = "b";
    for (int i = 1; i <= m - 3; ++i) {
        arrow(1 + i, "e" + std::to_string(i), prev, "v" + std::to_string(i));
        prev = "v" + std::to_string(i);
    }
    return {"D" + std::to_string(m) + "/o" + std::to_string(mask),
            std::make_shared<const Quiver>(q), std::move(d)};
}

std::vector<Instance> signature_instances() {
    std::vector<Instance> out;
    for (unsigned mask : {0u, 3u, 5u}) out.push_back(make_instance(4, mask, {1, 2, 3, 2}));
    for (unsigned mask : {0u, 6u, 10u}) out.push_back(make_instance(5, mask, {1, 2, 3, 2, 1}));
    for (unsigned mask : {0u, 11u, 21u})
        out.push_back(make_instance(6, mask, {1, 2, 3, 2, 2, 1}));
    return out;
}

std::vector<Instance> poset_instances() {
    return {
        make_instance(4, 0u, {1, 1, 2, 1}),
        make_instance(4, 3u, {1, 1, 2, 1}),
        make_instance(4, 5u, {2, 1, 2, 1}),
        make_instance(5, 6u, {1, 1, 2, 1, 1}),
        make_instance(5, 0u, {1, 1, 2, 2, 1}),
        make_instance(6, 11u, {1, 1, 2, 1, 1, 1}),
    };
}

std::vector<Instance> separation_instances() {
    auto out = poset_instances();
    out.push_back(make_instance(4, 1u, {2, 2, 3, 2}));
    out.push_back(make_instance(5, 9u, {1, 2, 2, 2, 1}));
    return out;
}

int failures = 0;

void report(int number, const std::string& what, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, what.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

// Criterion 1: the rank signature is a GL(d)-orbit invariant.  200 random
// (V, g) pairs per quiver, exact prime-field arithmetic plus rational spot
// checks, under 30 seconds per quiver.
void criterion_invariance() {
    PrimeField fp(2305843009213693951ULL); // 2^61 - 1
    RationalField fq;
    bool pass = true;
    double worst = 0;
    std::string detail;
    for (const auto& inst : signature_instances()) {
        auto start = Clock::now();
        StarEmbedding e = embed_type_D(*inst.quiver, inst.dim);
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 200; ++trial) {
            auto v = random_rep(fp, inst.quiver, inst.dim, rng);
            auto g = GroupElement<PrimeField>::random(fp, inst.dim, rng);
            if (orbit_signature(v, e) != orbit_signature(act(v, g), e)) {
                pass = false;
                detail = "signature changed under the action on " + inst.name;
            }
        }
        for (int trial = 0; trial < 5; ++trial) {
            auto v = random_rep(fq, inst.quiver, inst.dim, rng);
            auto g = GroupElement<RationalField>::random(fq, inst.dim, rng);
            if (orbit_signature(v, e) != orbit_signature(act(v, g), e)) {
                pass = false;
                detail = "rational signature changed under the action on " + inst.name;
            }
        }
        double t = seconds_since(start);
        worst = std::max(worst, t);
        if (t >= 30.0) {
            pass = false;
            detail = inst.name + " exceeded the 30 s budget";
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "9 quivers, 200+5 pairs each, worst %.1fs", worst);
    report(1, "orbit invariance of rank signatures", pass, detail.empty() ? buf : detail);
}

// Criterion 2: distinct orbits have distinct signatures.
void criterion_separation() {
    RationalField f;
    bool pass = true;
    std::string detail;
    std::size_t total = 0;
    for (const auto& inst : separation_instances()) {
        auto os = enumerate_orbits(f, inst.quiver, inst.dim, 77, 2000);
        StarEmbedding e = embed_type_D(*inst.quiver, inst.dim);
        std::map<RankSignature, std::size_t> seen;
        for (std::size_t i = 0; i < os.reps.size(); ++i) {
            auto sig = orbit_signature(os.reps[i], e);
            auto [it, fresh] = seen.emplace(std::move(sig), i);
            if (!fresh) {
                pass = false;
                detail = inst.name + ": orbits " + std::to_string(it->second) + " and " +
                         std::to_string(i) + " collide";
            }
        }
        total += os.reps.size();
    }
    report(2, "orbit separation of rank signatures", pass,
           detail.empty() ? std::to_string(total) + " orbits across " +
                                std::to_string(separation_instances().size()) + " instances"
                          : detail);
}

// Criterion 3: the Hasse diagram from signatures equals the one from the
// Hom-dimension oracle, edge for edge, under 2 minutes per instance.
void criterion_oracle_posets() {
    RationalField f;
    bool pass = true;
    std::string detail;
    double worst = 0;
    std::size_t orbits = 0;
    for (const auto& inst : poset_instances()) {
        auto start = Clock::now();
        auto os = enumerate_orbits(f, inst.quiver, inst.dim, 78, 300);
        StarEmbedding e = embed_type_D(*inst.quiver, inst.dim);
        auto by_signature = hasse_poset(os, e);
        auto by_oracle = hasse_poset_bongartz(os);
        if (by_signature.edges != by_oracle.edges || by_signature.generic != by_oracle.generic) {
            pass = false;
            detail = inst.name + ": posets disagree";
        }
        orbits += os.reps.size();
        double t = seconds_since(start);
        worst = std::max(worst, t);
        if (t >= 120.0) {
            pass = false;
            detail = inst.name + " exceeded the 2 min budget";
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu orbits, worst instance %.1fs", orbits, worst);
    report(3, "signature poset equals Hom-oracle poset", pass, detail.empty() ? buf : detail);
}

// Criterion 4: the n = 2 classification tables, verified empirically on
// three random dimension vectors with 100 samples per function.
void criterion_tables() {
    RationalField f;
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(79);
    for (int round = 0; round < 3; ++round) {
        Quiver star = build_star(2);
        DimVector d(star.vertices.size());
        for (auto& x : d) x = 1 + static_cast<int>(rng() % 3);
        auto rep = verify_tables(f, 2, d, 100, 80 + static_cast<std::uint64_t>(round));
        if (rep.contradictions != 0) {
            pass = false;
            detail = "round " + std::to_string(round) + " found " +
                     std::to_string(rep.contradictions) + " contradictions";
        }
    }
    report(4, "n=2 slice tables reproduced with zero variance", pass,
           detail.empty() ? "3 dimension vectors, 99 functions each, 100 samples" : detail);
}

// Criterion 5: containment of parabolic orbit closures through the slice
// matches the degeneration order, on every orbit pair.
void criterion_bridge() {
    RationalField f;
    bool pass = true;
    std::string detail;
    std::size_t pairs = 0;
    for (const auto& inst : poset_instances()) {
        auto os = enumerate_orbits(f, inst.quiver, inst.dim, 81, 300);
        StarEmbedding e = embed_type_D(*inst.quiver, inst.dim);
        auto layout = make_slice_layout(e.n, e.dstar);
        std::vector<RankSignature> qsig;
        std::vector<std::vector<std::size_t>> psig;
        for (const auto& rep : os.reps) {
            auto ext = star_extend(rep, e);
            qsig.push_back(signature(ext, e.n));
            auto pt = slice_embed(ext, layout);
            if (!is_invertible(vstack(pt.M, pt.N))) {
                pass = false;
                detail = inst.name + ": embedded point is singular";
            }
            psig.push_back(point_signature(pt));
        }
        auto vec_leq = [](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
            for (std::size_t k = 0; k < x.size(); ++k)
                if (x[k] > y[k]) return false;
            return true;
        };
        for (std::size_t i = 0; i < os.reps.size(); ++i)
            for (std::size_t j = 0; j < os.reps.size(); ++j) {
                bool deg = signature_leq(qsig[j], qsig[i]);
                bool slice = vec_leq(psig[j], psig[i]);
                ++pairs;
                if (deg != slice) {
                    pass = false;
                    detail = inst.name + ": pair " + std::to_string(i) + "," + std::to_string(j) +
                             " disagrees";
                }
            }
    }
    report(5, "slice-criterion consistency with degeneration order", pass,
           detail.empty() ? std::to_string(pairs) + " orbit pairs" : detail);
}

// Criterion 6: equivariance of the slice embedding: both row spaces of
// eta(V.g) and eta(V).theta(g) coincide, 100 trials per instance.
void criterion_equivariance() {
    RationalField f;
    bool pass = true;
    std::string detail;
    for (const auto& inst : poset_instances()) {
        StarEmbedding e = embed_type_D(*inst.quiver, inst.dim);
        auto layout = make_slice_layout(e.n, e.dstar);
        std::mt19937_64 rng(82);
        for (int trial = 0; trial < 100; ++trial) {
            auto v = random_rep(f, layout->star, e.dstar, rng);
            auto g = GroupElement<RationalField>::random(f, e.dstar, rng);
            auto lhs = slice_embed(act(v, g), layout);
            auto rhs = act_point(slice_embed(v, layout), group_embed(g, *layout));
            if (!same_row_space(lhs.M, rhs.M) || !same_row_space(lhs.N, rhs.N)) {
                pass = false;
                detail = inst.name + ": row spaces differ at trial " + std::to_string(trial);
                break;
            }
        }
    }
    report(6, "equivariance of the slice embedding", pass,
           detail.empty() ? "100 trials per instance" : detail);
}

// Criterion 7: structural membership in the image (and in the intermediate
// subvariety) agrees with the rank-minimum formulations on 100 points per
// instance, with minima taken at the embedded zero representation.
void criterion_membership() {
    RationalField f;
    bool pass = true;
    std::string detail;
    for (const auto& inst : poset_instances()) {
        StarEmbedding e = embed_type_D(*inst.quiver, inst.dim);
        auto layout = make_slice_layout(e.n, e.dstar);
        const int n = e.n;
        auto pos = [&](ColLabel l) { return layout->col_pos(l); };
        auto at_zero = slice_template(f, layout);

        // The tail window y0+y0' .. y_{n-1}^s collapses to the merged label
        // alone when n = 1.
        const int w_hi = pos({ColLabel::Y0, 0}) + (n - 1);
        std::vector<std::pair<int, int>> image_pairs;
        for (int j = n; j >= 0; --j)
            for (int w = pos({ColLabel::Y0, 0}); w <= w_hi; ++w)
                image_pairs.emplace_back(pos({ColLabel::X, j}), w);
        for (int w = pos({ColLabel::Y0, 0}); w <= w_hi; ++w)
            image_pairs.emplace_back(pos({ColLabel::XS, 0}), w);
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i; j <= n - 1; ++j)
                image_pairs.emplace_back(pos({ColLabel::XS, i}), pos({ColLabel::YS, j}));
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j)
                image_pairs.emplace_back(pos({ColLabel::X, i}), pos({ColLabel::Y, j}));
        auto image_by_ranks = [&](const SlicePoint<RationalField>& p) {
            if (rank_lower(p, pos({ColLabel::XS, 0})) != static_cast<std::size_t>(layout->s))
                return false;
            for (auto [v, w] : image_pairs)
                if (rank_both(p, v, w) != rank_both(at_zero, v, w)) return false;
            return true;
        };

        std::vector<std::pair<int, int>> r_pairs;
        if (n >= 2) {
            for (int w = pos({ColLabel::Y0, 0}); w <= w_hi; ++w)
                r_pairs.emplace_back(pos({ColLabel::X, n}), w);
            for (int j = 1; j <= n - 1; ++j)
                r_pairs.emplace_back(pos({ColLabel::X, n}), pos({ColLabel::Y, j}));
            for (int j = n; j >= 0; --j)
                r_pairs.emplace_back(pos({ColLabel::X, j}), pos({ColLabel::YS, n - 1}));
            for (int i = 0; i <= n - 1; ++i)
                r_pairs.emplace_back(pos({ColLabel::XS, i}), pos({ColLabel::YS, n - 1}));
        }
        auto r_by_ranks = [&](const SlicePoint<RationalField>& p) {
            for (auto [v, w] : r_pairs)
                if (rank_both(p, v, w) != rank_both(at_zero, v, w)) return false;
            return true;
        };

        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 100; ++trial) {
            SlicePoint<RationalField> p;
            switch (trial % 3) {
                case 0: p = random_slice_point(f, layout, rng); break;
                case 1: p = slice_embed(random_rep(f, layout->star, e.dstar, rng), layout); break;
                default: {
                    p = slice_embed(random_rep(f, layout->star, e.dstar, rng), layout);
                    int c = layout->col_offset[static_cast<std::size_t>(pos({ColLabel::XS, 0}))];
                    if (layout->t + layout->r > 0 && layout->s > 0)
                        p.N.at(0, static_cast<std::size_t>(c)) =
                            f.add(p.N.at(0, static_cast<std::size_t>(c)), f.one());
                    break;
                }
            }
            if (in_image(p) != image_by_ranks(p)) {
                pass = false;
                detail = inst.name + ": image characterization differs at trial " +
                         std::to_string(trial);
            }
            if (n >= 2 && in_R(p) != r_by_ranks(p)) {
                pass = false;
                detail = inst.name + ": intermediate characterization differs at trial " +
                         std::to_string(trial);
            }
        }
    }
    report(7, "image and intermediate membership vs rank minima", pass,
           detail.empty() ? "100 points per instance" : detail);
}

// Criterion 8: the degeneration order is preserved under simultaneous
// transposition, decided through the opposite quiver's own embedding.
void criterion_transpose() {
    RationalField f;
    bool pass = true;
    std::string detail;
    for (const auto& inst : poset_instances()) {
        auto os = enumerate_orbits(f, inst.quiver, inst.dim, 84, 300);
        StarEmbedding e = embed_type_D(*inst.quiver, inst.dim);
        auto qop = std::make_shared<const Quiver>(opposite(*inst.quiver));
        StarEmbedding eop = embed_type_D(*qop, inst.dim);
        std::vector<RankSignature> sig, sig_op;
        for (const auto& rep : os.reps) {
            sig.push_back(orbit_signature(rep, e));
            sig_op.push_back(orbit_signature(transpose_rep(rep), eop));
        }
        std::mt19937_64 rng(85);
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t i = rng() % os.reps.size(), j = rng() % os.reps.size();
            bool direct = signature_leq(sig[j], sig[i]);
            bool dual = signature_leq(sig_op[j], sig_op[i]);
            if (direct != dual) {
                pass = false;
                detail = inst.name + ": transpose changes the order for pair " +
                         std::to_string(i) + "," + std::to_string(j);
            }
        }
    }
    report(8, "transpose duality of the degeneration order", pass,
           detail.empty() ? "100 pairs per instance" : detail);
}

// Criterion 9: every embedded point is invertible as a square matrix.
void criterion_invertibility() {
    RationalField f;
    bool pass = true;
    std::string detail;
    std::size_t checked = 0;
    std::mt19937_64 rng(86);
    for (const auto& inst : poset_instances()) {
        StarEmbedding e = embed_type_D(*inst.quiver, inst.dim);
        auto layout = make_slice_layout(e.n, e.dstar);
        for (int trial = 0; trial < 25; ++trial) {
            Rep<RationalField> v = trial == 0 ? zero_rep(f, layout->star, e.dstar)
                                              : random_rep(f, layout->star, e.dstar, rng);
            auto p = slice_embed(v, layout);
            ++checked;
            if (rank(vstack(p.M, p.N)) != static_cast<std::size_t>(layout->a + layout->b)) {
                pass = false;
                detail = inst.name + ": singular embedded point";
            }
        }
        for (const auto& inst2 : {inst}) {
            auto os = enumerate_orbits(f, inst2.quiver, inst2.dim, 87, 300);
            for (const auto& rep : os.reps) {
                auto p = slice_embed(star_extend(rep, e), layout);
                ++checked;
                if (!is_invertible(vstack(p.M, p.N))) {
                    pass = false;
                    detail = inst2.name + ": singular embedded orbit representative";
                }
            }
        }
    }
    report(9, "invertibility of every embedded point", pass,
           detail.empty() ? std::to_string(checked) + " points" : detail);
}

} // namespace

int main() {
    auto start = Clock::now();
    criterion_invariance();
    criterion_separation();
    criterion_oracle_posets();
    criterion_tables();
    criterion_bridge();
    criterion_equivariance();
    criterion_membership();
    criterion_transpose();
    criterion_invertibility();
    std::printf("%s: 9 criteria, %d failed, %.1fs total\n", failures == 0 ? "PASS" : "FAIL",
                failures, seconds_since(start));
    return failures;
}
