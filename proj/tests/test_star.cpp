#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "qdeg/star.hpp"

using namespace qdeg;

namespace {

// All orientations of the D_m underlying tree: branch vertex "b", short
// leaves "p", "q", long branch "v1".."v(m-3)".
Quiver oriented_Dm(int m, unsigned mask) {
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
    return q;
}

// Checks that contracting the star quiver along the plan's arrow set gives
// back the normalized quiver, through the correspondence the plan records.
void check_embedding_consistency(const Quiver& q, const StarEmbedding& e) {
    const Quiver& nq = *e.normalized;
    const Quiver& star = *e.star;

    // Every class of merged star vertices maps to one source vertex, and the
    // contracted arrows stay inside a class.
    for (const auto& name : e.contracted) {
        int ai = star.arrow_index(name);
        REQUIRE(ai >= 0);
        const auto& a = star.arrows[static_cast<std::size_t>(ai)];
        CHECK(e.star_vertex_to_source[static_cast<std::size_t>(a.tail)] ==
              e.star_vertex_to_source[static_cast<std::size_t>(a.head)]);
    }

    // Non-contracted arrows map bijectively onto the arrows of the source,
    // matching endpoints, except b0 over the zero-dimensional x0.
    std::map<std::string, int> hits;
    for (const auto& [star_name, src_name] : e.arrow_to_source) {
        int sai = star.arrow_index(star_name);
        int qai = nq.arrow_index(src_name);
        REQUIRE(sai >= 0);
        REQUIRE(qai >= 0);
        const auto& sa = star.arrows[static_cast<std::size_t>(sai)];
        const auto& qa = nq.arrows[static_cast<std::size_t>(qai)];
        CHECK(e.star_vertex_to_source[static_cast<std::size_t>(sa.tail)] == qa.tail);
        CHECK(e.star_vertex_to_source[static_cast<std::size_t>(sa.head)] == qa.head);
        hits[src_name]++;
    }
    CHECK(hits.size() == nq.arrows.size());
    for (const auto& [_, c] : hits) CHECK(c == 1);
    CHECK(e.arrow_to_source.size() + e.contracted.size() + (e.composable ? 0 : 1) ==
          star.arrows.size());

    // Every source vertex is covered.
    std::set<int> covered;
    for (int src : e.star_vertex_to_source)
        if (src >= 0) covered.insert(src);
    CHECK(covered.size() == nq.vertices.size());
    (void)q;
}

} // namespace

TEST_CASE("star quiver shape") {
    Quiver s1 = build_star(1);
    CHECK(s1.num_vertices() == 5);
    CHECK(s1.num_arrows() == 4);
    Quiver s2 = build_star(2);
    CHECK(s2.num_vertices() == 7);
    CHECK(s2.num_arrows() == 6);
    CHECK_THROWS_AS(build_star(0), std::invalid_argument);

    // Bipartite: arrows run from the y layer to the x layer.
    for (const auto& a : s2.arrows) {
        CHECK(s2.vertices[static_cast<std::size_t>(a.tail)][0] == 'y');
        CHECK(s2.vertices[static_cast<std::size_t>(a.head)][0] == 'x');
    }
}

TEST_CASE("embedding of the seven-vertex example") {
    // Long branch 3 -> 4 -> 5 <- 6 <- 7, short arrows gamma: 3 -> 1 (outward)
    // and delta: 2 -> 3 (inward).
    Quiver q;
    for (int i = 1; i <= 7; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("gamma", "3", "1");
    q.add_arrow("delta", "2", "3");
    q.add_arrow("c34", "3", "4");
    q.add_arrow("c45", "4", "5");
    q.add_arrow("c65", "6", "5");
    q.add_arrow("c76", "7", "6");
    DimVector d = {1, 2, 3, 2, 2, 1, 1};

    StarEmbedding e = embed_type_D(q, d);
    CHECK_FALSE(e.opposite);
    CHECK(e.composable);
    CHECK(e.n == 4);
    std::set<std::string> a(e.contracted.begin(), e.contracted.end());
    CHECK(a == std::set<std::string>{"a1", "b1", "b2", "a4"});
    CHECK(e.arrow_to_source.at("b0") == "gamma");
    CHECK(e.arrow_to_source.at("a1'") == "delta");
    CHECK(e.arrow_to_source.at("a2") == "c34");
    CHECK(e.arrow_to_source.at("a3") == "c45");
    CHECK(e.arrow_to_source.at("b3") == "c65");
    CHECK(e.arrow_to_source.at("b4") == "c76");
    check_embedding_consistency(q, e);

    // dstar agrees with d along the contraction classes.
    auto ds = [&](const std::string& v) {
        return e.dstar[static_cast<std::size_t>(e.star->vertex_index(v))];
    };
    CHECK(ds("x0") == 1);
    CHECK(ds("y0") == 3);
    CHECK(ds("y0'") == 2);
    CHECK(ds("x1") == 3);
    CHECK(ds("y1") == 3);
    CHECK(ds("x2") == 2);
    CHECK(ds("y2") == 2);
    CHECK(ds("x3") == 2);
    CHECK(ds("y3") == 1);
    CHECK(ds("x4") == 1);
    CHECK(ds("y4") == 1);
}

TEST_CASE("both short arrows inward forces a zero x0") {
    // gamma: 1 -> 3, delta: 2 -> 3, long branch 3 <- 4 ... <- (inward).
    Quiver q;
    for (int i = 1; i <= 5; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("gamma", "1", "3");
    q.add_arrow("delta", "2", "3");
    q.add_arrow("e1", "4", "3");
    q.add_arrow("e2", "5", "4");
    DimVector d = {2, 3, 4, 2, 1};
    StarEmbedding e = embed_type_D(q, d);
    CHECK_FALSE(e.opposite);
    CHECK_FALSE(e.composable);
    auto ds = [&](const std::string& v) {
        return e.dstar[static_cast<std::size_t>(e.star->vertex_index(v))];
    };
    CHECK(ds("x0") == 0);
    CHECK(ds("y0") == 2);  // gamma leaf
    CHECK(ds("y0'") == 3); // delta leaf
    CHECK(ds("x1") == 4);
    CHECK(e.arrow_to_source.at("a1") == "gamma");
    CHECK(e.arrow_to_source.at("a1'") == "delta");
    // Long branch all inward: b1 and b2 match directly, n = 2.
    CHECK(e.n == 2);
    check_embedding_consistency(q, e);
}

TEST_CASE("embedding covers every orientation of D4, D5, D6") {
    for (int m : {4, 5, 6}) {
        const int arrows = m - 1;
        for (unsigned mask = 0; mask < (1u << arrows); ++mask) {
            Quiver q = oriented_Dm(m, mask);
            DimVector d(static_cast<std::size_t>(m));
            for (int z = 0; z < m; ++z) d[static_cast<std::size_t>(z)] = 1 + z % 3;
            StarEmbedding e = embed_type_D(q, d);
            check_embedding_consistency(q, e);
            // Determinism.
            StarEmbedding e2 = embed_type_D(q, d);
            CHECK(e.n == e2.n);
            CHECK(e.contracted == e2.contracted);
            CHECK(e.dstar == e2.dstar);
        }
    }
}

TEST_CASE("star extension and the open stratum") {
    RationalField f;
    Quiver q;
    for (int i = 1; i <= 7; ++i) q.add_vertex(std::to_string(i));
    q.add_arrow("gamma", "3", "1");
    q.add_arrow("delta", "2", "3");
    q.add_arrow("c34", "3", "4");
    q.add_arrow("c45", "4", "5");
    q.add_arrow("c65", "6", "5");
    q.add_arrow("c76", "7", "6");
    auto qp = std::make_shared<const Quiver>(q);
    DimVector d = {1, 2, 3, 2, 2, 1, 1};
    StarEmbedding e = embed_type_D(q, d);

    std::mt19937_64 rng(51);
    auto v = random_rep(f, qp, d, rng);
    auto w = star_extend(v, e);
    check_shapes(w);

    // Identity matrices over the contracted arrows, carried matrices over the rest.
    for (const auto& name : e.contracted) {
        const auto& m = w.mat(name);
        CHECK(m == RMatrix::identity(f, m.rows()));
    }
    CHECK(w.mat("a2") == v.mat("c34"));
    CHECK(in_open_stratum(w, e));

    // The zero representation extends to identities over the contracted arrows.
    auto z = star_extend(zero_rep(f, qp, d), e);
    CHECK(in_open_stratum(z, e));
    CHECK(z.mat("b0").is_zero());

    // Killing one contracted-arrow matrix leaves the stratum.
    auto broken = w;
    int ai = e.star->arrow_index(e.contracted.front());
    broken.mats[static_cast<std::size_t>(ai)] =
        RMatrix(f, broken.mats[static_cast<std::size_t>(ai)].rows(),
                broken.mats[static_cast<std::size_t>(ai)].cols());
    CHECK_FALSE(in_open_stratum(broken, e));

    // Equivariance: extending V.g matches extending V and acting through the
    // subgroup that is constant along contraction classes.
    auto g = GroupElement<RationalField>::random(f, d, rng);
    GroupElement<RationalField> ghat;
    for (std::size_t sv = 0; sv < e.star->vertices.size(); ++sv) {
        int src = e.star_vertex_to_source[sv];
        if (src < 0)
            ghat.factors.push_back(RMatrix(f, 0, 0));
        else
            ghat.factors.push_back(g.factors[static_cast<std::size_t>(src)]);
    }
    CHECK(star_extend(act(v, g), e).mats == act(star_extend(v, e), ghat).mats);
}
