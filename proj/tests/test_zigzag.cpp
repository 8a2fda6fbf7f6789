#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "qdeg/zigzag.hpp"

using namespace qdeg;

namespace {

// Render a Q-matrix as a grid of "0"/arrow-name strings for comparison
// against the displays.
std::vector<std::vector<std::string>> grid(const QMatrix& m) {
    std::vector<std::vector<std::string>> g(m.block_rows(),
                                            std::vector<std::string>(m.block_cols(), "0"));
    for (std::size_t i = 0; i < m.block_rows(); ++i)
        for (std::size_t j = 0; j < m.block_cols(); ++j) {
            const QEntry& e = m.at(i, j);
            if (e.terms.empty()) continue;
            REQUIRE(e.terms.size() == 1);
            REQUIRE(e.terms[0].path.arrows.size() == 1);
            g[i][j] = e.terms[0].path.arrows[0];
        }
    return g;
}

using G = std::vector<std::vector<std::string>>;

// All-ones representation of the star quiver with every dimension 1.
Rep<RationalField> all_ones_star(int n) {
    RationalField f;
    auto q = std::make_shared<const Quiver>(build_star(n));
    Rep<RationalField> v = zero_rep(f, q, DimVector(q->vertices.size(), 1));
    for (auto& m : v.mats) m.at(0, 0) = f.one();
    return v;
}

} // namespace

TEST_CASE("the bidiagonal matrices") {
    CHECK(grid(star_matrix_A(1)) == G{{"b0", "a1"}, {"0", "b1"}});
    CHECK(grid(star_matrix_B(1)) == G{{"a1'"}, {"b1"}});
    // Row y1 of A(3) is (0, b1, a2, 0).
    auto a3 = grid(star_matrix_A(3));
    CHECK(a3[1] == std::vector<std::string>{"0", "b1", "a2", "0"});
    CHECK(star_matrix_A(3).row_labels ==
          std::vector<std::string>{"y0", "y1", "y2", "y3"});
    CHECK(star_matrix_B(3).col_labels == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("zig-zag intervals match the displays") {
    CHECK(grid(interval(3, StarArrow::beta(1), StarArrow::alpha(3))) ==
          G{{"b1", "a2", "0"}, {"0", "b2", "a3"}});
    CHECK(grid(interval(3, StarArrow::alpha1p(), StarArrow::beta(2))) ==
          G{{"a1'", "0"}, {"b1", "a2"}, {"0", "b2"}});
    CHECK(grid(interval(2, StarArrow::beta(2), StarArrow::beta(2))) == G{{"b2"}});
    CHECK_THROWS_AS(interval(4, StarArrow::beta0(), StarArrow::alpha1p()), std::invalid_argument);
    CHECK_THROWS_AS(interval(4, StarArrow::alpha(4), StarArrow::beta(1)), std::invalid_argument);
}

TEST_CASE("doubled matrices match the displays") {
    CHECK(grid(double_interval(1, StarArrow::alpha(1), StarArrow::alpha(1))) ==
          G{{"b0", "a1"}, {"0", "a1'"}});

    CHECK(grid(double_interval(3, StarArrow::alpha(2), StarArrow::alpha(3))) ==
          G{{"b0", "a1", "0", "0", "0"},
            {"0", "b1", "0", "a2", "0"},
            {"0", "0", "0", "b2", "a3"},
            {"0", "0", "a1'", "0", "0"},
            {"0", "0", "b1", "a2", "0"},
            {"0", "0", "0", "b2", "a3"}});

    CHECK(grid(double_interval(3, StarArrow::beta(1), StarArrow::alpha(3))) ==
          G{{"b0", "a1", "0", "0", "0", "0", "0"},
            {"0", "0", "0", "0", "a1'", "0", "0"},
            {"0", "b1", "a2", "0", "b1", "a2", "0"},
            {"0", "0", "b2", "a3", "0", "b2", "a3"}});

    CHECK(grid(double_interval(2, StarArrow::alpha(1), StarArrow::beta(2))) ==
          G{{"b0", "a1", "0"},
            {"0", "b1", "a2"},
            {"0", "0", "b2"},
            {"0", "a1'", "0"},
            {"0", "b1", "a2"},
            {"0", "0", "b2"}});

    CHECK(grid(double_interval_zero(2, StarArrow::beta(2))) ==
          G{{"0", "a1", "0"},
            {"0", "b1", "a2"},
            {"0", "0", "b2"},
            {"0", "a1'", "0"},
            {"0", "b1", "a2"},
            {"0", "0", "b2"}});

    CHECK_THROWS_AS(double_interval(2, StarArrow::beta0(), StarArrow::beta(1)),
                    std::invalid_argument);
}

TEST_CASE("the distinguished family for n = 1") {
    auto fns = enumerate_rank_functions(1);
    std::vector<std::string> names;
    for (const auto& f : fns) names.push_back(f.display());
    CHECK(names == std::vector<std::string>{
                       "|b0,b0|", "|b0,a1|", "|b0,b1|", "|a1',a1'|", "|a1',b1|", "|b1,b1|",
                       "||a1,a1||", "||a1,b1||", "||b1,b1||", "||a1,a1||0", "||a1,b1||0"});
    // Membership sanity: every pair satisfies its family's rule.
    for (const auto& f : fns) {
        CHECK(arrow_leq(f.gamma, f.delta));
        if (f.family == RankFunction::Interval) CHECK_FALSE(f.gamma == StarArrow::alpha(1));
        if (f.family == RankFunction::Double) CHECK(arrow_leq(StarArrow::alpha(1), f.gamma));
        if (f.family == RankFunction::DoubleZero) CHECK(f.gamma == StarArrow::alpha(1));
    }
    // Size of the family is 4n^2 + 6n + 1.
    for (int n = 1; n <= 4; ++n)
        CHECK(enumerate_rank_functions(n).size() ==
              static_cast<std::size_t>(4 * n * n + 6 * n + 1));
}

TEST_CASE("evaluation") {
    auto v = all_ones_star(1);
    auto av = evaluate(star_matrix_A(1), v);
    RationalField f;
    RMatrix expect(f, 2, 2);
    expect.at(0, 0) = 1;
    expect.at(0, 1) = 1;
    expect.at(1, 1) = 1;
    CHECK(av == expect);
    CHECK(rank(av) == 2);

    // Zero representation evaluates to zero of the forced size.
    auto q = std::make_shared<const Quiver>(build_star(2));
    auto z = zero_rep(RationalField{}, q, DimVector(q->vertices.size(), 2));
    auto az = evaluate(star_matrix_A(2), z);
    CHECK(az.rows() == 6);
    CHECK(az.cols() == 6);
    CHECK(az.is_zero());

    // Blocks of width zero vanish silently.
    DimVector d(q->vertices.size(), 1);
    d[static_cast<std::size_t>(q->vertex_index("x0"))] = 0;
    auto w = zero_rep(RationalField{}, q, d);
    CHECK(evaluate(star_matrix_A(2), w).cols() == 2);
}

TEST_CASE("rank signature of the all-ones point") {
    auto v = all_ones_star(1);
    RankSignature sig = signature(v, 1);
    CHECK(sig == RankSignature{1, 1, 2, 1, 1, 1, 2, 2, 3, 1, 1});

    // Zeroing b0 can only drop the rank, by at most the height of the block.
    auto plain = rank(evaluate(double_interval(1, StarArrow::alpha(1), StarArrow::beta(1)), v));
    auto zeroed = rank(evaluate(double_interval_zero(1, StarArrow::beta(1)), v));
    CHECK(zeroed <= plain);
    CHECK(plain <= zeroed + 1);
}

TEST_CASE("signature is an orbit invariant and additive over direct sums") {
    RationalField f;
    std::mt19937_64 rng(61);
    for (int n : {1, 2}) {
        auto q = std::make_shared<const Quiver>(build_star(n));
        DimVector d(q->vertices.size());
        for (auto& x : d) x = 1 + rng() % 2;
        auto v = random_rep(f, q, d, rng);
        auto sig = signature(v, n);
        for (int trial = 0; trial < 5; ++trial) {
            auto g = GroupElement<RationalField>::random(f, d, rng);
            CHECK(signature(act(v, g), n) == sig);
        }
        auto w = random_rep(f, q, d, rng);
        auto sw = signature(w, n);
        auto ssum = signature(direct_sum(v, w), n);
        for (std::size_t i = 0; i < sig.size(); ++i) CHECK(ssum[i] == sig[i] + sw[i]);
        // The zero representation has the all-zero signature.
        auto z = zero_rep(f, q, d);
        for (auto s : signature(z, n)) CHECK(s == 0);
    }
}
