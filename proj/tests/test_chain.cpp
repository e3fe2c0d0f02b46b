#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "lexcycle/chain.hpp"
#include "lexcycle/generators.hpp"

using namespace lexcycle;

namespace {

// Edges e1 < e2 < e3 < e4 by weight, plus the triangle (0,1,2).
WeightedComplex small() {
    return build_complex({{{0, 1}, 1.0}, {{1, 2}, 2.5}, {{0, 2}, 3.0}, {{2, 3}, 7.0}, {{0, 1, 2}, std::nullopt}}, 1);
}

Chain random_chain(const WeightedComplex& K, int dim, gen::Rng& rng) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < K.size(dim); ++i)
        if (gen::coin(rng)) ids.push_back(static_cast<int>(i));
    return Chain(K, dim, ids);
}

// Reference order: compare the supports as sets of weights, descending.
int reference_lex(const Chain& a, const Chain& b) {
    std::vector<int> x(a.support().begin(), a.support().end()), y(b.support().begin(), b.support().end());
    std::vector<int> diff;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
    if (diff.empty()) return 0;
    const int top = *std::max_element(diff.begin(), diff.end(), [&](int i, int j) {
        return a.complex().weight(i) < a.complex().weight(j);
    });
    return std::binary_search(x.begin(), x.end(), top) ? 1 : -1;
}

} // namespace

TEST_CASE("addition is symmetric difference") {
    const auto K = small();
    const Chain a(K, 1, {0, 1}), b(K, 1, {1, 2});
    CHECK((a + b) == Chain(K, 1, {0, 2}));
    CHECK((a + a).empty());
    CHECK((a + Chain(K, 1)) == a);
    CHECK_THROWS_AS(a + Chain(K, 0, {0}), InvalidArgument);
    const auto K2 = small();
    CHECK_THROWS_AS(a + Chain(K2, 1, {0}), InvalidArgument);
}

TEST_CASE("chain construction validates ids") {
    const auto K = small();
    CHECK_THROWS_AS(Chain(K, 1, {0, 0}), ValidationError);
    CHECK_THROWS_AS(Chain(K, 1, {9}), ValidationError);
    CHECK_THROWS_AS(Chain(K, 5), InvalidArgument);
    const Chain c(K, 1, {3, 1});
    CHECK(c.support()[0] == 1);
    CHECK(c.contains(3));
    const std::vector<Simplex> s{Simplex{0, 2}, Simplex{0, 1}};
    CHECK(Chain::from_simplices(K, s) == Chain(K, 1, {0, 2}));
}

TEST_CASE("boundary of a triangle and of two triangles") {
    const auto K = build_complex({{{0, 1, 2}, std::nullopt}, {{1, 2, 3}, std::nullopt}}, 1);
    const auto d1 = boundary(Chain(K, 2, {0}));
    CHECK(d1.size() == 3);
    std::set<Simplex> got;
    for (const auto& s : d1.simplices()) got.insert(s);
    CHECK(got == std::set<Simplex>{Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
    const auto d2 = boundary(Chain(K, 2, {0, 1}));
    CHECK(d2.size() == 4);
    CHECK_FALSE(d2.contains(K.index_of(Simplex{1, 2})));
    CHECK_THROWS_AS(boundary(Chain(K, 0, {0})), InvalidArgument);
}

TEST_CASE("boundary of a boundary vanishes") {
    gen::Rng rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto K = gen::random_complex(rng, 800);
        for (int d = 2; d <= K.dimension(); ++d) CHECK(boundary(boundary(random_chain(K, d, rng))).empty());
    }
}

TEST_CASE("cycle predicate") {
    const auto K = small();
    CHECK(is_cycle(Chain(K, 1, {0, 1, 2})));
    CHECK_FALSE(is_cycle(Chain(K, 1, {0})));
    CHECK(is_cycle(Chain(K, 1)));
    CHECK(is_cycle(Chain(K, 0, {1})));
}

TEST_CASE("bottleneck norm") {
    const auto K = small();
    CHECK(bottleneck_norm(Chain(K, 1)) == 0.0);
    CHECK(bottleneck_norm(Chain(K, 1, {1, 3})) == 7.0);
    CHECK(bottleneck_norm(Chain(K, 1, {2})) == 3.0);
    CHECK_THROWS_AS(bottleneck_norm(Chain(K, 0, {0})), InvalidArgument);
}

TEST_CASE("lex comparison") {
    const auto K = small();
    const Chain e13(K, 1, {0, 2}), e23(K, 1, {1, 2});
    CHECK(lex_compare(e13, e23) == std::strong_ordering::less);
    CHECK(lex_compare(e23, e13) == std::strong_ordering::greater);
    CHECK(lex_compare(Chain(K, 1), e13) == std::strong_ordering::less);
    CHECK(lex_compare(e13, e13) == std::strong_ordering::equal);
    CHECK_THROWS_AS(lex_compare(e13, Chain(K, 0)), InvalidArgument);
}

TEST_CASE("norm and order properties on random chains") {
    gen::Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const auto K = gen::random_surface(trial % 3, rng);
        for (int rep = 0; rep < 50; ++rep) {
            const Chain a = random_chain(K, 1, rng), b = random_chain(K, 1, rng), c = random_chain(K, 1, rng);
            const double na = bottleneck_norm(a), nb = bottleneck_norm(b);
            CHECK(bottleneck_norm(a + b) <= std::max(na, nb));
            CHECK(std::max(na, nb) <= na + nb);
            CHECK((na == 0.0) == a.empty());

            const auto ab = lex_compare(a, b);
            CHECK((ab < 0) == (lex_compare(b, a) > 0));
            CHECK(((ab < 0) ? -1 : (ab > 0) ? 1 : 0) == reference_lex(a, b));
            if (ab < 0) CHECK(na <= nb);
            if (ab < 0 && lex_compare(b, c) < 0) CHECK(lex_compare(a, c) < 0);
            CHECK((ab == 0) == (a == b));
        }
    }
}
