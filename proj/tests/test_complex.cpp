#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "lexcycle/complex.hpp"
#include "lexcycle/generators.hpp"

using namespace lexcycle;

namespace {

// Tries every assignment of orientations to the triangles and reports whether
// one induces opposite directions on every shared edge.
bool orientable_by_enumeration(const std::vector<std::array<int, 3>>& tris) {
    const std::size_t F = tris.size();
    REQUIRE(F <= 20);
    for (std::uint32_t mask = 0; mask < (1U << F); ++mask) {
        std::map<std::pair<int, int>, int> seen;  // directed edge -> count
        bool good = true;
        for (std::size_t t = 0; t < F && good; ++t) {
            std::array<int, 3> c = tris[t];
            std::sort(c.begin(), c.end());
            if (mask >> t & 1U) std::swap(c[1], c[2]);
            for (int k = 0; k < 3; ++k)
                if (++seen[{c[k], c[(k + 1) % 3]}] > 1) good = false;
        }
        if (good) return true;
    }
    return false;
}

WeightedComplex from_triangles(const std::vector<std::array<int, 3>>& tris) {
    std::vector<SimplexInput> in;
    for (const auto& t : tris) in.push_back({{t[0], t[1], t[2]}, std::nullopt});
    return build_complex(in, 1);
}

} // namespace

TEST_CASE("simplex normalizes and rejects bad tuples") {
    const Simplex s{2, 0, 1};
    CHECK(s.str() == "(0,1,2)");
    CHECK(s.dim() == 2);
    CHECK(s.without(0) == Simplex{1, 2});
    CHECK(s.without(2) == Simplex{0, 1});
    CHECK_THROWS_AS((Simplex{0, 0, 1}), ValidationError);
    CHECK_THROWS_AS((Simplex{-1, 2}), ValidationError);
    CHECK_THROWS_AS((Simplex{0, 1, 2, 3, 4}), ValidationError);
}

TEST_CASE("weighted triangle boundary has canonical order by weight") {
    const auto K = build_complex({{{0, 1}, 1.0}, {{1, 2}, 2.0}, {{0, 2}, 3.0}}, 1);
    CHECK(K.size(0) == 3);
    CHECK(K.size(1) == 3);
    CHECK(K.simplex(1, 0) == Simplex{0, 1});
    CHECK(K.simplex(1, 1) == Simplex{1, 2});
    CHECK(K.simplex(1, 2) == Simplex{0, 2});
    CHECK(K.weight(2) == 3.0);
}

TEST_CASE("closure weights unweighted faces by first appearance") {
    const auto K = build_complex({{{0, 1, 2}, std::nullopt}}, 1);
    CHECK(K.size(0) == 3);
    CHECK(K.size(1) == 3);
    CHECK(K.size(2) == 1);
    CHECK(K.simplex(1, 0) == Simplex{0, 1});
    CHECK(K.simplex(1, 1) == Simplex{0, 2});
    CHECK(K.simplex(1, 2) == Simplex{1, 2});
    CHECK(K.weight(0) == 1.0);
    CHECK(K.weight(1) == 2.0);
    CHECK(K.weight(2) == 3.0);
}

TEST_CASE("build_complex rejects invalid input") {
    CHECK_THROWS_AS(build_complex({{{0, 0, 1}, std::nullopt}}, 1), ValidationError);
    CHECK_THROWS_AS(build_complex({{{0, 1}, 0.0}}, 1), ValidationError);
    CHECK_THROWS_AS(build_complex({{{0, 1}, -2.0}}, 1), ValidationError);
    CHECK_THROWS_AS(build_complex({{{0, 1}, std::numeric_limits<double>::quiet_NaN()}}, 1), ValidationError);
    CHECK_THROWS_AS(build_complex({{{0, 1}, std::numeric_limits<double>::infinity()}}, 1), ValidationError);
    CHECK_THROWS_AS(build_complex({{{0, 1, 2}, 4.0}}, 1), ValidationError);
    CHECK_THROWS_AS(build_complex({{{0, 1}, 1.0}, {{0, 1}, 2.0}}, 1), ValidationError);
    CHECK_THROWS_AS(build_complex({{{0, 1}, 1.0}}, 4), InvalidArgument);
}

TEST_CASE("equal weights are ordered by vertex tuple") {
    const auto K = build_complex({{{2, 3}, 1.0}, {{0, 3}, 1.0}, {{0, 1}, 1.0}, {{1, 2}, 0.5}}, 1);
    REQUIRE(K.size(1) == 4);
    CHECK(K.simplex(1, 0) == Simplex{1, 2});
    CHECK(K.simplex(1, 1) == Simplex{0, 1});
    CHECK(K.simplex(1, 2) == Simplex{0, 3});
    CHECK(K.simplex(1, 3) == Simplex{2, 3});
}

TEST_CASE("canonical order is strict and total on random complexes") {
    gen::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto K = gen::random_complex(rng, 500);
        const int d = K.weighted_dim();
        for (std::size_t i = 1; i < K.size(d); ++i) {
            const double a = K.weight(static_cast<int>(i - 1)), b = K.weight(static_cast<int>(i));
            const bool before = a < b || (a == b && K.simplex(d, static_cast<int>(i - 1)) < K.simplex(d, static_cast<int>(i)));
            CHECK(before);
        }
    }
}

TEST_CASE("building from a complex's own simplices is idempotent") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto K = gen::random_complex(rng, 500);
        const auto in = K.to_input();
        CHECK(build_complex(in, K.weighted_dim()) == K);
    }
}

TEST_CASE("facets and cofaces agree with tuples") {
    const auto K = build_complex({{{0, 1, 2, 3}, std::nullopt}}, 2);
    for (int k = 1; k <= 3; ++k)
        for (std::size_t id = 0; id < K.size(k); ++id) {
            const auto f = K.facets(k, static_cast<int>(id));
            const Simplex& s = K.simplex(k, static_cast<int>(id));
            for (int j = 0; j < s.size(); ++j) CHECK(K.simplex(k - 1, f[j]) == s.without(j));
        }
    const auto co = K.cofaces(2);
    for (std::size_t e = 0; e < K.size(1); ++e) CHECK(co.row(e).size() == 2);
}

TEST_CASE("tetrahedron boundary is a sphere") {
    const auto K = from_triangles(gen::tetrahedron());
    const auto t = classify_surface(K);
    CHECK(t.closed);
    CHECK(t.orientable);
    CHECK(t.genus == 0);
    CHECK(t.euler_characteristic == 2);
    CHECK(t.components == 1);
}

TEST_CASE("3x3 grid torus has genus 1") {
    const auto K = from_triangles(gen::grid_torus(3));
    CHECK(K.size(0) == 9);
    CHECK(K.size(1) == 27);
    CHECK(K.size(2) == 18);
    const auto t = classify_surface(K);
    CHECK(t.closed);
    CHECK(t.genus == 1);
    CHECK(t.euler_characteristic == 0);
}

TEST_CASE("seven-vertex torus has genus 1") {
    const auto K = from_triangles(gen::minimal_torus());
    CHECK(K.size(0) == 7);
    CHECK(K.size(1) == 21);
    const auto t = classify_surface(K);
    CHECK(t.closed);
    CHECK(t.genus == 1);
}

TEST_CASE("five-triangle Moebius band is rejected as non-orientable") {
    const std::vector<std::array<int, 3>> mobius{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}};
    CHECK_FALSE(orientable_by_enumeration(mobius));
    const auto K = from_triangles(mobius);
    CHECK_THROWS_AS(classify_surface(K), NonOrientableError);
    try {
        classify_surface(K);
    } catch (const NonOrientableError& e) {
        CHECK(std::string(e.what()).find("(") != std::string::npos);
    }
    CHECK(orientable_by_enumeration(gen::grid_torus(3)));
}

TEST_CASE("orientation propagation agrees with enumeration") {
    gen::Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto tris = gen::random_surface_triangles(static_cast<int>(trial % 2), rng, 16);
        CHECK(orientable_by_enumeration(tris));
        CHECK_NOTHROW(orient_triangles(from_triangles(tris)));
    }
}

TEST_CASE("non-manifold edges and vertices are named") {
    const auto fan = from_triangles({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    try {
        classify_surface(fan);
        FAIL("expected NotManifoldError");
    } catch (const NotManifoldError& e) {
        CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    }
    // Two triangles meeting at one vertex: a pinched vertex link.
    const auto bowtie = from_triangles({{0, 1, 2}, {0, 3, 4}});
    CHECK_THROWS_AS(classify_surface(bowtie), NotManifoldError);
    const auto edge = build_complex({{{0, 1}, std::nullopt}}, 1);
    CHECK_THROWS_AS(classify_surface(edge), ValidationError);
}

TEST_CASE("surfaces with boundary report their rim") {
    const auto disk = from_triangles({{0, 1, 2}, {0, 2, 3}});
    const auto t = classify_surface(disk);
    CHECK_FALSE(t.closed);
    CHECK(t.boundary_components == 1);
    CHECK(t.genus == 0);
}

TEST_CASE("Euler formula holds on random closed surfaces") {
    gen::Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int g = trial % 3;
        const auto K = gen::random_surface(g, rng);
        const auto t = classify_surface(K);
        CHECK(t.closed);
        CHECK(t.genus == g);
        CHECK(2 - 2 * t.genus ==
              static_cast<long>(K.size(0)) - static_cast<long>(K.size(1)) + static_cast<long>(K.size(2)));
        CHECK(K.size(2) <= 24);
    }
}

TEST_CASE("sublevel function on a single edge") {
    const auto K = build_complex({{{0, 1}, 5.0}}, 1);
    const auto F = sublevel_function(K, 1);
    CHECK(F.subdivision.size(0) == 3);
    CHECK(F.subdivision.size(1) == 2);
    const long top = F.value_of(1, 0);
    CHECK(top > F.value_of(0, 0));
    CHECK(top > F.value_of(0, 1));
}

TEST_CASE("sublevel function on two triangles sharing an edge") {
    const auto K = build_complex({{{0, 1}, 1.0}, {{1, 2}, 2.0}, {{0, 2}, 3.0}, {{1, 3}, 4.0}, {{2, 3}, 5.0},
                                  {{0, 1, 2}, std::nullopt}, {{1, 2, 3}, std::nullopt}},
                                 1);
    const auto F = sublevel_function(K, 1);
    CHECK(F.subdivision.size(0) == 4 + 5 + 2);
    for (int e = 1; e < 5; ++e) CHECK(F.value_of(1, e - 1) < F.value_of(1, e));
    long lowest_edge = F.value_of(1, 0);
    for (int v = 0; v < 4; ++v) CHECK(F.value_of(0, v) < lowest_edge);
    for (int t = 0; t < 2; ++t) CHECK(F.value_of(2, t) < lowest_edge);
    std::set<long> distinct(F.values.begin(), F.values.end());
    CHECK(distinct.size() == F.values.size());
}

TEST_CASE("sublevel sweep adds exactly the star of each d-barycenter at its rank") {
    gen::Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const auto tris = gen::random_surface_triangles(0, rng, 10);
        const auto K = gen::surface_complex(tris, &rng);
        const auto F = sublevel_function(K, 1);
        const auto& S = F.subdivision;
        // Value of a K' simplex is the largest value among its vertices.
        auto value = [&](int k, int id) {
            long v = 0;
            for (int x : S.simplex(k, id)) v = std::max(v, F.values[static_cast<std::size_t>(x)]);
            return v;
        };
        for (std::size_t i = 0; i < K.size(1); ++i) {
            const int bary = F.label(1, static_cast<int>(i));
            const long t = F.value_of(1, static_cast<int>(i));
            std::size_t d_present = 0;
            for (std::size_t j = 0; j < K.size(1); ++j)
                if (F.value_of(1, static_cast<int>(j)) <= t) ++d_present;
            CHECK(d_present == i + 1);
            for (int k = 0; k <= S.dimension(); ++k)
                for (std::size_t id = 0; id < S.size(k); ++id) {
                    if (value(k, static_cast<int>(id)) != t) continue;
                    CHECK(S.simplex(k, static_cast<int>(id)).contains(bary));
                }
        }
        // Subdivision edges carry the max-vertex value as weight.
        for (std::size_t id = 0; id < S.size(1); ++id)
            CHECK(S.weight(static_cast<int>(id)) == static_cast<double>(value(1, static_cast<int>(id))));
    }
}

TEST_CASE("sublevel function requires the weighted dimension") {
    const auto K = build_complex({{{0, 1}, 5.0}}, 1);
    CHECK_THROWS_AS(sublevel_function(K, 0), InvalidArgument);
}
