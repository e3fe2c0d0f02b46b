#ifndef LEXCYCLE_GENERATORS_HPP
#define LEXCYCLE_GENERATORS_HPP

// Seeded instance generators: benchmark tori, small random surfaces, random
// cycles, random complexes and random sparse Z2 systems.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "linkgen.hpp"

namespace lexcycle::gen {

using Rng = std::mt19937_64;
using Triangle = std::array<int, 3>;

/// Uniform integer in [0, n). Rejection sampling keeps results identical
/// across standard libraries, unlike std::uniform_int_distribution.
inline std::uint64_t below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("below(0)");
    const std::uint64_t limit = Rng::max() - Rng::max() % n;
    std::uint64_t v;
    do v = rng(); while (v >= limit);
    return v % n;
}

inline bool coin(Rng& rng) { return rng() & 1U; }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

/// n x n vertex grid with wraparound, each square split along its diagonal.
/// 2n^2 triangles, 3n^2 edges, n^2 vertices.
inline std::vector<Triangle> grid_torus(int n) {
    if (n < 3) throw InvalidArgument("grid torus needs n >= 3");
    auto v = [n](int i, int j) { return ((i % n + n) % n) * n + (j % n + n) % n; };
    std::vector<Triangle> t;
    t.reserve(static_cast<std::size_t>(2) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
            t.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
        }
    return t;
}

inline std::vector<Triangle> tetrahedron() { return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}; }

/// Seven-vertex torus.
inline std::vector<Triangle> minimal_torus() {
    std::vector<Triangle> t;
    for (int i = 0; i < 7; ++i) {
        t.push_back({i, (i + 1) % 7, (i + 3) % 7});
        t.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return t;
}

/// Ten-vertex, 24-triangle surface of genus 2 (the fewest vertices possible).
inline std::vector<Triangle> minimal_genus_two() {
    return {
        {0, 1, 6}, {0, 1, 8}, {0, 2, 7}, {0, 2, 9}, {0, 3, 4}, {0, 3, 5}, {0, 4, 9}, {0, 5, 6},
        {0, 7, 8}, {1, 2, 3}, {1, 2, 6}, {1, 3, 4}, {1, 4, 5}, {1, 5, 8}, {2, 3, 5}, {2, 4, 6},
        {2, 4, 8}, {2, 5, 7}, {2, 8, 9}, {4, 5, 6}, {4, 7, 8}, {4, 7, 9}, {5, 7, 9}, {5, 8, 9}
    };
}

inline int vertex_count(const std::vector<Triangle>& t) {
    int n = 0;
    for (const auto& tr : t)
        for (int v : tr) n = std::max(n, v + 1);
    return n;
}

/// Removes triangle ta of `a` and tb of `b` and glues the two holes.
inline std::vector<Triangle> connected_sum(const std::vector<Triangle>& a, std::size_t ta,
                                           const std::vector<Triangle>& b, std::size_t tb) {
    const int off = vertex_count(a);
    std::map<int, int> glue;
    for (int k = 0; k < 3; ++k) glue[b[tb][k]] = a[ta][k];
    std::vector<Triangle> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != ta) out.push_back(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i == tb) continue;
        Triangle t = b[i];
        for (int& v : t) {
            const auto it = glue.find(v);
            v = it != glue.end() ? it->second : v + off;
        }
        out.push_back(t);
    }
    // Close the gaps left in the vertex numbering of b.
    std::map<int, int> renum;
    for (auto& t : out)
        for (int& v : t) v = renum.emplace(v, static_cast<int>(renum.size())).first->second;
    return out;
}

inline std::vector<Triangle> connected_sum(const std::vector<Triangle>& a, const std::vector<Triangle>& b) {
    return connected_sum(a, 0, b, 0);
}

namespace detail {

using Edge = std::pair<int, int>;

inline Edge edge_of(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

inline std::map<Edge, std::vector<std::size_t>> edge_triangles(const std::vector<Triangle>& t) {
    std::map<Edge, std::vector<std::size_t>> m;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (int k = 0; k < 3; ++k) m[edge_of(t[i][k], t[i][(k + 1) % 3])].push_back(i);
    return m;
}

inline int apex(const Triangle& t, Edge e) {
    for (int v : t)
        if (v != e.first && v != e.second) return v;
    return -1;
}

inline void stellar(std::vector<Triangle>& t, std::size_t i) {
    const int c = vertex_count(t);
    const Triangle tr = t[i];
    t[i] = {tr[0], tr[1], c};
    t.push_back({tr[1], tr[2], c});
    t.push_back({tr[0], tr[2], c});
}

inline bool flip(std::vector<Triangle>& t, Edge e) {
    const auto et = edge_triangles(t);
    const auto it = et.find(e);
    if (it == et.end() || it->second.size() != 2) return false;
    const std::size_t i = it->second[0], j = it->second[1];
    const int c = apex(t[i], e), d = apex(t[j], e);
    if (c == d || et.count(edge_of(c, d))) return false;
    t[i] = {e.first, c, d};
    t[j] = {e.second, c, d};
    return true;
}

} // namespace detail

/// Small closed orientable surface of the given genus (0, 1 or 2) with at
/// most `max_triangles` triangles, randomly subdivided, flipped and relabelled.
inline std::vector<Triangle> random_surface_triangles(int genus, Rng& rng, std::size_t max_triangles = 24) {
    std::vector<Triangle> t;
    switch (genus) {
    case 0: t = tetrahedron(); break;
    case 1: t = minimal_torus(); break;
    case 2: t = minimal_genus_two(); break;
    default: throw InvalidArgument("random surfaces are generated for genus 0, 1, 2 only");
    }
    if (t.size() > max_triangles)
        throw InvalidArgument("genus " + std::to_string(genus) + " needs more than " +
                              std::to_string(max_triangles) + " triangles");

    const std::size_t room = (max_triangles - t.size()) / 2;
    const std::size_t subdivisions = room ? below(rng, room + 1) : 0;
    for (std::size_t s = 0; s < subdivisions; ++s) detail::stellar(t, below(rng, t.size()));

    const std::size_t flips = below(rng, 2 * t.size() + 1);
    for (std::size_t f = 0; f < flips; ++f) {
        const Triangle& tr = t[below(rng, t.size())];
        const int k = static_cast<int>(below(rng, 3));
        detail::flip(t, detail::edge_of(tr[k], tr[(k + 1) % 3]));
    }

    std::vector<int> perm(static_cast<std::size_t>(vertex_count(t)));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    shuffle(perm, rng);
    for (auto& tr : t)
        for (int& v : tr) v = perm[static_cast<std::size_t>(v)];
    shuffle(t, rng);
    return t;
}

/// Triangles plus edges weighted by a random permutation of 1..E.
inline WeightedComplex surface_complex(const std::vector<Triangle>& t, Rng* rng = nullptr) {
    std::vector<SimplexInput> in;
    in.reserve(t.size());
    for (const auto& tr : t) in.push_back({{tr[0], tr[1], tr[2]}, std::nullopt});
    if (!rng) return build_complex(in, 1);
    const auto edges = detail::edge_triangles(t);
    std::vector<int> w(edges.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<int>(i + 1);
    shuffle(w, *rng);
    std::size_t k = 0;
    for (const auto& kv : edges)
        in.push_back({{kv.first.first, kv.first.second}, static_cast<double>(w[k++])});
    return build_complex(in, 1);
}

inline WeightedComplex random_surface(int genus, Rng& rng, std::size_t max_triangles = 24) {
    const auto t = random_surface_triangles(genus, rng, max_triangles);
    return surface_complex(t, &rng);
}

/// Connected sum of `genus` grid tori of side n (a grid sphere is not offered).
inline std::vector<Triangle> grid_surface(int genus, int n) {
    if (genus < 1) throw InvalidArgument("grid surfaces need genus >= 1");
    std::vector<Triangle> t = grid_torus(n);
    for (int g = 1; g < genus; ++g) t = connected_sum(t, t.size() / 2, grid_torus(n), 0);
    return t;
}

/// Sum of a random subset of the fundamental cycles of a random spanning
/// forest of the 1-skeleton.
inline Chain random_cycle(const WeightedComplex& K, Rng& rng) {
    if (K.weighted_dim() != 1) throw InvalidArgument("random_cycle expects edge weights");
    const std::size_t V = K.size(0), E = K.size(1);
    std::vector<int> order(E);
    for (std::size_t e = 0; e < E; ++e) order[e] = static_cast<int>(e);
    shuffle(order, rng);
    ::lexcycle::detail::UnionFind uf(V);
    std::vector<std::vector<std::pair<int, int>>> adj(V);  // (neighbour, edge)
    std::vector<int> non_tree;
    for (int e : order) {
        const auto vs = K.vertex_ids(1, e);
        if (uf.unite(vs[0], vs[1])) {
            adj[vs[0]].push_back({vs[1], e});
            adj[vs[1]].push_back({vs[0], e});
        } else {
            non_tree.push_back(e);
        }
    }
    std::vector<int> parent(V, -1), parent_edge(V, -1), depth(V, -1);
    for (std::size_t r = 0; r < V; ++r) {
        if (depth[r] >= 0) continue;
        depth[r] = 0;
        std::vector<int> stack{static_cast<int>(r)};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[u])
                if (depth[w] < 0) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    parent_edge[w] = e;
                    stack.push_back(w);
                }
        }
    }
    std::vector<std::uint8_t> in(E, 0);
    for (int e : non_tree) {
        if (!coin(rng)) continue;
        in[e] ^= 1;
        const auto vs = K.vertex_ids(1, e);
        int a = vs[0], b = vs[1];
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            in[parent_edge[a]] ^= 1;
            a = parent[a];
        }
    }
    std::vector<int> ids;
    for (std::size_t e = 0; e < E; ++e)
        if (in[e]) ids.push_back(static_cast<int>(e));
    return make_sorted_chain(K, 1, std::move(ids));
}

/// Random simplicial complex of dimension <= 3 on a few vertices, weighted on
/// a random dimension.
inline WeightedComplex random_complex(Rng& rng, std::size_t max_simplices = 2000) {
    for (;;) {
        // One draw in four is large: more vertices and a denser simplex list.
        const bool large = below(rng, 4) == 0;
        const int nv = large ? 12 + static_cast<int>(below(rng, 30)) : 4 + static_cast<int>(below(rng, 12));
        const int top = 1 + static_cast<int>(below(rng, 3));
        std::vector<SimplexInput> in;
        std::set<std::vector<int>> seen;
        const std::size_t count = 1 + below(rng, static_cast<std::uint64_t>(nv) * (large ? 10 : 3));
        for (std::size_t s = 0; s < count; ++s) {
            const int k = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(top)));
            std::vector<int> verts(static_cast<std::size_t>(nv));
            for (int v = 0; v < nv; ++v) verts[static_cast<std::size_t>(v)] = v;
            shuffle(verts, rng);
            verts.resize(static_cast<std::size_t>(k + 1));
            std::sort(verts.begin(), verts.end());
            if (seen.insert(verts).second) in.push_back({verts, std::nullopt});
        }
        for (int v = 0; v < nv; ++v)
            if (below(rng, 4) == 0) in.push_back({{v}, std::nullopt});
        int dim = 0;
        for (const auto& s : in) dim = std::max(dim, static_cast<int>(s.vertices.size()) - 1);
        WeightedComplex K = build_complex(in, static_cast<int>(below(rng, static_cast<std::uint64_t>(dim + 1))));
        if (K.total_size() <= max_simplices) return K;
    }
}

struct SparseSystem {
    Gf2Matrix A;
    Gf2Vector b;
    std::optional<Gf2Vector> x;  // a known solution, when one was planted
};

/// Rows carry at most c ones. Solvable systems plant x and set b = Ax;
/// unsolvable ones duplicate a row and pick b outside the column space.
inline SparseSystem random_sparse_system(std::size_t n, std::size_t c, bool solvable, Rng& rng) {
    if (n == 0) throw InvalidArgument("system size must be positive");
    if (!solvable && n < 2) throw InvalidArgument("an unsolvable system needs n >= 2");
    c = std::min(c, n);
    SparseSystem s;
    s.A.assign(n, Gf2Vector(n, 0));
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    for (std::size_t i = 0; i < n; ++i) {
        shuffle(cols, rng);
        const std::size_t w = below(rng, c + 1);
        for (std::size_t k = 0; k < w; ++k) s.A[i][cols[k]] = 1;
    }
    if (solvable) {
        Gf2Vector x(n, 0);
        for (auto& v : x) v = static_cast<std::uint8_t>(coin(rng));
        s.b.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s.b[i] ^= static_cast<std::uint8_t>(s.A[i][j] & x[j]);
        s.x = std::move(x);
        return s;
    }
    const std::size_t r1 = below(rng, n);
    std::size_t r2 = below(rng, n - 1);
    if (r2 >= r1) ++r2;
    s.A[r2] = s.A[r1];
    for (;;) {
        s.b.assign(n, 0);
        for (auto& v : s.b) v = static_cast<std::uint8_t>(coin(rng));
        s.b[r2] = s.b[r1] ^ 1;
        if (!gf2_solve(s.A, s.b)) return s;
    }
}

} // namespace lexcycle::gen

#endif // LEXCYCLE_GENERATORS_HPP
