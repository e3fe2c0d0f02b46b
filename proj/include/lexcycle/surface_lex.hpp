#ifndef LEXCYCLE_SURFACE_LEX_HPP
#define LEXCYCLE_SURFACE_LEX_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "complex.hpp"
#include "error.hpp"

namespace lexcycle {

enum class EdgeRole : std::uint8_t { tree, cotree, leftover };

/// Edge partition T / Q* / L of a closed orientable surface.
///
/// T is the minimum spanning tree of the 1-skeleton under the canonical
/// order; Q* holds the primal edges of the maximum spanning tree of the dual
/// graph among edges outside T; L holds the rest, in increasing order.
struct TreeCotree {
    std::vector<int> tree;
    std::vector<int> cotree;
    std::vector<int> leftover;
    std::vector<EdgeRole> role;  // per edge id
    std::vector<signed char> orientation;  // per triangle, as from orient_triangles
    std::vector<int> twin;                 // per triangle slot 3t+j, the slot across its edge

    int genus() const noexcept { return static_cast<int>(leftover.size() / 2); }
    bool cut(int edge) const noexcept { return role[edge] != EdgeRole::cotree; }
};

inline TreeCotree tree_cotree(const WeightedComplex& K) {
    if (K.weighted_dim() != 1)
        throw InvalidArgument("surface algorithms need edge weights (weighted dimension 1)");
    detail::SurfaceIncidence si = detail::surface_incidence(K);
    if (!detail::check_links(K, si)) throw ValidationError("surface has boundary");
    const std::size_t edges = K.size(1);
    TreeCotree tc;
    tc.orientation = detail::orient_triangles(K, si);
    tc.role.assign(edges, EdgeRole::leftover);

    detail::UnionFind vertices(K.size(0));
    for (std::size_t e = 0; e < edges; ++e) {
        auto v = K.vertex_ids(1, static_cast<int>(e));
        if (vertices.unite(v[0], v[1])) {
            tc.role[e] = EdgeRole::tree;
            tc.tree.push_back(static_cast<int>(e));
        }
    }
    if (tc.tree.size() + 1 != K.size(0))
        throw ValidationError("surface has " + std::to_string(K.size(0) - tc.tree.size()) + " components");
    detail::UnionFind triangles(K.size(2));
    for (std::size_t e = edges; e-- > 0;) {
        if (tc.role[e] == EdgeRole::tree) continue;
        const int a = si.first[e];
        if (triangles.unite(a / 3, si.other(a) / 3)) {
            tc.role[e] = EdgeRole::cotree;
            tc.cotree.push_back(static_cast<int>(e));
        }
    }
    std::reverse(tc.cotree.begin(), tc.cotree.end());
    for (std::size_t e = 0; e < edges; ++e)
        if (tc.role[e] == EdgeRole::leftover) tc.leftover.push_back(static_cast<int>(e));

    if (tc.tree.size() + 1 != K.size(0) || tc.cotree.size() + 1 != K.size(2))
        throw ValidationError("tree-cotree decomposition does not span the surface");
    tc.twin = std::move(si.twin);
    return tc;
}

/// The disk obtained by cutting a surface along T and L.
///
/// Its boundary is a circular sequence of slots, each a directed copy of a cut
/// edge. Corner i sits between slot i-1 and slot i. Each Q* edge is a
/// diagonal of the disk joining two corners.
class PolygonalSchema {
public:
    struct Slot {
        int edge;
        int tail;  // vertex id
        int head;  // vertex id
    };

    std::size_t size() const noexcept { return slots_.size(); }
    const Slot& slot(std::size_t i) const { return slots_[i]; }
    std::span<const Slot> slots() const noexcept { return slots_; }
    EdgeRole role(int edge) const { return role_[edge]; }
    std::size_t edge_count() const noexcept { return role_.size(); }

    /// The two slots holding copies of a cut edge, in increasing order.
    std::pair<int, int> copies(int edge) const {
        if (role_[edge] == EdgeRole::cotree)
            throw InvalidArgument("edge " + std::to_string(edge) + " is not a cut edge");
        return {copy_[edge][0], copy_[edge][1]};
    }

    /// Corners (a(e), b(e)) joined by a Q* edge: a at its lower vertex, b at
    /// its higher vertex.
    std::pair<int, int> corners(int edge) const {
        if (role_[edge] != EdgeRole::cotree)
            throw InvalidArgument("edge " + std::to_string(edge) + " is not a Q* edge");
        return {corner_[2 * edge], corner_[2 * edge + 1]};
    }

    /// One line per slot: index, edge tuple, direction, role.
    std::string dump(const WeightedComplex& K) const {
        std::ostringstream out;
        out << "slots " << slots_.size() << '\n';
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            const Slot& s = slots_[i];
            out << i << ' ' << K.simplex(1, s.edge).str() << ' '
                << K.simplex(0, s.tail).str() << "->" << K.simplex(0, s.head).str() << ' '
                << (role_[s.edge] == EdgeRole::tree ? 'T' : 'L') << '\n';
        }
        return out.str();
    }

private:
    friend PolygonalSchema cut_to_disk(const WeightedComplex&, const TreeCotree&);

    std::vector<Slot> slots_;
    std::vector<std::array<int, 2>> copy_;
    std::vector<int> corner_;  // per dart 2e + dir, Q* darts only
    std::vector<EdgeRole> role_;
};

/// Traces the boundary of the cut disk.
///
/// Half-edges are triangle slots 3t+j, directed along the triangle's
/// orientation; each maps to the dart 2e (lower to higher vertex) or 2e+1.
/// From a cut half-edge into vertex v the walk turns through the triangles at
/// v, crossing Q* edges, until it meets the next cut half-edge leaving v; the
/// Q* darts crossed on the way sit in the corner before that slot.
inline PolygonalSchema cut_to_disk(const WeightedComplex& K, const TreeCotree& tc) {
    const std::size_t edges = K.size(1), nt = K.size(2);
    if (tc.role.size() != edges) throw InvalidArgument("tree-cotree does not match complex");
    std::vector<int> rebuilt_twin;
    std::vector<signed char> rebuilt_orientation;
    if (tc.twin.size() != 3 * nt || tc.orientation.size() != nt) {
        const auto si = detail::surface_incidence(K);
        rebuilt_orientation = detail::orient_triangles(K, si);
        rebuilt_twin = si.twin;
    }
    const std::vector<int>& twin = rebuilt_twin.empty() ? tc.twin : rebuilt_twin;
    const std::vector<signed char>& orientation =
        rebuilt_orientation.empty() ? tc.orientation : rebuilt_orientation;
    for (int o : twin)
        if (o < 0) throw ValidationError("surface is not closed");

    // Sorted (a,b,c): slot 0 is (b,c), 1 is (a,c), 2 is (a,b). Positive
    // triangles run a->b->c, i.e. slots 2, 0, 1; negative ones run 1, 0, 2.
    auto next = [&](int h) {
        const int t = h / 3, j = h % 3;
        return 3 * t + (orientation[static_cast<std::size_t>(t)] > 0 ? (j + 1) % 3 : (j + 2) % 3);
    };
    auto edge_of = [&](int h) { return K.facets(2, h / 3)[static_cast<std::size_t>(h % 3)]; };
    auto reversed = [&](int h) {  // runs from the higher vertex to the lower one
        return (orientation[static_cast<std::size_t>(h / 3)] > 0) == (h % 3 == 1);
    };
    auto dart = [&](int h) { return 2 * edge_of(h) + (reversed(h) ? 1 : 0); };

    PolygonalSchema P;
    P.role_ = tc.role;
    P.copy_.assign(edges, {-1, -1});
    P.corner_.assign(2 * edges, -1);

    int start = -1;
    for (int h = 0; h < static_cast<int>(3 * nt) && start < 0; ++h)
        if (tc.cut(edge_of(h))) start = h;
    if (start < 0) throw ValidationError("no cut edges");

    const std::size_t expected = 2 * (tc.tree.size() + tc.leftover.size());
    P.slots_.reserve(expected);
    int cur = start;
    std::size_t steps = 0;
    while (true) {
        const int i = static_cast<int>(P.slots_.size());
        const int e = edge_of(cur);
        if (P.slots_.size() >= expected) throw ValidationError("cut complement is not a disk");
        const auto v = K.vertex_ids(1, e);
        const bool rev = reversed(cur);
        P.slots_.push_back({e, v[rev ? 1 : 0], v[rev ? 0 : 1]});
        P.copy_[static_cast<std::size_t>(e)][P.copy_[static_cast<std::size_t>(e)][0] < 0 ? 0 : 1] = i;
        int cand = next(cur);
        while (!tc.cut(edge_of(cand))) {
            P.corner_[static_cast<std::size_t>(dart(cand))] = i + 1;
            cand = next(twin[static_cast<std::size_t>(cand)]);
            if (++steps > 4 * edges) throw ValidationError("corner sweep did not terminate");
        }
        cur = cand;
        if (cur == start) break;
    }
    if (P.slots_.size() != expected)
        throw ValidationError("cut complement is not a disk: boundary walk covers " +
                              std::to_string(P.slots_.size()) + " of " +
                              std::to_string(expected) + " slots");
    const int n = static_cast<int>(expected);
    for (int& c : P.corner_)
        if (c == n) c = 0;
    return P;
}

enum class CopyChoice { first, second };
enum class ArcDirection { clockwise, counterclockwise };

struct SweepOptions {
    CopyChoice copy = CopyChoice::first;
    ArcDirection arc = ArcDirection::clockwise;
};

/// Per-slot state of the circular Z2 accumulator after one sweep.
struct CircularAccumulator {
    std::vector<std::uint8_t> init;
    std::vector<std::uint32_t> s;  // intervals starting at the slot
    std::vector<std::uint32_t> f;  // intervals ending at the slot
    std::vector<std::uint8_t> value;
};

/// Loads z into the accumulator and sweeps it once.
///
/// A cut edge of z marks one of its copies. A Q* edge with corners (a, b)
/// adds 1 on the arc of slots a..b-1 (clockwise) or b..a-1; only the arc's
/// endpoints are recorded, and the sweep resolves all arcs in one pass.
inline CircularAccumulator accumulate(const PolygonalSchema& P, const Chain& z,
                                      SweepOptions options = {}) {
    if (z.dim() != 1) throw InvalidArgument("surface sweep expects a 1-chain");
    if (z.complex().size(1) != P.edge_count())
        throw InvalidArgument("chain and schema come from different complexes");
    const std::size_t n = P.size();
    CircularAccumulator acc{std::vector<std::uint8_t>(n, 0), std::vector<std::uint32_t>(n, 0),
                            std::vector<std::uint32_t>(n, 0), std::vector<std::uint8_t>(n, 0)};
    std::uint32_t wrapping = 0;
    for (int e : z.support()) {
        if (P.role(e) != EdgeRole::cotree) {
            auto [p, q] = P.copies(e);
            acc.init[options.copy == CopyChoice::first ? p : q] ^= 1;
            continue;
        }
        auto [a, b] = P.corners(e);
        if (options.arc == ArcDirection::counterclockwise) std::swap(a, b);
        const int first = a;
        const int last = (b + static_cast<int>(n) - 1) % static_cast<int>(n);
        ++acc.s[first];
        ++acc.f[last];
        if (first > last) ++wrapping;
    }
    std::uint32_t cover = wrapping + acc.s[0];
    acc.value[0] = acc.init[0] ^ static_cast<std::uint8_t>(cover & 1U);
    for (std::size_t i = 1; i < n; ++i) {
        cover = cover + acc.s[i] - acc.f[i - 1];
        acc.value[i] = acc.init[i] ^ static_cast<std::uint8_t>(cover & 1U);
    }
    return acc;
}

/// Lex-optimal cycle homologous to z: the unique cycle of T and L in its class.
inline Chain lex_opt_cycle_surface(const WeightedComplex& K, const PolygonalSchema& P,
                                   const Chain& z, SweepOptions options = {}) {
    if (&z.complex() != &K) throw InvalidArgument("chain belongs to a different complex");
    if (!is_cycle(z)) throw ValidationError("input chain is not a cycle");
    const CircularAccumulator acc = accumulate(P, z, options);
    std::vector<int> out;
    for (std::size_t e = 0; e < P.edge_count(); ++e) {
        if (P.role(static_cast<int>(e)) == EdgeRole::cotree) continue;
        auto [p, q] = P.copies(static_cast<int>(e));
        if (acc.value[p] ^ acc.value[q]) out.push_back(static_cast<int>(e));
    }
    return make_sorted_chain(K, 1, std::move(out));
}

/// Fundamental cycles of T + l for l in L, increasing: the lex-optimal basis.
inline std::vector<Chain> lex_opt_basis_surface(const WeightedComplex& K, const TreeCotree& tc,
                                                const PolygonalSchema& /*schema*/) {
    const std::size_t nv = K.size(0);
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbour, edge)
    for (int e : tc.tree) {
        auto v = K.vertex_ids(1, e);
        adj[v[0]].emplace_back(v[1], e);
        adj[v[1]].emplace_back(v[0], e);
    }
    std::vector<int> parent(nv, -1), parent_edge(nv, -1), depth(nv, -1);
    std::vector<int> queue{0};
    depth[0] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        for (auto [w, e] : adj[v])
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                parent_edge[w] = e;
                queue.push_back(w);
            }
    }
    std::vector<Chain> out;
    for (int l : tc.leftover) {
        auto v = K.vertex_ids(1, l);
        int a = v[0], b = v[1];
        std::vector<int> ids{l};
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            ids.push_back(parent_edge[a]);
            a = parent[a];
        }
        std::sort(ids.begin(), ids.end());
        out.push_back(make_sorted_chain(K, 1, std::move(ids)));
    }
    return out;
}

/// Tree-cotree decomposition and schema of one surface, reusable for many
/// queries. The complex must outlive the optimizer.
class SurfaceLexOptimizer {
public:
    explicit SurfaceLexOptimizer(const WeightedComplex& K)
        : complex_(&K), tc_(tree_cotree(K)), schema_(cut_to_disk(K, tc_)) {}

    const TreeCotree& decomposition() const noexcept { return tc_; }
    const PolygonalSchema& schema() const noexcept { return schema_; }

    Chain lex_optimal_cycle(const Chain& z, SweepOptions options = {}) const {
        return lex_opt_cycle_surface(*complex_, schema_, z, options);
    }

    std::vector<Chain> lex_optimal_basis() const {
        return lex_opt_basis_surface(*complex_, tc_, schema_);
    }

private:
    const WeightedComplex* complex_;
    TreeCotree tc_;
    PolygonalSchema schema_;
};

} // namespace lexcycle

#endif // LEXCYCLE_SURFACE_LEX_HPP
