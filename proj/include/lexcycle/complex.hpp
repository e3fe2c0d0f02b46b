#ifndef LEXCYCLE_COMPLEX_HPP
#define LEXCYCLE_COMPLEX_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace lexcycle {

/// A simplex as a strictly increasing tuple of 1 to 4 non-negative vertex ids.
class Simplex {
public:
    static constexpr int max_vertices = 4;

    Simplex() = default;
    Simplex(std::initializer_list<int> vertices)
        : Simplex(std::span<const int>(vertices.begin(), vertices.size())) {}

    /// Sorts the input. Throws ValidationError on duplicates, negative ids or a bad size.
    explicit Simplex(std::span<const int> vertices) {
        if (vertices.empty() || vertices.size() > max_vertices)
            throw ValidationError("simplex must have 1 to 4 vertices, got " +
                                  std::to_string(vertices.size()));
        size_ = static_cast<int>(vertices.size());
        std::copy(vertices.begin(), vertices.end(), v_.begin());
        std::sort(v_.begin(), v_.begin() + size_);
        for (int i = 0; i < size_; ++i) {
            if (v_[i] < 0)
                throw ValidationError("negative vertex id " + std::to_string(v_[i]));
            if (i > 0 && v_[i] == v_[i - 1])
                throw ValidationError("duplicate vertex " + std::to_string(v_[i]) +
                                      " in simplex");
        }
    }

    int size() const noexcept { return size_; }
    int dim() const noexcept { return size_ - 1; }
    int operator[](int i) const noexcept { return v_[i]; }
    const int* begin() const noexcept { return v_.data(); }
    const int* end() const noexcept { return v_.data() + size_; }

    bool contains(int vertex) const noexcept {
        return std::find(begin(), end(), vertex) != end();
    }

    /// The facet opposite to the k-th vertex.
    Simplex without(int k) const noexcept {
        Simplex f;
        f.size_ = size_ - 1;
        for (int i = 0, j = 0; i < size_; ++i)
            if (i != k) f.v_[j++] = v_[i];
        return f;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < size_; ++i) {
            if (i) s += ',';
            s += std::to_string(v_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    // Unused slots hold -1, so this is the lexicographic order on tuples.
    friend auto operator<=>(const Simplex&, const Simplex&) = default;

private:
    std::array<int, max_vertices> v_{-1, -1, -1, -1};
    int size_ = 0;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(s.size());
        for (int v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// One line of construction input: a vertex tuple and an optional weight.
struct SimplexInput {
    std::vector<int> vertices;
    std::optional<double> weight;
};

/// Compressed incidence lists: `row(i)` holds the neighbours of item i.
struct Incidence {
    std::vector<std::size_t> offsets;
    std::vector<int> items;

    std::span<const int> row(std::size_t i) const {
        return {items.data() + offsets[i], items.data() + offsets[i + 1]};
    }
    std::size_t rows() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

/// Abstract simplicial complex with weights on one designated dimension.
///
/// Simplices of each dimension are numbered 0..size(k)-1. In the weighted
/// dimension the numbering is the canonical order (weight, then vertex tuple),
/// so comparing ids compares simplices. Every other dimension is numbered in
/// lexicographic tuple order.
class WeightedComplex {
public:
    WeightedComplex() = default;

    int dimension() const noexcept { return dimension_; }
    int weighted_dim() const noexcept { return weighted_dim_; }

    std::size_t size(int k) const {
        return (k < 0 || k >= Simplex::max_vertices) ? 0 : simplices_[k].size();
    }
    std::size_t total_size() const {
        std::size_t n = 0;
        for (const auto& s : simplices_) n += s.size();
        return n;
    }

    const Simplex& simplex(int k, int id) const { return simplices_[k][id]; }
    std::span<const Simplex> simplices(int k) const { return simplices_[k]; }

    std::optional<int> find(const Simplex& s) const {
        const auto& idx = index_[s.dim()];
        auto it = idx.find(s);
        if (it == idx.end()) return std::nullopt;
        return it->second;
    }

    int index_of(const Simplex& s) const {
        if (auto id = find(s)) return *id;
        throw ValidationError("simplex " + s.str() + " is not in the complex");
    }

    /// Weight of a simplex of the weighted dimension.
    double weight(int id) const { return weights_[id]; }
    std::span<const double> weights() const { return weights_; }

    /// Ids of the facets of simplex (k, id), k >= 1; facet j omits vertex j.
    std::span<const int> facets(int k, int id) const {
        return {facets_[k].data() + static_cast<std::size_t>(id) * (k + 1),
                static_cast<std::size_t>(k + 1)};
    }

    /// Vertex ids (dimension-0 ids, not labels) of simplex (k, id).
    std::span<const int> vertex_ids(int k, int id) const {
        return {vertex_ids_[k].data() + static_cast<std::size_t>(id) * (k + 1),
                static_cast<std::size_t>(k + 1)};
    }

    /// For every (k-1)-simplex, the k-simplices having it as a facet.
    Incidence cofaces(int k) const {
        Incidence inc;
        const std::size_t rows = size(k - 1);
        inc.offsets.assign(rows + 1, 0);
        for (std::size_t id = 0; id < size(k); ++id)
            for (int f : facets(k, static_cast<int>(id))) ++inc.offsets[f + 1];
        for (std::size_t i = 0; i < rows; ++i) inc.offsets[i + 1] += inc.offsets[i];
        inc.items.resize(inc.offsets[rows]);
        std::vector<std::size_t> fill(inc.offsets.begin(), inc.offsets.end() - 1);
        for (std::size_t id = 0; id < size(k); ++id)
            for (int f : facets(k, static_cast<int>(id)))
                inc.items[fill[f]++] = static_cast<int>(id);
        return inc;
    }

    /// Every simplex with its weight (weighted dimension only), dimension by
    /// dimension in id order. Feeding this back to build_complex reproduces
    /// the complex.
    std::vector<SimplexInput> to_input() const {
        std::vector<SimplexInput> out;
        out.reserve(total_size());
        for (int k = 0; k <= dimension_; ++k)
            for (std::size_t id = 0; id < size(k); ++id) {
                const Simplex& s = simplices_[k][id];
                SimplexInput in{{s.begin(), s.end()}, std::nullopt};
                if (k == weighted_dim_) in.weight = weights_[id];
                out.push_back(std::move(in));
            }
        return out;
    }

    friend bool operator==(const WeightedComplex& a, const WeightedComplex& b) {
        return a.weighted_dim_ == b.weighted_dim_ && a.simplices_ == b.simplices_ &&
               a.weights_ == b.weights_;
    }

private:
    friend WeightedComplex build_complex(std::span<const SimplexInput>, int);

    int dimension_ = -1;
    int weighted_dim_ = 0;
    std::array<std::vector<Simplex>, Simplex::max_vertices> simplices_;
    std::array<std::unordered_map<Simplex, int, SimplexHash>, Simplex::max_vertices> index_;
    std::vector<double> weights_;
    std::array<std::vector<int>, Simplex::max_vertices> facets_;
    std::array<std::vector<int>, Simplex::max_vertices> vertex_ids_;
};

namespace detail {

// Index subsets of {0..n-1} of size k, in lexicographic order.
inline const std::vector<std::vector<int>>& index_subsets(int n, int k) {
    static const auto table = [] {
        std::array<std::array<std::vector<std::vector<int>>, 5>, 5> t;
        for (int n = 1; n <= 4; ++n)
            for (int mask = 1; mask < (1 << n); ++mask) {
                std::vector<int> idx;
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i)) idx.push_back(i);
                t[n][idx.size()].push_back(idx);
            }
        for (auto& row : t)
            for (auto& bucket : row) std::sort(bucket.begin(), bucket.end());
        return t;
    }();
    return table[n][k];
}

} // namespace detail

/// Builds the face closure of `input`, weighting the simplices of `query_dim`.
///
/// Unweighted query-dimension simplices get weight 1 + (their index among
/// query-dimension simplices in order of first appearance). Each input tuple
/// appears before its proper faces, which are visited by decreasing dimension
/// and lexicographic order.
inline WeightedComplex build_complex(std::span<const SimplexInput> input, int query_dim) {
    if (query_dim < 0 || query_dim >= Simplex::max_vertices)
        throw InvalidArgument("weighted dimension must be in 0..3, got " +
                              std::to_string(query_dim));

    WeightedComplex K;
    K.weighted_dim_ = query_dim;

    std::array<std::unordered_map<Simplex, int, SimplexHash>, Simplex::max_vertices> seen;
    std::array<std::vector<Simplex>, Simplex::max_vertices> first_seen;
    std::unordered_map<Simplex, double, SimplexHash> explicit_weight;

    auto visit = [&](const Simplex& s) {
        const int k = s.dim();
        if (seen[k].try_emplace(s, static_cast<int>(first_seen[k].size())).second)
            first_seen[k].push_back(s);
    };

    for (const SimplexInput& in : input) {
        Simplex s{std::span<const int>(in.vertices)};
        if (in.weight) {
            const double w = *in.weight;
            if (!std::isfinite(w) || w <= 0.0)
                throw ValidationError("weight of " + s.str() +
                                      " must be positive and finite");
            if (s.dim() != query_dim)
                throw ValidationError("weight given on " + std::to_string(s.dim()) +
                                      "-simplex " + s.str() + " but weighted dimension is " +
                                      std::to_string(query_dim));
            auto [it, inserted] = explicit_weight.try_emplace(s, w);
            if (!inserted && it->second != w)
                throw ValidationError("conflicting weights for " + s.str());
        }
        visit(s);
        for (int k = s.size() - 1; k >= 1; --k)
            for (const auto& idx : detail::index_subsets(s.size(), k)) {
                std::array<int, Simplex::max_vertices> face{};
                for (std::size_t i = 0; i < idx.size(); ++i) face[i] = s[idx[i]];
                visit(Simplex{std::span<const int>(face.data(), idx.size())});
            }
    }

    for (int k = 0; k < Simplex::max_vertices; ++k) {
        if (!first_seen[k].empty()) K.dimension_ = k;
        auto& list = K.simplices_[k];
        list = std::move(first_seen[k]);
        if (k != query_dim) {
            std::sort(list.begin(), list.end());
            continue;
        }
        std::vector<std::pair<double, Simplex>> keyed;
        keyed.reserve(list.size());
        for (std::size_t i = 0; i < list.size(); ++i) {
            auto it = explicit_weight.find(list[i]);
            keyed.emplace_back(it != explicit_weight.end() ? it->second
                                                           : static_cast<double>(i + 1),
                               list[i]);
        }
        std::sort(keyed.begin(), keyed.end());
        K.weights_.resize(keyed.size());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            K.weights_[i] = keyed[i].first;
            list[i] = keyed[i].second;
        }
    }

    for (int k = 0; k < Simplex::max_vertices; ++k) {
        auto& idx = K.index_[k];
        idx.reserve(K.simplices_[k].size());
        for (std::size_t i = 0; i < K.simplices_[k].size(); ++i)
            idx.emplace(K.simplices_[k][i], static_cast<int>(i));
    }
    for (int k = 0; k < Simplex::max_vertices; ++k) {
        const auto& list = K.simplices_[k];
        auto& vids = K.vertex_ids_[k];
        vids.reserve(list.size() * (k + 1));
        for (const Simplex& s : list)
            for (int v : s) vids.push_back(k == 0 ? K.index_[0].at(s) : K.index_[0].at(Simplex{v}));
        if (k == 0) continue;
        auto& fac = K.facets_[k];
        fac.reserve(list.size() * (k + 1));
        for (const Simplex& s : list)
            for (int j = 0; j <= k; ++j) fac.push_back(K.index_[k - 1].at(s.without(j)));
    }
    return K;
}

inline WeightedComplex build_complex(std::initializer_list<SimplexInput> input, int query_dim) {
    return build_complex(std::span<const SimplexInput>(input.begin(), input.size()), query_dim);
}

// ---------------------------------------------------------------------------
// Combinatorial 2-manifolds

class NotManifoldError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonOrientableError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

struct SurfaceTopology {
    bool orientable = true;
    bool closed = true;
    int genus = 0;
    long euler_characteristic = 0;
    int components = 0;
    int boundary_components = 0;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    std::vector<int> rank;

    explicit UnionFind(std::size_t n) : parent(n), rank(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
        return true;
    }
};

// Triangle corners are slots 3t+j, where j indexes the facet of t opposite
// its j-th vertex. twin pairs the two slots of an interior edge (-1 on the
// boundary); first is the lower slot of each edge. Building it checks that
// every edge lies in one or two triangles.
struct SurfaceIncidence {
    std::vector<int> first;  // per edge
    std::vector<int> twin;   // per slot
    bool closed = true;

    int other(int slot) const { return twin[static_cast<std::size_t>(slot)]; }
    std::size_t degree(std::size_t e) const { return twin[static_cast<std::size_t>(first[e])] < 0 ? 1 : 2; }
};

inline SurfaceIncidence surface_incidence(const WeightedComplex& K) {
    if (K.dimension() != 2)
        throw ValidationError("expected a 2-dimensional complex, got dimension " +
                              std::to_string(K.dimension()));
    const std::size_t nt = K.size(2);
    SurfaceIncidence si{std::vector<int>(K.size(1), -1), std::vector<int>(3 * nt, -1), true};
    auto too_many = [&](int e) {
        return NotManifoldError("not a 2-manifold: edge " + K.simplex(1, e).str() +
                                " lies in more than 2 triangles");
    };
    for (std::size_t t = 0; t < nt; ++t) {
        const auto f = K.facets(2, static_cast<int>(t));
        for (std::size_t j = 0; j < 3; ++j) {
            const int slot = static_cast<int>(3 * t + j);
            int& head = si.first[static_cast<std::size_t>(f[j])];
            if (head < 0) {
                head = slot;
            } else {
                if (si.twin[static_cast<std::size_t>(head)] >= 0) throw too_many(f[j]);
                si.twin[static_cast<std::size_t>(head)] = slot;
                si.twin[static_cast<std::size_t>(slot)] = head;
            }
        }
    }
    for (std::size_t e = 0; e < K.size(1); ++e) {
        if (si.first[e] < 0)
            throw NotManifoldError("not a 2-manifold: edge " + K.simplex(1, static_cast<int>(e)).str() +
                                   " lies in 0 triangles");
        if (si.degree(e) == 1) si.closed = false;
    }
    return si;
}

// Checks the vertex link condition; returns true iff closed.
inline bool check_links(const WeightedComplex& K, const SurfaceIncidence& si) {
    // With every edge in one or two triangles, each vertex link has degree at
    // most 2, so it is a circle or a path exactly when it is connected. Walk
    // the triangles around each vertex across the edges through it.
    const std::size_t nv = K.size(0), nt = K.size(2);
    std::vector<std::size_t> offsets(nv + 1, 0);
    for (std::size_t t = 0; t < nt; ++t)
        for (int v : K.vertex_ids(2, static_cast<int>(t))) ++offsets[static_cast<std::size_t>(v) + 1];
    for (std::size_t v = 0; v < nv; ++v) offsets[v + 1] += offsets[v];
    std::vector<int> first(nv, -1);
    for (std::size_t t = nt; t-- > 0;)
        for (int v : K.vertex_ids(2, static_cast<int>(t))) first[static_cast<std::size_t>(v)] = static_cast<int>(t);
    std::vector<int> seen(nt, -1);
    std::vector<int> stack;
    for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t count = offsets[v + 1] - offsets[v];
        if (count == 0)
            throw NotManifoldError("not a 2-manifold: vertex " + K.simplex(0, static_cast<int>(v)).str() +
                                   " has an empty link");
        const int vi = static_cast<int>(v);
        std::size_t reached = 1;
        stack.assign(1, first[v]);
        seen[static_cast<std::size_t>(first[v])] = vi;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            const auto verts = K.vertex_ids(2, t);
            for (std::size_t j = 0; j < 3; ++j) {
                if (verts[j] == vi) continue;  // facet j is opposite vertex j
                const int o = si.other(3 * t + static_cast<int>(j));
                const int u = o / 3;
                if (o >= 0 && seen[static_cast<std::size_t>(u)] != vi) {
                    seen[static_cast<std::size_t>(u)] = vi;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        if (reached != count)
            throw NotManifoldError("not a 2-manifold: link of vertex " + K.simplex(0, vi).str() +
                                   " is neither a circle nor a path");
    }
    return si.closed;
}

inline bool check_links(const WeightedComplex& K) { return check_links(K, surface_incidence(K)); }

inline std::vector<signed char> orient_triangles(const WeightedComplex& K, const SurfaceIncidence& si) {
    const std::size_t nt = K.size(2);
    std::vector<signed char> sign(nt, 0);
    std::vector<int> queue;
    // Facet j of a sorted triangle inherits orientation (-1)^j.
    for (std::size_t start = 0; start < nt; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        queue.assign(1, static_cast<int>(start));
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int t = queue[qi];
            for (std::size_t j = 0; j < 3; ++j) {
                const int o = si.other(3 * t + static_cast<int>(j));
                if (o < 0) continue;
                const int u = o / 3;
                const auto ju = static_cast<std::size_t>(o % 3);
                const signed char want =
                    static_cast<signed char>(-sign[t] * (((j + ju) % 2) ? -1 : 1));
                if (sign[u] == 0) {
                    sign[u] = want;
                    queue.push_back(u);
                } else if (sign[u] != want) {
                    throw NonOrientableError("non-orientable: triangles " + K.simplex(2, t).str() + " and " +
                                             K.simplex(2, u).str() + " cannot be oriented consistently");
                }
            }
        }
    }
    return sign;
}

} // namespace detail

/// Orientation sign per triangle, consistent across shared edges.
///
/// Sign +1 orients triangle (a,b,c) (sorted) as a->b->c. Propagates by BFS over
/// the dual graph. Throws NotManifoldError when an edge lies in more than two
/// triangles and NonOrientableError naming a conflicting triangle pair.
inline std::vector<signed char> orient_triangles(const WeightedComplex& K) {
    return detail::orient_triangles(K, detail::surface_incidence(K));
}

/// Validates the link conditions and orientability and reports the topology.
inline SurfaceTopology classify_surface(const WeightedComplex& K) {
    SurfaceTopology topo;
    const detail::SurfaceIncidence si = detail::surface_incidence(K);
    topo.closed = detail::check_links(K, si);
    detail::orient_triangles(K, si);
    topo.orientable = true;
    topo.euler_characteristic = static_cast<long>(K.size(0)) - static_cast<long>(K.size(1)) +
                                static_cast<long>(K.size(2));

    detail::UnionFind all(K.size(0)), rim(K.size(0));
    std::vector<char> on_rim(K.size(0), 0);
    for (std::size_t e = 0; e < K.size(1); ++e) {
        auto v = K.vertex_ids(1, static_cast<int>(e));
        all.unite(v[0], v[1]);
        if (si.degree(e) == 1) {
            rim.unite(v[0], v[1]);
            on_rim[v[0]] = on_rim[v[1]] = 1;
        }
    }
    for (std::size_t v = 0; v < K.size(0); ++v) {
        if (all.find(static_cast<int>(v)) == static_cast<int>(v)) ++topo.components;
        if (on_rim[v] && rim.find(static_cast<int>(v)) == static_cast<int>(v))
            ++topo.boundary_components;
    }
    // chi = 2c - 2g - b, summed over components.
    topo.genus = static_cast<int>((2L * topo.components - topo.boundary_components -
                                   topo.euler_characteristic) /
                                  2);
    return topo;
}

// ---------------------------------------------------------------------------
// Sub-level function on the barycentric subdivision

/// Vertex values on the barycentric subdivision K' of a weighted complex K.
///
/// K' has one vertex per simplex of K, labelled `label(dim, id)`; its simplices
/// are the flags of K. The subdivision is weighted on the same dimension as K,
/// each flag weighted by the largest value among its vertices.
struct SublevelFunction {
    WeightedComplex subdivision;
    std::array<std::size_t, Simplex::max_vertices + 1> label_offset{};
    std::vector<std::pair<int, int>> origin;  // label -> (dim, id) in K
    std::vector<long> values;                 // label -> value

    int label(int dim, int id) const {
        return static_cast<int>(label_offset[dim]) + id;
    }
    long value_of(int dim, int id) const { return values[label(dim, id)]; }
};

/// Values on K': every vertex that is not the barycenter of a d-simplex is
/// ranked by (dimension, tuple) from 1; d-barycenters follow in canonical order.
inline SublevelFunction sublevel_function(const WeightedComplex& K, int d) {
    if (d != K.weighted_dim())
        throw InvalidArgument("complex is weighted on dimension " +
                              std::to_string(K.weighted_dim()) + ", not " + std::to_string(d));
    SublevelFunction F;
    for (int k = 0; k < Simplex::max_vertices; ++k)
        F.label_offset[k + 1] = F.label_offset[k] + K.size(k);
    const std::size_t n = F.label_offset[Simplex::max_vertices];
    F.origin.resize(n);
    F.values.resize(n);
    long next = 1;
    for (int k = 0; k < Simplex::max_vertices; ++k) {
        if (k == d) continue;
        for (std::size_t id = 0; id < K.size(k); ++id) {
            F.origin[F.label(k, static_cast<int>(id))] = {k, static_cast<int>(id)};
            F.values[F.label(k, static_cast<int>(id))] = next++;
        }
    }
    for (std::size_t id = 0; id < K.size(d); ++id) {
        F.origin[F.label(d, static_cast<int>(id))] = {d, static_cast<int>(id)};
        F.values[F.label(d, static_cast<int>(id))] = next++;
    }

    // Full flags ending at each simplex, built upward from vertices.
    std::array<std::vector<std::vector<std::vector<int>>>, Simplex::max_vertices> flags;
    std::vector<SimplexInput> input;
    for (int k = 0; k <= K.dimension(); ++k) {
        flags[k].resize(K.size(k));
        for (std::size_t id = 0; id < K.size(k); ++id) {
            const int me = F.label(k, static_cast<int>(id));
            auto& out = flags[k][id];
            if (k == 0) {
                out.push_back({me});
            } else {
                for (int f : K.facets(k, static_cast<int>(id)))
                    for (const auto& chain : flags[k - 1][f]) {
                        out.push_back(chain);
                        out.back().push_back(me);
                    }
            }
        }
    }
    if (K.dimension() < 0) {
        F.subdivision = build_complex(std::span<const SimplexInput>{}, d);
        return F;
    }
    for (int k = K.dimension(); k >= 0; --k)
        for (std::size_t id = 0; id < K.size(k); ++id)
            for (const auto& chain : flags[k][id]) input.push_back({chain, std::nullopt});
    // Every d-simplex of K' is a (d+1)-subset of some full flag; weight each by
    // its largest vertex value.
    for (int k = d; k <= K.dimension(); ++k)
        for (std::size_t id = 0; id < K.size(k); ++id)
            for (const auto& chain : flags[k][id])
                for (const auto& idx :
                     detail::index_subsets(static_cast<int>(chain.size()), d + 1)) {
                    std::vector<int> face;
                    long top = 0;
                    for (int i : idx) {
                        face.push_back(chain[i]);
                        top = std::max(top, F.values[chain[i]]);
                    }
                    input.push_back({std::move(face), static_cast<double>(top)});
                }
    F.subdivision = build_complex(input, d);
    return F;
}

} // namespace lexcycle

#endif // LEXCYCLE_COMPLEX_HPP
