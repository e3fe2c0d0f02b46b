#ifndef LEXCYCLE_PERSISTENCE_HPP
#define LEXCYCLE_PERSISTENCE_HPP

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "bit_column.hpp"
#include "chain.hpp"
#include "complex.hpp"
#include "error.hpp"

namespace lexcycle {

struct FiltrationEntry {
    int dim;
    int id;
};

/// All simplices of a complex in insertion order, faces before cofaces.
///
/// Each simplex is keyed by (rank, dimension, tuple). The rank of a
/// weighted-dimension simplex is 1 + its canonical position, a higher simplex
/// takes the largest rank among its faces, and lower simplices have rank 0.
class Filtration {
public:
    const WeightedComplex& complex() const noexcept { return *complex_; }
    std::size_t size() const noexcept { return order_.size(); }
    const FiltrationEntry& operator[](std::size_t pos) const { return order_[pos]; }
    std::span<const FiltrationEntry> order() const noexcept { return order_; }

    /// 0-based position of a simplex.
    std::size_t position(int dim, int id) const { return position_[dim][id]; }

    /// Weight at which the simplex at `pos` enters: 0 below the weighted
    /// dimension, otherwise the weight of its largest weighted face.
    double value(std::size_t pos) const {
        const int r = rank_[pos];
        return r == 0 ? 0.0 : complex_->weight(r - 1);
    }

private:
    friend Filtration build_filtration(const WeightedComplex&);

    const WeightedComplex* complex_ = nullptr;
    std::vector<FiltrationEntry> order_;
    std::vector<int> rank_;
    std::array<std::vector<std::size_t>, Simplex::max_vertices> position_;
};

inline Filtration build_filtration(const WeightedComplex& K) {
    const int d = K.weighted_dim();
    std::array<std::vector<int>, Simplex::max_vertices> rank;
    for (int k = 0; k < Simplex::max_vertices; ++k) {
        rank[k].assign(K.size(k), 0);
        for (std::size_t id = 0; id < K.size(k); ++id) {
            if (k == d) {
                rank[k][id] = static_cast<int>(id) + 1;
            } else if (k > d) {
                int r = 0;
                for (int f : K.facets(k, static_cast<int>(id))) r = std::max(r, rank[k - 1][f]);
                rank[k][id] = r;
            }
        }
    }
    struct Keyed {
        int rank, dim, id;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(K.total_size());
    for (int k = 0; k < Simplex::max_vertices; ++k)
        for (std::size_t id = 0; id < K.size(k); ++id)
            keyed.push_back({rank[k][id], k, static_cast<int>(id)});
    // Outside the weighted dimension ids follow tuple order, so (dim, id)
    // orders ties by tuple.
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        return std::tie(a.rank, a.dim, a.id) < std::tie(b.rank, b.dim, b.id);
    });

    Filtration F;
    F.complex_ = &K;
    F.order_.reserve(keyed.size());
    F.rank_.reserve(keyed.size());
    for (int k = 0; k < Simplex::max_vertices; ++k) F.position_[k].resize(K.size(k));
    for (const Keyed& e : keyed) {
        F.position_[e.dim][e.id] = F.order_.size();
        F.order_.push_back({e.dim, e.id});
        F.rank_.push_back(e.rank);
    }
    return F;
}

/// Birth and death are 1-based filtration indices: index i is the step that
/// adds the i-th simplex.
struct PersistencePair {
    int dim;
    std::size_t birth;
    std::size_t death;
    friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

struct EssentialClass {
    int dim;
    std::size_t birth;
    friend bool operator==(const EssentialClass&, const EssentialClass&) = default;
};

/// Result of the standard column reduction R = boundary * V.
class ReducedFiltration {
public:
    const Filtration& filtration() const noexcept { return filtration_; }
    const WeightedComplex& complex() const noexcept { return filtration_.complex(); }
    std::size_t size() const noexcept { return filtration_.size(); }

    const BitColumn& reduced(std::size_t pos) const { return r_[pos]; }
    const BitColumn& transform(std::size_t pos) const { return v_[pos]; }

    /// Highest nonzero row of R's column, or -1.
    long low(std::size_t pos) const { return low_[pos]; }

    std::span<const PersistencePair> pairs() const noexcept { return pairs_; }
    std::span<const EssentialClass> essential() const noexcept { return essential_; }

private:
    friend ReducedFiltration reduce(Filtration);

    Filtration filtration_;
    std::vector<BitColumn> r_;
    std::vector<BitColumn> v_;
    std::vector<long> low_;
    std::vector<PersistencePair> pairs_;
    std::vector<EssentialClass> essential_;
};

/// Left-to-right column reduction over GF(2) on dense packed columns.
inline ReducedFiltration reduce(Filtration f) {
    ReducedFiltration rf;
    const WeightedComplex& K = f.complex();
    const std::size_t n = f.size();
    rf.r_.reserve(n);
    rf.v_.reserve(n);
    rf.low_.assign(n, -1);
    std::vector<long> column_with_low(n, -1);

    for (std::size_t j = 0; j < n; ++j) {
        const auto [dim, id] = f[j];
        BitColumn r(n), v(n);
        v.set(j);
        if (dim > 0)
            for (int face : K.facets(dim, id)) r.flip(f.position(dim - 1, face));
        long low = r.highest();
        while (low >= 0 && column_with_low[low] >= 0) {
            const auto k = static_cast<std::size_t>(column_with_low[low]);
            r ^= rf.r_[k];
            v ^= rf.v_[k];
            low = r.highest();
        }
        if (low >= 0) column_with_low[low] = static_cast<long>(j);
        rf.low_[j] = low;
        rf.r_.push_back(std::move(r));
        rf.v_.push_back(std::move(v));
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (rf.low_[j] >= 0) {
            const auto birth = static_cast<std::size_t>(rf.low_[j]);
            rf.pairs_.push_back({f[birth].dim, birth + 1, j + 1});
        } else if (column_with_low[j] < 0) {
            rf.essential_.push_back({f[j].dim, j + 1});
        }
    }
    std::sort(rf.pairs_.begin(), rf.pairs_.end(), [](const auto& a, const auto& b) {
        return std::tie(a.dim, a.birth) < std::tie(b.dim, b.birth);
    });
    std::stable_sort(rf.essential_.begin(), rf.essential_.end(),
                     [](const auto& a, const auto& b) { return a.dim < b.dim; });
    rf.filtration_ = std::move(f);
    return rf;
}

struct DiagramPoint {
    int dim;
    std::size_t birth_index;
    double birth_value;
    std::optional<std::size_t> death_index;  // empty for essential classes
    double death_value;                      // +inf for essential classes

    bool essential() const noexcept { return !death_index.has_value(); }
};

/// Finite pairs then essential classes, each group ordered by (dim, birth).
inline std::vector<DiagramPoint> persistence_diagram(const ReducedFiltration& rf) {
    const Filtration& f = rf.filtration();
    std::vector<DiagramPoint> out;
    for (const auto& p : rf.pairs())
        out.push_back({p.dim, p.birth, f.value(p.birth - 1), p.death, f.value(p.death - 1)});
    for (const auto& e : rf.essential())
        out.push_back({e.dim, e.birth, f.value(e.birth - 1), std::nullopt,
                       std::numeric_limits<double>::infinity()});
    std::stable_sort(out.begin(), out.end(), [](const DiagramPoint& a, const DiagramPoint& b) {
        return std::make_tuple(a.essential(), a.dim, a.birth_index) <
               std::make_tuple(b.essential(), b.dim, b.birth_index);
    });
    return out;
}

/// Betti numbers beta_0..beta_dim as counts of essential classes.
inline std::vector<int> betti_numbers(const ReducedFiltration& rf) {
    std::vector<int> betti(static_cast<std::size_t>(std::max(rf.complex().dimension() + 1, 0)), 0);
    for (const auto& e : rf.essential()) ++betti[e.dim];
    return betti;
}

inline std::vector<int> betti_numbers(const WeightedComplex& K) {
    return betti_numbers(reduce(build_filtration(K)));
}

/// Cycle stored in V's column for a simplex whose reduced column vanished.
/// For an essential simplex this is its p-representative.
inline Chain p_representative(const ReducedFiltration& rf, std::size_t pos) {
    if (rf.low(pos) >= 0)
        throw InvalidArgument("simplex at filtration index " + std::to_string(pos + 1) +
                              " is negative and carries no cycle");
    const Filtration& f = rf.filtration();
    const int dim = f[pos].dim;
    std::vector<int> ids;
    rf.transform(pos).for_each_set([&](std::size_t p) { ids.push_back(f[p].id); });
    std::sort(ids.begin(), ids.end());
    return make_sorted_chain(rf.complex(), dim, std::move(ids));
}

/// Basis of the d-boundaries in which every pivot (largest simplex of a basis
/// vector) occurs in exactly one vector. Rows are canonical d-simplex ids.
class BoundaryBasis {
public:
    BoundaryBasis(const ReducedFiltration& rf, int d)
        : complex_(&rf.complex()), dim_(d), slot_(rf.complex().size(d), -1) {
        const Filtration& f = rf.filtration();
        const std::size_t rows = complex_->size(d);
        std::vector<std::pair<int, BitColumn>> cols;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (f[j].dim != d + 1 || rf.low(j) < 0) continue;
            BitColumn c(rows);
            rf.reduced(j).for_each_set([&](std::size_t p) { c.set(static_cast<std::size_t>(f[p].id)); });
            const int pivot = static_cast<int>(c.highest());
            cols.emplace_back(pivot, std::move(c));
        }
        std::sort(cols.begin(), cols.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [pivot, c] : cols) {
            slot_[pivot] = static_cast<int>(pivots_.size());
            pivots_.push_back(pivot);
            vectors_.push_back(std::move(c));
        }
        // Ascending pivots: earlier vectors are already free of other pivots,
        // so one pass per vector clears every foreign pivot from it.
        for (std::size_t i = 0; i < vectors_.size(); ++i) {
            BitColumn& c = vectors_[i];
            long r = c.highest_below(static_cast<std::size_t>(pivots_[i]));
            while (r >= 0) {
                if (slot_[r] >= 0) c ^= vectors_[slot_[r]];
                r = c.highest_below(static_cast<std::size_t>(r));
            }
        }
    }

    int dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    std::span<const int> pivots() const noexcept { return pivots_; }
    bool is_pivot(int id) const { return slot_[id] >= 0; }

    Chain vector(std::size_t i) const {
        return make_sorted_chain(*complex_, dim_, vectors_[i].indices());
    }

    /// Adds the basis vector of every pivot present in z. The result is the
    /// lexicographic minimum of z + B_d.
    Chain eliminate(const Chain& z) const {
        BitColumn c(complex_->size(dim_));
        for (int id : z.support()) c.set(static_cast<std::size_t>(id));
        for (int id : z.support())
            if (slot_[id] >= 0) c ^= vectors_[slot_[id]];
        return make_sorted_chain(*complex_, dim_, c.indices());
    }

private:
    const WeightedComplex* complex_;
    int dim_;
    std::vector<int> slot_;
    std::vector<int> pivots_;
    std::vector<BitColumn> vectors_;
};

struct BottleneckResult {
    Chain cycle;
    double norm;
};

/// Lex- and bottleneck-optimal cycles by boundary matrix reduction; works in
/// any dimension. The complex must outlive the optimizer.
class ReductionOptimizer {
public:
    explicit ReductionOptimizer(const WeightedComplex& K)
        : rf_(reduce(build_filtration(K))), basis_(rf_, K.weighted_dim()) {}

    const ReducedFiltration& reduced() const noexcept { return rf_; }
    const BoundaryBasis& boundary_basis() const noexcept { return basis_; }

    Chain lex_optimal_cycle(const Chain& z) const {
        require_cycle(z);
        return basis_.eliminate(z);
    }

    BottleneckResult bottleneck_optimal_cycle(const Chain& z) const {
        Chain best = lex_optimal_cycle(z);
        const double norm = bottleneck_norm(best);
        return {std::move(best), norm};
    }

    /// Greedy lex-optimal basis of H_d, in increasing lex order.
    ///
    /// The k-th element is the V-column of the k-th essential d-simplex with
    /// every pivot below its top removed, pivots drawn from B_d and from the
    /// essential simplices chosen before it.
    std::vector<Chain> lex_optimal_basis() const {
        const WeightedComplex& K = rf_.complex();
        const int d = K.weighted_dim();
        const Filtration& f = rf_.filtration();
        const std::size_t rows = K.size(d);
        std::vector<BitColumn> pool;                 // indexed by slot
        std::vector<int> slot(rows, -1);
        for (std::size_t i = 0; i < basis_.rank(); ++i) {
            BitColumn c(rows);
            const Chain v = basis_.vector(i);
            for (int id : v.support()) c.set(static_cast<std::size_t>(id));
            slot[basis_.pivots()[i]] = static_cast<int>(pool.size());
            pool.push_back(std::move(c));
        }
        std::vector<Chain> out;
        for (const auto& e : rf_.essential()) {
            if (e.dim != d) continue;
            const std::size_t pos = e.birth - 1;
            BitColumn c(rows);
            rf_.transform(pos).for_each_set(
                [&](std::size_t p) { c.set(static_cast<std::size_t>(f[p].id)); });
            const int top = f[pos].id;
            long r = c.highest_below(static_cast<std::size_t>(top));
            while (r >= 0) {
                if (slot[r] >= 0) c ^= pool[slot[r]];
                r = c.highest_below(static_cast<std::size_t>(r));
            }
            out.push_back(make_sorted_chain(K, d, c.indices()));
            slot[top] = static_cast<int>(pool.size());
            pool.push_back(std::move(c));
        }
        return out;
    }

private:
    void require_cycle(const Chain& z) const {
        if (&z.complex() != &rf_.complex())
            throw InvalidArgument("chain belongs to a different complex");
        detail::require_weighted(z, "lex_optimal_cycle");
        if (!is_cycle(z)) throw ValidationError("input chain is not a cycle");
    }

    ReducedFiltration rf_;
    BoundaryBasis basis_;
};

inline Chain lex_optimal_cycle(const WeightedComplex& K, const Chain& z) {
    return ReductionOptimizer(K).lex_optimal_cycle(z);
}

inline BottleneckResult bottleneck_optimal_cycle(const WeightedComplex& K, const Chain& z) {
    return ReductionOptimizer(K).bottleneck_optimal_cycle(z);
}

inline std::vector<Chain> lex_optimal_basis(const WeightedComplex& K, int d) {
    if (d != K.weighted_dim())
        throw InvalidArgument("complex is weighted on dimension " +
                              std::to_string(K.weighted_dim()) + ", not " + std::to_string(d));
    return ReductionOptimizer(K).lex_optimal_basis();
}

} // namespace lexcycle

#endif // LEXCYCLE_PERSISTENCE_HPP
