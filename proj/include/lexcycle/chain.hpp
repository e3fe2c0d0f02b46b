#ifndef LEXCYCLE_CHAIN_HPP
#define LEXCYCLE_CHAIN_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace lexcycle {

/// A Z2 chain: a set of simplices of one dimension of a complex.
///
/// The support is kept as sorted simplex ids. The chain refers to its complex
/// by address, so the complex must outlive it.
class Chain {
public:
    Chain(const WeightedComplex& K, int dim) : complex_(&K), dim_(dim) {
        if (dim < 0 || dim > K.dimension() + 1)
            throw InvalidArgument("chain dimension " + std::to_string(dim) +
                                  " out of range for complex");
    }

    /// Throws ValidationError on out-of-range or repeated ids.
    Chain(const WeightedComplex& K, int dim, std::vector<int> ids) : Chain(K, dim) {
        std::sort(ids.begin(), ids.end());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] < 0 || static_cast<std::size_t>(ids[i]) >= K.size(dim))
                throw ValidationError("simplex id " + std::to_string(ids[i]) +
                                      " out of range for dimension " + std::to_string(dim));
            if (i && ids[i] == ids[i - 1])
                throw ValidationError("simplex id " + std::to_string(ids[i]) +
                                      " repeated in chain");
        }
        support_ = std::move(ids);
    }

    static Chain from_simplices(const WeightedComplex& K, std::span<const Simplex> simplices) {
        if (simplices.empty()) throw InvalidArgument("cannot infer dimension of an empty list");
        const int dim = simplices.front().dim();
        std::vector<int> ids;
        ids.reserve(simplices.size());
        for (const Simplex& s : simplices) {
            if (s.dim() != dim) throw ValidationError("mixed dimensions in chain");
            ids.push_back(K.index_of(s));
        }
        return Chain(K, dim, std::move(ids));
    }

    const WeightedComplex& complex() const noexcept { return *complex_; }
    int dim() const noexcept { return dim_; }
    std::span<const int> support() const noexcept { return support_; }
    bool empty() const noexcept { return support_.empty(); }
    std::size_t size() const noexcept { return support_.size(); }

    bool contains(int id) const {
        return std::binary_search(support_.begin(), support_.end(), id);
    }

    std::vector<Simplex> simplices() const {
        std::vector<Simplex> out;
        out.reserve(support_.size());
        for (int id : support_) out.push_back(complex_->simplex(dim_, id));
        return out;
    }

    friend bool operator==(const Chain& a, const Chain& b) {
        return a.complex_ == b.complex_ && a.dim_ == b.dim_ && a.support_ == b.support_;
    }

private:
    struct sorted_tag {};
    Chain(const WeightedComplex& K, int dim, std::vector<int> ids, sorted_tag)
        : complex_(&K), dim_(dim), support_(std::move(ids)) {}

    friend Chain add(const Chain&, const Chain&);
    friend Chain boundary(const Chain&);
    friend Chain make_sorted_chain(const WeightedComplex&, int, std::vector<int>);

    const WeightedComplex* complex_;
    int dim_;
    std::vector<int> support_;
};

/// Wraps ids already known to be sorted and unique.
inline Chain make_sorted_chain(const WeightedComplex& K, int dim, std::vector<int> ids) {
    return Chain(K, dim, std::move(ids), Chain::sorted_tag{});
}

namespace detail {

inline void require_compatible(const Chain& a, const Chain& b, const char* op) {
    if (&a.complex() != &b.complex())
        throw InvalidArgument(std::string(op) + ": chains belong to different complexes");
    if (a.dim() != b.dim())
        throw InvalidArgument(std::string(op) + ": dimension mismatch (" +
                              std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
}

inline void require_weighted(const Chain& c, const char* op) {
    if (c.dim() != c.complex().weighted_dim())
        throw InvalidArgument(std::string(op) + ": chain of dimension " +
                              std::to_string(c.dim()) + " but weights live on dimension " +
                              std::to_string(c.complex().weighted_dim()));
}

} // namespace detail

/// Sum over Z2: symmetric difference of supports.
inline Chain add(const Chain& a, const Chain& b) {
    detail::require_compatible(a, b, "add");
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.support_.begin(), a.support_.end(), b.support_.begin(),
                                  b.support_.end(), std::back_inserter(out));
    return Chain(a.complex(), a.dim(), std::move(out), Chain::sorted_tag{});
}

inline Chain operator+(const Chain& a, const Chain& b) { return add(a, b); }

inline Chain boundary(const Chain& c) {
    if (c.dim() < 1) throw InvalidArgument("boundary of a 0-chain is undefined");
    const std::size_t rows = c.complex().size(c.dim() - 1);
    const std::size_t incidences = c.size() * static_cast<std::size_t>(c.dim() + 1);
    std::vector<int> odd;
    if (incidences * 8 >= rows) {
        // Dense: a parity array beats sorting.
        std::vector<std::uint8_t> parity(rows, 0);
        for (int id : c.support_)
            for (int f : c.complex().facets(c.dim(), id)) parity[static_cast<std::size_t>(f)] ^= 1;
        for (std::size_t f = 0; f < rows; ++f)
            if (parity[f]) odd.push_back(static_cast<int>(f));
    } else {
        std::vector<int> faces;
        faces.reserve(incidences);
        for (int id : c.support_)
            for (int f : c.complex().facets(c.dim(), id)) faces.push_back(f);
        std::sort(faces.begin(), faces.end());
        for (std::size_t i = 0; i < faces.size();) {
            std::size_t j = i;
            while (j < faces.size() && faces[j] == faces[i]) ++j;
            if ((j - i) % 2) odd.push_back(faces[i]);
            i = j;
        }
    }
    return Chain(c.complex(), c.dim() - 1, std::move(odd), Chain::sorted_tag{});
}

inline bool is_cycle(const Chain& c) { return c.dim() == 0 || boundary(c).empty(); }

/// Largest weight in the chain, 0 for the empty chain.
inline double bottleneck_norm(const Chain& c) {
    detail::require_weighted(c, "bottleneck_norm");
    // Ids follow canonical order, so the last id carries the maximum weight.
    return c.empty() ? 0.0 : c.complex().weight(c.support().back());
}

/// Lexicographic order: decided by the largest simplex where the supports
/// differ; the chain without it is smaller.
inline std::strong_ordering lex_compare(const Chain& a, const Chain& b) {
    detail::require_compatible(a, b, "lex_compare");
    detail::require_weighted(a, "lex_compare");
    auto ia = a.support().rbegin(), ea = a.support().rend();
    auto ib = b.support().rbegin(), eb = b.support().rend();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    if (ia == ea && ib == eb) return std::strong_ordering::equal;
    return ia == ea ? std::strong_ordering::less : std::strong_ordering::greater;
}

} // namespace lexcycle

#endif // LEXCYCLE_CHAIN_HPP
