#ifndef LEXCYCLE_ORACLE_HPP
#define LEXCYCLE_ORACLE_HPP

// Brute-force ground truth for small instances. Nothing here calls into the
// chain, persistence or surface modules: boundaries are recomputed from
// vertex tuples and all linear algebra is done locally.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "complex.hpp"
#include "error.hpp"

namespace lexcycle::oracle {

inline constexpr std::size_t max_coboundary_simplices = 25;
inline constexpr std::size_t max_betti_simplices = 2000;
inline constexpr std::size_t max_enumerated_cycles_log2 = 22;
inline constexpr std::size_t max_words = 4;  // chains over at most 256 simplices

namespace detail {

template <std::size_t W>
struct Mask {
    std::array<std::uint64_t, W> w{};

    void flip(std::size_t i) { w[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    Mask& operator^=(const Mask& o) {
        for (std::size_t k = 0; k < W; ++k) w[k] ^= o.w[k];
        return *this;
    }
    bool zero() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    long top() const {
        for (std::size_t k = W; k-- > 0;)
            if (w[k]) return static_cast<long>(k * 64 + 63 - std::countl_zero(w[k]));
        return -1;
    }
    // Bit i is the i-th simplex in canonical order, so comparing from the top
    // word down is the lexicographic order on chains.
    friend bool operator<(const Mask& a, const Mask& b) {
        for (std::size_t k = W; k-- > 0;)
            if (a.w[k] != b.w[k]) return a.w[k] < b.w[k];
        return false;
    }
    friend bool operator==(const Mask&, const Mask&) = default;

    std::vector<int> ids() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < W; ++k) {
            std::uint64_t x = w[k];
            while (x) {
                out.push_back(static_cast<int>(k * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }
};

// Face ids of a (k)-simplex among the (k-1)-simplices, from the tuple.
inline std::vector<int> faces_from_tuple(const WeightedComplex& K, int k, int id) {
    const Simplex& s = K.simplex(k, id);
    std::vector<int> out;
    for (int j = 0; j < s.size(); ++j) out.push_back(K.index_of(s.without(j)));
    return out;
}

template <std::size_t W>
Mask<W> boundary_mask(const WeightedComplex& K, int k, int id) {
    Mask<W> m;
    for (int f : faces_from_tuple(K, k, id)) m.flip(static_cast<std::size_t>(f));
    return m;
}

inline bool chain_is_cycle(const Chain& z) {
    if (z.dim() == 0) return true;
    std::vector<int> faces;
    for (int id : z.support())
        for (int f : faces_from_tuple(z.complex(), z.dim(), id)) faces.push_back(f);
    std::sort(faces.begin(), faces.end());
    for (std::size_t i = 0; i < faces.size();) {
        std::size_t j = i;
        while (j < faces.size() && faces[j] == faces[i]) ++j;
        if ((j - i) % 2) return false;
        i = j;
    }
    return true;
}

inline std::size_t words_for(std::size_t bits) {
    const std::size_t w = std::max<std::size_t>(1, (bits + 63) / 64);
    if (w > max_words)
        throw GuardError("oracle supports chains over at most " +
                         std::to_string(64 * max_words) + " simplices, got " +
                         std::to_string(bits));
    return w;
}

template <class F>
decltype(auto) dispatch_words(std::size_t words, F&& f) {
    switch (words) {
    case 1: return f(std::integral_constant<std::size_t, 1>{});
    case 2: return f(std::integral_constant<std::size_t, 2>{});
    case 3: return f(std::integral_constant<std::size_t, 3>{});
    default: return f(std::integral_constant<std::size_t, 4>{});
    }
}

inline void require_small_cycle(const Chain& z) {
    const WeightedComplex& K = z.complex();
    if (z.dim() != K.weighted_dim())
        throw InvalidArgument("oracle: chain is not in the weighted dimension");
    const std::size_t m = K.size(z.dim() + 1);
    if (m > max_coboundary_simplices)
        throw GuardError("brute force limited to " + std::to_string(max_coboundary_simplices) +
                         " coboundary simplices, instance has " + std::to_string(m));
    if (!chain_is_cycle(z)) throw ValidationError("input chain is not a cycle");
}

// Visits z + boundary(c) for every (d+1)-chain c, in Gray-code order.
template <std::size_t W, class Visit>
void enumerate_class(const Chain& z, Visit&& visit) {
    const WeightedComplex& K = z.complex();
    const int d = z.dim();
    const std::size_t m = K.size(d + 1);
    std::vector<Mask<W>> bnd;
    for (std::size_t t = 0; t < m; ++t)
        bnd.push_back(boundary_mask<W>(K, d + 1, static_cast<int>(t)));
    Mask<W> cur;
    for (int id : z.support()) cur.flip(static_cast<std::size_t>(id));
    visit(cur);
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= bnd[static_cast<std::size_t>(std::countr_zero(i))];
        visit(cur);
    }
}

} // namespace detail

/// Lexicographic minimum of z + boundary(c) over all 2^m coboundary chains c.
inline Chain brute_lex_opt(const WeightedComplex& K, const Chain& z) {
    if (&z.complex() != &K) throw InvalidArgument("chain belongs to a different complex");
    detail::require_small_cycle(z);
    return detail::dispatch_words(detail::words_for(K.size(z.dim())), [&](auto words) {
        constexpr std::size_t W = decltype(words)::value;
        detail::Mask<W> best;
        bool first = true;
        detail::enumerate_class<W>(z, [&](const detail::Mask<W>& c) {
            if (first || c < best) best = c;
            first = false;
        });
        return Chain(K, z.dim(), best.ids());
    });
}

struct BruteBottleneck {
    Chain cycle;
    double norm;
};

/// Minimum bottleneck norm over the class; ties resolved by lex order.
inline BruteBottleneck brute_bottleneck_opt(const WeightedComplex& K, const Chain& z) {
    if (&z.complex() != &K) throw InvalidArgument("chain belongs to a different complex");
    detail::require_small_cycle(z);
    const auto weights = K.weights();
    auto norm_of = [&](long top) { return top < 0 ? 0.0 : weights[static_cast<std::size_t>(top)]; };
    return detail::dispatch_words(detail::words_for(K.size(z.dim())), [&](auto words) {
        constexpr std::size_t W = decltype(words)::value;
        detail::Mask<W> best;
        double best_norm = 0.0;
        bool first = true;
        detail::enumerate_class<W>(z, [&](const detail::Mask<W>& c) {
            const double n = norm_of(c.top());
            if (first || n < best_norm || (n == best_norm && c < best)) {
                best = c;
                best_norm = n;
            }
            first = false;
        });
        return BruteBottleneck{Chain(K, z.dim(), best.ids()), best_norm};
    });
}

namespace detail {

// Row-echelon GF(2) rank of a list of vectors stored as word arrays.
class Echelon {
public:
    explicit Echelon(std::size_t bits) : words_((bits + 63) / 64 + 1), pivot_row_(bits, -1) {}

    // Returns true when v was independent of the rows so far (and adds it).
    bool insert(std::vector<std::uint64_t> v) {
        v.resize(words_, 0);
        while (true) {
            long top = -1;
            for (std::size_t k = words_; k-- > 0;)
                if (v[k]) {
                    top = static_cast<long>(k * 64 + 63 - std::countl_zero(v[k]));
                    break;
                }
            if (top < 0) return false;
            const int r = pivot_row_[static_cast<std::size_t>(top)];
            if (r < 0) {
                pivot_row_[static_cast<std::size_t>(top)] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            for (std::size_t k = 0; k < words_; ++k) v[k] ^= rows_[r][k];
        }
    }

    bool contains(std::vector<std::uint64_t> v) const {
        v.resize(words_, 0);
        while (true) {
            long top = -1;
            for (std::size_t k = words_; k-- > 0;)
                if (v[k]) {
                    top = static_cast<long>(k * 64 + 63 - std::countl_zero(v[k]));
                    break;
                }
            if (top < 0) return true;
            const int r = pivot_row_[static_cast<std::size_t>(top)];
            if (r < 0) return false;
            for (std::size_t k = 0; k < words_; ++k) v[k] ^= rows_[r][k];
        }
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t words_;
    std::vector<int> pivot_row_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

inline std::vector<std::uint64_t> boundary_words(const WeightedComplex& K, int k, int id) {
    std::vector<std::uint64_t> v((K.size(k - 1) + 63) / 64 + 1, 0);
    for (int f : faces_from_tuple(K, k, id))
        v[static_cast<std::size_t>(f) >> 6] ^= std::uint64_t{1} << (f & 63);
    return v;
}

inline std::size_t boundary_rank(const WeightedComplex& K, int k) {
    if (k <= 0 || K.size(k) == 0) return 0;
    Echelon e(K.size(k - 1));
    for (std::size_t id = 0; id < K.size(k); ++id)
        e.insert(boundary_words(K, k, static_cast<int>(id)));
    return e.rank();
}

} // namespace detail

/// beta_k = n_k - rank(boundary_k) - rank(boundary_{k+1}), by Gaussian elimination.
inline std::vector<int> brute_betti(const WeightedComplex& K) {
    if (K.total_size() > max_betti_simplices)
        throw GuardError("brute_betti limited to " + std::to_string(max_betti_simplices) +
                         " simplices, instance has " + std::to_string(K.total_size()));
    std::vector<int> betti;
    for (int k = 0; k <= K.dimension(); ++k)
        betti.push_back(static_cast<int>(K.size(k)) -
                        static_cast<int>(detail::boundary_rank(K, k)) -
                        static_cast<int>(detail::boundary_rank(K, k + 1)));
    return betti;
}

/// Literal greedy optimal basis: repeatedly take the lex-smallest cycle whose
/// class lies outside the span of the classes already taken.
///
/// Enumerates every cycle; refuses instances with more than 2^22 of them.
inline std::vector<Chain> brute_greedy_basis(const WeightedComplex& K, int d) {
    if (d != K.weighted_dim())
        throw InvalidArgument("oracle: complex is not weighted on dimension " + std::to_string(d));
    const std::size_t ell = K.size(d);

    // Kernel of boundary_d by column elimination with combination tracking.
    std::vector<std::vector<std::uint64_t>> kernel;
    {
        const std::size_t cw = (ell + 63) / 64 + 1;
        std::vector<std::vector<std::uint64_t>> cols, combos;
        std::vector<int> low_owner(d > 0 ? K.size(d - 1) : 0, -1);
        for (std::size_t j = 0; j < ell; ++j) {
            std::vector<std::uint64_t> combo(cw, 0);
            combo[j >> 6] ^= std::uint64_t{1} << (j & 63);
            if (d == 0) {
                kernel.push_back(std::move(combo));
                continue;
            }
            std::vector<std::uint64_t> col = detail::boundary_words(K, d, static_cast<int>(j));
            while (true) {
                long top = -1;
                for (std::size_t k = col.size(); k-- > 0;)
                    if (col[k]) {
                        top = static_cast<long>(k * 64 + 63 - std::countl_zero(col[k]));
                        break;
                    }
                if (top < 0) {
                    kernel.push_back(std::move(combo));
                    break;
                }
                const int owner = low_owner[static_cast<std::size_t>(top)];
                if (owner < 0) {
                    low_owner[static_cast<std::size_t>(top)] = static_cast<int>(cols.size());
                    cols.push_back(std::move(col));
                    combos.push_back(std::move(combo));
                    break;
                }
                for (std::size_t k = 0; k < col.size(); ++k) col[k] ^= cols[owner][k];
                for (std::size_t k = 0; k < cw; ++k) combo[k] ^= combos[owner][k];
            }
        }
    }
    if (kernel.size() > max_enumerated_cycles_log2)
        throw GuardError("greedy basis oracle limited to 2^" +
                         std::to_string(max_enumerated_cycles_log2) +
                         " cycles, instance has 2^" + std::to_string(kernel.size()));

    detail::Echelon span(ell);
    for (std::size_t t = 0; t < K.size(d + 1); ++t)
        span.insert(detail::boundary_words(K, d + 1, static_cast<int>(t)));
    const std::size_t beta = kernel.size() - span.rank();

    return detail::dispatch_words(detail::words_for(ell), [&](auto words) {
        constexpr std::size_t W = decltype(words)::value;
        using M = detail::Mask<W>;
        std::vector<M> basis;
        for (const auto& v : kernel) {
            M m;
            for (std::size_t k = 0; k < W; ++k) m.w[k] = v[k];
            basis.push_back(m);
        }
        std::vector<M> cycles;
        cycles.reserve(std::size_t{1} << basis.size());
        M cur;
        const std::uint64_t total = std::uint64_t{1} << basis.size();
        for (std::uint64_t i = 1; i < total; ++i) {
            cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
            cycles.push_back(cur);
        }
        std::sort(cycles.begin(), cycles.end());

        std::vector<Chain> chosen;
        for (const M& c : cycles) {
            if (chosen.size() == beta) break;
            std::vector<std::uint64_t> v(c.w.begin(), c.w.end());
            if (span.contains(v)) continue;
            span.insert(v);
            chosen.emplace_back(K, d, c.ids());
        }
        return chosen;
    });
}

/// GF(2) rank of a set of d-chains modulo the d-boundaries.
inline std::size_t rank_modulo_boundaries(const WeightedComplex& K, int d,
                                          const std::vector<Chain>& chains) {
    detail::Echelon span(K.size(d));
    for (std::size_t t = 0; t < K.size(d + 1); ++t)
        span.insert(detail::boundary_words(K, d + 1, static_cast<int>(t)));
    const std::size_t base = span.rank();
    for (const Chain& c : chains) {
        std::vector<std::uint64_t> v((K.size(d) + 63) / 64 + 1, 0);
        for (int id : c.support()) v[static_cast<std::size_t>(id) >> 6] ^= std::uint64_t{1} << (id & 63);
        span.insert(std::move(v));
    }
    return span.rank() - base;
}

/// True when a + b is a boundary.
inline bool homologous(const WeightedComplex& K, const Chain& a, const Chain& b) {
    const int d = a.dim();
    detail::Echelon span(K.size(d));
    for (std::size_t t = 0; t < K.size(d + 1); ++t)
        span.insert(detail::boundary_words(K, d + 1, static_cast<int>(t)));
    std::vector<std::uint64_t> v((K.size(d) + 63) / 64 + 1, 0);
    for (int id : a.support()) v[static_cast<std::size_t>(id) >> 6] ^= std::uint64_t{1} << (id & 63);
    for (int id : b.support()) v[static_cast<std::size_t>(id) >> 6] ^= std::uint64_t{1} << (id & 63);
    return span.contains(std::move(v));
}

} // namespace lexcycle::oracle

#endif // LEXCYCLE_ORACLE_HPP
