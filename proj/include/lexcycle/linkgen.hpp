#ifndef LEXCYCLE_LINKGEN_HPP
#define LEXCYCLE_LINKGEN_HPP

// Planar link diagrams encoding a sparse Z2 system Ax = b through linking
// numbers: lk2(L_i, lambda_j) = a_ij and lk2(zeta, lambda_j) = b_j.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace lexcycle {

using Gf2Vector = std::vector<std::uint8_t>;
using Gf2Matrix = std::vector<Gf2Vector>;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

enum class Role { lambda, L, zeta };

inline std::string_view role_name(Role r) {
    switch (r) {
    case Role::lambda: return "lambda";
    case Role::L: return "L";
    default: return "zeta";
    }
}

inline Role parse_role(std::string_view s) {
    if (s == "lambda") return Role::lambda;
    if (s == "L") return Role::L;
    if (s == "zeta") return Role::zeta;
    throw ValidationError("unknown component role '" + std::string(s) + "'");
}

/// Closed polyline; segment k runs from points[k] to points[k+1 mod size].
struct Component {
    std::string name;
    Role role = Role::lambda;
    int index = 0;  // 1-based for lambda and L, 0 for zeta
    std::vector<Point> points;

    std::size_t segment_count() const noexcept { return points.size(); }
    std::pair<Point, Point> segment(std::size_t k) const {
        return {points[k], points[(k + 1) % points.size()]};
    }
    friend bool operator==(const Component&, const Component&) = default;
};

/// One transverse crossing. comp_a < comp_b; `over` is one of the two.
struct Crossing {
    int comp_a = 0;
    int seg_a = 0;
    int comp_b = 0;
    int seg_b = 0;
    int over = 0;
    std::array<double, 2> point{};
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct LinkDiagram {
    std::vector<Component> components;
    std::vector<Crossing> crossings;

    int find(std::string_view name) const {
        for (std::size_t i = 0; i < components.size(); ++i)
            if (components[i].name == name) return static_cast<int>(i);
        throw ValidationError("unknown component '" + std::string(name) + "'");
    }
    friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

/// A geometric intersection between two segments of distinct components.
struct Intersection {
    int comp_a = 0;
    int seg_a = 0;
    int comp_b = 0;
    int seg_b = 0;
    std::array<double, 2> point{};
};

namespace detail {

inline int orient(Point a, Point b, Point c) {
    const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                       static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return (v > 0) - (v < 0);
}

inline bool on_segment(Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

enum class Contact { none, proper, degenerate };

inline Contact classify_contact(Point p1, Point p2, Point q1, Point q2) {
    if (std::max(p1.x, p2.x) < std::min(q1.x, q2.x) || std::max(q1.x, q2.x) < std::min(p1.x, p2.x) ||
        std::max(p1.y, p2.y) < std::min(q1.y, q2.y) || std::max(q1.y, q2.y) < std::min(p1.y, p2.y))
        return Contact::none;
    const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return Contact::proper;
    if ((o1 == 0 && on_segment(p1, p2, q1)) || (o2 == 0 && on_segment(p1, p2, q2)) ||
        (o3 == 0 && on_segment(q1, q2, p1)) || (o4 == 0 && on_segment(q1, q2, p2)))
        return Contact::degenerate;
    return Contact::none;
}

inline std::array<double, 2> intersection_point(Point p1, Point p2, Point q1, Point q2) {
    const double rx = static_cast<double>(p2.x - p1.x), ry = static_cast<double>(p2.y - p1.y);
    const double sx = static_cast<double>(q2.x - q1.x), sy = static_cast<double>(q2.y - q1.y);
    const double den = rx * sy - ry * sx;
    const double t = (static_cast<double>(q1.x - p1.x) * sy - static_cast<double>(q1.y - p1.y) * sx) / den;
    return {static_cast<double>(p1.x) + t * rx, static_cast<double>(p1.y) + t * ry};
}

inline std::string seg_label(const LinkDiagram& dg, int c, int s) {
    return dg.components[c].name + "[" + std::to_string(s) + "]";
}

} // namespace detail

/// All transverse intersections between distinct components, sorted by
/// (comp_a, seg_a, comp_b, seg_b). Throws ValidationError on a touching or
/// overlapping contact or on a self-intersecting polyline.
inline std::vector<Intersection> find_intersections(const LinkDiagram& dg) {
    std::vector<Intersection> out;
    const int nc = static_cast<int>(dg.components.size());
    for (int a = 0; a < nc; ++a) {
        const Component& A = dg.components[a];
        if (A.points.size() < 3)
            throw ValidationError("component " + A.name + " has fewer than three points");
        const int sa_n = static_cast<int>(A.segment_count());
        for (int b = a; b < nc; ++b) {
            const Component& B = dg.components[b];
            const int sb_n = static_cast<int>(B.segment_count());
            for (int sa = 0; sa < sa_n; ++sa) {
                const auto [p1, p2] = A.segment(static_cast<std::size_t>(sa));
                if (p1 == p2) throw ValidationError("component " + A.name + " has a zero-length segment");
                for (int sb = (a == b ? sa + 1 : 0); sb < sb_n; ++sb) {
                    const bool adjacent = a == b && (sb == sa + 1 || (sa == 0 && sb == sa_n - 1));
                    const auto [q1, q2] = B.segment(static_cast<std::size_t>(sb));
                    const auto contact = detail::classify_contact(p1, p2, q1, q2);
                    if (contact == detail::Contact::none) continue;
                    if (adjacent) {
                        // Consecutive segments share one endpoint; only a reversal is a defect.
                        const Point u = sb == sa + 1 ? p1 : q1, v = sb == sa + 1 ? p2 : q2;
                        const Point w = sb == sa + 1 ? q2 : p2;
                        const std::int64_t dot = (v.x - u.x) * (w.x - v.x) + (v.y - u.y) * (w.y - v.y);
                        if (detail::orient(u, v, w) != 0 || dot > 0) continue;
                        throw ValidationError("component " + A.name + " folds back on itself at segment " +
                                              std::to_string(sa));
                    }
                    if (a == b)
                        throw ValidationError("component " + A.name + " is not simple: segments " +
                                              std::to_string(sa) + " and " + std::to_string(sb) + " meet");
                    if (contact == detail::Contact::degenerate)
                        throw ValidationError("degenerate crossing between " + detail::seg_label(dg, a, sa) +
                                              " and " + detail::seg_label(dg, b, sb));
                    out.push_back({a, sa, b, sb, detail::intersection_point(p1, p2, q1, q2)});
                }
            }
        }
    }
    return out;
}

namespace detail {

// Checks the crossing list against the geometry: every intersection listed
// exactly once, nothing else listed, over-labels valid.
inline void check_crossings(const LinkDiagram& dg) {
    const auto geo = find_intersections(dg);
    std::set<std::array<int, 4>> expected;
    for (const auto& x : geo) expected.insert({x.comp_a, x.seg_a, x.comp_b, x.seg_b});
    std::set<std::array<int, 4>> seen;
    const int nc = static_cast<int>(dg.components.size());
    for (const Crossing& c : dg.crossings) {
        if (c.comp_a < 0 || c.comp_b < 0 || c.comp_a >= nc || c.comp_b >= nc || c.comp_a >= c.comp_b)
            throw ValidationError("crossing has invalid component indices");
        if (c.over != c.comp_a && c.over != c.comp_b)
            throw ValidationError("crossing over-label names neither strand");
        const std::array<int, 4> key{c.comp_a, c.seg_a, c.comp_b, c.seg_b};
        if (!expected.count(key))
            throw ValidationError("listed crossing " + seg_label(dg, c.comp_a, c.seg_a) + " x " +
                                  seg_label(dg, c.comp_b, c.seg_b) + " does not exist geometrically");
        if (!seen.insert(key).second)
            throw ValidationError("crossing " + seg_label(dg, c.comp_a, c.seg_a) + " x " +
                                  seg_label(dg, c.comp_b, c.seg_b) + " listed twice");
    }
    if (seen.size() != expected.size()) {
        for (const auto& k : expected)
            if (!seen.count(k))
                throw ValidationError("intersection " + seg_label(dg, k[0], k[1]) + " x " +
                                      seg_label(dg, k[2], k[3]) + " has no over-label");
    }
}

inline int crossing_sign(const LinkDiagram& dg, const Crossing& c) {
    const bool a_over = c.over == c.comp_a;
    const auto [o1, o2] = dg.components[a_over ? c.comp_a : c.comp_b].segment(
        static_cast<std::size_t>(a_over ? c.seg_a : c.seg_b));
    const auto [u1, u2] = dg.components[a_over ? c.comp_b : c.comp_a].segment(
        static_cast<std::size_t>(a_over ? c.seg_b : c.seg_a));
    const __int128 cr = static_cast<__int128>(o2.x - o1.x) * (u2.y - u1.y) -
                        static_cast<__int128>(o2.y - o1.y) * (u2.x - u1.x);
    return cr > 0 ? 1 : -1;
}

// Signed crossing sums for every component pair, assuming a checked diagram.
inline std::vector<std::vector<long>> sign_sums(const LinkDiagram& dg) {
    const std::size_t nc = dg.components.size();
    std::vector<std::vector<long>> sums(nc, std::vector<long>(nc, 0));
    for (const Crossing& c : dg.crossings) {
        const int s = crossing_sign(dg, c);
        sums[c.comp_a][c.comp_b] += s;
        sums[c.comp_b][c.comp_a] += s;
    }
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = a + 1; b < nc; ++b)
            if (sums[a][b] % 2 != 0)
                throw VerificationError("odd crossing sign sum between " + dg.components[a].name +
                                        " and " + dg.components[b].name);
    return sums;
}

} // namespace detail

struct LinkingNumber {
    long lk;
    int lk2;
};

/// Half the sum of crossing signs between two components. A crossing scores
/// the sign of cross(over direction, under direction).
inline LinkingNumber linking_number(const LinkDiagram& dg, int a, int b) {
    const int nc = static_cast<int>(dg.components.size());
    if (a < 0 || b < 0 || a >= nc || b >= nc) throw InvalidArgument("component index out of range");
    if (a == b) throw InvalidArgument("linking number needs two distinct components");
    detail::check_crossings(dg);
    long sum = 0;
    for (const Crossing& c : dg.crossings)
        if ((c.comp_a == a && c.comp_b == b) || (c.comp_a == b && c.comp_b == a))
            sum += detail::crossing_sign(dg, c);
    if (sum % 2 != 0)
        throw VerificationError("odd crossing sign sum between " + dg.components[a].name + " and " +
                                dg.components[b].name);
    const long lk = sum / 2;
    return {lk, static_cast<int>((lk < 0 ? -lk : lk) % 2)};
}

inline LinkingNumber linking_number(const LinkDiagram& dg, std::string_view a, std::string_view b) {
    return linking_number(dg, dg.find(a), dg.find(b));
}

namespace detail {

inline std::size_t require_system(const Gf2Matrix& A, const Gf2Vector& b) {
    const std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n)
            throw ValidationError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(A[i].size()) + " entries, expected " + std::to_string(n));
        for (auto v : A[i])
            if (v > 1) throw ValidationError("matrix entries must be 0 or 1");
    }
    if (b.size() != n)
        throw ValidationError("right-hand side has length " + std::to_string(b.size()) + ", expected " +
                              std::to_string(n));
    for (auto v : b)
        if (v > 1) throw ValidationError("right-hand side entries must be 0 or 1");
    return n;
}

struct Layout {
    std::int64_t n;
    std::int64_t W() const { return 4 * n + 8; }
    std::int64_t lambda_left(std::int64_t j) const { return j * W(); }
    std::int64_t lambda_right(std::int64_t j) const { return j * W() + 4 * (n + 1); }
    std::int64_t rail_left() const { return -4; }
    std::int64_t rail_right() const { return n * W(); }
    std::int64_t bottom(std::int64_t row) const { return 4 + 4 * row; }
    std::int64_t top(std::int64_t row) const { return 6 + 4 * row; }
    std::int64_t finger(std::int64_t j, std::int64_t row) const { return j * W() + 4 * row + 1; }
};

// Row `row` runs right along its bottom rail, dipping a finger into each
// selected lambda, then returns left along its top rail.
inline std::vector<Point> row_polyline(const Layout& g, std::int64_t row, const Gf2Vector& threads) {
    std::vector<Point> pts;
    const std::int64_t yb = g.bottom(row), yt = g.top(row);
    pts.push_back({g.rail_left(), yb});
    for (std::int64_t j = 0; j < g.n; ++j) {
        if (!threads[static_cast<std::size_t>(j)]) continue;
        const std::int64_t x = g.finger(j, row);
        pts.push_back({x, yb});
        pts.push_back({x, -1});
        pts.push_back({x + 2, -1});
        pts.push_back({x + 2, yb});
    }
    pts.push_back({g.rail_right(), yb});
    pts.push_back({g.rail_right(), yt});
    pts.push_back({g.rail_left(), yt});
    return pts;
}

} // namespace detail

/// Integer-grid diagram for Ax = b. Components are lambda_1..lambda_n,
/// L_1..L_n, zeta, in that order.
///
/// Each a_ij = 1 becomes one clasp of L_i with lambda_j; zeta clasps lambda_j
/// when b_j = 1. Where rows cross, the higher row passes over, so rows are
/// pairwise unlinked.
inline LinkDiagram matrix_to_diagram(const Gf2Matrix& A, const Gf2Vector& b) {
    const std::size_t n = detail::require_system(A, b);
    const detail::Layout g{static_cast<std::int64_t>(n)};
    LinkDiagram dg;
    for (std::size_t j = 0; j < n; ++j) {
        const auto jj = static_cast<std::int64_t>(j);
        dg.components.push_back({"lambda_" + std::to_string(j + 1), Role::lambda, static_cast<int>(j + 1),
                                 {{g.lambda_left(jj), -2},
                                  {g.lambda_right(jj), -2},
                                  {g.lambda_right(jj), 0},
                                  {g.lambda_left(jj), 0}}});
    }
    for (std::size_t i = 0; i < n; ++i)
        dg.components.push_back({"L_" + std::to_string(i + 1), Role::L, static_cast<int>(i + 1),
                                 detail::row_polyline(g, static_cast<std::int64_t>(i), A[i])});
    dg.components.push_back({"zeta", Role::zeta, 0, detail::row_polyline(g, g.n, b)});

    const int nl = static_cast<int>(n);
    auto row_of = [&](int comp) { return comp - nl; };  // zeta is row n
    for (const Intersection& x : find_intersections(dg)) {
        Crossing c{x.comp_a, x.seg_a, x.comp_b, x.seg_b, 0, x.point};
        if (x.comp_a < nl) {
            // Lambda against a finger: lambda is over on the way down, under on the way up.
            const auto [p, q] = dg.components[x.comp_b].segment(static_cast<std::size_t>(x.seg_b));
            c.over = q.y < p.y ? x.comp_a : x.comp_b;
        } else {
            c.over = row_of(x.comp_a) > row_of(x.comp_b) ? x.comp_a : x.comp_b;
        }
        dg.crossings.push_back(c);
    }
    return dg;
}

/// Sparsity parameter c of a system: the largest row weight of A, at least 1.
inline std::size_t system_sparsity(const Gf2Matrix& A) {
    std::size_t c = 1;
    for (const auto& row : A)
        c = std::max<std::size_t>(c, static_cast<std::size_t>(std::count(row.begin(), row.end(), 1)));
    return c;
}

struct Mismatch {
    std::string first;
    std::string second;
    int expected;
    int actual;
};

struct VerificationReport {
    Gf2Matrix lk_matrix;  // lk2(L_i, lambda_j)
    Gf2Vector lk_rhs;     // lk2(zeta, lambda_j)
    bool cross_pairs_ok = true;
    std::size_t crossing_count = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return cross_pairs_ok && mismatches.empty(); }
};

/// Recomputes every pairwise lk2 from the geometry and compares against the
/// system. All other pairs must be unlinked.
inline VerificationReport verify_instance(const LinkDiagram& dg, const Gf2Matrix& A, const Gf2Vector& b) {
    const std::size_t n = detail::require_system(A, b);
    std::vector<int> lam(n, -1), ell(n, -1);
    int zeta = -1;
    for (std::size_t c = 0; c < dg.components.size(); ++c) {
        const Component& comp = dg.components[c];
        if (comp.role == Role::zeta) {
            if (zeta >= 0) throw ValidationError("diagram has more than one zeta component");
            zeta = static_cast<int>(c);
            continue;
        }
        if (comp.index < 1 || static_cast<std::size_t>(comp.index) > n)
            throw ValidationError("component " + comp.name + " has index outside 1.." + std::to_string(n));
        auto& slot = comp.role == Role::lambda ? lam : ell;
        if (slot[static_cast<std::size_t>(comp.index - 1)] >= 0)
            throw ValidationError("duplicate role " + std::string(role_name(comp.role)) + " index " +
                                  std::to_string(comp.index));
        slot[static_cast<std::size_t>(comp.index - 1)] = static_cast<int>(c);
    }
    if (zeta < 0) throw ValidationError("missing roles: no zeta component");
    for (std::size_t i = 0; i < n; ++i) {
        if (lam[i] < 0) throw ValidationError("missing roles: lambda_" + std::to_string(i + 1));
        if (ell[i] < 0) throw ValidationError("missing roles: L_" + std::to_string(i + 1));
    }

    detail::check_crossings(dg);
    const auto sums = detail::sign_sums(dg);
    auto lk2 = [&](int a, int b2) {
        const long lk = sums[static_cast<std::size_t>(a)][static_cast<std::size_t>(b2)] / 2;
        return static_cast<int>((lk < 0 ? -lk : lk) % 2);
    };

    VerificationReport rep;
    rep.crossing_count = dg.crossings.size();
    rep.lk_matrix.assign(n, Gf2Vector(n, 0));
    rep.lk_rhs.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int v = lk2(ell[i], lam[j]);
            rep.lk_matrix[i][j] = static_cast<std::uint8_t>(v);
            if (v != A[i][j])
                rep.mismatches.push_back({dg.components[ell[i]].name, dg.components[lam[j]].name, A[i][j], v});
        }
    for (std::size_t j = 0; j < n; ++j) {
        const int v = lk2(zeta, lam[j]);
        rep.lk_rhs[j] = static_cast<std::uint8_t>(v);
        if (v != b[j]) rep.mismatches.push_back({dg.components[zeta].name, dg.components[lam[j]].name, b[j], v});
    }
    // Remaining pairs: lambda-lambda, L-L, and zeta against each L.
    std::vector<int> rows(ell);
    rows.push_back(zeta);
    auto expect_unlinked = [&](int a, int b2) {
        const int v = lk2(a, b2);
        if (v != 0) {
            rep.cross_pairs_ok = false;
            rep.mismatches.push_back({dg.components[a].name, dg.components[b2].name, 0, v});
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) expect_unlinked(lam[i], lam[j]);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) expect_unlinked(rows[i], rows[j]);
    return rep;
}

struct Readback {
    Gf2Vector x;
    bool consistent;
};

/// x_i = 1 exactly for the 1-based indices in `support`; consistent when Ax = b.
inline Readback solution_readback(const std::set<int>& support, const Gf2Matrix& A, const Gf2Vector& b) {
    const std::size_t n = detail::require_system(A, b);
    Readback r{Gf2Vector(n, 0), true};
    for (int i : support) {
        if (i < 1 || static_cast<std::size_t>(i) > n)
            throw InvalidArgument("lambda index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
        r.x[static_cast<std::size_t>(i - 1)] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc ^= static_cast<std::uint8_t>(A[i][j] & r.x[j]);
        if (acc != b[i]) r.consistent = false;
    }
    return r;
}

/// Some solution of Ax = b over GF(2), or nullopt.
inline std::optional<Gf2Vector> gf2_solve(const Gf2Matrix& A, const Gf2Vector& b) {
    const std::size_t n = detail::require_system(A, b);
    Gf2Matrix M = A;
    Gf2Vector r = b;
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && !M[p][col]) ++p;
        if (p == n) continue;
        std::swap(M[p], M[row]);
        std::swap(r[p], r[row]);
        for (std::size_t k = 0; k < n; ++k)
            if (k != row && M[k][col]) {
                for (std::size_t c = 0; c < n; ++c) M[k][c] ^= M[row][c];
                r[k] ^= r[row];
            }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t k = row; k < n; ++k)
        if (r[k]) return std::nullopt;
    Gf2Vector x(n, 0);
    for (std::size_t k = 0; k < row; ++k) x[static_cast<std::size_t>(pivot_col[k])] = r[k];
    return x;
}

} // namespace lexcycle

#endif // LEXCYCLE_LINKGEN_HPP
