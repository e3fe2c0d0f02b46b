#ifndef LEXCYCLE_IO_HPP
#define LEXCYCLE_IO_HPP

// Text formats: .scx complexes, OFF meshes, .cyc cycles, persistence CSV,
// .link.json diagrams, and Z2 matrix / right-hand-side files.

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chain.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "linkgen.hpp"
#include "persistence.hpp"

namespace lexcycle::io {

/// Shortest decimal text that reads back to the same double.
inline std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline long parse_long(std::string_view s, std::size_t line, const char* what) {
    long v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'", line);
    return v;
}

inline double parse_double(std::string_view s, std::size_t line, const char* what) {
    double v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'", line);
    return v;
}

// Strips a trailing '\r' and reports whether the line is blank or a comment.
inline bool skip_line(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto p = line.find_first_not_of(" \t");
    return p == std::string::npos || line[p] == '#';
}

inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "' for reading");
    return in;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open '" + path + "' for writing");
    return out;
}

} // namespace detail

// ---------------------------------------------------------------- .scx

/// Lines `s v0 .. vk [weight]`, optional header `dim d`, '#' comments.
/// Tokens made only of digits are vertices; a weight must therefore carry a
/// decimal point or exponent (`5.0`, not `5`). `dim_override` wins over the
/// header; without either the weighted dimension is 1.
inline WeightedComplex read_scx(std::istream& in, std::optional<int> dim_override = std::nullopt) {
    std::vector<SimplexInput> items;
    std::optional<int> header_dim;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (detail::skip_line(line)) continue;
        const auto tok = detail::split_ws(line);
        if (tok[0] == "dim") {
            if (tok.size() != 2) throw ParseError("expected 'dim d'", no);
            if (header_dim) throw ParseError("duplicate dim header", no);
            if (!items.empty()) throw ParseError("dim header must precede simplices", no);
            header_dim = static_cast<int>(detail::parse_long(tok[1], no, "dimension"));
            continue;
        }
        if (tok[0] != "s") throw ParseError("expected a line starting with 's' or 'dim', got '" + tok[0] + "'", no);
        SimplexInput item;
        for (std::size_t k = 1; k < tok.size(); ++k) {
            if (detail::all_digits(tok[k])) {
                if (k == 1 || !item.weight) {
                    item.vertices.push_back(static_cast<int>(detail::parse_long(tok[k], no, "vertex")));
                    continue;
                }
            }
            if (k + 1 != tok.size() || item.weight)
                throw ParseError("unexpected token '" + tok[k] + "'", no);
            item.weight = detail::parse_double(tok[k], no, "weight");
        }
        if (item.vertices.empty()) throw ParseError("simplex without vertices", no);
        if (item.vertices.size() > 4) throw ParseError("simplices have at most 4 vertices", no);
        try {
            (void)Simplex(std::span<const int>(item.vertices));
        } catch (const Error& e) {
            throw ParseError(e.what(), no);
        }
        if (item.weight && !(std::isfinite(*item.weight) && *item.weight > 0))
            throw ParseError("weight must be positive and finite", no);
        items.push_back(std::move(item));
    }
    return build_complex(items, dim_override.value_or(header_dim.value_or(1)));
}

inline WeightedComplex read_scx_file(const std::string& path, std::optional<int> dim_override = std::nullopt) {
    auto in = detail::open_in(path);
    return read_scx(in, dim_override);
}

inline std::string weight_token(double w) {
    std::string s = format_double(w);
    if (detail::all_digits(s)) s += ".0";
    return s;
}

/// Every simplex of K, weights on the weighted dimension. Reads back equal.
inline void write_scx(std::ostream& out, const WeightedComplex& K) {
    out << "dim " << K.weighted_dim() << '\n';
    for (int k = 0; k <= K.dimension(); ++k)
        for (std::size_t id = 0; id < K.size(k); ++id) {
            out << 's';
            for (int v : K.simplex(k, static_cast<int>(id))) out << ' ' << v;
            if (k == K.weighted_dim()) out << ' ' << weight_token(K.weight(static_cast<int>(id)));
            out << '\n';
        }
}

// ---------------------------------------------------------------- OFF

/// Triangle meshes only. Edge weights are Euclidean edge lengths.
inline WeightedComplex read_off(std::istream& in) {
    std::vector<std::string> tokens;
    std::vector<std::size_t> lines;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (detail::skip_line(line)) continue;
        for (auto& t : detail::split_ws(line)) {
            tokens.push_back(std::move(t));
            lines.push_back(no);
        }
    }
    std::size_t p = 0;
    auto next = [&](const char* what) -> std::pair<std::string, std::size_t> {
        if (p >= tokens.size()) throw ParseError(std::string("unexpected end of file, expected ") + what, no);
        ++p;
        return {tokens[p - 1], lines[p - 1]};
    };
    {
        auto [h, l] = next("OFF header");
        if (h != "OFF") throw ParseError("expected 'OFF' header", l);
    }
    auto count = [&](const char* what) {
        auto [t, l] = next(what);
        const long v = detail::parse_long(t, l, what);
        if (v < 0) throw ParseError(std::string("negative ") + what, l);
        return static_cast<std::size_t>(v);
    };
    const std::size_t nv = count("vertex count"), nf = count("face count");
    count("edge count");
    std::vector<std::array<double, 3>> xyz(nv);
    for (auto& c : xyz)
        for (double& x : c) {
            auto [t, l] = next("coordinate");
            x = detail::parse_double(t, l, "coordinate");
        }
    std::vector<SimplexInput> items;
    std::map<std::pair<int, int>, double> edges;
    for (std::size_t f = 0; f < nf; ++f) {
        auto [t, l] = next("face size");
        if (detail::parse_long(t, l, "face size") != 3) throw ParseError("only triangular faces are supported", l);
        std::vector<int> tri;
        for (int k = 0; k < 3; ++k) {
            auto [tv, lv] = next("face vertex");
            const long v = detail::parse_long(tv, lv, "face vertex");
            if (v < 0 || static_cast<std::size_t>(v) >= nv) throw ParseError("face vertex out of range", lv);
            tri.push_back(static_cast<int>(v));
        }
        for (int k = 0; k < 3; ++k) {
            int a = tri[k], b = tri[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            const double dx = xyz[a][0] - xyz[b][0], dy = xyz[a][1] - xyz[b][1], dz = xyz[a][2] - xyz[b][2];
            edges[{a, b}] = std::sqrt(dx * dx + dy * dy + dz * dz);
        }
        items.push_back({tri, std::nullopt});
    }
    for (const auto& [e, w] : edges) items.push_back({{e.first, e.second}, w});
    return build_complex(items, 1);
}

inline WeightedComplex read_off_file(const std::string& path) {
    auto in = detail::open_in(path);
    return read_off(in);
}

/// Dispatches on extension: `.off` is OFF, anything else is .scx.
inline WeightedComplex read_complex_file(const std::string& path, std::optional<int> dim_override = std::nullopt) {
    const bool off = path.size() >= 4 && (path.compare(path.size() - 4, 4, ".off") == 0 ||
                                          path.compare(path.size() - 4, 4, ".OFF") == 0);
    if (off) {
        if (dim_override && *dim_override != 1) throw InvalidArgument("OFF meshes are weighted on edges");
        return read_off_file(path);
    }
    return read_scx_file(path, dim_override);
}

// ---------------------------------------------------------------- .cyc

/// Edges `u v`, one per line; a repeated edge cancels. The result must be a
/// 1-cycle of K.
inline Chain read_cyc(std::istream& in, const WeightedComplex& K) {
    if (K.dimension() < 1) throw ValidationError("complex has no edges");
    std::vector<std::uint8_t> in_chain(K.size(1), 0);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (detail::skip_line(line)) continue;
        const auto tok = detail::split_ws(line);
        if (tok.size() != 2) throw ParseError("expected 'u v'", no);
        const long u = detail::parse_long(tok[0], no, "vertex"), v = detail::parse_long(tok[1], no, "vertex");
        if (u < 0 || v < 0 || u == v) throw ParseError("invalid edge", no);
        const int uv[2] = {static_cast<int>(u), static_cast<int>(v)};
        const auto id = K.find(Simplex(std::span<const int>(uv, 2)));
        if (!id) throw ParseError("edge (" + tok[0] + "," + tok[1] + ") is not in the complex", no);
        in_chain[static_cast<std::size_t>(*id)] ^= 1;
    }
    std::vector<int> ids;
    for (std::size_t e = 0; e < in_chain.size(); ++e)
        if (in_chain[e]) ids.push_back(static_cast<int>(e));
    Chain z = make_sorted_chain(K, 1, std::move(ids));
    const Chain dz = boundary(z);
    if (!dz.empty())
        throw ValidationError("not a cycle: vertex " + std::to_string(K.simplex(0, dz.support().front())[0]) +
                              " has odd degree");
    return z;
}

inline Chain read_cyc_file(const std::string& path, const WeightedComplex& K) {
    auto in = detail::open_in(path);
    return read_cyc(in, K);
}

/// One edge per line, in canonical order.
inline void write_cyc(std::ostream& out, const Chain& z) {
    if (z.dim() != 1) throw InvalidArgument("cycle files hold 1-chains");
    for (int id : z.support()) {
        const Simplex& s = z.complex().simplex(1, id);
        out << s[0] << ' ' << s[1] << '\n';
    }
}

// ---------------------------------------------------------------- persistence CSV

inline constexpr std::string_view persistence_header = "dim,birth_index,birth_weight,death_index,death_weight";

inline void write_persistence_csv(std::ostream& out, const std::vector<DiagramPoint>& points) {
    out << persistence_header << '\n';
    for (const auto& p : points) {
        out << p.dim << ',' << p.birth_index << ',' << format_double(p.birth_value) << ',';
        if (p.death_index)
            out << *p.death_index << ',' << format_double(p.death_value);
        else
            out << "inf,inf";
        out << '\n';
    }
}

inline std::vector<DiagramPoint> read_persistence_csv(std::istream& in) {
    std::string line;
    std::size_t no = 0;
    std::vector<DiagramPoint> out;
    bool header = false;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header) {
            if (line != persistence_header) throw ParseError("missing persistence CSV header", no);
            header = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        if (f.size() != 5) throw ParseError("expected 5 fields", no);
        DiagramPoint p{};
        p.dim = static_cast<int>(detail::parse_long(f[0], no, "dim"));
        p.birth_index = static_cast<std::size_t>(detail::parse_long(f[1], no, "birth_index"));
        p.birth_value = detail::parse_double(f[2], no, "birth_weight");
        if (f[3] == "inf") {
            if (f[4] != "inf") throw ParseError("essential class needs death_weight inf", no);
            p.death_value = std::numeric_limits<double>::infinity();
        } else {
            p.death_index = static_cast<std::size_t>(detail::parse_long(f[3], no, "death_index"));
            p.death_value = detail::parse_double(f[4], no, "death_weight");
        }
        out.push_back(p);
    }
    if (!header) throw ParseError("empty persistence CSV");
    return out;
}

// ---------------------------------------------------------------- .link.json

inline nlohmann::ordered_json diagram_to_json(const LinkDiagram& dg) {
    nlohmann::ordered_json j;
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& c : dg.components) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["role"] = std::string(role_name(c.role));
        cj["index"] = c.index;
        auto pts = nlohmann::ordered_json::array();
        for (const auto& p : c.points) pts.push_back({p.x, p.y});
        cj["points"] = std::move(pts);
        j["components"].push_back(std::move(cj));
    }
    j["crossings"] = nlohmann::ordered_json::array();
    for (const auto& x : dg.crossings) {
        nlohmann::ordered_json xj;
        xj["comp_a"] = x.comp_a;
        xj["seg_a"] = x.seg_a;
        xj["comp_b"] = x.comp_b;
        xj["seg_b"] = x.seg_b;
        xj["over"] = x.over;
        xj["point"] = {x.point[0], x.point[1]};
        j["crossings"].push_back(std::move(xj));
    }
    return j;
}

inline void write_diagram(std::ostream& out, const LinkDiagram& dg) { out << diagram_to_json(dg).dump(1) << '\n'; }

inline LinkDiagram diagram_from_json(const nlohmann::json& j) {
    try {
        LinkDiagram dg;
        for (const auto& cj : j.at("components")) {
            Component c;
            c.name = cj.at("name").get<std::string>();
            c.role = parse_role(cj.at("role").get<std::string>());
            c.index = cj.at("index").get<int>();
            for (const auto& p : cj.at("points")) {
                if (!p.is_array() || p.size() != 2) throw ParseError("point must be [x, y]");
                c.points.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
            }
            dg.components.push_back(std::move(c));
        }
        for (const auto& xj : j.at("crossings")) {
            Crossing x;
            x.comp_a = xj.at("comp_a").get<int>();
            x.seg_a = xj.at("seg_a").get<int>();
            x.comp_b = xj.at("comp_b").get<int>();
            x.seg_b = xj.at("seg_b").get<int>();
            x.over = xj.at("over").get<int>();
            const auto& p = xj.at("point");
            if (!p.is_array() || p.size() != 2) throw ParseError("crossing point must be [x, y]");
            x.point = {p[0].get<double>(), p[1].get<double>()};
            dg.crossings.push_back(x);
        }
        return dg;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
}

inline LinkDiagram read_diagram(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
    return diagram_from_json(j);
}

// ---------------------------------------------------------------- matrix and rhs

inline Gf2Matrix read_matrix(std::istream& in) {
    std::string line;
    std::size_t no = 0;
    std::optional<std::size_t> n;
    Gf2Matrix A;
    while (std::getline(in, line)) {
        ++no;
        if (detail::skip_line(line)) continue;
        const auto tok = detail::split_ws(line);
        if (!n) {
            if (tok.size() != 1) throw ParseError("first line must hold n", no);
            const long v = detail::parse_long(tok[0], no, "matrix size");
            if (v < 1) throw ParseError("matrix size must be positive", no);
            n = static_cast<std::size_t>(v);
            continue;
        }
        if (A.size() == *n) throw ParseError("more than n rows", no);
        if (tok.size() != *n)
            throw ParseError("row has " + std::to_string(tok.size()) + " entries, expected " + std::to_string(*n), no);
        Gf2Vector row;
        for (const auto& t : tok) {
            if (t != "0" && t != "1") throw ParseError("matrix entries must be 0 or 1", no);
            row.push_back(static_cast<std::uint8_t>(t[0] - '0'));
        }
        A.push_back(std::move(row));
    }
    if (!n) throw ParseError("empty matrix file");
    if (A.size() != *n) throw ParseError("expected " + std::to_string(*n) + " rows, got " + std::to_string(A.size()));
    return A;
}

inline Gf2Vector read_rhs(std::istream& in) {
    std::string line;
    std::size_t no = 0;
    Gf2Vector b;
    while (std::getline(in, line)) {
        ++no;
        if (detail::skip_line(line)) continue;
        for (const auto& t : detail::split_ws(line)) {
            if (t != "0" && t != "1") throw ParseError("right-hand side entries must be 0 or 1", no);
            b.push_back(static_cast<std::uint8_t>(t[0] - '0'));
        }
    }
    return b;
}

inline void write_matrix(std::ostream& out, const Gf2Matrix& A) {
    out << A.size() << '\n';
    for (const auto& row : A) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << static_cast<int>(row[j]);
        out << '\n';
    }
}

inline void write_rhs(std::ostream& out, const Gf2Vector& b) {
    for (std::size_t j = 0; j < b.size(); ++j) out << (j ? " " : "") << static_cast<int>(b[j]);
    out << '\n';
}

} // namespace lexcycle::io

#endif // LEXCYCLE_IO_HPP
