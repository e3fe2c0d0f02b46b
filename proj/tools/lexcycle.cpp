// lexcycle: command-line front end.
//
// Exit codes: 0 success, 1 usage or other failure, 2 parse error,
// 3 validation error, 4 size guard, 5 verification failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexcycle.hpp"

namespace lc = lexcycle;

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, validation = 3, guard = 4, verification = 5 };

int exit_code(lc::ErrorKind k) {
    switch (k) {
    case lc::ErrorKind::parse: return parse;
    case lc::ErrorKind::validation: return validation;
    case lc::ErrorKind::guard: return guard;
    case lc::ErrorKind::verification: return verification;
    default: return usage;
    }
}

struct Globals {
    std::optional<int> dim;
    std::uint64_t seed = 20240901;
};

std::string betti_text(const std::vector<int>& b) {
    std::string s = "β=(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

// Writes through `emit` to `path`, or to stdout when path is empty.
template <class F>
void with_output(const std::string& path, F&& emit) {
    if (path.empty()) {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    auto out = lc::io::detail::open_out(path);
    emit(out);
    if (!out) throw lc::InvalidArgument("failed writing '" + path + "'");
}

std::ostream& summary_stream(const std::string& out_path) { return out_path.empty() ? std::cerr : std::cout; }

int cmd_validate(const Globals& g, const std::string& path) {
    const auto K = lc::io::read_complex_file(path, g.dim);
    const auto betti = lc::betti_numbers(K);
    if (K.dimension() != 2) {
        std::cout << "not a surface (dimension " << K.dimension() << "), " << betti_text(betti) << '\n';
        return ok;
    }
    try {
        const auto t = lc::classify_surface(K);
        std::cout << (t.closed ? "closed" : "bounded") << " orientable genus " << t.genus;
        if (t.components != 1) std::cout << ", " << t.components << " components";
        if (!t.closed) std::cout << ", " << t.boundary_components << " boundary components";
        std::cout << ", " << betti_text(betti) << ", χ=" << t.euler_characteristic << '\n';
    } catch (const lc::NonOrientableError& e) {
        std::cout << "non-orientable: " << e.what() << ", " << betti_text(betti) << '\n';
    } catch (const lc::NotManifoldError& e) {
        std::cout << "not a 2-manifold: " << e.what() << ", " << betti_text(betti) << '\n';
    }
    return ok;
}

int cmd_betti(const Globals& g, const std::string& path) {
    const auto K = lc::io::read_complex_file(path, g.dim);
    std::cout << betti_text(lc::betti_numbers(K)) << '\n';
    return ok;
}

void require_edges(const lc::WeightedComplex& K) {
    if (K.weighted_dim() != 1)
        throw lc::ValidationError("cycle files hold edges; the complex is weighted on dimension " +
                                  std::to_string(K.weighted_dim()));
}

int cmd_lexopt(const Globals& g, const std::string& cpath, const std::string& zpath, const std::string& algo,
               const std::string& out, bool bottleneck) {
    const auto K = lc::io::read_complex_file(cpath, g.dim);
    require_edges(K);
    const auto z = lc::io::read_cyc_file(zpath, K);
    std::optional<lc::Chain> best;
    if (algo == "surface") {
        best = lc::SurfaceLexOptimizer(K).lex_optimal_cycle(z);
    } else if (algo == "reduction") {
        lc::ReductionOptimizer opt(K);
        best = bottleneck ? opt.bottleneck_optimal_cycle(z).cycle : opt.lex_optimal_cycle(z);
    } else if (algo == "brute") {
        best = bottleneck ? lc::oracle::brute_bottleneck_opt(K, z).cycle : lc::oracle::brute_lex_opt(K, z);
    } else {
        throw lc::InvalidArgument("unknown algorithm '" + algo + "'");
    }
    with_output(out, [&](std::ostream& os) { lc::io::write_cyc(os, *best); });
    summary_stream(out) << "norm " << lc::io::format_double(lc::bottleneck_norm(*best)) << " support "
                        << best->size() << '\n';
    return ok;
}

int cmd_basis(const Globals& g, const std::string& cpath, const std::string& algo, const std::string& out) {
    const auto K = lc::io::read_complex_file(cpath, g.dim);
    require_edges(K);
    std::vector<lc::Chain> basis;
    if (algo == "surface")
        basis = lc::SurfaceLexOptimizer(K).lex_optimal_basis();
    else if (algo == "reduction")
        basis = lc::lex_optimal_basis(K, 1);
    else if (algo == "brute")
        basis = lc::oracle::brute_greedy_basis(K, 1);
    else
        throw lc::InvalidArgument("unknown algorithm '" + algo + "'");
    if (out.empty()) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::cout << "# cycle " << i + 1 << " norm " << lc::io::format_double(lc::bottleneck_norm(basis[i]))
                      << '\n';
            lc::io::write_cyc(std::cout, basis[i]);
        }
        std::cerr << basis.size() << " cycles\n";
        return ok;
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::string path = out + "_" + std::to_string(i + 1) + ".cyc";
        with_output(path, [&](std::ostream& os) { lc::io::write_cyc(os, basis[i]); });
        std::cout << path << " norm " << lc::io::format_double(lc::bottleneck_norm(basis[i])) << " support "
                  << basis[i].size() << '\n';
    }
    std::cout << basis.size() << " cycles\n";
    return ok;
}

int cmd_persistence(const Globals& g, const std::string& cpath, const std::string& out) {
    const auto K = lc::io::read_complex_file(cpath, g.dim);
    const auto rf = lc::reduce(lc::build_filtration(K));
    const auto pts = lc::persistence_diagram(rf);
    with_output(out, [&](std::ostream& os) { lc::io::write_persistence_csv(os, pts); });
    return ok;
}

std::pair<lc::Gf2Matrix, lc::Gf2Vector> read_system(const std::string& mpath, const std::string& rpath) {
    auto min = lc::io::detail::open_in(mpath);
    auto A = lc::io::read_matrix(min);
    auto rin = lc::io::detail::open_in(rpath);
    auto b = lc::io::read_rhs(rin);
    return {std::move(A), std::move(b)};
}

int cmd_genlink(const std::string& mpath, const std::string& rpath, const std::string& out) {
    const auto [A, b] = read_system(mpath, rpath);
    const auto dg = lc::matrix_to_diagram(A, b);
    with_output(out, [&](std::ostream& os) { lc::io::write_diagram(os, dg); });
    summary_stream(out) << "components " << dg.components.size() << " crossings " << dg.crossings.size() << '\n';
    return ok;
}

int cmd_verifylink(const std::string& dpath, const std::string& mpath, const std::string& rpath) {
    auto din = lc::io::detail::open_in(dpath);
    const auto dg = lc::io::read_diagram(din);
    const auto [A, b] = read_system(mpath, rpath);
    const auto rep = lc::verify_instance(dg, A, b);
    for (const auto& m : rep.mismatches)
        std::cout << "mismatch " << m.first << " " << m.second << ": expected lk2=" << m.expected << ", got "
                  << m.actual << '\n';
    std::cout << (rep.ok() ? "ok" : "FAILED") << " n=" << A.size() << " crossings=" << rep.crossing_count << '\n';
    return rep.ok() ? ok : verification;
}

struct BenchOptions {
    int genus = 1;
    std::vector<int> sizes{16, 41, 129};
    int repeats = 3;
    std::size_t reduction_cap = 5000;
    std::string out;
};

int cmd_bench(const Globals& g, const BenchOptions& o) {
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
    auto fixed = [](double v) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << v;
        return s.str();
    };
    if (o.repeats < 1) throw lc::InvalidArgument("repeats must be at least 1");
    lc::gen::Rng rng(g.seed);
    std::ostringstream csv;
    csv << "genus,n,m,support_in,support_out,norm,t_surface_ms,t_reduction_ms\n";
    for (int n : o.sizes) {
        const auto tris = lc::gen::grid_surface(o.genus, n);
        const auto K = lc::gen::surface_complex(tris, &rng);
        const auto z = lc::gen::random_cycle(K, rng);
        std::vector<double> times;
        std::optional<lc::Chain> result;
        for (int r = 0; r < o.repeats; ++r) {
            const auto t0 = clock::now();
            lc::SurfaceLexOptimizer opt(K);
            auto c = opt.lex_optimal_cycle(z);
            times.push_back(ms(clock::now() - t0));
            result.emplace(std::move(c));
        }
        std::sort(times.begin(), times.end());
        std::string t_red = "skipped";
        if (K.total_size() <= o.reduction_cap) {
            const auto t0 = clock::now();
            const auto red = lc::ReductionOptimizer(K).lex_optimal_cycle(z);
            t_red = fixed(ms(clock::now() - t0));
            if (!(red == *result))
                throw lc::VerificationError("surface and reduction results differ at n=" + std::to_string(n));
        } else {
            std::cerr << "reduction path skipped for m=" << K.total_size() << " (cap " << o.reduction_cap << ")\n";
        }
        csv << o.genus << ',' << n << ',' << K.total_size() << ',' << z.size() << ',' << result->size() << ','
            << lc::io::format_double(lc::bottleneck_norm(*result)) << ',' << fixed(times[times.size() / 2]) << ','
            << t_red << '\n';
    }
    with_output(o.out, [&](std::ostream& os) { os << csv.str(); });
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal homologous cycles over Z2, persistence, and linking-number instances"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--dim", g.dim, "weighted dimension, overriding the file header")->check(CLI::Range(0, 3));
    app.add_option("--seed", g.seed, "random seed");

    std::string cpath, zpath, algo = "surface", out, mpath, rpath, dpath;

    auto* validate = app.add_subcommand("validate", "surface verdict, genus and Betti numbers");
    validate->add_option("complex", cpath)->required();
    auto* betti = app.add_subcommand("betti", "Betti numbers");
    betti->add_option("complex", cpath)->required();

    auto* lexopt = app.add_subcommand("lexopt", "lex-optimal cycle homologous to the input");
    auto* bottleneck = app.add_subcommand("bottleneckopt", "bottleneck-optimal cycle homologous to the input");
    for (auto* sc : {lexopt, bottleneck}) {
        sc->add_option("complex", cpath)->required();
        sc->add_option("cycle", zpath)->required();
        sc->add_option("--algo", algo, "surface, reduction or brute")
            ->check(CLI::IsMember({"surface", "reduction", "brute"}));
        sc->add_option("--out", out, "output .cyc file");
    }

    auto* basis = app.add_subcommand("basis", "lex-optimal homology basis");
    basis->add_option("complex", cpath)->required();
    basis->add_option("--algo", algo, "surface, reduction or brute")
        ->check(CLI::IsMember({"surface", "reduction", "brute"}));
    basis->add_option("--out", out, "output prefix; writes PREFIX_k.cyc");

    auto* persistence = app.add_subcommand("persistence", "persistence pairs as CSV");
    persistence->add_option("complex", cpath)->required();
    persistence->add_option("--out", out, "output CSV file");

    auto* genlink = app.add_subcommand("genlink", "link diagram for a Z2 system");
    genlink->add_option("matrix", mpath)->required();
    genlink->add_option("rhs", rpath)->required();
    genlink->add_option("--out", out, "output .link.json file");

    auto* verifylink = app.add_subcommand("verifylink", "check a diagram against a Z2 system");
    verifylink->add_option("diagram", dpath)->required();
    verifylink->add_option("matrix", mpath)->required();
    verifylink->add_option("rhs", rpath)->required();

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "time surface and reduction paths on grid surfaces");
    bench->add_option("--genus", bo.genus, "genus of the benchmark surfaces")->check(CLI::Range(1, 16));
    bench->add_option("--sizes", bo.sizes, "grid sides")->delimiter(',');
    bench->add_option("--repeats", bo.repeats, "timed repetitions per size");
    bench->add_option("--reduction-cap", bo.reduction_cap, "largest simplex count for the reduction path");
    bench->add_option("--out", bo.out, "output CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*validate) return cmd_validate(g, cpath);
        if (*betti) return cmd_betti(g, cpath);
        if (*lexopt) return cmd_lexopt(g, cpath, zpath, algo, out, false);
        if (*bottleneck) return cmd_lexopt(g, cpath, zpath, algo, out, true);
        if (*basis) return cmd_basis(g, cpath, algo, out);
        if (*persistence) return cmd_persistence(g, cpath, out);
        if (*genlink) return cmd_genlink(mpath, rpath, out);
        if (*verifylink) return cmd_verifylink(dpath, mpath, rpath);
        if (*bench) return cmd_bench(g, bo);
    } catch (const lc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
