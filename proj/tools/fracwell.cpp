// fracwell command-line interface: CSV emission for spectra, eigenfunctions,
// operator sweeps, oracle comparison, and Mittag-Leffler zero tables.
//
// Exit codes: 0 success, 2 configuration or domain error, 3 computed but
// convergence-suspect (rows are still written).

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <fracwell/fracwell.hpp>

namespace {

// Fixed 9-significant-digit decimal formatting, locale independent.
std::string fmt9(double v) {
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

struct RunConfig {
    std::string alpha_arg;
    std::vector<fracwell::FractionalOrder> alphas;
    double q = 1.0;
    int N = 20;
    int levels = 5;
    int k = 1;
    int grid = 201;
    std::string out;
    std::string format = "csv";
};

std::vector<fracwell::FractionalOrder> parse_alpha_list(const std::string& arg) {
    std::vector<fracwell::FractionalOrder> out;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
        const std::size_t comma = std::min(arg.find(',', pos), arg.size());
        const std::string tok = arg.substr(pos, comma - pos);
        if (tok.empty())
            throw fracwell::DomainError("empty alpha entry in '" + arg + "'");
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw fracwell::DomainError("cannot parse alpha '" + tok + "'");
        }
        if (used != tok.size())
            throw fracwell::DomainError("cannot parse alpha '" + tok + "'");
        out.emplace_back(v); // validates 0 < alpha <= 2
        pos = comma + 1;
    }
    return out;
}

// Validate everything before any computation starts (fail fast), then hand a
// fully typed config to the command body.
void finalize(RunConfig& cfg) {
    cfg.alphas = parse_alpha_list(cfg.alpha_arg);
    fracwell::WellGeometry probe(cfg.q); // validates q > 0
    (void)probe;
    if (cfg.format != "csv")
        throw fracwell::DomainError("unsupported format '" + cfg.format + "' (csv only)");
    if (cfg.grid < 2)
        throw fracwell::DomainError("grid must be >= 2");
    if (cfg.k < 1)
        throw fracwell::DomainError("k must be >= 1");
}

std::string provenance(const RunConfig& cfg) {
    std::string alphas;
    for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
        if (i) alphas += ',';
        alphas += fmt9(cfg.alphas[i].alpha);
    }
    return "# fracwell " + std::string(fracwell::version_string) + " alpha=" + alphas +
           " q=" + fmt9(cfg.q) + " N=" + std::to_string(cfg.N) + "\n";
}

// Buffered output keeps row order deterministic and lets us pick the sink at
// the very end. Binary mode pins line feed terminators.
int emit(const RunConfig& cfg, const std::string& body) {
    if (cfg.out.empty()) {
        std::cout << body;
        std::cout.flush();
        return 0;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        std::cerr << "fracwell: cannot open output file '" << cfg.out << "'\n";
        return 2;
    }
    f << body;
    return f.good() ? 0 : 2;
}

int cmd_spectrum(RunConfig& cfg) {
    finalize(cfg);
    fracwell::WellGeometry geom(cfg.q);
    std::string body = provenance(cfg);
    body += "alpha,k,E_numeric,E_tilde,E_free,converged_flag\n";
    bool suspect = false;
    for (const auto& ord : cfg.alphas) {
        const auto pairs = fracwell::solve_well(ord, geom, cfg.N, cfg.levels);
        for (int k = 1; k <= cfg.levels; ++k) {
            const auto& p = pairs[std::size_t(k - 1)];
            suspect = suspect || p.convergence_suspect;
            body += fmt9(ord.alpha) + ',' + std::to_string(k) + ',' + fmt9(p.energy) +
                    ',' + fmt9(fracwell::approx_energy(k, ord, geom)) + ',' +
                    fmt9(fracwell::free_energy(k, ord, geom)) + ',' +
                    (p.convergence_suspect ? "0" : "1") + '\n';
        }
    }
    const int rc = emit(cfg, body);
    return rc != 0 ? rc : (suspect ? 3 : 0);
}

int cmd_eigenfunction(RunConfig& cfg) {
    finalize(cfg);
    if (cfg.alphas.size() != 1)
        throw fracwell::DomainError("eigenfunction takes a single alpha");
    if (cfg.k > cfg.levels)
        throw fracwell::DomainError("k exceeds the requested level count");
    fracwell::WellGeometry geom(cfg.q);
    const auto pairs = fracwell::solve_well(cfg.alphas[0], geom, cfg.N, cfg.k);
    const auto& p = pairs[std::size_t(cfg.k - 1)];
    std::string body = provenance(cfg);
    body += "x,psi\n";
    for (int j = 0; j < cfg.grid; ++j) {
        const double x = -cfg.q + 2.0 * cfg.q * double(j) / double(cfg.grid - 1);
        body += fmt9(x) + ',' + fmt9(fracwell::eval_series(p.series, geom, x)) + '\n';
    }
    const int rc = emit(cfg, body);
    return rc != 0 ? rc : (p.convergence_suspect ? 3 : 0);
}

int cmd_gk(RunConfig& cfg) {
    finalize(cfg);
    fracwell::WellGeometry geom(cfg.q);
    const auto parity = cfg.k % 2 == 1 ? fracwell::TrigMode::even : fracwell::TrigMode::odd;
    fracwell::TrigMode mode(parity, cfg.k);
    // interior grid: the closed forms are evaluated strictly inside the well
    std::vector<double> xs;
    xs.reserve(std::size_t(cfg.grid));
    for (int j = 0; j < cfg.grid; ++j)
        xs.push_back(-cfg.q + 2.0 * cfg.q * double(j + 1) / double(cfg.grid + 1));
    std::string body = provenance(cfg);
    body += "alpha,x,g\n";
    for (const auto& ord : cfg.alphas) {
        const auto g = fracwell::pseudo_normalized_g(mode, ord, geom, xs);
        for (std::size_t j = 0; j < xs.size(); ++j)
            body += fmt9(ord.alpha) + ',' + fmt9(xs[j]) + ',' + fmt9(g[j]) + '\n';
    }
    return emit(cfg, body);
}

int cmd_oracle_check(RunConfig& cfg, double tol) {
    finalize(cfg);
    fracwell::WellGeometry geom(cfg.q);
    const double xs[] = {0.0, 0.2, 0.5, 0.8};
    std::string body = provenance(cfg);
    double worst = 0.0;
    int cells = 0;
    for (const auto& ord : cfg.alphas) {
        double amax = 0.0;
        for (int k = 1; k <= 4; ++k) {
            const auto parity = k % 2 == 1 ? fracwell::TrigMode::even
                                           : fracwell::TrigMode::odd;
            fracwell::TrigMode mode(parity, k);
            for (double xr : xs) {
                const double x = xr * cfg.q;
                const double closed = fracwell::confined_apply_trig(mode, ord, geom, x);
                auto f = [&](double u) {
                    return fracwell::detail::trig_eval(parity, mode.wavenumber(geom), u);
                };
                const double direct = fracwell::quadrature_oracle(f, ord, geom, x);
                amax = std::max(amax, std::abs(closed - direct));
                ++cells;
            }
        }
        worst = std::max(worst, amax);
        body += "alpha=" + fmt9(ord.alpha) + " max_dev=" + fmt9(amax) + "\n";
    }
    body += "max deviation " + fmt9(worst) + " over " + std::to_string(cells) +
            " cells (tol " + fmt9(tol) + "): " + (worst <= tol ? "OK" : "FAIL") + "\n";
    const int rc = emit(cfg, body);
    return rc != 0 ? rc : (worst <= tol ? 0 : 1);
}

int cmd_mlf_zeros(RunConfig& cfg) {
    finalize(cfg);
    fracwell::WellGeometry geom(cfg.q);
    std::string body = provenance(cfg);
    body += "definition,parity,alpha,index,zero,energy\n";
    for (auto def : {fracwell::MlfDefinition::riemann, fracwell::MlfDefinition::caputo}) {
        for (auto par : {fracwell::TrigMode::even, fracwell::TrigMode::odd}) {
            for (const auto& ord : cfg.alphas) {
                fracwell::MlfEigenfunction fn{def, par, ord};
                // the scan window may hold fewer zeros than requested; report
                // what exists instead of failing the whole table
                std::vector<double> zeros;
                for (int want = cfg.levels; want >= 1 && zeros.empty(); --want) {
                    try {
                        zeros = fracwell::mlf_first_zeros(fn, want);
                    } catch (const fracwell::WindowExhausted&) {
                    }
                }
                const char* dname = def == fracwell::MlfDefinition::riemann
                                        ? "riemann" : "caputo";
                const char* pname = par == fracwell::TrigMode::even ? "even" : "odd";
                if (int(zeros.size()) < cfg.levels)
                    std::cerr << "# note: " << dname << '/' << pname << " alpha="
                              << fmt9(ord.alpha) << ": window holds only "
                              << zeros.size() << " of " << cfg.levels << " zeros\n";
                for (std::size_t i = 0; i < zeros.size(); ++i)
                    body += std::string(dname) + ',' + pname + ',' + fmt9(ord.alpha) +
                            ',' + std::to_string(i + 1) + ',' + fmt9(zeros[i]) + ',' +
                            fmt9(fracwell::mlf_zero_energy(zeros[i], ord, geom)) + '\n';
            }
        }
    }
    return emit(cfg, body);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional Schroedinger well: spectra, eigenfunctions, oracles"};
    app.require_subcommand(1);

    RunConfig cfg;
    double tol = 1e-6;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha_arg, "fractional order, single value or comma list");
        sub->add_option("--q", cfg.q, "well half-width (default 1)");
        sub->add_option("--N", cfg.N, "Taylor matrix size (default 20)");
        sub->add_option("--levels", cfg.levels, "number of energy levels (default 5)");
        sub->add_option("--k", cfg.k, "mode or level index (default 1)");
        sub->add_option("--grid", cfg.grid, "grid point count (default 201)");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "output format, csv only");
    };

    auto* sp = app.add_subcommand("spectrum", "energy levels vs alpha as CSV");
    auto* ef = app.add_subcommand("eigenfunction", "eigenfunction profile as CSV");
    auto* gk = app.add_subcommand("gk", "pseudo-normalized operator action as CSV");
    auto* oc = app.add_subcommand("oracle-check", "closed form vs quadrature oracle report");
    auto* mz = app.add_subcommand("mlf-zeros", "Mittag-Leffler eigenfunction zero table");
    for (auto* sub : {sp, ef, gk, oc, mz})
        add_common(sub);
    oc->add_option("--tol", tol, "deviation tolerance (default 1e-6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    // sweep commands default to the full alpha grid, the rest to a single run
    if (cfg.alpha_arg.empty()) {
        if (gk->parsed())
            cfg.alpha_arg = "0.25,0.5,0.75,1.0,1.25,1.5,1.75,2.0";
        else if (oc->parsed())
            cfg.alpha_arg = "0.25,0.5,0.75,1.0,1.25,1.5,1.75";
        else
            cfg.alpha_arg = "1.0";
    }

    try {
        if (sp->parsed()) return cmd_spectrum(cfg);
        if (ef->parsed()) return cmd_eigenfunction(cfg);
        if (gk->parsed()) return cmd_gk(cfg);
        if (oc->parsed()) return cmd_oracle_check(cfg, tol);
        if (mz->parsed()) return cmd_mlf_zeros(cfg);
    } catch (const fracwell::Error& e) {
        std::cerr << "fracwell: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
