// Command line front end.  Each subcommand evaluates one library operation
// over a grid and writes a single CSV or JSON artifact whose bytes depend
// only on the effective configuration (seed included).  Grid evaluation may
// run on several threads, bounded by FRACPSEUDO_THREADS; rows are always
// emitted in grid order.
//
// Exit codes: 0 success, 2 parameter validation failure, 3 numerical
// non-convergence.

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fracpseudo/fracpseudo.hpp"

namespace {

using fracpseudo::Family;
using fracpseudo::GridSpec;
using fracpseudo::ModelParams;
using fracpseudo::Parity;

// All numbers are rendered once, with 17 significant digits, and the same
// token is spliced into CSV and JSON so the two formats agree digit for
// digit.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string num(int v) { return std::to_string(v); }
std::string num(long long v) { return std::to_string(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
    return out;
}

template <class T>
std::string num_list(const std::vector<T>& vs) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += num(vs[i]);
    }
    out += "]";
    return out;
}

// One artifact: meta pairs (values are pre-rendered JSON tokens) plus a
// column table of numeric tokens.  CSV carries the table only; JSON carries
// both.
struct Artifact {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add(const std::string& key, const std::string& raw_token) {
        meta.emplace_back(key, raw_token);
    }
    void add_str(const std::string& key, const std::string& s) {
        meta.emplace_back(key, json_quote(s));
    }
};

void write_csv(std::ostream& os, const Artifact& a) {
    for (std::size_t i = 0; i < a.columns.size(); ++i)
        os << (i ? "," : "") << a.columns[i];
    os << "\n";
    for (const auto& row : a.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

void write_json(std::ostream& os, const Artifact& a) {
    os << "{\n  \"meta\": {";
    for (std::size_t i = 0; i < a.meta.size(); ++i) {
        os << (i ? ",\n    " : "\n    ");
        os << json_quote(a.meta[i].first) << ": " << a.meta[i].second;
    }
    os << "\n  },\n  \"columns\": [";
    for (std::size_t i = 0; i < a.columns.size(); ++i)
        os << (i ? ", " : "") << json_quote(a.columns[i]);
    os << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        os << (r ? ",\n    " : "\n    ") << "[";
        for (std::size_t i = 0; i < a.rows[r].size(); ++i)
            os << (i ? ", " : "") << a.rows[r][i];
        os << "]";
    }
    os << (a.rows.empty() ? "]" : "\n  ]") << "\n}\n";
}

void emit(const Artifact& a, const std::string& out_path, const std::string& format) {
    std::ostringstream body;
    if (format == "csv")
        write_csv(body, a);
    else
        write_json(body, a);
    if (out_path.empty()) {
        std::cout << body.str();
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw fracpseudo::domain_error("output path not writable: " + out_path);
    os << body.str();
    os.flush();
    if (!os) throw fracpseudo::domain_error("write failed: " + out_path);
}

// Shared option state.  Every subcommand gets its own copy so defaults can
// differ; only the bound subset is ever read back.
struct Cfg {
    std::string out;
    std::string format = "csv";
    double tol = 1e-9;

    std::string family;
    std::string parity = "odd";
    double beta = 0.5;
    int k = 1;
    double p = 0.5;
    double theta = 0.0;
    double gamma = 0.0;

    double xmin = -10.0;
    double xmax = 10.0;
    int n = 401;
    std::vector<double> ts{1.0};
    double t = 1.0;
    double dt = 1e-3;
    std::string route = "auto";
    int cap = 2000;
    std::string op;
    std::string fn;
    std::vector<double> gammas{0.5, 0.1, 0.02, 0.004};
    std::vector<double> xis{1.0};
    long long samples = 100000;
    std::uint64_t seed = 12345;
    double nu = 1.0;
    double mu = 1.0;
};

Family parse_family(const std::string& name) {
    if (name == "even") return Family::even;
    if (name == "odd_pq") return Family::odd_pq;
    if (name == "feller") return Family::feller;
    throw fracpseudo::domain_error("family must be one of even, odd_pq, feller");
}

ModelParams make_model(Family fam, const Cfg& c) {
    switch (fam) {
        case Family::even: return ModelParams::even(c.beta, c.k);
        case Family::odd_pq: return ModelParams::odd(c.beta, c.k, c.p);
        case Family::feller:
            return ModelParams::feller(c.beta, c.k, c.theta,
                                       c.parity == "even" ? Parity::even : Parity::odd);
    }
    throw fracpseudo::domain_error("unknown family");
}

void meta_common(Artifact& a, const char* command) {
    a.add_str("version", fracpseudo::version);
    a.add_str("command", command);
}

void meta_model(Artifact& a, Family fam, const ModelParams& m) {
    a.add_str("family", fam == Family::even    ? "even"
                        : fam == Family::odd_pq ? "odd_pq"
                                                : "feller");
    a.add("beta", num(m.beta));
    a.add("k", num(m.k));
    if (fam == Family::odd_pq) {
        a.add("p", num(m.p));
        a.add("q", num(m.q));
    }
    if (fam == Family::feller) {
        a.add("theta", num(m.theta));
        a.add_str("parity", m.parity == Parity::even ? "even" : "odd");
    }
    a.add("order", num(m.order()));
}

void meta_grid(Artifact& a, const char* name, const GridSpec& g) {
    a.add(std::string(name) + "_min", num(g.x_min));
    a.add(std::string(name) + "_max", num(g.x_max));
    a.add(std::string(name) + "_n", num(g.n));
}

// density: fundamental solution values on an x grid, one row per (t, x).
// Symmetric form picks an inversion route by --route; --family switches to
// the asymmetric Fourier inversion of the limit CF.
void run_density(const Cfg& c, bool family_given, bool gamma_given) {
    if (family_given && gamma_given)
        throw fracpseudo::domain_error("density takes either --gamma or --family, not both");
    if (!family_given && !gamma_given)
        throw fracpseudo::domain_error("density requires --gamma (symmetric) or --family");
    for (double t : c.ts)
        if (!(t > 0.0)) throw fracpseudo::domain_error("density requires t > 0");
    if (c.ts.empty()) throw fracpseudo::domain_error("density requires at least one t");

    GridSpec grid;
    grid.x_min = c.xmin;
    grid.x_max = c.xmax;
    grid.n = c.n;
    const std::vector<double> xs = grid.points();

    Artifact a;
    meta_common(a, "density");

    std::function<double(double, double)> eval;
    if (family_given) {
        if (c.route != "auto")
            throw fracpseudo::domain_error("--route applies to the symmetric form only");
        const Family fam = parse_family(c.family);
        const ModelParams m = make_model(fam, c);
        meta_model(a, fam, m);
        a.add_str("route", "asymmetric");
        eval = [m, fam, &c](double x, double t) {
            return fracpseudo::invert::density_asymmetric(m, fam, x, t, c.tol);
        };
    } else {
        if (!(c.gamma > 0.0)) throw fracpseudo::domain_error("density requires gamma > 0");
        a.add("gamma", num(c.gamma));
        const std::string route = c.route == "auto" ? "cosine" : c.route;
        a.add_str("route", route);
        if (route == "cosine")
            eval = [&c](double x, double t) {
                return fracpseudo::invert::density_cosine(c.gamma, x, t, c.tol);
            };
        else if (route == "series")
            eval = [&c](double x, double t) {
                return fracpseudo::invert::density_series(c.gamma, x, t, c.cap, c.tol);
            };
        else if (route == "ml")
            eval = [&c](double x, double t) {
                return fracpseudo::invert::density_ml_integral(c.gamma, x, t, c.tol);
            };
        else
            eval = [&c](double x, double t) {
                return fracpseudo::invert::density_probabilistic(c.gamma, x, t, c.tol);
            };
    }
    a.add("ts", num_list(c.ts));
    meta_grid(a, "x", grid);
    a.add("tol", num(c.tol));

    const long long total = static_cast<long long>(c.ts.size()) * grid.n;
    std::vector<double> vals(static_cast<std::size_t>(total));
    fracpseudo::parallel_for(total, [&](long long idx) {
        const std::size_t ti = static_cast<std::size_t>(idx) / xs.size();
        const std::size_t xi = static_cast<std::size_t>(idx) % xs.size();
        vals[static_cast<std::size_t>(idx)] = eval(xs[xi], c.ts[ti]);
    });

    a.columns = {"x", "t", "value"};
    a.rows.reserve(static_cast<std::size_t>(total));
    for (std::size_t ti = 0; ti < c.ts.size(); ++ti)
        for (std::size_t xi = 0; xi < xs.size(); ++xi)
            a.rows.push_back({num(xs[xi]), num(c.ts[ti]), num(vals[ti * xs.size() + xi])});
    emit(a, c.out, c.format);
}

// cf: characteristic function on a xi grid; the limit CF by default, the
// pre-limit walk CF when --gamma fixes a jump scale.
void run_cf(const Cfg& c, bool gamma_given) {
    const Family fam = parse_family(c.family);
    const ModelParams m = make_model(fam, c);
    if (!(c.t > 0.0)) throw fracpseudo::domain_error("cf requires t > 0");

    GridSpec grid;
    grid.x_min = c.xmin;
    grid.x_max = c.xmax;
    grid.n = c.n;
    const std::vector<double> xis = grid.points();

    Artifact a;
    meta_common(a, "cf");
    meta_model(a, fam, m);
    a.add_str("kind", gamma_given ? "prelimit" : "limit");
    if (gamma_given) a.add("gamma", num(c.gamma));
    a.add("t", num(c.t));
    meta_grid(a, "xi", grid);

    std::vector<std::complex<double>> vals(xis.size());
    if (gamma_given) {
        const fracpseudo::walks::WalkParams w(c.gamma, m);
        fracpseudo::parallel_for(static_cast<long long>(xis.size()), [&](long long i) {
            vals[static_cast<std::size_t>(i)] =
                fracpseudo::walks::prelimit_cf(w, fam, xis[static_cast<std::size_t>(i)], c.t);
        });
    } else {
        fracpseudo::parallel_for(static_cast<long long>(xis.size()), [&](long long i) {
            vals[static_cast<std::size_t>(i)] =
                fracpseudo::symbols::limit_cf(m, fam, xis[static_cast<std::size_t>(i)], c.t);
        });
    }

    a.columns = {"xi", "re", "im"};
    for (std::size_t i = 0; i < xis.size(); ++i)
        a.rows.push_back({num(xis[i]), num(vals[i].real()), num(vals[i].imag())});
    emit(a, c.out, c.format);
}

// symbols: Fourier symbol of one operator on a xi grid.
void run_symbols(const Cfg& c, bool gamma_given) {
    GridSpec grid;
    grid.x_min = c.xmin;
    grid.x_max = c.xmax;
    grid.n = c.n;
    const std::vector<double> xis = grid.points();

    Artifact a;
    meta_common(a, "symbols");
    a.add_str("op", c.op);

    std::function<std::complex<double>(double)> eval;
    if (c.op == "rfrak") {
        const ModelParams m = ModelParams::odd(c.beta, c.k, c.p);
        a.add("beta", num(m.beta));
        a.add("k", num(m.k));
        a.add("p", num(m.p));
        a.add("q", num(m.q));
        a.add("order", num(m.order()));
        eval = [m](double xi) { return fracpseudo::symbols::rfrak_symbol(m, xi); };
    } else {
        if (!gamma_given || !(c.gamma > 0.0))
            throw fracpseudo::domain_error("symbols requires --gamma > 0 for this op");
        a.add("gamma", num(c.gamma));
        if (c.op == "weyl_plus")
            eval = [&c](double xi) {
                return fracpseudo::symbols::weyl_symbol(c.gamma, fracpseudo::symbols::Side::plus,
                                                        xi);
            };
        else if (c.op == "weyl_minus")
            eval = [&c](double xi) {
                return fracpseudo::symbols::weyl_symbol(c.gamma, fracpseudo::symbols::Side::minus,
                                                        xi);
            };
        else if (c.op == "riesz")
            eval = [&c](double xi) {
                return std::complex<double>(fracpseudo::symbols::riesz_symbol(c.gamma, xi), 0.0);
            };
        else {
            a.add("theta", num(c.theta));
            a.add("growth_flag",
                  fracpseudo::symbols::feller_growth_flag(c.theta) ? "true" : "false");
            eval = [&c](double xi) {
                return fracpseudo::symbols::feller_symbol(c.gamma, c.theta, xi);
            };
        }
    }
    meta_grid(a, "xi", grid);

    a.columns = {"xi", "re", "im"};
    for (double xi : xis) {
        const std::complex<double> v = eval(xi);
        a.rows.push_back({num(xi), num(v.real()), num(v.imag())});
    }
    emit(a, c.out, c.format);
}

// converge: sup-norm CF error against the limit along a decreasing sequence
// of jump scales.
void run_converge(const Cfg& c) {
    const Family fam = parse_family(c.family);
    const ModelParams m = make_model(fam, c);
    if (!(c.t > 0.0)) throw fracpseudo::domain_error("converge requires t > 0");

    GridSpec grid;
    grid.x_min = c.xmin;
    grid.x_max = c.xmax;
    grid.n = c.n;
    const std::vector<double> xis = grid.points();

    const auto rows = fracpseudo::walks::convergence_report(m, fam, xis, c.gammas, c.t);

    Artifact a;
    meta_common(a, "converge");
    meta_model(a, fam, m);
    a.add("t", num(c.t));
    meta_grid(a, "xi", grid);
    a.add("gammas", num_list(c.gammas));
    a.add("final_sup_error", num(rows.back().sup_error));

    a.columns = {"gamma", "sup_error"};
    for (const auto& r : rows) a.rows.push_back({num(r.scale_gamma), num(r.sup_error)});
    emit(a, c.out, c.format);
}

// mc: Monte Carlo estimate of the pre-limit CF, one row per xi; row i uses
// seed + i so rows are independent streams.
void run_mc(const Cfg& c) {
    const Family fam = parse_family(c.family);
    const ModelParams m = make_model(fam, c);
    if (!(c.gamma > 0.0)) throw fracpseudo::domain_error("mc requires --gamma > 0");
    if (!(c.t > 0.0)) throw fracpseudo::domain_error("mc requires t > 0");
    if (c.xis.empty()) throw fracpseudo::domain_error("mc requires at least one xi");
    const fracpseudo::walks::WalkParams w(c.gamma, m);

    Artifact a;
    meta_common(a, "mc");
    meta_model(a, fam, m);
    a.add("gamma", num(c.gamma));
    a.add("t", num(c.t));
    a.add("n", num(c.samples));
    a.add("seed", num(c.seed));
    a.add("xis", num_list(c.xis));

    a.columns = {"xi", "re", "im", "stderr", "n", "seed"};
    double max_se = 0.0;
    for (std::size_t i = 0; i < c.xis.size(); ++i) {
        const std::uint64_t row_seed = c.seed + i;
        const auto est =
            fracpseudo::walks::mc_walk_cf(w, fam, c.xis[i], c.t, c.samples, row_seed);
        max_se = std::max(max_se, est.std_error);
        a.rows.push_back({num(c.xis[i]), num(est.value.real()), num(est.value.imag()),
                          num(est.std_error), num(est.n_samples), num(est.seed)});
    }
    a.add("max_std_error", num(max_se));
    emit(a, c.out, c.format);
}

// residual: one-row report of the PDE residual between the centered time
// difference and the grid operator.
void run_residual(const Cfg& c) {
    const Family fam = parse_family(c.family);
    const ModelParams m = make_model(fam, c);

    GridSpec grid;
    grid.x_min = c.xmin;
    grid.x_max = c.xmax;
    grid.n = c.n;

    const auto rep = fracpseudo::fracops::pde_residual(m, fam, c.t, c.dt, grid);

    Artifact a;
    meta_common(a, "residual");
    meta_model(a, fam, m);
    a.add("t", num(c.t));
    a.add("dt", num(c.dt));
    meta_grid(a, "x", grid);
    a.add_str("skip_reason", rep.skip_reason);

    a.columns = {"max_norm", "l2_norm", "time_scale", "interior_begin", "interior_end",
                 "skipped"};
    a.rows.push_back({num(rep.max_norm), num(rep.l2_norm), num(rep.time_scale),
                      num(rep.interior_begin), num(rep.interior_end),
                      std::string(rep.skipped ? "1" : "0")});
    emit(a, c.out, c.format);
}

// sojourn: sojourn-time density of the positive half-line occupation on a
// positive x grid; --route half-closed selects the explicit form (its own
// documented time convention, beta and k ignored).
void run_sojourn(const Cfg& c) {
    fracpseudo::sojourn::SojournParams s;
    s.beta = c.beta;
    s.k = c.k;
    s.parity = c.parity == "even" ? Parity::even : Parity::odd;
    s.t = c.t;
    s.validate();
    if (!(c.xmin > 0.0)) throw fracpseudo::domain_error("sojourn requires x > 0");

    GridSpec grid;
    grid.x_min = c.xmin;
    grid.x_max = c.xmax;
    grid.n = c.n;
    const std::vector<double> xs = grid.points();

    Artifact a;
    meta_common(a, "sojourn");
    a.add_str("route", c.route);
    if (c.route == "kernel") {
        a.add("beta", num(c.beta));
        a.add("k", num(c.k));
        a.add_str("parity", c.parity);
    }
    a.add("t", num(c.t));
    meta_grid(a, "x", grid);
    a.add("tol", num(c.tol));

    std::vector<double> vals(xs.size());
    fracpseudo::parallel_for(static_cast<long long>(xs.size()), [&](long long i) {
        const double x = xs[static_cast<std::size_t>(i)];
        double v;
        if (c.route == "half-closed")
            v = fracpseudo::sojourn::sojourn_half_closed(c.t, x);
        else if (s.parity == Parity::even)
            v = fracpseudo::sojourn::sojourn_even_density(s, x, c.tol);
        else
            v = fracpseudo::sojourn::sojourn_odd_density(s, x, c.tol);
        vals[static_cast<std::size_t>(i)] = v;
    });

    a.columns = {"x", "t", "value"};
    for (std::size_t i = 0; i < xs.size(); ++i)
        a.rows.push_back({num(xs[i]), num(c.t), num(vals[i])});
    emit(a, c.out, c.format);
}

// specfun: pointwise special-function values on an x grid.
void run_specfun(const Cfg& c, bool gamma_given) {
    GridSpec grid;
    grid.x_min = c.xmin;
    grid.x_max = c.xmax;
    grid.n = c.n;
    const std::vector<double> xs = grid.points();

    Artifact a;
    meta_common(a, "specfun");
    a.add_str("fn", c.fn);

    std::function<double(double)> eval;
    if (c.fn == "ml") {
        const fracpseudo::specfun::MLParams p{c.nu, c.mu};
        p.validate();
        a.add("nu", num(c.nu));
        a.add("mu", num(c.mu));
        eval = [p](double x) { return fracpseudo::specfun::mittag_leffler(p, x); };
    } else if (c.fn == "airy") {
        eval = [](double x) { return fracpseudo::specfun::airy_ai(x); };
    } else if (c.fn == "subordinator") {
        a.add("beta", num(c.beta));
        a.add("t", num(c.t));
        eval = [&c](double x) { return fracpseudo::specfun::subordinator_density(c.beta, x, c.t); };
    } else {
        if (!gamma_given || !(c.gamma > 0.0))
            throw fracpseudo::domain_error("specfun gamma-type requires --gamma > 0");
        a.add("gamma", num(c.gamma));
        a.add("t", num(c.t));
        eval = [&c](double x) { return fracpseudo::specfun::gamma_type_density(c.gamma, x, c.t); };
    }
    meta_grid(a, "x", grid);

    std::vector<double> vals(xs.size());
    fracpseudo::parallel_for(static_cast<long long>(xs.size()), [&](long long i) {
        vals[static_cast<std::size_t>(i)] = eval(xs[static_cast<std::size_t>(i)]);
    });

    a.columns = {"x", "value"};
    for (std::size_t i = 0; i < xs.size(); ++i)
        a.rows.push_back({num(xs[i]), num(vals[i])});
    emit(a, c.out, c.format);
}

void add_output_opts(CLI::App* sub, Cfg& c) {
    sub->add_option("--out", c.out, "output file path (stdout when omitted)");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "fracpseudo: signed fundamental solutions of fractional heat-type equations;\n"
        "densities, characteristic functions, grid operators, pseudo random walks,\n"
        "and sojourn laws as reproducible CSV/JSON artifacts"};
    app.require_subcommand(1);

    Cfg dc, cc, sc, vc, mc, rc, jc, fc;

    // density
    auto* density = app.add_subcommand("density", "fundamental solution on an x grid");
    auto* d_gamma = density->add_option("--gamma", dc.gamma, "order of the symmetric form (> 0)");
    auto* d_family =
        density->add_option("--family", dc.family, "asymmetric family: even, odd_pq, feller");
    density->add_option("--beta", dc.beta, "base exponent in (0,1)")->capture_default_str();
    density->add_option("--k", dc.k, "integer order parameter (>= 1)")->capture_default_str();
    density->add_option("--p", dc.p, "odd_pq right weight in [0,1]")->capture_default_str();
    density->add_option("--theta", dc.theta, "feller asymmetry, -beta < theta < beta")
        ->capture_default_str();
    density->add_option("--parity", dc.parity, "feller branch: even or odd")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    density->add_option("--route", dc.route, "inversion route: auto, cosine, series, ml, prob")
        ->check(CLI::IsMember({"auto", "cosine", "series", "ml", "prob"}))
        ->capture_default_str();
    density->add_option("--cap", dc.cap, "series route term cap")->capture_default_str();
    density->add_option("--t", dc.ts, "time points (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    density->add_option("--xmin", dc.xmin, "grid left end")->capture_default_str();
    density->add_option("--xmax", dc.xmax, "grid right end")->capture_default_str();
    density->add_option("--n", dc.n, "grid size")->capture_default_str();
    density->add_option("--tol", dc.tol, "target absolute tolerance")->capture_default_str();
    add_output_opts(density, dc);
    density->callback(
        [&dc, d_family, d_gamma] { run_density(dc, d_family->count() > 0, d_gamma->count() > 0); });

    // cf
    auto* cf = app.add_subcommand("cf", "limit or pre-limit characteristic function");
    cf->add_option("--family", cc.family, "family: even, odd_pq, feller")->required();
    cf->add_option("--beta", cc.beta, "base exponent in (0,1)")->capture_default_str();
    cf->add_option("--k", cc.k, "integer order parameter (>= 1)")->capture_default_str();
    cf->add_option("--p", cc.p, "odd_pq right weight in [0,1]")->capture_default_str();
    cf->add_option("--theta", cc.theta, "feller asymmetry")->capture_default_str();
    cf->add_option("--parity", cc.parity, "feller branch: even or odd")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    auto* cf_gamma =
        cf->add_option("--gamma", cc.gamma, "jump scale; selects the pre-limit walk CF");
    cf->add_option("--t", cc.t, "time")->capture_default_str();
    cc.xmin = -5.0;
    cc.xmax = 5.0;
    cc.n = 41;
    cf->add_option("--ximin", cc.xmin, "xi grid left end")->capture_default_str();
    cf->add_option("--ximax", cc.xmax, "xi grid right end")->capture_default_str();
    cf->add_option("--n", cc.n, "xi grid size")->capture_default_str();
    add_output_opts(cf, cc);
    cf->callback([&cc, cf_gamma] { run_cf(cc, cf_gamma->count() > 0); });

    // symbols
    auto* symbols = app.add_subcommand("symbols", "Fourier symbol of one operator");
    symbols
        ->add_option("--op", sc.op, "operator: weyl_plus, weyl_minus, riesz, rfrak, feller")
        ->check(CLI::IsMember({"weyl_plus", "weyl_minus", "riesz", "rfrak", "feller"}))
        ->required();
    auto* sy_gamma = symbols->add_option("--gamma", sc.gamma, "fractional order (> 0)");
    symbols->add_option("--theta", sc.theta, "feller asymmetry")->capture_default_str();
    symbols->add_option("--beta", sc.beta, "rfrak base exponent in (0,1)")->capture_default_str();
    symbols->add_option("--k", sc.k, "rfrak integer order parameter")->capture_default_str();
    symbols->add_option("--p", sc.p, "rfrak right weight in [0,1]")->capture_default_str();
    sc.xmin = -5.0;
    sc.xmax = 5.0;
    sc.n = 101;
    symbols->add_option("--ximin", sc.xmin, "xi grid left end")->capture_default_str();
    symbols->add_option("--ximax", sc.xmax, "xi grid right end")->capture_default_str();
    symbols->add_option("--n", sc.n, "xi grid size")->capture_default_str();
    add_output_opts(symbols, sc);
    symbols->callback([&sc, sy_gamma] { run_symbols(sc, sy_gamma->count() > 0); });

    // converge
    auto* converge =
        app.add_subcommand("converge", "walk CF sup error along decreasing jump scales");
    converge->add_option("--family", vc.family, "family: even, odd_pq, feller")->required();
    converge->add_option("--beta", vc.beta, "base exponent in (0,1)")->capture_default_str();
    converge->add_option("--k", vc.k, "integer order parameter (>= 1)")->capture_default_str();
    converge->add_option("--p", vc.p, "odd_pq right weight in [0,1]")->capture_default_str();
    converge->add_option("--theta", vc.theta, "feller asymmetry")->capture_default_str();
    converge->add_option("--parity", vc.parity, "feller branch: even or odd")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    converge->add_option("--gammas", vc.gammas, "decreasing jump scales (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    converge->add_option("--t", vc.t, "time")->capture_default_str();
    vc.xmin = -5.0;
    vc.xmax = 5.0;
    vc.n = 41;
    converge->add_option("--ximin", vc.xmin, "xi grid left end")->capture_default_str();
    converge->add_option("--ximax", vc.xmax, "xi grid right end")->capture_default_str();
    converge->add_option("--n", vc.n, "xi grid size")->capture_default_str();
    add_output_opts(converge, vc);
    converge->callback([&vc] { run_converge(vc); });

    // mc
    auto* mcmd = app.add_subcommand("mc", "Monte Carlo walk CF estimate");
    mcmd->add_option("--family", mc.family, "family: even, odd_pq, feller")->required();
    mcmd->add_option("--beta", mc.beta, "base exponent in (0,1)")->capture_default_str();
    mcmd->add_option("--k", mc.k, "integer order parameter (>= 1)")->capture_default_str();
    mcmd->add_option("--p", mc.p, "odd_pq right weight in [0,1]")->capture_default_str();
    mcmd->add_option("--theta", mc.theta, "feller asymmetry")->capture_default_str();
    mcmd->add_option("--parity", mc.parity, "feller branch: even or odd")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    mcmd->add_option("--gamma", mc.gamma, "jump scale (> 0)")->required();
    mcmd->add_option("--xi", mc.xis, "evaluation points (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    mcmd->add_option("--t", mc.t, "time")->capture_default_str();
    mcmd->add_option("--samples", mc.samples, "number of Monte Carlo samples")
        ->capture_default_str();
    mcmd->add_option("--seed", mc.seed, "base seed; row i uses seed + i")->capture_default_str();
    add_output_opts(mcmd, mc);
    mcmd->callback([&mc] { run_mc(mc); });

    // residual
    auto* residual = app.add_subcommand("residual", "PDE residual report on a grid");
    residual->add_option("--family", rc.family, "family: even, odd_pq, feller")->required();
    residual->add_option("--beta", rc.beta, "base exponent in (0,1)")->capture_default_str();
    residual->add_option("--k", rc.k, "integer order parameter (>= 1)")->capture_default_str();
    residual->add_option("--p", rc.p, "odd_pq right weight in [0,1]")->capture_default_str();
    residual->add_option("--theta", rc.theta, "feller asymmetry")->capture_default_str();
    residual->add_option("--parity", rc.parity, "feller branch: even or odd")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    residual->add_option("--t", rc.t, "center time")->capture_default_str();
    residual->add_option("--dt", rc.dt, "half width of the time difference")
        ->capture_default_str();
    rc.xmin = -8.0;
    rc.xmax = 8.0;
    rc.n = 1601;
    residual->add_option("--xmin", rc.xmin, "grid left end")->capture_default_str();
    residual->add_option("--xmax", rc.xmax, "grid right end")->capture_default_str();
    residual->add_option("--n", rc.n, "grid size")->capture_default_str();
    add_output_opts(residual, rc);
    residual->callback([&rc] { run_residual(rc); });

    // sojourn
    auto* sojourn = app.add_subcommand("sojourn", "sojourn-time density on a positive x grid");
    jc.parity = "even";
    sojourn->add_option("--parity", jc.parity, "underlying order parity")
        ->check(CLI::IsMember({"even", "odd"}))
        ->capture_default_str();
    sojourn->add_option("--beta", jc.beta, "subordination exponent in (0,1)")
        ->capture_default_str();
    sojourn->add_option("--k", jc.k, "integer order parameter (>= 1)")->capture_default_str();
    sojourn->add_option("--t", jc.t, "observation horizon")->capture_default_str();
    jc.route = "kernel";
    sojourn->add_option("--route", jc.route, "kernel quadrature or the explicit half form")
        ->check(CLI::IsMember({"kernel", "half-closed"}))
        ->capture_default_str();
    jc.xmin = 0.05;
    jc.xmax = 5.0;
    jc.n = 100;
    jc.tol = 1e-8;
    sojourn->add_option("--xmin", jc.xmin, "grid left end (> 0)")->capture_default_str();
    sojourn->add_option("--xmax", jc.xmax, "grid right end")->capture_default_str();
    sojourn->add_option("--n", jc.n, "grid size")->capture_default_str();
    sojourn->add_option("--tol", jc.tol, "target absolute tolerance")->capture_default_str();
    add_output_opts(sojourn, jc);
    sojourn->callback([&jc] { run_sojourn(jc); });

    // specfun
    auto* specfun = app.add_subcommand("specfun", "special function values on an x grid");
    specfun->add_option("--fn", fc.fn, "function: ml, airy, subordinator, gamma-type")
        ->check(CLI::IsMember({"ml", "airy", "subordinator", "gamma-type"}))
        ->required();
    specfun->add_option("--nu", fc.nu, "ml series exponent (> 0)")->capture_default_str();
    specfun->add_option("--mu", fc.mu, "ml offset parameter")->capture_default_str();
    specfun->add_option("--beta", fc.beta, "subordinator exponent in (0,1)")
        ->capture_default_str();
    auto* sf_gamma = specfun->add_option("--gamma", fc.gamma, "gamma-type order (> 0)");
    specfun->add_option("--t", fc.t, "time parameter")->capture_default_str();
    fc.xmin = -5.0;
    fc.xmax = 5.0;
    fc.n = 201;
    specfun->add_option("--xmin", fc.xmin, "grid left end")->capture_default_str();
    specfun->add_option("--xmax", fc.xmax, "grid right end")->capture_default_str();
    specfun->add_option("--n", fc.n, "grid size")->capture_default_str();
    add_output_opts(specfun, fc);
    specfun->callback([&fc, sf_gamma] { run_specfun(fc, sf_gamma->count() > 0); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const fracpseudo::computation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
