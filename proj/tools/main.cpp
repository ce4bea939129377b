#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsums/convergence.hpp"
#include "rsums/exact.hpp"
#include "rsums/polys.hpp"
#include "rsums/renewal.hpp"
#include "rsums/series.hpp"
#include "rsums/triangles.hpp"

namespace {

using nlohmann::json;
using namespace rsums;

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitUsage = 2;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

TriangleKind parse_kind(const std::string& s) {
    if (s == "pascal") return TriangleKind::pascal;
    if (s == "eulerian") return TriangleKind::eulerian;
    throw std::invalid_argument("unknown triangle kind '" + s + "' (pascal|eulerian)");
}

IdentityKind parse_identity(const std::string& s) {
    if (s == "column") return IdentityKind::column;
    if (s == "diagonal") return IdentityKind::diagonal;
    if (s == "alternating") return IdentityKind::alternating;
    throw std::invalid_argument("unknown identity '" + s + "' (column|diagonal|alternating)");
}

Family make_family(const std::string& name, const std::optional<std::string>& t,
                   const std::optional<std::string>& h) {
    auto need_t = [&]() -> ExactRational {
        if (!t) throw std::invalid_argument("family '" + name + "' needs --t");
        return ExactRational::parse(*t);
    };
    if (name == "binomial") return Family::binomial();
    if (name == "eulerian") return Family::eulerian();
    if (name == "bernstein") return Family::bernstein(need_t());
    if (name == "hbernstein") {
        if (!h) throw std::invalid_argument("family 'hbernstein' needs --t and --h");
        return Family::h_bernstein(need_t(), ExactRational::parse(*h));
    }
    if (name == "bspline") return Family::bspline(need_t());
    throw std::invalid_argument("unknown family '" + name +
                                "' (binomial|eulerian|bernstein|hbernstein|bspline)");
}

std::vector<ExactRational> parse_contrast(const std::string& csv) {
    std::vector<ExactRational> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(ExactRational::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(ExactRational::parse(cur));
    return out;
}

InterarrivalSpec parse_law(const std::string& text) {
    std::string s = text;
    unsigned shifts = 0;
    const std::string shift_prefix = "shift1:";
    while (s.rfind(shift_prefix, 0) == 0) {
        ++shifts;
        s = s.substr(shift_prefix.size());
    }
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("law '" + text + "' needs parameters after ':'");
    const std::string kind = s.substr(0, colon);
    const std::string params = s.substr(colon + 1);
    auto comma = params.find(',');
    auto to_d = [](const std::string& v) {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("bad numeric parameter '" + v + "'");
        return d;
    };
    InterarrivalSpec spec;
    if (kind == "uniform") {
        if (comma == std::string::npos)
            throw std::invalid_argument("uniform law needs 'uniform:a,b'");
        spec = InterarrivalSpec::uniform(to_d(params.substr(0, comma)),
                                         to_d(params.substr(comma + 1)));
    } else if (kind == "bernoulli") {
        spec = InterarrivalSpec::bernoulli(to_d(params));
    } else if (kind == "betabern") {
        if (comma == std::string::npos)
            throw std::invalid_argument("beta-mixed law needs 'betabern:a,b'");
        spec = InterarrivalSpec::beta_mixed_bernoulli(to_d(params.substr(0, comma)),
                                                      to_d(params.substr(comma + 1)));
    } else {
        throw std::invalid_argument("unknown law '" + kind +
                                    "' (uniform:a,b|bernoulli:p|shift1:...|betabern:a,b)");
    }
    for (unsigned i = 0; i < shifts; ++i) spec = spec.shifted_plus_one();
    return spec;
}

json series_record(const std::string& family, const std::string& identity, json params,
                   const SeriesResult& r, std::size_t digits) {
    return json{{"family", family},
                {"identity", identity},
                {"params", std::move(params)},
                {"value", r.value.to_decimal_string(digits)},
                {"value_exact", r.value.to_string()},
                {"truncation_bound", r.truncation_bound.to_sci_string(3)},
                {"terms_used", r.terms_used}};
}

void print_series_csv(const SeriesResult& r, std::size_t digits) {
    std::cout << r.value.to_decimal_string(digits) << ','
              << r.truncation_bound.to_sci_string(3) << ',' << r.terms_used << '\n';
}

struct SumArgs {
    std::string family;
    std::string identity;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> n;
    std::optional<std::string> t;
    std::optional<std::string> h;
    std::string eps = "1e-12";
    std::size_t digits = 15;
    std::string format = "csv";
};

int run_sum(const SumArgs& a) {
    const Family fam = make_family(a.family, a.t, a.h);
    const IdentityKind id = parse_identity(a.identity);
    const ExactRational eps = ExactRational::parse(a.eps);
    json params;
    if (a.t) params["t"] = *a.t;
    if (a.h) params["h"] = *a.h;

    if (id == IdentityKind::diagonal) {
        if (!a.n) throw std::invalid_argument("sum --identity diagonal needs --n");
        params["n"] = *a.n;
        ExactRational v = diagonal_sum(fam, *a.n);
        if (a.format == "json") {
            json rec{{"family", a.family}, {"identity", a.identity}, {"params", params},
                     {"value", v.to_decimal_string(a.digits)}, {"value_exact", v.to_string()},
                     {"truncation_bound", "0"}, {"terms_used", 0}};
            std::cout << rec.dump() << '\n';
        } else {
            std::cout << v.to_string() << '\n';
        }
        return kExitOk;
    }

    SeriesResult r;
    if (fam.kind() == FamilyKind::bspline) {
        r = id == IdentityKind::column ? bspline_column_sum(fam.t(), eps)
                                       : bspline_alternating_sum(fam.t(), eps);
    } else {
        if (!a.k) throw std::invalid_argument("sum --identity column|alternating needs --k");
        params["k"] = *a.k;
        r = id == IdentityKind::column ? column_sum(fam, *a.k, eps)
                                       : alternating_sum(fam, *a.k, eps);
    }
    if (a.format == "json")
        std::cout << series_record(a.family, a.identity, params, r, a.digits).dump() << '\n';
    else
        print_series_csv(r, a.digits);
    return kExitOk;
}

struct ClosedArgs {
    std::string family;
    std::string identity;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> n;
    std::optional<std::string> t;
    std::optional<std::string> h;
    std::string eps = "1e-12";
    std::size_t digits = 15;
    std::string format = "csv";
};

int run_closed(const ClosedArgs& a) {
    const Family fam = make_family(a.family, a.t, a.h);
    const IdentityKind id = parse_identity(a.identity);
    const ExactRational eps = ExactRational::parse(a.eps);
    json params;
    if (a.t) params["t"] = *a.t;
    if (a.h) params["h"] = *a.h;

    // The h-Bernstein diagonal without --n is the n -> infinity limit value.
    if (fam.kind() == FamilyKind::h_bernstein && id == IdentityKind::diagonal && !a.n) {
        SeriesResult r = hbernstein_diagonal_limit(fam.t(), fam.h(), eps);
        if (a.format == "json")
            std::cout << series_record(a.family, "diagonal-limit", params, r, a.digits).dump()
                      << '\n';
        else
            print_series_csv(r, a.digits);
        return kExitOk;
    }

    std::size_t index = 0;
    if (id == IdentityKind::diagonal) {
        if (!a.n) throw std::invalid_argument("closed --identity diagonal needs --n");
        index = *a.n;
        params["n"] = *a.n;
    } else {
        if (!a.k) throw std::invalid_argument("closed --identity column|alternating needs --k");
        index = *a.k;
        params["k"] = *a.k;
    }
    ClosedFormResult r = closed_form(fam, id, index, eps);
    if (a.format == "json") {
        json rec{{"family", a.family},      {"identity", a.identity},
                 {"params", params},        {"value", r.value.to_decimal_string(a.digits)},
                 {"value_exact", r.value.to_string()}, {"exact", r.exact},
                 {"truncation_bound", r.exact ? "0" : r.truncation_bound.to_sci_string(3)},
                 {"terms_used", r.terms_used}};
        std::cout << rec.dump() << '\n';
    } else if (r.exact) {
        std::cout << r.value.to_string() << '\n';
    } else {
        std::cout << r.value.to_decimal_string(a.digits) << ','
                  << r.truncation_bound.to_sci_string(3) << ',' << r.terms_used << '\n';
    }
    return kExitOk;
}

std::uint64_t seed_from_env_or(std::uint64_t fallback) {
    if (const char* env = std::getenv("RENEWAL_SUMS_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return static_cast<std::uint64_t>(v);
        throw std::invalid_argument("RENEWAL_SUMS_SEED is not a decimal 64-bit integer");
    }
    return fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact and simulated column, short-diagonal, alternating and contrast sums of "
        "normalized binomial, Eulerian, Bernstein, beta-binomial and uniform B-spline "
        "triangles, with renewal-process Monte Carlo cross-checks."};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print help and exit");

    // triangle
    std::string tri_kind = "pascal";
    std::size_t tri_levels = 9;
    bool tri_normalized = false;
    std::string tri_format = "csv";
    auto* tri = app.add_subcommand("triangle", "Print triangle rows (exact CSV/JSON)");
    tri->add_option("--kind", tri_kind, "pascal|eulerian")->required();
    tri->add_option("--levels", tri_levels, "number of rows (levels 0..N-1)")->required();
    tri->add_flag("--normalized", tri_normalized, "divide row n by 2^n (pascal) or n! (eulerian)");
    tri->add_option("--format", tri_format, "csv|json");

    // parity
    std::string par_kind = "pascal";
    std::size_t par_levels = 128;
    std::string par_out;
    auto* par = app.add_subcommand("parity", "Write the odd/even parity raster as plain PBM");
    par->add_option("--kind", par_kind, "pascal|eulerian")->required();
    par->add_option("--levels", par_levels, "number of rows")->required();
    par->add_option("--out", par_out, "output .pbm path")->required();

    // sum
    SumArgs sum_args;
    auto* sum = app.add_subcommand(
        "sum",
        "Evaluate a family sum.\n"
        "  family x identity -> parameters:\n"
        "    binomial    column|alternating (--k >= 0), diagonal (--n >= 0)\n"
        "    eulerian    column|alternating (--k >= 0), diagonal (--n >= 0)\n"
        "    bernstein   column|alternating (--k, --t in (0,1)), diagonal (--n, --t in (0,1))\n"
        "    hbernstein  column|alternating (--k, 0 < --h < --t < 1), diagonal (--n, --t in (0,1), --h > 0)\n"
        "    bspline     column|alternating (--t >= 0 real argument), diagonal (--n, --t > 0 offset)\n"
        "  Rational flags accept 'p/q' or exact decimal strings.");
    sum->add_option("--family", sum_args.family)->required();
    sum->add_option("--identity", sum_args.identity)->required();
    sum->add_option("--k", sum_args.k);
    sum->add_option("--n", sum_args.n);
    sum->add_option("--t", sum_args.t);
    sum->add_option("--h", sum_args.h);
    sum->add_option("--eps", sum_args.eps, "truncation tolerance (default 1e-12)");
    sum->add_option("--digits", sum_args.digits, "decimal digits to print (default 15)");
    sum->add_option("--format", sum_args.format, "csv|json");

    // closed
    ClosedArgs closed_args;
    auto* closed = app.add_subcommand(
        "closed",
        "Closed-form identity value.\n"
        "  binomial:   column 2 | diagonal 2/3+(1/3)(-1/2)^n | alternating (-1)^k 2/3^(k+1)\n"
        "  bernstein:  column 1/t | diagonal (1-(-t)^(n+1))/(1+t) | alternating (-t)^k/(2-t)^(k+1)\n"
        "  hbernstein: column (1-h)/(t-h) (0<h<t) | diagonal/alternating via beta-moment series\n"
        "              (diagonal without --n prints the n->infinity limit E[1/(1+p)])\n"
        "  eulerian and bspline families have no closed form.");
    closed->add_option("--family", closed_args.family)->required();
    closed->add_option("--identity", closed_args.identity)->required();
    closed->add_option("--k", closed_args.k);
    closed->add_option("--n", closed_args.n);
    closed->add_option("--t", closed_args.t);
    closed->add_option("--h", closed_args.h);
    closed->add_option("--eps", closed_args.eps);
    closed->add_option("--digits", closed_args.digits);
    closed->add_option("--format", closed_args.format, "csv|json");

    // simulate
    std::string sim_law;
    double sim_x = 0, sim_delta = 1;
    std::uint64_t sim_paths = 100000;
    std::optional<std::uint64_t> sim_seed;
    std::optional<unsigned> sim_delay;
    std::optional<std::string> sim_contrast;
    std::string sim_format = "csv";
    auto* sim = app.add_subcommand(
        "simulate",
        "Monte Carlo renewal measure U(x, x+delta] (mean arrivals per path).\n"
        "  --law uniform:a,b | bernoulli:p | shift1:<law> | betabern:a,b\n"
        "  --contrast c0,c1,... weights arrival n by c[n mod m] (entries must sum to 0)");
    sim->add_option("--law", sim_law)->required();
    sim->add_option("--x", sim_x, "interval start (default 0)");
    sim->add_option("--delta", sim_delta, "interval length (default 1)");
    sim->add_option("--paths", sim_paths, "number of independent paths");
    sim->add_option("--seed", sim_seed, "64-bit seed (default RENEWAL_SUMS_SEED or 0)");
    sim->add_option("--delay", sim_delay, "delayed start: S_0 = sum of J standard uniforms");
    sim->add_option("--contrast", sim_contrast, "contrast weights, e.g. 1,-1");
    sim->add_option("--format", sim_format, "csv|json");

    // contrast (series)
    std::string con_c, con_family = "eulerian";
    std::uint64_t con_k = 0;
    std::string con_eps = "1e-12";
    std::size_t con_digits = 15;
    std::string con_format = "csv";
    auto* con = app.add_subcommand(
        "contrast", "Contrast-weighted column series sum_n c[n mod m] term_n (exact)");
    con->add_option("--c", con_c, "contrast entries, e.g. 1,-1 (exact rationals)")->required();
    con->add_option("--family", con_family, "eulerian|binomial");
    con->add_option("--k", con_k, "column index")->required();
    con->add_option("--eps", con_eps);
    con->add_option("--digits", con_digits);
    con->add_option("--format", con_format, "csv|json");

    // converge
    std::size_t conv_kmax = 5, conv_digits = 6;
    std::optional<std::string> conv_alphas;
    std::string conv_format = "table";
    auto* conv = app.add_subcommand(
        "converge", "Eulerian column-sum gap table (sum_n <n,k>/n! - 2) and decay report");
    conv->add_option("--kmax", conv_kmax)->required();
    conv->add_option("--digits", conv_digits, "rendering precision (>= 6)");
    conv->add_option("--alpha-list", conv_alphas, "rate-check exponents, e.g. 1,2,4,8");
    conv->add_option("--format", conv_format, "table|csv");

    for (auto* sub : app.get_subcommands({}))
        sub->set_help_flag("--help", "Print help and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (tri->parsed()) {
            const TriangleKind kind = parse_kind(tri_kind);
            if (tri_format == "json") {
                Triangle t(kind);
                json rows = json::array();
                for (std::size_t n = 0; n < tri_levels; ++n) {
                    json row = json::array();
                    if (tri_normalized)
                        for (const auto& e : normalized_row(t, n)) row.push_back(e.to_string());
                    else
                        for (const auto& e : t.row(n)) row.push_back(e.to_string());
                    rows.push_back(std::move(row));
                }
                std::cout << json{{"kind", tri_kind},
                                  {"normalized", tri_normalized},
                                  {"rows", rows}}
                                 .dump()
                          << '\n';
            } else {
                write_triangle_csv(std::cout, kind, tri_levels, tri_normalized);
            }
            return kExitOk;
        }
        if (par->parsed()) {
            ParityBitmap bm = parity_bitmap(parse_kind(par_kind), par_levels);
            std::ofstream out(par_out);
            if (!out) throw std::runtime_error("cannot open '" + par_out + "' for writing");
            bm.write_pbm(out);
            return kExitOk;
        }
        if (sum->parsed()) return run_sum(sum_args);
        if (closed->parsed()) return run_closed(closed_args);
        if (sim->parsed()) {
            InterarrivalSpec spec = parse_law(sim_law);
            if (sim_delay) spec = spec.with_delay_sum_of_uniforms(*sim_delay);
            const std::uint64_t seed = sim_seed ? *sim_seed : seed_from_env_or(0);
            RenewalEstimate est;
            if (sim_contrast) {
                est = simulate_contrast_sum(spec, parse_contrast(*sim_contrast), sim_x,
                                            sim_delta, sim_paths, seed);
            } else {
                est = simulate_count(spec, sim_x, sim_delta, sim_paths, seed);
            }
            if (sim_format == "json") {
                json rec{{"law", spec.name()},
                         {"x", est.x},
                         {"delta", est.delta},
                         {"paths", est.paths},
                         {"seed", seed},
                         {"mean_count", fmt_double(est.mean_count)},
                         {"std_error", fmt_double(est.std_error)}};
                if (sim_contrast) rec["contrast"] = *sim_contrast;
                std::cout << rec.dump() << '\n';
            } else {
                std::cout << fmt_double(est.mean_count) << ',' << fmt_double(est.std_error)
                          << ',' << est.paths << '\n';
            }
            return kExitOk;
        }
        if (con->parsed()) {
            if (con_family != "binomial" && con_family != "eulerian")
                throw std::invalid_argument("contrast --family must be eulerian or binomial");
            Family fam = con_family == "binomial" ? Family::binomial() : Family::eulerian();
            SeriesResult r = contrast_sum(fam, parse_contrast(con_c), con_k,
                                          ExactRational::parse(con_eps));
            if (con_format == "json") {
                json params{{"c", con_c}, {"k", con_k}};
                std::cout << series_record(con_family, "contrast", params, r, con_digits).dump()
                          << '\n';
            } else {
                print_series_csv(r, con_digits);
            }
            return kExitOk;
        }
        if (conv->parsed()) {
            auto table = eulerian_gap_table(conv_kmax, conv_digits);
            if (conv_format == "csv") {
                std::cout << "k,gap,truncation_bound,terms_used\n";
                for (const auto& rec : table)
                    std::cout << rec.k << ',' << rec.gap.to_sci_string(conv_digits) << ','
                              << rec.truncation_bound.to_sci_string(3) << ',' << rec.terms_used
                              << '\n';
            } else {
                // mirrors the printed table: k row, then the gap row
                std::printf("%-6s", "k");
                for (const auto& rec : table) std::printf("%14zu", rec.k);
                std::printf("\n%-6s", "gap");
                for (const auto& rec : table) {
                    const std::string s = rec.k == 0 ? rec.gap.to_decimal_string(5)
                                                     : rec.gap.to_sci_string(2);
                    std::printf("%14s", s.c_str());
                }
                std::printf("\n");
            }
            if (conv_alphas) {
                for (const auto& a : parse_contrast(*conv_alphas)) {
                    RateCheckReport rep = rate_check(a.to_double(), 0, conv_kmax);
                    if (rep.insufficient_range) {
                        std::printf("alpha=%s insufficient range (need k > %zu)\n",
                                    a.to_string().c_str(), kRateCheckBurnIn);
                        continue;
                    }
                    std::printf("alpha=%s pointwise_nonincreasing=%s envelope_decays=%s "
                                "fitted_exponent=%.1f violations=",
                                a.to_string().c_str(),
                                rep.pointwise_nonincreasing ? "true" : "false",
                                rep.envelope_nonincreasing ? "true" : "false",
                                rep.fitted_exponent);
                    for (std::size_t i = 0; i < rep.violations.size(); ++i)
                        std::printf("%s%zu", i ? "," : "", rep.violations[i]);
                    if (rep.violations.empty()) std::printf("none");
                    std::printf("\n");
                }
            }
            return kExitOk;
        }
    } catch (const ToleranceError& e) {
        std::cerr << "tolerance failure: " << e.what() << '\n';
        return kExitTolerance;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTolerance;
    }
    return kExitOk;
}
