#include "cli.hpp"

#include <cmtrig/bounds.hpp>
#include <cmtrig/jet.hpp>
#include <cmtrig/monotonicity.hpp>
#include <cmtrig/numbers.hpp>
#include <cmtrig/report.hpp>
#include <cmtrig/series_id.hpp>
#include <cmtrig/suites.hpp>
#include <cmtrig/trig_deriv.hpp>
#include <cmtrig/trig_rational.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmtrig::cli
{

namespace
{

constexpr const char *precision_env = "CMTRIG_PRECISION";

struct RunConfig {
    long precision_bits = 128;
    int grid_density = 100;
    int max_order = 20;
    std::string format = "text";
    std::string output_path;
    bool serial = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long default_precision()
{
    const char *env = std::getenv(precision_env);
    if (env == nullptr || *env == '\0') {
        return 128;
    }
    try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string(env).size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception &) {
        throw UsageError(std::string(precision_env) + " must be an integer number of bits, got '" + env + "'");
    }
}

// Write the whole payload to path via a sibling temporary and a rename, so
// readers never see a partial report.
void write_atomically(const std::string &path, const std::string &payload)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        f << payload;
        f.flush();
        if (!f) {
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    fs::rename(tmp, target);
}

std::string scalar_output(const std::string &format, const Json &j, const std::string &text)
{
    if (format == "json") {
        return dump_canonical(j);
    }
    if (format == "csv") {
        std::string header, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
            header += (header.empty() ? "" : ",") + it.key();
            row += (row.empty() ? "" : ",") + (it->is_string() ? it->get<std::string>() : it->dump());
        }
        return header + "\n" + row + "\n";
    }
    return text + "\n";
}

std::string enclosure_text(const PrecReal &v)
{
    return v.mid_string(decimal_digits(v.precision())) + " +/- " + v.rad_string(3);
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    try {
        cfg.precision_bits = default_precision();
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    CLI::App app{"Certified derivatives, bounds and identities for g(x) = 1/(1 - cos x)", "cmtrig"};
    app.require_subcommand(1);
    // Global options are accepted after the subcommand too.
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("-p,--precision", cfg.precision_bits, "precision in bits (env CMTRIG_PRECISION)")
        ->check(CLI::Range(Precision::min_bits, 1L << 20));
    app.add_option("--grid-density", cfg.grid_density, "grid points per sweep")->check(CLI::Range(2, 1 << 20));
    app.add_option("--max-order", cfg.max_order, "highest derivative order for g sweeps")->check(CLI::Range(1, 64));
    app.add_option("-f,--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("-o,--output", cfg.output_path, "write the result to this file instead of stdout");
    app.add_flag("--serial", cfg.serial, "evaluate grids on one thread");

    // numbers
    auto *numbers = app.add_subcommand("numbers", "exact Bernoulli and Euler numbers");
    numbers->require_subcommand(1);
    int number_n = 0;
    auto *bern = numbers->add_subcommand("bernoulli", "B_n with B_1 = -1/2");
    bern->add_option("--n", number_n, "index")->required()->check(CLI::NonNegativeNumber);
    auto *eul = numbers->add_subcommand("euler", "E_n, 1/cosh t = sum E_n t^n/n!");
    eul->add_option("--n", number_n, "index")->required()->check(CLI::NonNegativeNumber);

    // deriv
    auto *deriv = app.add_subcommand("deriv", "enclosure of g^(n)(x)");
    int deriv_n = 0;
    std::string deriv_x;
    std::string method = "series";
    std::string fn_name = "g";
    deriv->add_option("--n", deriv_n, "derivative order")->required()->check(CLI::Range(0, 64));
    deriv->add_option("--x", deriv_x, "point: pi, pi/2, 3pi/4, 2/3 pi, p/q or a decimal literal")->required();
    deriv->add_option("--method", method, "evaluation route")->check(CLI::IsMember({"series", "symbolic", "jet"}));
    deriv->add_option("--fn", fn_name, "function for --method jet (g, u, h1, h2, H, csc, sin_over_1mc)");

    // bounds
    auto *bounds = app.add_subcommand("bounds", "lambda_n (even n) or mu_n (odd n)");
    int bounds_n = 0;
    bounds->add_option("--n", bounds_n, "order")->required()->check(CLI::NonNegativeNumber);

    // verify
    auto *verify = app.add_subcommand("verify", "run verification suites");
    verify->require_subcommand(1);
    int subadd_n = 0;
    auto *subadd = verify->add_subcommand("subadd", "sub/superadditivity sweep on the simplex");
    subadd->add_option("--n", subadd_n, "order")->required()->check(CLI::Range(0, 64));
    auto *monotone = verify->add_subcommand("monotone", "sign-pattern sweep of one function");
    std::string monotone_fn;
    monotone->add_option("--fn", monotone_fn, "g, u, h1, h2, H, csc or sin_over_1mc")->required();
    auto *identity = verify->add_subcommand("identity", "series identities");
    std::string which;
    identity->add_option("--which", which, "identity")->required()->check(CLI::IsMember({"h", "lampret", "kolbig", "pi"}));
    auto *zeros = verify->add_subcommand("zeros", "exact zero classification of g^(n)");
    auto *all = verify->add_subcommand("all", "every suite, one consolidated report");

    // pi
    auto *pi_cmd = app.add_subcommand("pi", "enclosure of pi from the (a_k + b_k)/2^k series");
    int pi_terms = 60;
    pi_cmd->add_option("--terms", pi_terms, "number of terms")->check(CLI::Range(1, 1 << 20));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        const Precision prec(cfg.precision_bits);
        const auto wp = prec.working_bits();
        std::string payload;
        int status = ok;

        if (*numbers) {
            const bool is_bern = bern->parsed();
            const std::string value = is_bern ? to_string(bernoulli(number_n)) : to_string(euler(number_n));
            payload = scalar_output(cfg.format, Json{{"kind", is_bern ? "bernoulli" : "euler"}, {"n", number_n}, {"value", value}},
                                    value);
        } else if (*deriv) {
            const Angle x = Angle::parse(deriv_x, wp);
            const FunctionId fn = parse_function_id(fn_name);
            if (fn != FunctionId::g && method != "jet") {
                throw std::invalid_argument("--fn other than g needs --method jet");
            }
            PrecReal v(wp);
            if (method == "series") {
                v = g_deriv(deriv_n, x, prec);
            } else if (method == "symbolic") {
                v = eval_trig_rational(g_deriv_exact(deriv_n), x, prec);
            } else {
                const Jet j = jet_of(fn, x, deriv_n, prec);
                if (j.degraded()) {
                    err << "warning: jet coefficients lost accuracy (relative radius " << j.max_relative_radius()
                        << ")\n";
                }
                v = j.derivative(deriv_n);
            }
            Json j = to_json(v);
            j["n"] = deriv_n;
            j["x"] = x.to_string(decimal_digits(wp));
            j["method"] = method;
            j["fn"] = to_string(fn);
            j["contains_zero"] = v.contains_zero();
            payload = scalar_output(cfg.format, j, enclosure_text(v));
        } else if (*bounds) {
            const bool even = bounds_n % 2 == 0;
            const std::string value = even ? to_string(lambda_lower(bounds_n)) : to_string(mu_lower(bounds_n));
            payload = scalar_output(cfg.format, Json{{"bound", even ? "lambda" : "mu"}, {"n", bounds_n}, {"value", value}},
                                    value);
        } else if (*pi_cmd) {
            const SeriesEval s = pi_series(pi_terms, prec);
            Json j = to_json(s);
            j["terms"] = pi_terms;
            payload = scalar_output(cfg.format, j, enclosure_text(s.value));
        } else if (*verify) {
            SuiteOptions opt;
            opt.prec = prec;
            opt.grid_density = cfg.grid_density;
            opt.max_order = cfg.max_order;
            opt.exec = cfg.serial ? Execution::serial : Execution::parallel;
            std::vector<GridReport> reports;
            if (*subadd) {
                reports.push_back(verify_simplex(subadd_n, opt.grid_density, prec, opt.exec));
            } else if (*monotone) {
                reports = monotone_suite(parse_function_id(monotone_fn), opt);
            } else if (*identity) {
                reports.push_back(identity_suite(which, prec));
            } else if (*zeros) {
                reports.push_back(zero_classification(prec, opt.max_order));
            } else if (*all) {
                reports = run_all(opt);
            }
            payload = render(reports, parse_output_format(cfg.format));
            status = exit_status(reports);
        }

        if (cfg.output_path.empty()) {
            out << payload;
        } else {
            write_atomically(cfg.output_path, payload);
        }
        return status;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return domain;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return domain;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return failed;
    }
}

} // namespace cmtrig::cli
