#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "augnewton/report.hpp"

using namespace augnewton;

namespace {

// Exit codes: 0 all checks pass, 1 a mathematical verification failed,
// 2 usage or input-syntax error.
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

int cmd_newton(const std::string& expr, const std::string& vars_csv, Format format) {
    std::optional<LaurentPoly> p;
    try {
        VariableList vars = VariableList::split(vars_csv);
        p = parse_poly(expr, vars);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    LatticePolytope poly = newton_polytope(*p);  // domain errors -> exit 1 in main
    Fingerprint fp = fingerprint_of(poly);
    std::cout << report_newton(poly, fp, format);
    return kOk;
}

int cmd_alpha(unsigned max, bool check, Format format) {
    auto rows = alpha_table(max);
    std::optional<std::string> status;
    bool failed = false;
    if (check) {
        status = "ok";
        const auto& ref = alpha_reference_sequence();
        for (const auto& r : rows) {
            if (r.n <= ref.size() && r.monomials != ref[r.n - 1]) {
                status = "monomial count mismatch at n=" + std::to_string(r.n);
                failed = true;
                break;
            }
            if (r.n >= 2) {
                const long long n = r.n;
                if (r.fp.intrinsic_dim != 2 || r.fp.total != n * (n + 1) / 2 + 1 ||
                    r.fp.boundary != 2 * n || r.fp.interior != (n * n - 3 * n) / 2 + 1 ||
                    r.fp.normalized_volume != n * (n - 1)) {
                    status = "fingerprint formula mismatch at n=" + std::to_string(r.n);
                    failed = true;
                    break;
                }
            }
        }
    }
    std::cout << report_alpha(rows, format, status);
    return failed ? kVerificationFailure : kOk;
}

int cmd_orbit(const std::string& scenario_name, unsigned max, Format format) {
    std::optional<Scenario> s = scenario_by_name(scenario_name);
    if (!s) {
        std::cerr << "error: unknown scenario '" << scenario_name << "'; known:";
        for (const auto& n : scenario_names())
            std::cerr << " " << n;
        std::cerr << "\n";
        return kUsageError;
    }
    auto rows = orbit_table(*s, max);  // VerificationError -> exit 1 in main
    Verdict verdict = distinctness_verdict(rows);
    std::cout << report_orbit(s->name, rows, verdict, format);
    return verdict.distinct ? kOk : kVerificationFailure;
}

int cmd_torus(unsigned n, std::optional<unsigned> i, Format format) {
    if (n < 3 || n % 2 == 0) {
        std::cerr << "error: --n must be an odd integer >= 3\n";
        return kUsageError;
    }
    if (i && (*i < 1 || *i > n)) {
        std::cerr << "error: --i must lie in 1.." << n << "\n";
        return kUsageError;
    }
    std::vector<TorusReportRow> rows;
    bool ok = true;
    for (unsigned idx = i ? *i : 1; idx <= (i ? *i : n); ++idx) {
        TorusReportRow row{idx, 0, false, 0, false};
        try {
            TorusInstance t = torus_value(n, idx);
            row.monomials = t.value.monomial_count();
            row.inverse_ok = (t.s * t.s_inv).is_identity();
            BigInt det = det_bareiss(t.s);
            row.det_abs = static_cast<long long>(det < 0 ? -det : det);
            row.simplex = torus_simplex_check(t);
        } catch (const VerificationError&) {
            // construction check failed; row stays marked false
        }
        if (!(row.simplex && row.inverse_ok && row.det_abs == 1 && row.monomials == n))
            ok = false;
        rows.push_back(row);
    }
    std::cout << report_torus(n, rows, ok, format);
    return ok ? kOk : kVerificationFailure;
}

int cmd_selftest(Format format) {
    auto results = run_acceptance_suite();
    std::cout << report_selftest(results, format);
    return all_passed(results) ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton polytope fingerprints for augmented Reeb chord values"};
    app.require_subcommand(1);

    std::string format_name = "text";
    app.add_option("--format", format_name, "output format: text, json or csv")
        ->capture_default_str();

    auto* newton = app.add_subcommand("newton", "fingerprint of one polynomial");
    std::string expr, vars_csv;
    newton->add_option("--expr", expr, "polynomial text")->required();
    newton->add_option("--vars", vars_csv, "comma-separated variable order")->required();
    newton->fallthrough();

    auto* alpha = app.add_subcommand("alpha", "monomial counts of the model orbit family");
    unsigned alpha_max = 40;
    bool alpha_check = false;
    alpha->add_option("--max", alpha_max, "compute n = 1..max (max 64)")
        ->capture_default_str();
    alpha->add_flag("--check", alpha_check, "compare against embedded reference data");
    alpha->fallthrough();

    auto* orbit = app.add_subcommand("orbit", "augmentation orbit table and verdict");
    std::string scenario_name;
    unsigned orbit_max = 20;
    orbit->add_option("--scenario", scenario_name, "beta11, lambda1 or -nonorientable alias")
        ->required();
    orbit->add_option("--max", orbit_max, "number of orbit steps")->capture_default_str();
    orbit->fallthrough();

    auto* torus = app.add_subcommand("torus", "torus-knot simplex certificates");
    unsigned torus_n = 0;
    std::optional<unsigned> torus_i;
    torus->add_option("--n", torus_n, "odd braid exponent >= 3")->required();
    torus->add_option("--i", torus_i, "single pinch index (default: all)");
    torus->fallthrough();

    auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
    selftest->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    auto format = parse_format(format_name);
    if (!format) {
        std::cerr << "error: unknown format '" << format_name << "'\n";
        return kUsageError;
    }

    try {
        if (newton->parsed())
            return cmd_newton(expr, vars_csv, *format);
        if (alpha->parsed()) {
            if (alpha_max < 1 || alpha_max > 64) {
                std::cerr << "error: --max must lie in 1..64\n";
                return kUsageError;
            }
            return cmd_alpha(alpha_max, alpha_check, *format);
        }
        if (orbit->parsed()) {
            if (orbit_max < 1) {
                std::cerr << "error: --max must be positive\n";
                return kUsageError;
            }
            return cmd_orbit(scenario_name, orbit_max, *format);
        }
        if (torus->parsed())
            return cmd_torus(torus_n, torus_i, *format);
        if (selftest->parsed())
            return cmd_selftest(*format);
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const UnsupportedDimension& e) {
        std::cerr << "dimension policy: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kUsageError;
}
