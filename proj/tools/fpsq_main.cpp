// fpsq: exact formal-power-series toolkit over Q with a harmonic-number
// identity verifier.
//
// Subcommands:
//   verify-main    check H(n) == (1/m) sum_{k=1..n} (-1)^(k+1)/k C(mk,k) C(n+(m-1)k, n-k)
//                  as exact rationals over a grid of (m, n)
//   verify-series  check the four intermediate power-series identities to a degree
//   verify-poly    check the identity with m as an indeterminate (polynomial in m)
//   dump           print coefficients of one of the named series
//
// Exit codes: 0 all instances pass, 1 a verification instance failed,
// 2 usage error.

#include "fpsq/combinatorics.hpp"
#include "fpsq/identities.hpp"
#include "fpsq/lagrange.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fpsq;

struct GridSpec {
    std::vector<int> m_values;
    int n_max = 0;
    int degree = 0;
};

constexpr const char* kDefaultMainMs = "-7,-5,-4,-3,-2,-1,1,2,3,4,5,6,7,8,10,15";
constexpr const char* kDefaultSeriesMs = "-3,-2,-1,1,2,3,4,5";

std::string fmt_m(int m) { return m < 0 ? "m=" + std::to_string(m) : "m=+" + std::to_string(m); }

// Parses a comma-separated list of nonzero integers; sorted ascending, deduped.
std::optional<std::vector<int>> parse_m_list(const std::string& text, std::string& err)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        int value = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            err = "invalid m value: \"" + token + "\"";
            return std::nullopt;
        }
        if (value == 0) {
            err = "invalid m value: 0 (m must be nonzero)";
            return std::nullopt;
        }
        out.push_back(value);
    }
    if (out.empty()) {
        err = "empty m list";
        return std::nullopt;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int usage_error(const std::string& msg)
{
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int run_verify_main(const GridSpec& grid, bool json)
{
    std::vector<IdentityReport> all;
    std::ostringstream text;
    text << "Verifying H(n) == (1/m) * sum_{k=1..n} (-1)^(k+1)/k * C(mk,k) * C(n+(m-1)k, n-k)\n\n";

    bool ok = true;
    int failures = 0;
    for (int m : grid.m_values) {
        auto reports = verify_main(m, grid.n_max);
        int m_failures = 0;
        const IdentityReport* first_fail = nullptr;
        for (const auto& r : reports) {
            if (!r.pass) {
                ++m_failures;
                if (!first_fail)
                    first_fail = &r;
            }
        }
        if (m_failures == 0) {
            text << "  " << fmt_m(m) << ": all n in 1.." << grid.n_max << " verified  OK\n";
        } else {
            ok = false;
            failures += m_failures;
            text << "  " << fmt_m(m) << ": " << m_failures << " of " << grid.n_max
                 << " FAILED (first at n=" << first_fail->n.value_or(0) << ": " << first_fail->lhs
                 << " != " << first_fail->rhs << ")\n";
        }
        for (auto& r : reports)
            all.push_back(std::move(r));
    }

    if (ok)
        text << "\nAll tests passed.\n";
    else
        text << "\nFAILED: " << failures << " of " << all.size() << " instances.\n";

    sort_reports(all);
    if (json)
        std::cout << reports_json(all) << "\n";
    else
        std::cout << text.str();
    return ok ? 0 : 1;
}

int run_verify_series(const GridSpec& grid, bool json)
{
    struct Check {
        IdentityReport (*fn)(int, int);
        const char* label;
    };
    // Fixed identity order: I, II, substitution, closed-form GF.
    const Check checks[] = {
        {lagrange_i_check, "Identity (I)   [sum_k (1/k) C(mk,k) u^k == m log(1+w)]"},
        {alternating_t_check, "Identity (II)  [sum_k ((-1)^(k+1)/k) C(mk,k) u^k == -m log(1-v)]"},
        {substitution_check, "Substitution   [v(x/(1-x)^m) == x]"},
        {lb_extraction_check, "Closed form    [sum_k C(mk,k) u^k == (1+w)/(1+(1-m)w)]"},
    };

    std::vector<IdentityReport> all;
    std::ostringstream text;
    text << "Verifying identities to degree " << grid.degree << ".\n";

    bool ok = true;
    for (int m : grid.m_values) {
        text << "\n";
        for (const auto& check : checks) {
            IdentityReport r = check.fn(m, grid.degree);
            ok = ok && r.pass;
            text << "  " << fmt_m(m) << "  " << std::left << std::setw(66) << check.label
                 << "OK=" << (r.pass ? "True" : "False") << "\n";
            all.push_back(std::move(r));
        }
    }

    text << "\n";
    if (ok)
        text << "All " << all.size() << " instances pass.\n";
    else
        text << "FAILED: some of the " << all.size() << " instances do not pass.\n";

    sort_reports(all);
    if (json)
        std::cout << reports_json(all) << "\n";
    else
        std::cout << text.str();
    return ok ? 0 : 1;
}

int run_verify_poly(int n_max, bool json)
{
    std::vector<IdentityReport> all;
    std::ostringstream text;
    text << "Verifying the identity with m as an indeterminate: P_n(m)/m == H_n for n = 1.." << n_max
         << ".\n\n";

    bool ok = true;
    for (int n = 1; n <= n_max; ++n) {
        IdentityReport r = poly_in_m_check(n);
        ok = ok && r.pass;
        text << "  " << std::left << std::setw(6) << ("n=" + std::to_string(n)) << std::setw(32)
             << ("P(m)/m == " + harmonic(n).str()) << (r.pass ? "OK" : "FAIL") << "\n";
        all.push_back(std::move(r));
    }

    text << "\n" << (ok ? "All tests passed.\n" : "FAILED.\n");

    sort_reports(all);
    if (json)
        std::cout << reports_json(all) << "\n";
    else
        std::cout << text.str();
    return ok ? 0 : 1;
}

int run_dump(const std::string& series_id, std::optional<int> m, int degree)
{
    const bool needs_m = (series_id != "h_log");
    if (needs_m && !m)
        return usage_error("--m is required for series \"" + series_id + "\"");
    if (m && *m == 0)
        return usage_error("invalid m value: 0 (m must be nonzero)");

    Series s(0);
    if (series_id == "w")
        s = solve_fixed_point(*m, +1, degree).w;
    else if (series_id == "v")
        s = solve_fixed_point(*m, -1, degree).w;
    else if (series_id == "t_direct")
        s = t_series_direct(*m, degree);
    else if (series_id == "t_closed")
        s = t_series_closed(*m, degree);
    else if (series_id == "binom_gf")
        s = binomial_gf_direct(*m, degree);
    else if (series_id == "a_direct")
        s = a_series_direct(*m, degree);
    else if (series_id == "h_log")
        s = h_log_series(degree);
    else
        return usage_error("unknown series id: \"" + series_id +
                           "\" (expected one of w, v, t_direct, t_closed, binom_gf, a_direct, h_log)");

    for (int i = 0; i <= s.trunc_degree(); ++i)
        std::cout << i << ": " << s[i].str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact formal power series over Q: harmonic-number identity verifier"};
    app.require_subcommand(1);

    std::string main_ms = kDefaultMainMs;
    int main_n_max = 40;
    bool main_json = false;
    auto* vm = app.add_subcommand("verify-main", "verify the main identity on an (m, n) grid");
    vm->add_option("--m", main_ms, "comma-separated nonzero m values");
    vm->add_option("--n-max", main_n_max, "verify n = 1..n-max");
    vm->add_flag("--json", main_json, "emit the full report array as JSON");

    std::string series_ms = kDefaultSeriesMs;
    int series_degree = 8;
    bool series_json = false;
    auto* vs = app.add_subcommand("verify-series", "verify the four power-series identities");
    vs->add_option("--m", series_ms, "comma-separated nonzero m values");
    vs->add_option("--degree", series_degree, "truncation degree");
    vs->add_flag("--json", series_json, "emit the full report array as JSON");

    int poly_n_max = 20;
    bool poly_json = false;
    auto* vp = app.add_subcommand("verify-poly", "verify the identity as a polynomial in m");
    vp->add_option("--n-max", poly_n_max, "verify n = 1..n-max");
    vp->add_flag("--json", poly_json, "emit the full report array as JSON");

    std::string dump_series;
    int dump_m = 0;
    int dump_degree = 0;
    auto* dp = app.add_subcommand("dump", "print series coefficients, one per line");
    dp->add_option("--series", dump_series, "one of w, v, t_direct, t_closed, binom_gf, a_direct, h_log")
        ->required();
    auto* dump_m_opt = dp->add_option("--m", dump_m, "m parameter (required for all series but h_log)");
    dp->add_option("--degree", dump_degree, "truncation degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (vm->parsed()) {
            std::string err;
            auto ms = parse_m_list(main_ms, err);
            if (!ms)
                return usage_error(err);
            if (main_n_max < 1)
                return usage_error("--n-max must be at least 1 (got " + std::to_string(main_n_max) + ")");
            return run_verify_main(GridSpec{*ms, main_n_max, 0}, main_json);
        }
        if (vs->parsed()) {
            std::string err;
            auto ms = parse_m_list(series_ms, err);
            if (!ms)
                return usage_error(err);
            if (series_degree < 1)
                return usage_error("--degree must be at least 1 (got " + std::to_string(series_degree) + ")");
            return run_verify_series(GridSpec{*ms, 0, series_degree}, series_json);
        }
        if (vp->parsed()) {
            if (poly_n_max < 1)
                return usage_error("--n-max must be at least 1 (got " + std::to_string(poly_n_max) + ")");
            return run_verify_poly(poly_n_max, poly_json);
        }
        if (dp->parsed()) {
            if (dump_degree < 1)
                return usage_error("--degree must be at least 1 (got " + std::to_string(dump_degree) + ")");
            std::optional<int> m;
            if (dump_m_opt->count() > 0)
                m = dump_m;
            return run_dump(dump_series, m, dump_degree);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
