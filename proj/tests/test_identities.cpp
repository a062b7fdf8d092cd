#include "fpsq/identities.hpp"

#include "fpsq/combinatorics.hpp"
#include "fpsq/lagrange.hpp"

#include "doctest.h"
#include "testutil.hpp"

#include <stdexcept>
#include <string>

using namespace fpsq;
using test::series_of;

TEST_CASE("main sum terms for m=-1, n=4 (only k=3,4 survive)")
{
    CHECK(s_main_term(-1, 4, 1) == Rational(0));
    CHECK(s_main_term(-1, 4, 2) == Rational(0));
    CHECK(s_main_term(-1, 4, 3) == Rational(20, 3));
    CHECK(s_main_term(-1, 4, 4) == Rational(-35, 4));
    Rational inner = 0;
    for (int k = 1; k <= 4; ++k)
        inner += s_main_term(-1, 4, k);
    CHECK(inner == Rational(-25, 12));
    CHECK(s_main(-1, 4) == Rational(25, 12));
    CHECK_THROWS_AS(s_main_term(-1, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(s_main_term(-1, 4, 5), std::invalid_argument);
}

TEST_CASE("vanishing band for m=-1")
{
    // binom(n-2k, n-k) = 0 exactly when 0 <= n-2k < n-k, i.e. 1 <= k <= n/2;
    // outside the band every factor is nonzero.
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            if (k <= n / 2)
                CHECK(s_main_term(-1, n, k) == Rational(0));
            else
                CHECK(s_main_term(-1, n, k) != Rational(0));
        }
}

TEST_CASE("s_main pinned values")
{
    CHECK(s_main(2, 3) == Rational(11, 6));
    for (int m : {-7, -2, 1, 3, 15})
        CHECK(s_main(m, 0) == Rational(0));
    CHECK(s_main(3, 1) == Rational(1));
    CHECK_THROWS_AS(s_main(0, 3), std::invalid_argument);
}

TEST_CASE("verify_main small grids")
{
    // m=1 collapses to the classical alternating binomial sum; check the
    // reports against a hand computation from Pascal's triangle.
    const auto pascal = test::oracle_pascal(12);
    auto classic = [&](int n) {
        Rational s = 0;
        for (int k = 1; k <= n; ++k) {
            const Rational t = Rational(pascal[n][k]) / Rational(k);
            s += (k % 2 == 1) ? t : -t;
        }
        return s;
    };
    const auto reports = verify_main(1, 5);
    REQUIRE(reports.size() == 5);
    const char* expected[] = {"1", "3/2", "11/6", "25/12", "137/60"};
    for (int i = 0; i < 5; ++i) {
        CHECK(reports[i].pass);
        CHECK(reports[i].lhs == expected[i]);
        CHECK(reports[i].rhs == expected[i]);
        CHECK(reports[i].lhs == classic(i + 1).str());
        CHECK(reports[i].n == i + 1);
        CHECK(reports[i].id == IdentityId::Main);
    }

    const auto single = verify_main(3, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].pass);
    CHECK(single[0].lhs == "1");

    // n_max = 0 reports the trivial instance S_m(0) = 0 = H_0.
    const auto trivial = verify_main(4, 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].pass);
    CHECK(trivial[0].n == 0);
    CHECK(trivial[0].lhs == "0");
}

TEST_CASE("a_series_direct matches the harmonic numbers coefficientwise")
{
    for (int m : {2, -1}) {
        const Series a = a_series_direct(m, 4);
        CHECK(a[0] == Rational(0));
        for (int n = 0; n <= 4; ++n)
            CHECK(a[n] == harmonic(n));
        CHECK(a == series_of({"0", "1", "3/2", "11/6", "25/12"}));
    }
}

TEST_CASE("h_log_series pinned values and harmonic oracle")
{
    CHECK(h_log_series(4) == series_of({"0", "1", "3/2", "11/6", "25/12"}));
    const Series h = h_log_series(12);
    for (int n = 0; n <= 12; ++n)
        CHECK(h[n] == harmonic(n));
    CHECK_THROWS_AS(h_log_series(0), std::invalid_argument);
}

TEST_CASE("series closure: direct A_m equals the harmonic log series")
{
    for (int m : {-3, -1, 1, 2, 5})
        CHECK(a_series_direct(m, 10) == h_log_series(10));
}

TEST_CASE("reduction check over independent code paths")
{
    for (auto [m, n] : {std::pair{1, 6}, std::pair{2, 8}, std::pair{-2, 8}}) {
        const auto r = reduction_check(m, n);
        CHECK(r.pass);
        CHECK(r.id == IdentityId::GfEqualsHlog);
        CHECK(r.m == m);
        CHECK(r.degree == n);
    }
}

TEST_CASE("substitution check: v(x/(1-x)^m) = x")
{
    for (int m : {-3, -2, -1, 1, 2, 3, 4, 5})
        CHECK(substitution_check(m, 8).pass);
    CHECK(substitution_check(1, 4).pass);
    CHECK(substitution_check(5, 16).pass);
}

TEST_CASE("poly_in_m_check small cases")
{
    const auto r1 = poly_in_m_check(1);
    CHECK(r1.pass);
    CHECK(r1.lhs == "[\"1\"]");
    CHECK(!r1.m.has_value());
    CHECK(r1.n == 1);

    const auto r4 = poly_in_m_check(4);
    CHECK(r4.pass);
    CHECK(r4.lhs == "[\"25/12\"]");

    const auto r12 = poly_in_m_check(12);
    CHECK(r12.pass);
    CHECK(r12.lhs == "[\"86021/27720\"]");

    for (int n = 1; n <= 12; ++n)
        CHECK(poly_in_m_check(n).pass);
    CHECK_THROWS_AS(poly_in_m_check(0), std::invalid_argument);
}

TEST_CASE("symbolic sum is consistent with the numeric path")
{
    for (int n = 1; n <= 8; ++n) {
        const MPoly p = main_sum_poly(n);
        CHECK(p.degree() <= n);
        CHECK(p.coeff(0) == Rational(0));
        for (int m : {-3, -1, 2, 5})
            CHECK(p.eval(m) == Rational(m) * s_main(m, n));
    }
}

TEST_CASE("report serialization schema and determinism")
{
    const auto r = reduction_check(2, 4);
    const std::string j = report_json(r);
    CHECK(j.find("\"identity\":\"GF_EQUALS_HLOG\"") != std::string::npos);
    CHECK(j.find("\"m\":2") != std::string::npos);
    CHECK(j.find("\"N\":4") != std::string::npos);
    CHECK(j.find("\"ok\":true") != std::string::npos);
    // key order is fixed
    CHECK(j.rfind("{\"identity\":", 0) == 0);

    CHECK(report_json(reduction_check(2, 4)) == j);

    const auto p = poly_in_m_check(3);
    const std::string pj = report_json(p);
    CHECK(pj.find("\"m\":\"symbolic\"") != std::string::npos);
    CHECK(pj.find("\"n\":3") != std::string::npos);

    const auto a = verify_main(2, 6);
    const auto b = verify_main(2, 6);
    CHECK(reports_json(a) == reports_json(b));
}

TEST_CASE("report invariant: pass iff lhs and rhs serialize identically")
{
    const auto ok = make_report(IdentityId::Main, 1, 1, std::nullopt, "1", "1");
    CHECK(ok.pass);
    const auto bad = make_report(IdentityId::Main, 1, 1, std::nullopt, "1", "2");
    CHECK(!bad.pass);
}

TEST_CASE("report sorting is by m, then n, then identity order")
{
    std::vector<IdentityReport> rs;
    rs.push_back(make_report(IdentityId::ClosedFormGf, 2, std::nullopt, 8, "a", "a"));
    rs.push_back(make_report(IdentityId::LagrangeI, 2, std::nullopt, 8, "a", "a"));
    rs.push_back(make_report(IdentityId::LagrangeII, -3, std::nullopt, 8, "a", "a"));
    rs.push_back(make_report(IdentityId::SubstitutionVEqX, 2, std::nullopt, 8, "a", "a"));
    sort_reports(rs);
    CHECK(rs[0].m == -3);
    CHECK(rs[1].id == IdentityId::LagrangeI);
    CHECK(rs[2].id == IdentityId::SubstitutionVEqX);
    CHECK(rs[3].id == IdentityId::ClosedFormGf);
}
