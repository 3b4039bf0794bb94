#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ramsey/bounds.hpp"
#include "ramsey/errors.hpp"

using namespace ramsey;
using doctest::Approx;

TEST_CASE("known values registry") {
    const auto& reg = KnownValuesRegistry::standard();
    REQUIRE(reg.curated().size() == 7);
    // the chain s <= t <= r holds on every curated row; columns nondecreasing
    int prev_s = 0, prev_t = 0, prev_r = 0;
    for (const auto& row : reg.curated()) {
        CHECK(row.s <= row.t);
        CHECK(row.t <= row.r);
        CHECK(row.s >= prev_s);
        CHECK(row.t >= prev_t);
        CHECK(row.r >= prev_r);
        prev_s = row.s;
        prev_t = row.t;
        prev_r = row.r;
        for (Kind k : {Kind::s, Kind::t, Kind::r}) {
            const auto e = reg.lookup(k, 3, row.n);
            REQUIRE(e.has_value());
            CHECK(e->provenance == "exact-table");
        }
    }
    CHECK(reg.lookup(Kind::s, 3, 9)->value == 26);
    CHECK(reg.lookup(Kind::t, 3, 8)->value == 22);
    CHECK(reg.lookup(Kind::r, 3, 9)->value == 36);

    // base cases
    CHECK(reg.lookup(Kind::t, 5, 1)->value == 1);
    CHECK(reg.lookup(Kind::s, 2, 9)->value == 9);
    CHECK(reg.lookup(Kind::t, 3, 2)->value == 3);
    CHECK(reg.lookup(Kind::t, 3, 2)->provenance == "base-case");
    CHECK_FALSE(reg.lookup(Kind::s, 3, 2).has_value());
    CHECK_FALSE(reg.lookup(Kind::s, 4, 4).has_value());
    CHECK_FALSE(reg.lookup(Kind::t, 3, 10).has_value());
}

TEST_CASE("query parsing and validation") {
    CHECK(parse_kind("s") == Kind::s);
    CHECK(parse_kind("t") == Kind::t);
    CHECK(parse_kind("r") == Kind::r);
    CHECK_THROWS_AS(parse_kind("q"), UnsupportedKind);
    CHECK_THROWS_AS((RamseyQuery{Kind::s, 0, 3}.validate()), DomainError);
    CHECK(RamseyQuery{Kind::t, 3, 9}.to_string() == "t(3,9)");
}

TEST_CASE("closed-form bound values") {
    const double e2 = std::exp(2.0);
    CHECK(bound_r_lower(3, e2, 1.0) == Approx(13.649537508286057).epsilon(1e-12));
    CHECK(bound_r_lower(4, 100.0, 1.0) == Approx(2197.2819548516795).epsilon(1e-12));
    // linear in the constant
    CHECK(bound_r_lower(4, 50.0, 2.0) == Approx(2 * bound_r_lower(4, 50.0, 1.0)).epsilon(1e-14));

    CHECK(bound_chr(4.0) == Approx(12.649110640673518).epsilon(1e-12));
    CHECK(bound_new(9.0) == Approx(1739.8638404385867).epsilon(1e-12));
    CHECK(bound_rs(9.0) == Approx(91.07444730898483).epsilon(1e-12));
    CHECK(bound_t4(1.0) == 100.0);
    CHECK(bound_rs_t4(9.0, 5.0) == Approx(bound_rs(9.0) * 9.0).epsilon(1e-12));

    CHECK_THROWS_AS(bound_r_lower(3, 1.5, 1.0), DomainError);
    CHECK_THROWS_AS(bound_rs(1.0), DomainError);
    CHECK_THROWS_AS(bound_new(0.5), DomainError);
}

TEST_CASE("log base is explicit") {
    CHECK(bound_rs(16.0, LogBase::two) == Approx(5.0 * 64.0 / 2.0).epsilon(1e-12));
    CHECK(bound_r_lower(3, 4.0, 1.0, LogBase::two) == Approx(4.0).epsilon(1e-12));
}

TEST_CASE("f and F values") {
    CHECK(f_value(2.0) == Approx(0.991267125065314).epsilon(1e-12));
    CHECK(f_value(2.0) >= 0.98);
    CHECK(f_value(2.0) <= 1.0);
    CHECK(F_value(2.0) == Approx(1.1189778220006932).epsilon(1e-12));
    CHECK(F_value(2.0) > 1.0);

    // fixtures from direct evaluation at powers of ten: f keeps growing
    const double expected[] = {1.0964660617320963, 1.3288163467067378, 1.6409988101142972,
                               2.0435728811633442, 2.556191765765874,  3.205477965348969,
                               4.025719864059354,  5.060467084476471,  6.3647616917518235};
    for (int k = 1; k <= 9; ++k)
        CHECK(f_value(std::pow(10.0, k)) == Approx(expected[k - 1]).epsilon(1e-12));

    CHECK_THROWS_AS(f_value(1.9), DomainError);
    CHECK_THROWS_AS(F_value(1.0), DomainError);
}

TEST_CASE("F agrees with the derivative-ratio form") {
    // F was displayed in two algebraically equal shapes; evaluate the raw
    // ratio of the f' terms directly as an oracle
    for (double x : geometric_grid(2.0, 1e9, 200)) {
        const double num = 0.3 / std::pow(x, 0.7);
        const double den = 0.14 / std::pow(x, 0.86) * std::pow(std::pow(x, 0.2) - 1.0, 0.8) +
                           0.16 * std::pow(std::pow(x, 0.2) - 1.0, 0.8) /
                               (std::pow(x, 0.66) * (std::pow(x, 0.2) - 1.0));
        CHECK(F_value(x) == Approx(num / den).epsilon(1e-9));
    }
}

TEST_CASE("g and h remark values") {
    CHECK(g_remark(2.0) == Approx(142.16245736390175).epsilon(1e-12));
    CHECK(h_remark(2.0) == Approx(245.22888266898326).epsilon(1e-12));
    CHECK(g_remark(2.0) < h_remark(2.0));
}

TEST_CASE("f-claim sweep: f passes, the g/h remark does not survive large n") {
    const auto grid = geometric_grid(2.0, 1e6, 2000);
    const auto report = check_f_claim(grid);
    CHECK(report.f_monotone);
    CHECK(report.f_lower_bound);
    // direct evaluation refutes g <= h from roughly n = 6400 on
    CHECK_FALSE(report.gh_remark);
    REQUIRE(report.first_gh_violation.has_value());
    CHECK(*report.first_gh_violation > 6000.0);
    CHECK(*report.first_gh_violation < 7000.0);
    CHECK(g_remark(*report.first_gh_violation) > h_remark(*report.first_gh_violation));

    // below the crossover everything passes
    const auto small = check_f_claim(geometric_grid(2.0, 6000.0, 500));
    CHECK(small.all_pass());

    // single-point grid
    const auto single = check_f_claim(geometric_grid(2.0, 2.0, 1));
    CHECK(single.all_pass());
}

TEST_CASE("recurrence upper bounds") {
    const auto& reg = KnownValuesRegistry::standard();
    CHECK(recurrence_upper_t(4, 9, reg) == 112.0);
    CHECK(recurrence_upper_t(4, 1, reg) == 1.0);
    CHECK(recurrence_upper_t(7, 1, reg) == 1.0);
    CHECK(recurrence_upper_t(2, 6, reg) == 6.0);
    // registry exact values seed their own cells
    for (const auto& row : reg.curated()) CHECK(recurrence_upper_t(3, row.n, reg) == row.t);
    // derived cells dominate nothing below them and stay under the closed form
    for (int n = 1; n <= 50; ++n)
        CHECK(recurrence_upper_t(4, n, reg) <= bound_t4(n) + 1e-9);
    CHECK_THROWS_AS(recurrence_upper_t(0, 3, reg), MissingSeed);
}

TEST_CASE("ratio table and envelope") {
    CHECK(ratio_envelope(1e6, 1.0) == Approx(44.76281062026843).epsilon(1e-12));
    CHECK(ratio_envelope(1e10, 1.0) == Approx(25.441295466911612).epsilon(1e-12));
    CHECK(ratio_envelope(1e10, 1.0) < ratio_envelope(1e6, 1.0));
    CHECK(ratio_envelope(1e6, 3.0) == Approx(3.0 * ratio_envelope(1e6, 1.0)).epsilon(1e-14));

    // decreasing beyond the maximum at e^12.5
    const double peak = std::exp(12.5);
    double prev = ratio_envelope(peak, 1.0);
    for (double n = peak * 2; n < 1e14; n *= 4) {
        const double cur = ratio_envelope(n, 1.0);
        CHECK(cur < prev);
        prev = cur;
    }

    CHECK_THROWS_AS(ratio_envelope(std::exp(1.0), 1.0), DomainError);
    CHECK_THROWS_AS(ratio_envelope(2.5, 1.0), DomainError);

    const std::vector<double> ns{10.0, 100.0, 1000.0};
    const auto rows = ratio_table(ns, 1.0);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        CHECK(row.envelope == Approx(ratio_envelope(row.n, 1.0)));
        CHECK(row.ratio == Approx(bound_t4(row.n) / bound_r_lower(4, row.n, 1.0)));
    }
    const std::vector<double> bad{2.0};
    CHECK_THROWS_AS(ratio_table(bad, 1.0), DomainError);
}

TEST_CASE("crossover solving") {
    // 100 n^1.3 meets sqrt(10)/2 n^1.5 exactly at (200/sqrt(10))^5
    const double closed = std::pow(200.0 / std::sqrt(10.0), 5.0);
    const double found = crossover([](double n) { return bound_new(n); },
                                   [](double n) { return bound_chr(n); }, 1e6, 1e12);
    CHECK(std::abs(found - closed) / closed < 1e-6);

    CHECK_THROWS_AS(crossover([](double n) { return bound_new(n); },
                              [](double n) { return bound_new(n); }, 1e3, 1e6),
                    NoSignChange);

    // fixture: where 100 n^1.3 overtakes 5 n^1.5 / sqrt(ln n)
    const double vs_rs = crossover([](double n) { return bound_new(n); },
                                   [](double n) { return bound_rs(n); }, 1e6, 1e13);
    CHECK(vs_rs == Approx(7938706391.97).epsilon(1e-6));
}

TEST_CASE("every closed-form upper bound dominates the registry values") {
    const auto& reg = KnownValuesRegistry::standard();
    for (const auto& row : reg.curated()) {
        for (int known : {row.s, row.t}) { // bounds hold for t and thus for s
            CHECK(bound_chr(row.n) >= known);
            CHECK(bound_rs(row.n) >= known);
            CHECK(bound_new(row.n) >= known);
        }
    }
    CHECK(bound_new(1.0) >= 1.0);
    CHECK(bound_chr(1.0) >= 1.0);
    CHECK(bound_new(2.0) >= 3.0);
}

TEST_CASE("bounds CSV") {
    std::ostringstream out;
    write_bounds_csv(out, 2, 9, LogBase::natural, KnownValuesRegistry::standard());
    const std::string text = out.str();
    CHECK(text.starts_with("# log=natural\nn,bound_chr,bound_rs,bound_new,known_t3,ratio_envelope\n"));
    CHECK(text.find("\n9,") != std::string::npos);
    CHECK(text.find(",26,") != std::string::npos);  // known t(3,9)
    // n = 2 produces an empty envelope cell (domain starts above e)
    CHECK(text.find("\n2,") != std::string::npos);
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line); // comment
    std::getline(lines, line); // header
    std::getline(lines, line); // n = 2
    CHECK(line.back() == ',');
    CHECK_THROWS_AS(write_bounds_csv(out, 1, 5, LogBase::natural, KnownValuesRegistry::standard()),
                    DomainError);
}
