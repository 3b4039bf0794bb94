#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/registry.hpp"

namespace ramsey {

// Asymptotic statements are base-invariant, the finite-n tables are not, so
// every log-bearing formula takes the base explicitly and the tables print
// which one was used.
enum class LogBase { natural, two };
double log_value(double n, LogBase base);

// c * (n / log n)^((m+1)/2), a general lower-bound form for r(m,n); the
// constant is never pinned and stays caller-supplied.
double bound_r_lower(int m, double n, double c, LogBase base = LogBase::natural);

// upper bounds for t(3,n) and t(4,n); names follow the CSV column contract
double bound_chr(double n);                                        // sqrt(10)/2 * n^1.5
double bound_rs(double n, LogBase base = LogBase::natural);        // 5 n^1.5 / sqrt(log n)
double bound_rs_t4(double n, double c, LogBase base = LogBase::natural); // c n^2.5 / sqrt(log n)
double bound_new(double n);                                        // 100 n^1.3
double bound_t4(double n);                                         // 50 (n + n^2.3)

// f(n) = n^0.3 - n^0.14 (n^0.2 - 1)^0.8 and the ratio F(x) bounding f' away
// from zero; both need n, x >= 2.
double f_value(double n);
double F_value(double x);

// the two sides of the d <= n^0.8 - 1 induction branch
double g_remark(double n); // n^0.8 + 100 n^0.5 (n-1)^0.8 - 1
double h_remark(double n); // 100 n^1.3 - 1

std::vector<double> geometric_grid(double lo, double hi, int points);

// Sweeps a sorted grid (min >= 2): f nondecreasing, f >= 0.98, and g <= h at
// every point.  Violations are report content, never errors.
struct FClaimReport {
    bool f_monotone = true;
    bool f_lower_bound = true;
    bool gh_remark = true;
    std::optional<double> first_monotone_violation;
    std::optional<double> first_lower_bound_violation;
    std::optional<double> first_gh_violation;
    bool all_pass() const { return f_monotone && f_lower_bound && gh_remark; }
};
FClaimReport check_f_claim(std::span<const double> grid);

// Upper bounds for t(m,n) by t(m,n) <= t(m,n-1) + t(m-1,n) with t(m,1) = 1
// and t(2,n) = n.  Registry exact values seed their cells; row 3 falls back
// to min(recurrence, 100 n^1.3) beyond the table.  Exact seeds keep the
// small-table results integral.
double recurrence_upper_t(int m, int n, const KnownValuesRegistry& registry);

// c (log n)^2.5 / n^0.2, the decaying envelope of bound_t4 / bound_r_lower.
// Meaningful (and accepted) only for n > e; n <= e raises DomainError.
double ratio_envelope(double n, double c, LogBase base = LogBase::natural);

struct RatioRow {
    double n = 0;
    double ratio = 0;    // bound_t4(n) / bound_r_lower(4, n, c)
    double envelope = 0; // ratio_envelope(n, c)
};
std::vector<RatioRow> ratio_table(std::span<const double> ns, double c,
                                  LogBase base = LogBase::natural);

// Bisection root of a(n) - b(n) on [lo, hi] to relative tolerance 1e-9;
// NoSignChange when the endpoints agree in sign.
double crossover(const std::function<double(double)>& a, const std::function<double(double)>& b,
                 double lo, double hi);

// CSV table, header exactly
//   n,bound_chr,bound_rs,bound_new,known_t3,ratio_envelope
// preceded by a "# log=..." comment line; 6 significant digits; known_t3
// blank where the registry has no value.
void write_bounds_csv(std::ostream& out, int from, int to, LogBase base,
                      const KnownValuesRegistry& registry);

} // namespace ramsey
