#include "ramsey/bounds.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr double kE = 2.718281828459045;

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

} // namespace

double log_value(double n, LogBase base) {
    return base == LogBase::natural ? std::log(n) : std::log2(n);
}

double bound_r_lower(int m, double n, double c, LogBase base) {
    require(m >= 1, "r lower bound needs m >= 1");
    require(n >= 2.0, "r lower bound needs n >= 2");
    require(c > 0.0, "r lower bound needs c > 0");
    return c * std::pow(n / log_value(n, base), (m + 1) / 2.0);
}

double bound_chr(double n) {
    require(n >= 1.0, "bound_chr needs n >= 1");
    return std::sqrt(10.0) / 2.0 * std::pow(n, 1.5);
}

double bound_rs(double n, LogBase base) {
    require(n >= 2.0, "bound_rs needs n >= 2");
    return 5.0 * std::pow(n, 1.5) / std::sqrt(log_value(n, base));
}

double bound_rs_t4(double n, double c, LogBase base) {
    require(n >= 2.0, "bound_rs_t4 needs n >= 2");
    require(c > 0.0, "bound_rs_t4 needs c > 0");
    return c * std::pow(n, 2.5) / std::sqrt(log_value(n, base));
}

double bound_new(double n) {
    require(n >= 1.0, "bound_new needs n >= 1");
    return 100.0 * std::pow(n, 1.3);
}

double bound_t4(double n) {
    require(n >= 1.0, "bound_t4 needs n >= 1");
    return 50.0 * (n + std::pow(n, 2.3));
}

double f_value(double n) {
    require(n >= 2.0, "f defined for n >= 2");
    return std::pow(n, 0.3) - std::pow(n, 0.14) * std::pow(std::pow(n, 0.2) - 1.0, 0.8);
}

double F_value(double x) {
    require(x >= 2.0, "F defined for x >= 2");
    const double u = 1.0 - 1.0 / std::pow(x, 0.2);
    return 0.3 / (0.14 * std::pow(std::pow(u, 4.0), 0.2) + 0.16 / std::pow(u, 0.2));
}

double g_remark(double n) {
    require(n >= 2.0, "g defined for n >= 2");
    return std::pow(n, 0.8) + 100.0 * std::pow(n, 0.5) * std::pow(n - 1.0, 0.8) - 1.0;
}

double h_remark(double n) {
    require(n >= 2.0, "h defined for n >= 2");
    return 100.0 * std::pow(n, 1.3) - 1.0;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
    require(points >= 1 && lo > 0.0 && hi >= lo, "bad grid parameters");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        grid.push_back(lo);
        return grid;
    }
    const double step = std::pow(hi / lo, 1.0 / (points - 1));
    double x = lo;
    for (int i = 0; i < points; ++i, x *= step) grid.push_back(std::min(x, hi));
    grid.back() = hi;
    return grid;
}

FClaimReport check_f_claim(std::span<const double> grid) {
    require(!grid.empty() && grid.front() >= 2.0, "grid must be sorted with min >= 2");
    FClaimReport report;
    double prev = -1e300;
    for (double n : grid) {
        const double fn = f_value(n);
        if (report.f_monotone && fn < prev) {
            report.f_monotone = false;
            report.first_monotone_violation = n;
        }
        prev = fn;
        if (report.f_lower_bound && fn < 0.98) {
            report.f_lower_bound = false;
            report.first_lower_bound_violation = n;
        }
        if (report.gh_remark && g_remark(n) > h_remark(n)) {
            report.gh_remark = false;
            report.first_gh_violation = n;
        }
    }
    return report;
}

double recurrence_upper_t(int m, int n, const KnownValuesRegistry& registry) {
    if (m < 1 || n < 1)
        throw MissingSeed("recurrence needs m, n >= 1; got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
    if (n == 1) return 1.0; // t(m,1) = 1
    if (m == 1) return 1.0;
    if (m == 2) return n; // t(2,n) = n
    std::map<std::pair<int, int>, double> cell;
    auto value = [&](auto&& self, int mm, int nn) -> double {
        if (nn == 1 || mm == 1) return 1.0;
        if (mm == 2) return nn;
        const auto it = cell.find({mm, nn});
        if (it != cell.end()) return it->second;
        double v;
        if (const auto exact = registry.lookup(Kind::t, mm, nn)) {
            v = exact->value;
        } else {
            v = self(self, mm, nn - 1) + self(self, mm - 1, nn);
            if (mm == 3) v = std::min(v, bound_new(nn));
        }
        cell[{mm, nn}] = v;
        return v;
    };
    return value(value, m, n);
}

double ratio_envelope(double n, double c, LogBase base) {
    require(c > 0.0, "envelope needs c > 0");
    if (n <= kE) throw DomainError("envelope defined for n > e");
    return c * std::pow(log_value(n, base), 2.5) / std::pow(n, 0.2);
}

std::vector<RatioRow> ratio_table(std::span<const double> ns, double c, LogBase base) {
    std::vector<RatioRow> rows;
    rows.reserve(ns.size());
    for (double n : ns) {
        if (n <= kE) throw DomainError("ratio table rows need n > e");
        RatioRow row;
        row.n = n;
        row.ratio = bound_t4(n) / bound_r_lower(4, n, c, base);
        row.envelope = ratio_envelope(n, c, base);
        rows.push_back(row);
    }
    return rows;
}

double crossover(const std::function<double(double)>& a, const std::function<double(double)>& b,
                 double lo, double hi) {
    require(lo > 0.0 && hi > lo, "crossover needs 0 < lo < hi");
    auto diff = [&](double x) { return a(x) - b(x); };
    double flo = diff(lo);
    const double fhi = diff(hi);
    if (flo == 0.0 && fhi == 0.0)
        throw NoSignChange("difference vanishes at both endpoints");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoSignChange("bounds do not cross on the given interval");
    while ((hi - lo) / hi > 1e-9) {
        const double mid = lo + (hi - lo) / 2.0;
        const double fmid = diff(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return lo + (hi - lo) / 2.0;
}

void write_bounds_csv(std::ostream& out, int from, int to, LogBase base,
                      const KnownValuesRegistry& registry) {
    if (from < 2 || to < from) throw DomainError("bounds table needs 2 <= from <= to");
    out << "# log=" << (base == LogBase::natural ? "natural" : "2") << "\n";
    out << "n,bound_chr,bound_rs,bound_new,known_t3,ratio_envelope\n";
    for (int n = from; n <= to; ++n) {
        std::ostringstream row;
        row.precision(6);
        row << n << ',' << bound_chr(n) << ',' << bound_rs(n, base) << ',' << bound_new(n) << ',';
        if (const auto known = registry.lookup(Kind::t, 3, n)) row << known->value;
        row << ',';
        if (n > kE)
            row << ratio_envelope(n, 1.0, base);
        out << row.str() << "\n";
    }
}

} // namespace ramsey
