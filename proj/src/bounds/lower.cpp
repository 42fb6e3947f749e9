#include "lcsb/bounds/lower.hpp"

#include "lcsb/bounds/special.hpp"
#include "lcsb/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lcsb {
namespace {

void check_common(double r, double eps0, double p) {
    require(r >= 1.0, "r must be at least 1");
    require(eps0 > 0.0, "eps0 must be positive");
    require(p > 0.0 && p < 1.0, "p must lie strictly between 0 and 1");
}

}  // namespace

double b_const(double p) {
    require(p > 0.0 && p < 1.0, "p must lie strictly between 0 and 1");
    const double pq = p * (1.0 - p);
    return 2.0 * std::sqrt(std::numbers::pi * pq) * std::exp(1.0 / (2.0 * pq));
}

double lower_d1(double r, double eps0, double p) {
    check_common(r, eps0, p);
    return std::pow(2.0, (3.0 - r) / 2.0) * std::pow(eps0, r) / (b_const(p) * (r + 1.0));
}

double lower_d2(double r, double eps0, double p) {
    check_common(r, eps0, p);
    const double pq = p * (1.0 - p);
    return std::pow(eps0, r) * std::pow(pq, r / 2.0) * std::tgamma((r + 1.0) / 2.0) /
           std::sqrt(std::numbers::pi);
}

double lower_d3(double r, double eps0, double p) {
    check_common(r, eps0, p);
    return std::pow(eps0, r) / (std::pow(2.0, (5.0 * r + 1.0) / 2.0) * b_const(p));
}

double lower_d4(double r, double eps0, double p) {
    return (std::pow(2.0, r + 1.0) + r) / (2.0 * (r + 1.0)) * lower_d3(r, eps0, p);
}

double phi_floor_extended(std::int64_t n, double p, double beta, double epsilon) {
    require(n >= 1, "n must be positive");
    require(p > 0.0 && p < 1.0, "p must lie strictly between 0 and 1");
    require(beta > 0.5 && beta < 2.0 / 3.0, "beta must lie in (1/2, 2/3)");
    require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
    const double nd = static_cast<double>(n);
    const double pq = p * (1.0 - p);
    return (1.0 - epsilon) / (2.0 * std::sqrt(std::numbers::pi * pq * nd)) *
           std::exp(-std::pow(2.0 * nd, 2.0 * beta - 1.0) / (2.0 * pq));
}

double fastconv_bound(const PhiSpec& phi, const ZeroCountSet& set, double slope_delta,
                      std::int64_t k0, double phi_floor) {
    require(set.size() >= 1, "zero-count set is empty");
    require(slope_delta > 0.0, "slope must be positive");
    require(k0 >= 1, "k0 must be at least 1");
    require(phi_floor > 0.0, "probability floor must be positive");
    const double scale = slope_delta / static_cast<double>(k0);
    auto objective = [&](double a) {
        double sum = 0.0;
        for (std::int64_t u = set.lo; u <= set.hi; ++u) {
            sum += phi(scale * std::abs(static_cast<double>(u) - a));
        }
        return sum * phi_floor;
    };
    // Convex in a, so ternary search converges to the global minimum.
    double lo = static_cast<double>(set.lo);
    double hi = static_cast<double>(set.hi);
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (objective(m1) <= objective(m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    return objective(0.5 * (lo + hi));
}

UniformBound uniform_bound(const PhiSpec& phi, double c, double eps0, double phi_n) {
    require(c > 0.0, "c must be positive");
    require(eps0 > 0.0, "eps0 must be positive");
    require(phi_n > 0.0, "phi_n must be positive");
    const double half_window = c / (8.0 * phi_n);
    const double edge = phi(eps0 * half_window / 2.0);
    const auto terms = static_cast<std::int64_t>(std::floor(half_window + 1e-9));
    double refined = (c / 8.0) * edge;
    for (std::int64_t j = 1; j <= terms; ++j) {
        refined += phi(eps0 / 2.0 * (half_window + static_cast<double>(j))) * phi_n;
    }
    return {refined, (c / 4.0) * edge};
}

double mgf_lower_limit(double s, double eps0, double p) {
    require(s > 0.0, "s must be positive");
    require(eps0 > 0.0, "eps0 must be positive");
    require(p > 0.0 && p < 1.0, "p must lie strictly between 0 and 1");
    const double pq = p * (1.0 - p);
    const double a = s * eps0 / std::numbers::sqrt2;
    return 2.0 * std::exp(a * a * pq / 2.0) * normal_cdf(a * std::sqrt(pq));
}

double lambda_const(double eps0, double p) {
    require(eps0 > 0.0, "eps0 must be positive");
    require(p > 0.0 && p < 1.0, "p must lie strictly between 0 and 1");
    if (eps0 >= 2.0) return 1.0;
    const double sd = std::sqrt(p * (1.0 - p));
    // With xi = sd * Z the event is eps0 sd t / 2 < Z < sd t.
    auto mass = [&](double t) { return normal_cdf(sd * t) - normal_cdf(sd * t * eps0 / 2.0); };

    constexpr int kGrid = 10000;
    const double log_lo = std::log(1e-3);
    const double log_hi = std::log(1e3 / sd);
    auto node = [&](int i) { return std::exp(log_lo + (log_hi - log_lo) * i / (kGrid - 1)); };
    int best = 0;
    double best_mass = mass(node(0));
    for (int i = 1; i < kGrid; ++i) {
        const double m = mass(node(i));
        if (m > best_mass) {
            best_mass = m;
            best = i;
        }
    }

    // Golden-section refinement between the neighbouring grid nodes.
    double a = node(best > 0 ? best - 1 : 0);
    double b = node(best < kGrid - 1 ? best + 1 : kGrid - 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = mass(c), fd = mass(d);
    for (int it = 0; it < 200 && b - a > 1e-14 * b; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = mass(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = mass(d);
        }
    }
    best_mass = std::max({best_mass, fc, fd});
    return 1.0 - best_mass;
}

}  // namespace lcsb
