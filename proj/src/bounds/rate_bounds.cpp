#include "lcsb/bounds/rate_bounds.hpp"

#include "lcsb/error.hpp"

#include <algorithm>
#include <cmath>

namespace lcsb {
namespace {

void require_open_unit(double v, const char* name) {
    require(v > 0.0 && v < 1.0, std::string(name) + " must lie strictly between 0 and 1");
}

// Binary entropy in nats.
double entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log1p(-x);
}

// Largest w in [0, limit] with D(q + sign*w || q) <= level; D is increasing in w.
double kl_width(double q, double level, double sign, double limit) {
    auto divergence = [&](double w) {
        const double x = q + sign * w;
        if (x <= 0.0) return -std::log1p(-q);
        if (x >= 1.0) return -std::log(q);
        return kl_bernoulli(x, q);
    };
    if (divergence(limit) <= level) return limit;
    double lo = 0.0, hi = limit;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (divergence(mid) <= level ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

double rademacher_mgf(double t, double q) {
    require_open_unit(q, "q");
    return q * std::exp(t * (1.0 - q)) + (1.0 - q) * std::exp(-t * q);
}

double rademacher_cumulant(double t, double q) {
    require_open_unit(q, "q");
    if (t > 30.0) {
        return t * (1.0 - q) + std::log(q) + std::log1p((1.0 - q) / q * std::exp(-t));
    }
    return -t * q + std::log1p(q * std::expm1(t));
}

double t0_equation(double t, double slope_delta, double q, double b_width) {
    return 2.0 * slope_delta * t - b_width * b_width - 2.0 * rademacher_cumulant(slope_delta * t, q);
}

double solve_t0(double slope_delta, double q, double b_width) {
    require(slope_delta > 0.0, "slope must be positive");
    require(b_width > 0.0, "width must be positive");
    require_open_unit(q, "q");
    auto g = [&](double t) { return t0_equation(t, slope_delta, q, b_width); };
    double lo = 0.0, hi = 1.0;
    while (g(hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
    }
    // Bisect down to adjacent doubles, then keep the smaller residual.
    for (int it = 0; it < 2000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (g(mid) <= 0.0 ? lo : hi) = mid;
    }
    return std::abs(g(lo)) <= std::abs(g(hi)) ? lo : hi;
}

double kl_bernoulli(double x, double q) {
    require_open_unit(x, "x");
    require_open_unit(q, "q");
    return x * std::log(x / q) + (1.0 - x) * std::log((1.0 - x) / (1.0 - q));
}

double kl_quadratic_bound(double x, double q) {
    require_open_unit(x, "x");
    require_open_unit(q, "q");
    return (x - q) * (x - q) / (q * (1.0 - q));
}

double entropy_binom_floor(std::int64_t n2, std::int64_t k, double q) {
    require(n2 >= 2 && k > 0 && k < n2, "k must lie strictly between 0 and n2");
    require_open_unit(q, "q");
    const double n = static_cast<double>(n2);
    const double kd = static_cast<double>(k);
    return -std::log(n + 1.0) + n * entropy(kd / n) + kd * std::log(q) + (n - kd) * std::log1p(-q);
}

double b_width_for_eta(double eta, double q) {
    require(eta > 0.0, "eta must be positive");
    require_open_unit(q, "q");
    const double level = eta / 4.0;
    const double up = kl_width(q, level, +1.0, 1.0 - q);
    const double down = kl_width(q, level, -1.0, q);
    return 2.0 * std::min(up, down);
}

RateEnvelope rate_envelope(double s, double gamma_star, double K, double slope_delta, double q) {
    require(s > gamma_star, "s must exceed the limit constant");
    require(K > 0.0, "K must be positive");
    require(slope_delta > 0.0, "slope must be positive");
    require_open_unit(q, "q");
    const double gap = s - gamma_star;
    return {gap * gap / (K * K), gap * gap / (4.0 * slope_delta * slope_delta * q * (1.0 - q)),
            false};
}

}  // namespace lcsb
