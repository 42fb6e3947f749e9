#include "lcsb/model/binomial.hpp"

#include "lcsb/error.hpp"

#include <cmath>
#include <numbers>

namespace lcsb {
namespace {

constexpr double kLogSqrt2Pi = 0.918938533204672741780329736406;

}  // namespace

double stirling_remainder(double x) {
    if (x <= 15.0) {
        // Small arguments: the direct difference keeps ~15 digits because
        // every term is below 30 in magnitude.
        const long double xl = x;
        return static_cast<double>(std::lgamma(xl + 1.0L) - (xl + 0.5L) * std::log(xl) + xl -
                                   static_cast<long double>(kLogSqrt2Pi));
    }
    constexpr double s0 = 1.0 / 12.0;
    constexpr double s1 = 1.0 / 360.0;
    constexpr double s2 = 1.0 / 1260.0;
    constexpr double s3 = 1.0 / 1680.0;
    constexpr double s4 = 1.0 / 1188.0;
    const double x2 = x * x;
    if (x > 500.0) return (s0 - s1 / x2) / x;
    if (x > 80.0) return (s0 - (s1 - s2 / x2) / x2) / x;
    if (x > 35.0) return (s0 - (s1 - (s2 - s3 / x2) / x2) / x2) / x;
    return (s0 - (s1 - (s2 - (s3 - s4 / x2) / x2) / x2) / x2) / x;
}

double deviance_term(double x, double m) {
    if (std::abs(x - m) < 0.1 * (x + m)) {
        // Series in v = (x - m)/(x + m); converges fast for |v| < 0.1.
        double v = (x - m) / (x + m);
        double s = (x - m) * v;
        double ej = 2.0 * x * v;
        v *= v;
        for (int j = 1; j < 1000; ++j) {
            ej *= v;
            const double next = s + ej / (2 * j + 1);
            if (next == s) return next;
            s = next;
        }
        return s;
    }
    return x * std::log(x / m) + m - x;
}

double binomial_pmf_log(std::int64_t n2, double q, std::int64_t k) {
    require(n2 >= 0, "trial count must be non-negative");
    require(k >= 0 && k <= n2, "k must lie in [0, n2]");
    require(q > 0.0 && q < 1.0, "q must lie strictly between 0 and 1");
    const double p = 1.0 - q;
    if (k == 0) return static_cast<double>(n2) * std::log1p(-q);
    if (k == n2) return static_cast<double>(n2) * std::log(q);
    const double n = static_cast<double>(n2);
    const double kd = static_cast<double>(k);
    const double rest = n - kd;
    const double lc = stirling_remainder(n) - stirling_remainder(kd) - stirling_remainder(rest) -
                      deviance_term(kd, n * q) - deviance_term(rest, n * p);
    return lc + 0.5 * std::log(n / (2.0 * std::numbers::pi * kd * rest));
}

double gaussian_local_pmf(std::int64_t n, const BinaryModel& model, double k) {
    require(n >= 1, "n must be positive");
    const double nd = static_cast<double>(n);
    const double pq = model.p * model.q();
    const double d = k - 2.0 * nd * model.q();
    return std::exp(-d * d / (4.0 * nd * pq)) / (2.0 * std::sqrt(std::numbers::pi * pq * nd));
}

}  // namespace lcsb
