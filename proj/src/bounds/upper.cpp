#include "lcsb/bounds/upper.hpp"

#include "lcsb/bounds/special.hpp"
#include "lcsb/error.hpp"

#include <cmath>
#include <numbers>

namespace lcsb {

double upper_C(double r, double K) {
    require(r >= 2.0, "C(r) needs r >= 2");
    require(K > 0.0, "K must be positive");
    const double ln2 = std::numbers::ln2;
    return std::pow(K, r) * (std::pow(ln2, r / 2.0) + r * upper_incomplete_gamma(r / 2.0, ln2));
}

double upper_D(double r, double K) {
    require(r > 0.0, "D(r) needs r > 0");
    require(K > 0.0, "K must be positive");
    return r * std::pow(K, r) * std::tgamma(r / 2.0);
}

double upper_E(double r, double p) {
    require(r >= 2.0, "E(r) needs r >= 2");
    require(p > 0.0 && p < 1.0, "p must lie strictly between 0 and 1");
    const double mismatch = 2.0 * p * (1.0 - p);
    return std::pow(r - 1.0, r) * std::pow(2.0, r / 2.0 - 1.0) * mismatch;
}

MgfUpper upper_mgf(double t) {
    require(t > 0.0, "t must be positive");
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const double g = std::exp(t * t / 4.0);
    return {1.0 + t * sqrt_pi * (1.0 + std::erf(t / 2.0)) * g, 1.0 + 2.0 * t * sqrt_pi * g};
}

}  // namespace lcsb
