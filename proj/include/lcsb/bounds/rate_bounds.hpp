#pragma once

#include <cstdint>
#include <string>

namespace lcsb {

// Law of B - q with B ~ Bernoulli(q): takes 1-q w.p. q and -q otherwise.
double rademacher_mgf(double t, double q);
double rademacher_cumulant(double t, double q);

// Unique positive root of 2 d t - b^2 - 2 K_q(d t) = 0.
double solve_t0(double slope_delta, double q, double b_width);

// The function whose root solve_t0 returns.
double t0_equation(double t, double slope_delta, double q, double b_width);

// Bernoulli relative entropy D(x || q) and its quadratic upper bound.
double kl_bernoulli(double x, double q);
double kl_quadratic_bound(double x, double q);

// Lower bound on log P(U = k), U ~ Binomial(n2, q), from the entropy form of
// the binomial coefficient.
double entropy_binom_floor(std::int64_t n2, std::int64_t k, double q);

// Largest b with D(x || q) <= eta / 4 whenever |x - q| <= b / 2.
double b_width_for_eta(double eta, double q);

struct RateEnvelope {
    double lower;
    double upper_local;
    // The upper bound holds on an interval above the limit constant whose
    // radius is not computable; it is always reported as unknown.
    bool validity_radius_known = false;
};

RateEnvelope rate_envelope(double s, double gamma_star, double K, double slope_delta, double q);

}  // namespace lcsb
