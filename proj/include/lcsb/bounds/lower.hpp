#pragma once

#include "lcsb/bounds/phi.hpp"
#include "lcsb/model/zero_count_set.hpp"

namespace lcsb {

// Tight constant b with 1/b = e^{-1/(2pq)} / (2 sqrt(pi pq)).
double b_const(double p);

// Lower-bound constants for E|L_n - E L_n|^r >= d * n^(r/2), ordered d3 < d4 < d1 < d2.
double lower_d1(double r, double eps0, double p);  // integral comparison over the standard set
double lower_d2(double r, double eps0, double p);  // Gaussian limit, xi ~ N(0, pq)
double lower_d3(double r, double eps0, double p);  // uniform approximation, simple form
double lower_d4(double r, double eps0, double p);  // uniform approximation, refined form

// Uniform floor of P(U_n = k) over the extended window with exponent beta.
double phi_floor_extended(std::int64_t n, double p, double beta, double epsilon);

// min over a in [lo, hi] of sum_{u in set} phi((slope/k0) |u - a|) * floor
double fastconv_bound(const PhiSpec& phi, const ZeroCountSet& set, double slope_delta,
                      std::int64_t k0, double phi_floor);

struct UniformBound {
    double refined;
    double simple;
};

// Bound for windows of size at least c / phi_n.
UniformBound uniform_bound(const PhiSpec& phi, double c, double eps0, double phi_n);

// E exp(a |xi|) with xi ~ N(0, pq) and a = s eps0 / sqrt 2.
double mgf_lower_limit(double s, double eps0, double p);

// 1 - max_{t>0} P(pq eps0 t / 2 < xi < pq t), xi ~ N(0, pq). Returns 1 for eps0 >= 2.
double lambda_const(double eps0, double p);

}  // namespace lcsb
