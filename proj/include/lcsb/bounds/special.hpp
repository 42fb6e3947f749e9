#pragma once

namespace lcsb {

// Standard normal CDF.
double normal_cdf(double x);

// Non-normalised upper incomplete gamma, integral from x to infinity of e^-u u^(a-1) du.
double upper_incomplete_gamma(double a, double x);

}  // namespace lcsb
