#include "lcsb/bounds/special.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

namespace lcsb {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double upper_incomplete_gamma(double a, double x) { return boost::math::tgamma(a, x); }

}  // namespace lcsb
