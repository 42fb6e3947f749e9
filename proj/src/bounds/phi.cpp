#include "lcsb/bounds/phi.hpp"

#include "lcsb/error.hpp"

#include <cmath>
#include <sstream>

namespace lcsb {

PhiSpec PhiSpec::power(double r) {
    require(std::isfinite(r) && r >= 1.0, "power transform needs r >= 1");
    return PhiSpec(Kind::power, r, 0);
}

PhiSpec PhiSpec::exponential(double t) {
    require(std::isfinite(t) && t > 0.0, "exponential transform needs t > 0");
    return PhiSpec(Kind::exponential, t, 0);
}

PhiSpec PhiSpec::scaled_exponential(double s, std::int64_t n) {
    require(std::isfinite(s) && s > 0.0, "scaled exponential needs s > 0");
    require(n >= 1, "scaled exponential needs n >= 1");
    return PhiSpec(Kind::scaled_exponential, s, n);
}

double PhiSpec::operator()(double x) const {
    switch (kind_) {
        case Kind::power: return std::pow(x, rate_);
        case Kind::exponential: return std::exp(rate_ * x);
        case Kind::scaled_exponential:
            return std::exp(rate_ * x / std::sqrt(2.0 * static_cast<double>(n_)));
    }
    return 0.0;
}

std::string PhiSpec::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::power: os << "power(r=" << rate_ << ")"; break;
        case Kind::exponential: os << "exponential(t=" << rate_ << ")"; break;
        case Kind::scaled_exponential: os << "scaled_exponential(s=" << rate_ << ",n=" << n_ << ")"; break;
    }
    return os.str();
}

}  // namespace lcsb
