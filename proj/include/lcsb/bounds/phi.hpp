#pragma once

#include <cstdint>
#include <string>

namespace lcsb {

/**
 * Convex nondecreasing transform applied to absolute deviations.
 *   power:              x^r, r >= 1
 *   exponential:        exp(t x), t > 0
 *   scaled_exponential: exp(s x / sqrt(2n)), s > 0
 */
class PhiSpec {
public:
    enum class Kind { power, exponential, scaled_exponential };

    static PhiSpec power(double r);
    static PhiSpec exponential(double t);
    static PhiSpec scaled_exponential(double s, std::int64_t n);

    Kind kind() const { return kind_; }
    double rate() const { return rate_; }
    std::int64_t n() const { return n_; }
    double operator()(double x) const;
    std::string describe() const;

private:
    PhiSpec(Kind kind, double rate, std::int64_t n) : kind_(kind), rate_(rate), n_(n) {}

    Kind kind_;
    double rate_;
    std::int64_t n_;
};

}  // namespace lcsb
