#pragma once

#include "lcsb/model/binary_model.hpp"

#include <cstdint>

namespace lcsb {

// log P(U = k) for U ~ Binomial(n2, q), where q is the success probability.
// Uses the saddle-point form (Stirling remainders plus a deviance term)
// rather than differences of log-gamma values, which lose about
// log10(n2) digits to cancellation.
double binomial_pmf_log(std::int64_t n2, double q, std::int64_t k);

// Stirling remainder log(x!) - [(x + 1/2) log x - x + log sqrt(2 pi)]
double stirling_remainder(double x);

// x log(x / m) + m - x, accurate when x is close to m.
double deviance_term(double x, double m);

// Local normal approximation to P(U_n = k) with U_n ~ Binomial(2n, q).
double gaussian_local_pmf(std::int64_t n, const BinaryModel& model, double k);

}  // namespace lcsb
