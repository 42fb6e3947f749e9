#pragma once

#include "lcsb/mc/estimate.hpp"
#include "lcsb/model/binary_model.hpp"
#include "lcsb/rate/grid_function.hpp"

#include <cstdint>
#include <vector>

namespace lcsb {

struct GammaStarResult {
    GridFunction per_n;                 // n -> mean score / n
    std::vector<double> per_n_se;
    double extrapolated = 0.0;          // intercept a of  mean/n = a - c n^{-1/2}
    double extrapolated_se = 0.0;       // propagated from the per-n standard errors
    double slope_c = 0.0;
};

// Replicates for grid entry k use seed + k so the n values are independent.
GammaStarResult estimate_gamma_star(const std::vector<std::int64_t>& n_grid,
                                    const BinaryModel& model, std::size_t reps,
                                    std::uint64_t seed, int workers = 0);

// Least-squares fit of y = a - c x^{-1/2}; returns (a, c, weights of a in y).
struct InverseRootFit {
    double intercept;
    double slope_c;
    std::vector<double> intercept_weights;
};
InverseRootFit fit_inverse_root(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace lcsb
