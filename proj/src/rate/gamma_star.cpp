#include "lcsb/rate/gamma_star.hpp"

#include "lcsb/error.hpp"
#include "lcsb/mc/moments.hpp"

#include <cmath>

namespace lcsb {

InverseRootFit fit_inverse_root(const std::vector<double>& x, const std::vector<double>& y) {
    require(x.size() == y.size(), "fit needs matching lengths");
    require(x.size() >= 3, "fit needs at least three grid points");
    const std::size_t m = x.size();
    std::vector<double> z(m);
    double zbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        require(x[i] > 0.0, "fit abscissae must be positive");
        z[i] = 1.0 / std::sqrt(x[i]);
        zbar += z[i];
        ybar += y[i];
    }
    zbar /= static_cast<double>(m);
    ybar /= static_cast<double>(m);
    double szz = 0.0, szy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        szz += (z[i] - zbar) * (z[i] - zbar);
        szy += (z[i] - zbar) * (y[i] - ybar);
    }
    require(szz > 0.0, "fit abscissae must not all coincide");
    const double beta = szy / szz;  // y = alpha + beta z, so c = -beta
    InverseRootFit fit{ybar - beta * zbar, -beta, std::vector<double>(m)};
    for (std::size_t i = 0; i < m; ++i) {
        fit.intercept_weights[i] =
            1.0 / static_cast<double>(m) - zbar * (z[i] - zbar) / szz;
    }
    return fit;
}

GammaStarResult estimate_gamma_star(const std::vector<std::int64_t>& n_grid,
                                    const BinaryModel& model, std::size_t reps,
                                    std::uint64_t seed, int workers) {
    require(n_grid.size() >= 3, "need at least three grid points");
    for (std::size_t k = 1; k < n_grid.size(); ++k) {
        require(n_grid[k] > n_grid[k - 1], "n grid must be strictly ascending");
    }
    GammaStarResult out;
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < n_grid.size(); ++k) {
        const std::int64_t n = n_grid[k];
        const Estimate e = estimate_mean(n, model, reps, seed + k, workers);
        const double nd = static_cast<double>(n);
        out.per_n.points.emplace_back(nd, e.value / nd);
        out.per_n_se.push_back(e.std_error / nd);
        xs.push_back(nd);
        ys.push_back(e.value / nd);
    }
    const InverseRootFit fit = fit_inverse_root(xs, ys);
    out.extrapolated = fit.intercept;
    out.slope_c = fit.slope_c;
    double var = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        var += fit.intercept_weights[k] * fit.intercept_weights[k] * out.per_n_se[k] * out.per_n_se[k];
    }
    out.extrapolated_se = std::sqrt(var);
    return out;
}

}  // namespace lcsb
