#pragma once

#include "lcsb/rate/grid_function.hpp"

#include <vector>

namespace lcsb {

struct LegendreResult {
    GridFunction values;  // s -> sup_t (t s - f(t)) over the grid
    // True where the supremum sits on the largest grid abscissa, i.e. the
    // true transform may be larger than reported.
    std::vector<bool> edge_saturated;
};

LegendreResult legendre(const GridFunction& f, const std::vector<double>& s_values);

}  // namespace lcsb
