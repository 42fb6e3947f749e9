#pragma once

#include <utility>
#include <vector>

namespace lcsb {

// Sorted (abscissa, value) pairs with strictly increasing abscissae.
struct GridFunction {
    std::vector<std::pair<double, double>> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

}  // namespace lcsb
