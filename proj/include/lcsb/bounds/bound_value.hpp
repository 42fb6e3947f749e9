#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcsb {

struct BoundValue {
    std::string name;
    std::vector<std::pair<std::string, double>> inputs;
    double value = 0.0;
    std::string anchor;
};

struct BoundRequest {
    std::vector<double> r_values{2.0};
    double p = 0.5;
    double K = 1.0;
    std::optional<double> eps0;      // lower-bound constants need it
    std::vector<double> s_values;    // MGF bounds
    double beta = 0.6;
    double epsilon = 0.1;
    std::optional<long long> n;      // probability floors need it
};

// Every closed-form constant that applies to the request, in a fixed order.
std::vector<BoundValue> evaluate_bounds(const BoundRequest& request);

}  // namespace lcsb
