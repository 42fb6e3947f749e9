#include "lcsb/rate/legendre.hpp"

#include "lcsb/error.hpp"

#include <algorithm>
#include <limits>

namespace lcsb {

LegendreResult legendre(const GridFunction& f, const std::vector<double>& s_values) {
    require(!f.empty(), "grid is empty");
    for (std::size_t i = 0; i < f.size(); ++i) {
        require(f.points[i].first >= 0.0, "grid abscissae must be non-negative");
        require(i == 0 || f.points[i].first > f.points[i - 1].first,
                "grid abscissae must be strictly increasing");
    }
    std::vector<double> ss = s_values;
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());

    LegendreResult out;
    const std::size_t last = f.size() - 1;
    for (double s : ss) {
        double best = -std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double v = f.points[i].first * s - f.points[i].second;
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        out.values.points.emplace_back(s, best);
        out.edge_saturated.push_back(arg == last && f.size() > 1);
    }
    return out;
}

}  // namespace lcsb
