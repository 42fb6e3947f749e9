#include "lcsb/model/zero_count_set.hpp"

#include "lcsb/error.hpp"

#include <algorithm>
#include <cmath>

namespace lcsb {
namespace {

constexpr double kSnap = 1e-9;

std::int64_t floor_snapped(double x) { return static_cast<std::int64_t>(std::floor(x + kSnap)); }

}  // namespace

std::string to_string(SetKind kind) {
    switch (kind) {
        case SetKind::standard: return "standard";
        case SetKind::extended: return "extended";
        case SetKind::linear: return "linear";
    }
    return "unknown";
}

SetKind set_kind_from_string(const std::string& name) {
    if (name == "standard") return SetKind::standard;
    if (name == "extended") return SetKind::extended;
    if (name == "linear") return SetKind::linear;
    throw ValidationError("unknown zero-count set kind '" + name + "'");
}

std::int64_t zero_count_center(std::int64_t n, double q) {
    return static_cast<std::int64_t>(std::ceil(2.0 * static_cast<double>(n) * q - kSnap));
}

ZeroCountSet make_zero_count_set(std::int64_t n, const BinaryModel& model, SetKind kind,
                                 double parameter) {
    require(n >= 1, "n must be positive");
    const double two_n = 2.0 * static_cast<double>(n);
    std::int64_t half = 0;
    switch (kind) {
        case SetKind::standard:
            parameter = 0.0;
            half = floor_snapped(std::sqrt(two_n));
            break;
        case SetKind::extended:
            require(parameter > 0.5 && parameter < 2.0 / 3.0,
                    "extended exponent must lie in (1/2, 2/3)");
            half = floor_snapped(std::pow(two_n, parameter));
            break;
        case SetKind::linear:
            require(parameter > 0.0 && parameter < 2.0 * model.q(),
                    "linear width must lie in (0, 2q)");
            half = floor_snapped(parameter * static_cast<double>(n));
            break;
    }
    const std::int64_t center = zero_count_center(n, model.q());
    ZeroCountSet set;
    set.kind = kind;
    set.parameter = parameter;
    set.lo = std::max<std::int64_t>(0, center - half);
    set.hi = std::min<std::int64_t>(2 * n, center + half);
    return set;
}

}  // namespace lcsb
