#pragma once

#include "lcsb/model/binary_model.hpp"

#include <cstdint>
#include <string>

namespace lcsb {

enum class SetKind { standard, extended, linear };

std::string to_string(SetKind kind);
SetKind set_kind_from_string(const std::string& name);

// Contiguous window of zero counts around ceil(2nq).
struct ZeroCountSet {
    SetKind kind = SetKind::standard;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    double parameter = 0.0;  // exponent for extended, width factor for linear

    std::int64_t size() const { return hi - lo + 1; }
    bool contains(std::int64_t k) const { return lo <= k && k <= hi; }
};

inline constexpr double kDefaultExtendedExponent = 0.6;

// Half-widths sqrt(2n), (2n)^beta and b*n are floored; the result is
// clipped to [0, 2n]. `parameter` is ignored for the standard kind.
ZeroCountSet make_zero_count_set(std::int64_t n, const BinaryModel& model, SetKind kind,
                                 double parameter = 0.0);

// ceil(2nq), guarded against representation error when 2nq is an integer.
std::int64_t zero_count_center(std::int64_t n, double q);

}  // namespace lcsb
