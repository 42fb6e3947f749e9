#pragma once

#include "lcsb/mc/estimate.hpp"
#include "lcsb/model/binary_model.hpp"

#include <cstdint>

namespace lcsb {

struct PropMgfCheck {
    Estimate lhs;      // mean of exp(t (L - ell(c)) / sqrt(2n)), c = ceil(2nq)
    Estimate ell_center;
    double rhs = 0.0;  // lambda(eps0) * exp(pq eps0^2 t^2 / 8)
    bool violated = false;  // lhs + 3 SE < rhs
};

// Scores and the conditional mean at the centre use the same seed and replicate count.
PropMgfCheck verify_prop_mgf_lower(std::int64_t n, const BinaryModel& model, double t, double eps0,
                                   std::size_t reps, std::uint64_t seed, int workers = 0);

}  // namespace lcsb
