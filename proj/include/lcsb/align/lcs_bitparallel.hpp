#pragma once

#include "lcsb/align/scoring.hpp"

#include <cstdint>
#include <vector>

namespace lcsb {

// LCS length of a binary pair with a 64-bit word bit-vector recurrence.
int lcs_bitparallel(const SequencePair& pair);
int lcs_bitparallel(const Sequence& x, const Sequence& y);

/**
 * Answers "what is the LCS after changing one letter" in O(n) per query.
 *
 * Keeps every prefix row and every suffix row of the bit-vector recurrence
 * in both orientations. A change at row i re-runs one step from prefix row
 * i and joins it with suffix row i+1 by a linear max over the split column.
 */
class SingleEditLcs {
public:
    explicit SingleEditLcs(const SequencePair& pair);

    int base() const { return base_; }
    // LCS after setting x[pos] (in_x) or y[pos] to `letter`.
    int with_letter(bool in_x, std::size_t pos, Letter letter) const;

private:
    struct Orientation {
        std::size_t n = 0;
        std::size_t words = 0;
        std::vector<std::uint64_t> mask[2];          // columns holding each letter
        std::vector<std::uint64_t> prefix;           // (n+1) rows
        std::vector<std::uint64_t> suffix;           // (n+1) rows, reversed strings
        void build(const Sequence& rows, const Sequence& cols);
        int query(std::size_t row, Letter letter) const;
    };

    Orientation by_x_;  // rows walk x, bits index y
    Orientation by_y_;
    int base_ = 0;
};

}  // namespace lcsb
