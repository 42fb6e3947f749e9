#include "lcsb/align/lcs_bitparallel.hpp"

#include "lcsb/error.hpp"

#include <algorithm>
#include <bit>

namespace lcsb {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

void require_binary(const Sequence& s) {
    for (Letter c : s) require(c <= 1, "bit-parallel LCS needs a binary alphabet");
}

void build_masks(const Sequence& cols, std::size_t words, std::vector<std::uint64_t> mask[2]) {
    mask[0].assign(words, 0);
    mask[1].assign(words, 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        mask[cols[j]][j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
    }
}

// One row of V' = (V + (V & M)) | (V & ~M) with the carry rippling across
// words. Padding bits above n start at one and stay one because their mask
// bits are zero, so zeros can be counted over whole words.
inline void advance(const std::uint64_t* v, const std::uint64_t* m, std::uint64_t* out,
                    std::size_t words) {
    std::uint64_t carry = 0;
    for (std::size_t k = 0; k < words; ++k) {
        const std::uint64_t vk = v[k];
        const std::uint64_t u = vk & m[k];
        const std::uint64_t s = vk + u;
        const std::uint64_t c1 = s < vk;
        const std::uint64_t t = s + carry;
        const std::uint64_t c2 = t < s;
        out[k] = t | (vk & ~m[k]);
        carry = c1 | c2;
    }
}

int count_zeros(const std::uint64_t* v, std::size_t words) {
    int ones = 0;
    for (std::size_t k = 0; k < words; ++k) ones += std::popcount(v[k]);
    return static_cast<int>(words * kWordBits) - ones;
}

inline bool bit(const std::uint64_t* v, std::size_t j) {
    return (v[j / kWordBits] >> (j % kWordBits)) & 1u;
}

}  // namespace

int lcs_bitparallel(const Sequence& x, const Sequence& y) {
    require(x.size() == y.size(), "sequences must have equal length");
    require_binary(x);
    require_binary(y);
    const std::size_t words = word_count(y.size());
    if (words == 0) return 0;
    std::vector<std::uint64_t> mask[2];
    build_masks(y, words, mask);
    std::vector<std::uint64_t> v(words, ~std::uint64_t{0}), next(words);
    for (Letter c : x) {
        advance(v.data(), mask[c].data(), next.data(), words);
        v.swap(next);
    }
    return count_zeros(v.data(), words);
}

int lcs_bitparallel(const SequencePair& pair) { return lcs_bitparallel(pair.x, pair.y); }

void SingleEditLcs::Orientation::build(const Sequence& rows, const Sequence& cols) {
    n = rows.size();
    words = word_count(n);
    build_masks(cols, words, mask);
    Sequence rev_cols(cols.rbegin(), cols.rend());
    std::vector<std::uint64_t> rev_mask[2];
    build_masks(rev_cols, words, rev_mask);

    prefix.assign((n + 1) * words, ~std::uint64_t{0});
    suffix.assign((n + 1) * words, ~std::uint64_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        advance(&prefix[i * words], mask[rows[i]].data(), &prefix[(i + 1) * words], words);
        advance(&suffix[i * words], rev_mask[rows[n - 1 - i]].data(), &suffix[(i + 1) * words],
                words);
    }
}

int SingleEditLcs::Orientation::query(std::size_t row, Letter letter) const {
    thread_local std::vector<std::uint64_t> scratch;
    scratch.resize(words);
    advance(&prefix[row * words], mask[letter].data(), scratch.data(), words);

    // head(j) = LCS(rows[0..row] edited, cols[0..j)); tail(j) = LCS(rows(row..n), cols[j..n)).
    // The suffix row counts columns from the right end.
    const std::uint64_t* head_row = scratch.data();
    const std::uint64_t* tail_row = &suffix[(n - 1 - row) * words];
    int head = 0;
    int tail = count_zeros(tail_row, words);
    int best = tail;
    for (std::size_t j = 1; j <= n; ++j) {
        head += !bit(head_row, j - 1);
        tail -= !bit(tail_row, n - j);
        best = std::max(best, head + tail);
    }
    return best;
}

SingleEditLcs::SingleEditLcs(const SequencePair& pair) {
    require(pair.x.size() == pair.y.size(), "sequences must have equal length");
    require_binary(pair.x);
    require_binary(pair.y);
    by_x_.build(pair.x, pair.y);
    by_y_.build(pair.y, pair.x);
    base_ = pair.n() == 0 ? 0 : count_zeros(&by_x_.prefix[pair.n() * by_x_.words], by_x_.words);
}

int SingleEditLcs::with_letter(bool in_x, std::size_t pos, Letter letter) const {
    require(pos < by_x_.n, "edit position out of range");
    require(letter <= 1, "bit-parallel LCS needs a binary alphabet");
    return (in_x ? by_x_ : by_y_).query(pos, letter);
}

}  // namespace lcsb
