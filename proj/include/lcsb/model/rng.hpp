#pragma once

#include <array>
#include <cstdint>

namespace lcsb {

// Philox4x32-10 block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Independent stream families. Each (seed, stream, index) triple names a
// distinct counter range, so draws never depend on which worker runs them.
enum class Stream : std::uint32_t {
    pairs = 1,
    conditional = 2,
    transform = 3,
    bootstrap = 4,
    flip = 5,
};

struct RngPlan {
    std::uint64_t master_seed = 0;
    std::uint64_t replicate_index = 0;
};

class CounterRng {
public:
    CounterRng(std::uint64_t seed, Stream stream, std::uint64_t index);
    CounterRng(const RngPlan& plan, Stream stream)
        : CounterRng(plan.master_seed, stream, plan.replicate_index) {}

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    // Uniform on [0, bound), Lemire's multiply-and-reject. bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform on [0, 1) with 53 random bits.
    double uniform01();

private:
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> block_{};
    int used_ = 4;
};

}  // namespace lcsb
