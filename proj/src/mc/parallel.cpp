#include "lcsb/mc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace lcsb {

int default_workers() {
    if (const char* env = std::getenv(kWorkersEnv)) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int resolve_workers(int requested) { return requested > 0 ? requested : default_workers(); }

}  // namespace lcsb
