#include "qei/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qei {

int max_threads() {
    if (const char* env = std::getenv("QEL_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1) return cap;
        } catch (...) {
            // unparsable cap: fall through to hardware default
        }
    }
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw < 1 ? 1 : hw;
}

} // namespace qei
