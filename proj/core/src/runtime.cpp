#include "an/runtime.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace an {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("AN_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w > 0) return w;
        } catch (...) {
            // fall through to hardware concurrency
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace an
