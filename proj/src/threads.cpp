#include "cmds/threads.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace cmds {

int worker_count(std::int64_t work_items) {
    if (work_items < 4096) return 1;
    int cap = 0;
    if (const char* env = std::getenv("CMDS_THREADS")) {
        try {
            cap = std::stoi(env);
        } catch (...) {
            cap = 0;
        }
    }
    if (cap < 1) {
        unsigned hw = std::thread::hardware_concurrency();
        cap = hw ? static_cast<int>(hw) : 1;
    }
    if (cap > 64) cap = 64;
    std::int64_t chunks = work_items / 2048;
    if (chunks < cap) cap = static_cast<int>(chunks > 0 ? chunks : 1);
    return cap;
}

} // namespace cmds
