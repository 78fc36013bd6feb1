#include "smolab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace smolab {

namespace {
std::atomic<unsigned> g_workers{workers_from_environment()};
}

unsigned workers_from_environment() {
    const char* env = std::getenv("SMOLAB_WORKERS");
    if (env == nullptr) return 1;
    try {
        const long v = std::stol(env);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    return 1;
}

unsigned worker_count() { return g_workers.load(); }

void set_worker_count(unsigned workers) { g_workers.store(workers == 0 ? 1 : workers); }

}  // namespace smolab
