#include "ewi/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace ewi {

namespace {

unsigned default_threads() {
    if (const char* env = std::getenv("EWI_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<unsigned>& configured() {
    static std::atomic<unsigned> n{default_threads()};
    return n;
}

} // namespace

unsigned thread_count() { return configured().load(); }

void set_thread_count(unsigned n) { configured().store(n == 0 ? default_threads() : n); }

} // namespace ewi
