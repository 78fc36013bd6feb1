#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <thread>
#include <vector>
#include <atomic>

namespace smolab {

/// Process-wide worker count used by the range-parallel kernels.
/// Results never depend on this value: work is split into fixed chunks and
/// reduced in chunk order.
unsigned worker_count();
void set_worker_count(unsigned workers);

/// Reads SMOLAB_WORKERS; falls back to 1 when unset or malformed.
unsigned workers_from_environment();

/// RAII override of the worker count, mostly for tests.
class ScopedWorkers {
public:
    explicit ScopedWorkers(unsigned workers) : saved_(worker_count()) { set_worker_count(workers); }
    ~ScopedWorkers() { set_worker_count(saved_); }
    ScopedWorkers(const ScopedWorkers&) = delete;
    ScopedWorkers& operator=(const ScopedWorkers&) = delete;

private:
    unsigned saved_;
};

/// Evaluates fn(i) for i in [0, count) on up to worker_count() threads and
/// returns the results indexed by i.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
    std::vector<std::optional<T>> slots(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < count; i = next++) slots[i].emplace(fn(i));
                } catch (...) {
                    errors[w] = std::current_exception();
                    next = count;
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace smolab
