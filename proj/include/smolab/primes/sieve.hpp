#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "smolab/parallel.hpp"

namespace smolab::primes {

inline constexpr std::uint64_t kMaxPrimeLimit = 1'000'000'000;
inline constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 20;

/// Primes <= x in ascending order. Throws LimitExceeded above kMaxPrimeLimit.
std::vector<std::uint32_t> primes_up_to(std::uint64_t x);

bool is_prime(std::uint64_t n);

/// Sieving primes up to floor(sqrt(x)), shared by all segments of a run.
std::vector<std::uint32_t> base_primes_for(std::uint64_t x);

/// Appends the primes in [lo, hi) to out, using base primes covering sqrt(hi).
void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base,
                   std::vector<std::uint32_t>& out);

inline std::size_t segment_count(std::uint64_t x) { return static_cast<std::size_t>(x / kSegmentSize + 1); }

/// Applies fn to the primes of each fixed 2^20-wide segment of [0, x] and
/// returns the per-segment results in segment order. Segments run on
/// worker_count() threads; the caller reduces the results in order, which
/// keeps sums bit-identical for any worker count.
template <class T, class Fn>
std::vector<T> map_prime_segments(std::uint64_t x, Fn&& fn) {
    const auto base = base_primes_for(x);
    return parallel_map<T>(segment_count(x), [&](std::size_t k) {
        const std::uint64_t lo = k * kSegmentSize;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + kSegmentSize, x + 1);
        std::vector<std::uint32_t> seg;
        if (lo < hi) sieve_segment(lo, hi, base, seg);
        return fn(std::span<const std::uint32_t>(seg));
    });
}

/// Sequential visit of every prime <= x in ascending order.
void for_each_prime(std::uint64_t x, const std::function<void(std::uint32_t)>& fn);

}  // namespace smolab::primes
