#include "smolab/primes/sieve.hpp"

#include <cmath>

#include "smolab/error.hpp"

namespace smolab::primes {

namespace {

void check_limit(std::uint64_t x) {
    if (x > kMaxPrimeLimit)
        throw Error(ErrorCode::LimitExceeded, "prime limit " + std::to_string(x) + " exceeds 10^9");
}

std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

std::vector<std::uint32_t> base_primes_for(std::uint64_t x) {
    check_limit(x);
    const auto limit = isqrt(x);
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base,
                   std::vector<std::uint32_t>& out) {
    std::vector<std::uint8_t> composite(hi - lo, 0);
    for (const std::uint64_t p : base) {
        if (p * p >= hi) break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t m = start; m < hi; m += p) composite[m - lo] = 1;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n < hi; ++n)
        if (!composite[n - lo]) out.push_back(static_cast<std::uint32_t>(n));
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t x) {
    check_limit(x);
    const auto chunks = map_prime_segments<std::vector<std::uint32_t>>(
        x, [](std::span<const std::uint32_t> seg) { return std::vector<std::uint32_t>(seg.begin(), seg.end()); });
    std::vector<std::uint32_t> out;
    for (const auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    return out;
}

void for_each_prime(std::uint64_t x, const std::function<void(std::uint32_t)>& fn) {
    check_limit(x);
    const auto base = base_primes_for(x);
    std::vector<std::uint32_t> seg;
    for (std::uint64_t lo = 0; lo <= x; lo += kSegmentSize) {
        seg.clear();
        sieve_segment(lo, std::min<std::uint64_t>(lo + kSegmentSize, x + 1), base, seg);
        for (auto p : seg) fn(p);
    }
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 7; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace smolab::primes
