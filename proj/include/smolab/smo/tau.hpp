#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace smolab::smo {

inline constexpr std::uint64_t kMaxTauLimit = 100'000;

/// tau(n) for 0 <= n <= limit (tau(0) = 0) from q prod (1 - q^n)^24, computed
/// exactly in 128-bit integers. The cube prod (1 - q^n)^3 is the sparse series
/// sum_k (-1)^k (2k+1) q^{k(k+1)/2}; its eighth power is built by eight
/// dense-by-sparse multiplications. Throws LimitExceeded above 10^5.
std::vector<__int128> tau_coefficients(std::uint64_t limit);

std::string int128_to_string(__int128 v);

/// Writes `p,a_p` rows with a_p = tau(p) for primes p <= limit.
void write_tau_csv(const std::filesystem::path& path, std::uint64_t limit);

}  // namespace smolab::smo
