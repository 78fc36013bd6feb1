#include "smolab/smo/tau.hpp"

#include <algorithm>
#include <fstream>

#include "smolab/error.hpp"
#include "smolab/parallel.hpp"
#include "smolab/primes/sieve.hpp"

namespace smolab::smo {

namespace {

using i128 = __int128;

struct Term {
    std::size_t exponent;
    i128 coefficient;
};

i128 checked_mul_add(i128 acc, i128 a, i128 b) {
    i128 prod = 0;
    if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
        throw Error(ErrorCode::LimitExceeded, "128-bit overflow in tau expansion");
    return acc;
}

// dense * sparse, truncated to dense.size() terms
std::vector<i128> multiply(const std::vector<i128>& dense, const std::vector<Term>& sparse) {
    const std::size_t n = dense.size();
    constexpr std::size_t kBlock = 4096;
    const auto blocks = parallel_map<std::vector<i128>>((n + kBlock - 1) / kBlock, [&](std::size_t b) {
        const std::size_t lo = b * kBlock, hi = std::min(n, lo + kBlock);
        std::vector<i128> out(hi - lo, 0);
        for (std::size_t i = lo; i < hi; ++i) {
            i128 acc = 0;
            for (const auto& t : sparse) {
                if (t.exponent > i) break;
                acc = checked_mul_add(acc, t.coefficient, dense[i - t.exponent]);
            }
            out[i - lo] = acc;
        }
        return out;
    });
    std::vector<i128> result;
    result.reserve(n);
    for (const auto& b : blocks) result.insert(result.end(), b.begin(), b.end());
    return result;
}

}  // namespace

std::vector<__int128> tau_coefficients(std::uint64_t limit) {
    if (limit > kMaxTauLimit) throw Error(ErrorCode::LimitExceeded, "tau limit exceeds 10^5");
    std::vector<i128> tau(limit + 1, 0);
    if (limit == 0) return tau;
    const std::size_t n = limit;  // coefficients q^0 .. q^{limit-1} of prod (1 - q^k)^24

    std::vector<Term> cube;
    for (std::size_t k = 0;; ++k) {
        const std::size_t e = k * (k + 1) / 2;
        if (e >= n) break;
        cube.push_back({e, static_cast<i128>((k % 2 ? -1 : 1) * static_cast<long long>(2 * k + 1))});
    }
    std::vector<i128> power(n, 0);
    power[0] = 1;
    for (int i = 0; i < 8; ++i) power = multiply(power, cube);
    for (std::size_t k = 1; k <= limit; ++k) tau[k] = power[k - 1];
    return tau;
}

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (negative) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

void write_tau_csv(const std::filesystem::path& path, std::uint64_t limit) {
    const auto tau = tau_coefficients(limit);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << "p,a_p\n";
    for (auto p : primes::primes_up_to(limit)) out << p << ',' << int128_to_string(tau[p]) << '\n';
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace smolab::smo
