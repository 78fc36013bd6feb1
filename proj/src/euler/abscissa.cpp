#include "smolab/euler/abscissa.hpp"

#include <algorithm>
#include <cmath>

#include "smolab/error.hpp"
#include "smolab/primes/sieve.hpp"

namespace smolab::euler {

std::string GRCBoundProfile::display() const {
    return name == "LRS" ? "LRS(" + std::to_string(n) + ")" : name;
}

GRCBoundProfile grc_profile(std::string_view name, unsigned n) {
    GRCBoundProfile p;
    p.name = std::string(name);
    p.n = n;
    if (name == "JS")
        p.exponent = Rational(1, 2);
    else if (name == "GJ")
        p.exponent = Rational(1, 4);
    else if (name == "KSh")
        p.exponent = Rational(1, 9);
    else if (name == "KSa-BB")
        p.exponent = Rational(7, 64);
    else if (name == "LRS") {
        if (n == 0) throw Error(ErrorCode::InvalidArgument, "LRS needs n >= 1");
        p.exponent = Rational(1, 2) - Rational(1, std::int64_t{n} * n + 1);
    } else
        throw Error(ErrorCode::UnknownProfile, "unknown bound profile '" + std::string(name) + "'");
    return p;
}

GRCBoundProfile parse_grc_profile(std::string_view text, unsigned default_n) {
    const auto open = text.find('(');
    if (open == std::string_view::npos) return grc_profile(text, default_n);
    if (text.back() != ')') throw Error(ErrorCode::UnknownProfile, "malformed profile '" + std::string(text) + "'");
    const auto inner = std::string(text.substr(open + 1, text.size() - open - 2));
    unsigned n = 0;
    try {
        std::size_t used = 0;
        n = static_cast<unsigned>(std::stoul(inner, &used));
        if (used != inner.size()) throw std::invalid_argument(inner);
    } catch (const std::exception&) {
        throw Error(ErrorCode::UnknownProfile, "malformed profile '" + std::string(text) + "'");
    }
    return grc_profile(text.substr(0, open), n);
}

double key_observation_abscissa(double delta, unsigned j) {
    if (j == 0) throw Error(ErrorCode::InvalidArgument, "residue degree j must be at least 1");
    if (delta < 0) throw Error(ErrorCode::InvalidArgument, "delta must be nonnegative");
    return delta + 1.0 / j;
}

std::string growth_name(Growth g) { return g == Growth::Stabilized ? "stabilized" : "growing"; }

ConvergenceProbe convergence_probe(const primes::PrimeSelector& selector, double delta,
                                   const std::vector<double>& sigmas, const std::vector<std::uint64_t>& cutoffs) {
    if (cutoffs.empty()) throw Error(ErrorCode::InvalidArgument, "no cutoffs");
    for (std::size_t i = 1; i < cutoffs.size(); ++i)
        if (cutoffs[i] <= cutoffs[i - 1]) throw Error(ErrorCode::InvalidArgument, "cutoffs must be strictly ascending");
    if (cutoffs.back() > primes::kMaxPrimeLimit) throw Error(ErrorCode::LimitExceeded, "cutoff exceeds 10^9");
    for (double s : sigmas)
        if (s <= delta) throw Error(ErrorCode::InvalidArgument, "sigma must exceed delta");

    const double top = static_cast<double>(cutoffs.back());
    std::uint64_t p_max = cutoffs.back();
    if (const auto j = selector.uniform_degree(); j && *j > 1)
        p_max = static_cast<std::uint64_t>(std::pow(top, 1.0 / *j)) + 1;

    const auto nc = cutoffs.size();
    const auto ns = sigmas.size();
    using Table = std::vector<double>;  // [sigma * nc + bucket]
    const auto parts = primes::map_prime_segments<Table>(p_max, [&](std::span<const std::uint32_t> seg) {
        Table t(ns * nc, 0.0);
        for (std::uint64_t p : seg) {
            const auto item = selector.item(p);
            if (!item) continue;
            const double q = item->norm();
            if (q > top) continue;
            const auto bucket = static_cast<std::size_t>(
                std::lower_bound(cutoffs.begin(), cutoffs.end(), q,
                                 [](std::uint64_t c, double v) { return static_cast<double>(c) < v; }) -
                cutoffs.begin());
            const double lq = item->log_norm();
            for (std::size_t i = 0; i < ns; ++i)
                t[i * nc + bucket] += item->places * -std::log1p(-std::exp(-(sigmas[i] - delta) * lq));
        }
        return t;
    });

    ConvergenceProbe probe;
    probe.delta = delta;
    probe.cutoffs = cutoffs;
    for (std::size_t i = 0; i < ns; ++i) {
        ProbeRow row;
        row.sigma = sigmas[i];
        double running = 0.0;
        for (std::size_t b = 0; b < nc; ++b) {
            for (const auto& t : parts) running += t[i * nc + b];
            row.sums.push_back(running);
        }
        for (std::size_t b = 1; b < nc; ++b) row.differences.push_back(row.sums[b] - row.sums[b - 1]);
        row.verdict = !row.differences.empty() && row.differences.back() < kStabilizedThreshold ? Growth::Stabilized
                                                                                             : Growth::Growing;
        probe.rows.push_back(std::move(row));
    }
    return probe;
}

}  // namespace smolab::euler
