#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smolab/primes/selector.hpp"
#include "smolab/rational.hpp"

namespace smolab::euler {

inline constexpr double kStabilizedThreshold = 1e-6;

struct GRCBoundProfile {
    std::string name;  // JS, GJ, KSh, KSa-BB or LRS
    unsigned n = 2;
    Rational exponent;

    std::string display() const;  // LRS carries its degree: LRS(2)
};

/// Known bounds |alpha| < q^delta. Throws UnknownProfile.
GRCBoundProfile grc_profile(std::string_view name, unsigned n = 2);

/// Accepts "LRS(3)" as well as bare names.
GRCBoundProfile parse_grc_profile(std::string_view text, unsigned default_n = 2);

/// delta + 1/j. Throws InvalidArgument when j = 0 or delta < 0.
double key_observation_abscissa(double delta, unsigned j);

enum class Growth { Stabilized, Growing };

std::string growth_name(Growth g);

struct ProbeRow {
    double sigma = 0.0;
    std::vector<double> sums;         // one per cutoff
    std::vector<double> differences;  // successive cutoffs
    Growth verdict = Growth::Growing;
};

struct ConvergenceProbe {
    double delta = 0.0;
    std::vector<std::uint64_t> cutoffs;
    std::vector<ProbeRow> rows;
};

/// Worst-case partial log-sums sum_{v in S, q_v <= x} sum_m q_v^{-(sigma-delta) m} / m
/// = -sum log(1 - q_v^{-(sigma-delta)}), counting every place above p.
/// Stabilized when the last two cutoffs differ by less than 10^-6.
ConvergenceProbe convergence_probe(const primes::PrimeSelector& selector, double delta,
                                   const std::vector<double>& sigmas, const std::vector<std::uint64_t>& cutoffs);

}  // namespace smolab::euler
