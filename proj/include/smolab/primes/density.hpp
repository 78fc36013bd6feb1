#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smolab/primes/field_spec.hpp"
#include "smolab/primes/selector.hpp"

namespace smolab::primes {

enum class Estimand { Natural, Dirichlet };

/// How a Dirichlet sum weighs a selected prime: by the norms of the places
/// it stands for (p^f, with multiplicity), or as the bare rational prime p.
enum class NormMode { PlaceNorms, RationalPrimes };

struct DensityEstimate {
    Estimand estimand = Estimand::Natural;
    std::vector<double> points;           // x values, or s values
    std::vector<double> partial;          // counting ratio, or sum / log(1/(s-1))
    std::vector<double> sums;             // Dirichlet: truncated sums over S
    std::vector<std::uint64_t> cutoffs;   // Dirichlet: cutoff paired with each s
    std::vector<bool> truncation_bias;    // Dirichlet: cutoff below exp(4/(s-1))
    double extrapolated = 0.0;
    // Dirichlet diagnostics: fitted pole coefficient of sum_S q^-s and of the
    // all-primes reference, both against log(1/(s-1)) minus the analytic tail.
    double absolute_coefficient = 0.0;
    double reference_coefficient = 0.0;
    std::uint64_t selected = 0;  // Natural: selected primes at the last grid point
    std::uint64_t universe = 0;  // Natural: unramified primes at the last grid point
};

/// #{p in S : p <= x} / #{unramified p <= x} at each grid point; the last ratio is the point estimate.
DensityEstimate natural_density_estimate(const PrimeSelector& selector, const std::vector<std::uint64_t>& x_grid);

/// The default s grid 1 + 2^-3, ..., 1 + 2^-6.
std::vector<double> default_dirichlet_grid();

/// Partial sums sum_{v in S, q_v <= x(s)} q_v^{-s} with x(s) = min(cutoff, exp(4/(s-1))).
/// The extrapolated value fits  sum = c (log(1/(s-1)) - E1((s-1) log x(s))) + a + b (s-1)
/// for S and for all unramified rational primes, and reports c_S / c_all.
DensityEstimate dirichlet_density_estimate(const PrimeSelector& selector, const std::vector<double>& s_grid,
                                           std::uint64_t cutoff, NormMode mode = NormMode::PlaceNorms);

struct PrimeZeta {
    double s = 0.0;
    std::uint64_t cutoff = 0;
    double value = 0.0;       // sum_{p <= x} p^-s
    double deviation = 0.0;   // value - log(1/(s-1))
    double tail_estimate = 0.0;  // E1((s-1) log x), the integral model of sum_{p > x} p^-s

    /// value + tail_estimate - log(1/(s-1)): the O(1) term with the truncation removed.
    double corrected_deviation() const { return deviation + tail_estimate; }
};

PrimeZeta prime_zeta(double s, std::uint64_t cutoff);

struct FrobeniusStatistics {
    FieldSpec field;
    std::uint64_t cutoff = 0;
    std::vector<std::uint64_t> counts;       // per coset, in FieldSpec::coset_reps() order
    std::vector<double> fractions;
    std::vector<std::uint64_t> first_prime;  // 0 when the class was never hit
    std::optional<std::uint64_t> first_hit_bound;  // every class nonempty from here on
    std::uint64_t unramified = 0;
};

FrobeniusStatistics frobenius_statistics(const FieldSpec& field, std::uint64_t cutoff);

/// E1(x) = integral_x^inf e^-t / t dt, x > 0.
double exponential_integral_e1(double x);

}  // namespace smolab::primes
