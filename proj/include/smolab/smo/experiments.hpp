#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smolab/euler/abscissa.hpp"
#include "smolab/euler/euler_product.hpp"
#include "smolab/primes/field_spec.hpp"
#include "smolab/primes/selector.hpp"
#include "smolab/rational.hpp"
#include "smolab/smo/representation.hpp"

namespace smolab::smo {

inline constexpr double kLocalTolerance = 1e-9;
inline constexpr std::uint64_t kMaxPoleCutoff = 100'000'000;

struct DensityPoint {
    std::uint64_t x = 0;
    std::uint64_t compared = 0;
    std::uint64_t disagreements = 0;
    double fraction = 0.0;
};

struct AgreementReport {
    std::string label_a, label_b;
    unsigned degree = 0;
    std::uint64_t requested_limit = 0;
    std::uint64_t scanned_limit = 0;  // capped by data coverage
    std::uint64_t compared = 0;       // primes with data on both sides
    std::vector<std::uint64_t> disagreements;
    std::optional<std::uint64_t> first_disagreement;
    std::vector<DensityPoint> densities;  // at powers of ten and at the scan limit
    Rational refined_threshold{1, 8};
    Rational nondihedral_threshold{1, 4};
    Rational conjectural_threshold;  // 1/(2n^2)
};

/// Primes p <= X where the reciprocal polynomials of the local factors differ
/// (coefficientwise within 10^-9). Throws DegreeMismatch.
AgreementReport compare_local(const RepresentationData& a, const RepresentationData& b, std::uint64_t X);

struct PoleOrderEstimate {
    std::vector<double> eps;
    std::vector<std::uint64_t> cutoffs;  // x(eps) = min(10^8, ceil(exp(1.5/eps)), coverage)
    std::vector<bool> coverage_limited;
    std::vector<double> values;          // truncated log L_S(1 + eps)
    double slope = 0.0;
    double intercept = 0.0;
    double slope_low = 0.0;   // 95% interval
    double slope_high = 0.0;
};

/// {1/16, 1/12, 1/10, 1/8} when the data reaches 10^8; otherwise the 1/k,
/// 4 <= k <= 16, with exp(1.5 k) inside the coverage. InfeasibleEpsilon when
/// fewer than three remain.
std::vector<double> default_eps_grid(std::optional<std::uint64_t> coverage = std::nullopt);

/// Least-squares slope of sum_{m <= x(eps)} c_m m^{-(1+eps)} (the log-expansion
/// of ep over S) against log(1/eps). InfeasibleEpsilon for eps < 1/log(10^9).
PoleOrderEstimate pole_order_estimate(const euler::EulerProduct& ep, const primes::PrimeSelector& S,
                                      std::vector<double> eps = {});

struct TemperedBoundReport {
    unsigned n = 2;
    double density = 0.0;  // natural density of S at 10^6
    double bound = 0.0;    // n^2 density
    PoleOrderEstimate estimate;
    bool pass = false;     // slope <= bound + 0.1
    std::uint64_t checked_primes = 0;
    std::uint64_t non_tempered = 0;  // |alpha| != 1 beyond 10^-9
    Rational refined_threshold{1, 8};
    Rational nondihedral_threshold{1, 4};
    Rational conjectural_threshold;
};

/// Pole order of log L_S(s, A x conj(A)) against n^2 delta(S).
/// Throws NotTempered when some |alpha| exceeds q^{1/2}.
TemperedBoundReport tempered_bound_check(const RepresentationData& a, const primes::PrimeSelector& S,
                                         std::vector<double> eps = {});

struct ZRatioPoint {
    double s = 0.0;
    double direct = 0.0;    // product of local ratios
    double via_log = 0.0;   // exp of the summed log-expansion difference
    bool agree = false;     // within 10^-6
};

struct ZRatioReport {
    std::uint64_t cutoff = 0;
    std::uint64_t primes_used = 0;
    std::vector<ZRatioPoint> points;
    bool positive_type = true;       // log-coefficients of D_S all >= -10^-9
    double min_log_coefficient = 0.0;
};

/// Z_S(s) = L_S(AxA~) L_S(BxB~) / (L_S(AxB~) L_S(BxA~)) over p in S, p <= cutoff.
/// Throws DegreeMismatch.
ZRatioReport z_ratio(const RepresentationData& a, const RepresentationData& b, const primes::PrimeSelector& S,
                     const std::vector<double>& s_grid, std::uint64_t cutoff = 10'000);

enum class RajanVerdict { Summable, Divergent, Undecidable };

std::string rajan_verdict_name(RajanVerdict v);

struct RajanReport {
    unsigned n = 2;
    RajanVerdict verdict = RajanVerdict::Undecidable;
    std::optional<std::uint32_t> j;
    Rational exponent;  // 2 / (n^2 + 1)
    std::optional<Rational> test_exponent;  // 2j / (n^2 + 1)
    std::vector<std::uint64_t> cutoffs;
    std::vector<double> partial_sums;  // sum_{v in S, q_v <= x} q_v^{-2/(n^2+1)}
};

RajanReport rajan_criterion(const primes::PrimeSelector& S, unsigned n,
                            std::vector<std::uint64_t> cutoffs = {1'000, 10'000, 100'000, 1'000'000, 10'000'000});

struct InertReport {
    std::uint32_t p = 0;
    unsigned n = 2;
    euler::GRCBoundProfile profile;
    Rational main_bound;       // 1 - 2/(n^2+1) + 1/p
    bool main_sufficient = false;  // main_bound < 1
    Rational step_bound;       // 2 delta + 1/p, delta from the profile
    bool step_clears_half = false; // step_bound < 1/2
    euler::ConvergenceProbe probe;  // inert places, delta = 1 - 2/(n^2+1)
};

/// Throws NotPrimeDegree unless the field degree is prime.
InertReport inert_experiment(const primes::FieldSpec& field, unsigned n, const euler::GRCBoundProfile& profile,
                             std::vector<std::uint64_t> cutoffs = {100'000, 1'000'000, 10'000'000});

struct TowerReport {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t limit = 0;
    std::uint64_t checked = 0;   // residue degree p in F
    std::uint64_t excluded = 0;  // other unramified primes
    std::vector<std::uint64_t> counterexamples;
};

/// F of prime degree p inside K cyclic of degree p^m (m >= 2). For every
/// unramified prime <= x of residue degree p in F, checks residue degree p^m in K.
/// Throws NotNested when F is not a subfield of K, InvalidFieldSpec for other shapes.
TowerReport tower_degree_check(const primes::FieldSpec& F, const primes::FieldSpec& K, std::uint64_t x);

struct TowerChain {
    std::string label;
    primes::FieldSpec F;
    primes::FieldSpec K;
};

/// Quadratic inside quartic chains in the 5th, 13th and 17th cyclotomic fields.
std::vector<TowerChain> bundled_tower_chains();

}  // namespace smolab::smo
