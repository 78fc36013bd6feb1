#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smolab/euler/local_factor.hpp"
#include "smolab/primes/field_spec.hpp"
#include "smolab/primes/selector.hpp"

namespace smolab::euler {

inline constexpr std::uint64_t kMaxLogExpansion = 100'000'000;
inline constexpr double kPositivityTolerance = 1e-9;

/// Local factors of the places above a rational prime p (empty when no data).
using FactorSource = std::function<std::vector<LocalFactor>(std::uint64_t p)>;

/// A truncated Euler product of degree n. The source must be pure; coverage,
/// when set, is the largest prime for which the source has data.
class EulerProduct {
public:
    EulerProduct(unsigned degree, FactorSource source, std::vector<std::uint64_t> ramified, std::string label,
                 std::optional<std::uint64_t> coverage = std::nullopt);

    unsigned degree() const { return degree_; }
    const std::string& label() const { return label_; }
    const std::vector<std::uint64_t>& ramified() const { return ramified_; }
    bool is_ramified(std::uint64_t p) const;
    std::optional<std::uint64_t> coverage() const { return coverage_; }
    std::vector<LocalFactor> factors(std::uint64_t p) const;

private:
    unsigned degree_;
    FactorSource source_;
    std::vector<std::uint64_t> ramified_;
    std::string label_;
    std::optional<std::uint64_t> coverage_;
};

/// Riemann zeta: alpha = 1 at q = p.
EulerProduct zeta_model();

/// Dedekind zeta of an abelian field as degree-1 factors at the norms of its
/// places. Factors at ramified primes are omitted.
EulerProduct dedekind_zeta_model(const primes::FieldSpec& field);

/// L(s, A x conj(B)) place by place (A x B without conjugation when the flag is off).
/// Factors are paired in source order; NormMismatch when they do not line up.
EulerProduct rankin_selberg(const EulerProduct& a, const EulerProduct& b, bool conjugate_second = true);

/// CSV rows p,q,alpha_re_1,alpha_im_1,... ; repeated p gives several places.
/// An optional header line is skipped. The degree is the widest row unless given.
EulerProduct read_satake_file(const std::filesystem::path& path, std::optional<unsigned> degree = std::nullopt);

struct LogCoefficient {
    std::uint64_t m = 0;
    Complex value;
};

/// Coefficients of m^-s in log L over the selected primes, m <= M.
struct LogExpansion {
    std::uint64_t cutoff = 0;
    std::vector<LogCoefficient> coefficients;  // ascending m, prime powers only

    /// Zero for m not carried.
    Complex coefficient(std::uint64_t m) const;
};

/// Streams the coefficients prime by prime (ascending p, then ascending m).
/// Segments are evaluated in parallel and delivered in order.
void visit_log_expansion(const EulerProduct& ep, const primes::PrimeSelector& selector, std::uint64_t M,
                         const std::function<void(const LogCoefficient&)>& visit);

/// Throws LimitExceeded above 10^8.
LogExpansion log_expansion(const EulerProduct& ep, const primes::PrimeSelector& selector, std::uint64_t M);

struct PositivityResult {
    bool positive = true;
    std::optional<std::uint64_t> first_violation;  // least m with a negative or non-real coefficient
    double min_coefficient = 0.0;
    double max_imaginary = 0.0;
    std::uint64_t coefficients = 0;
    std::uint64_t cutoff = 0;
};

PositivityResult positive_type_check(const EulerProduct& ep, const primes::PrimeSelector& selector, std::uint64_t M);

struct LandauSample {
    double sigma = 0.0;
    double log_value = 0.0;  // sum_m c_m m^-sigma
    double value = 0.0;      // exp(log_value)
    bool nonvanishing = false;
};

struct LandauReport {
    std::uint64_t cutoff = 0;
    std::optional<std::uint64_t> coverage;
    std::vector<LandauSample> samples;
};

/// Throws NotPositiveType when the expansion has a negative coefficient.
LandauReport landau_region_check(const EulerProduct& ep, const primes::PrimeSelector& selector,
                                 const std::vector<double>& sigmas, std::uint64_t M);

}  // namespace smolab::euler
