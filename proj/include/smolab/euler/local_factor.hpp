#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace smolab::euler {

using Complex = std::complex<double>;

inline constexpr double kTemperedTolerance = 1e-9;

/// L(s, pi_v) = prod_i (1 - alpha_i q^-s)^-1 for k <= n nonzero parameters.
class LocalFactor {
public:
    LocalFactor() = default;
    /// Throws InvalidArgument when k > n, q < 2 or some alpha is zero.
    LocalFactor(std::uint64_t q, std::vector<Complex> alphas, unsigned degree);
    LocalFactor(std::uint64_t q, std::vector<Complex> alphas)
        : LocalFactor(q, alphas, static_cast<unsigned>(alphas.size())) {}

    std::uint64_t q() const { return q_; }
    const std::vector<Complex>& alphas() const { return alphas_; }
    unsigned degree() const { return degree_; }
    std::size_t size() const { return alphas_.size(); }

    /// Every |alpha| = 1 within kTemperedTolerance.
    bool tempered() const;
    double max_abs() const;

    /// Coefficients e_0 = 1, -e_1, e_2, ... of the reciprocal polynomial
    /// prod_i (1 - alpha_i T).
    std::vector<Complex> reciprocal_polynomial() const;
    /// sum_i alpha_i^m.
    Complex power_sum(unsigned m) const;

private:
    std::uint64_t q_ = 2;
    std::vector<Complex> alphas_;
    unsigned degree_ = 0;
};

/// prod_i (1 - alpha_i q^-s)^-1. Throws PoleHit when q^s = alpha_i.
Complex eval_local(const LocalFactor& f, Complex s);

/// max_i log|alpha_i| / log q, or nothing when k = 0.
std::optional<double> first_pole_line(const LocalFactor& f);

/// Parameters alpha_i * c(beta_j), c conjugation when conjugate_second is set.
/// Throws NormMismatch when the norms differ.
LocalFactor rankin_selberg_local(const LocalFactor& f, const LocalFactor& g, bool conjugate_second = true);

struct RsCoefficient {
    Complex conjugated;    // sum_{i,j} alpha_i conj(alpha_j) = |sum_i alpha_i|^2
    Complex unconjugated;  // sum_{i,j} alpha_i alpha_j = (sum_i alpha_i)^2
};

/// Throws InvalidArgument when k = 0.
RsCoefficient rs_leading_coefficient(const LocalFactor& f);

/// Multiplies every parameter by q^t.
LocalFactor shifted(const LocalFactor& f, double t);

}  // namespace smolab::euler
