#include "smolab/euler/local_factor.hpp"

#include <algorithm>
#include <cmath>

#include "smolab/error.hpp"

namespace smolab::euler {

LocalFactor::LocalFactor(std::uint64_t q, std::vector<Complex> alphas, unsigned degree)
    : q_(q), alphas_(std::move(alphas)), degree_(degree) {
    if (q_ < 2) throw Error(ErrorCode::InvalidArgument, "local factor norm must be at least 2");
    if (alphas_.size() > degree_)
        throw Error(ErrorCode::InvalidArgument, "local factor has " + std::to_string(alphas_.size()) +
                                                    " parameters but degree " + std::to_string(degree_));
    for (const auto& a : alphas_)
        if (std::abs(a) == 0.0) throw Error(ErrorCode::InvalidArgument, "Satake parameters must be nonzero");
}

bool LocalFactor::tempered() const {
    return std::all_of(alphas_.begin(), alphas_.end(),
                       [](Complex a) { return std::abs(std::abs(a) - 1.0) <= kTemperedTolerance; });
}

double LocalFactor::max_abs() const {
    double m = 0.0;
    for (const auto& a : alphas_) m = std::max(m, std::abs(a));
    return m;
}

std::vector<Complex> LocalFactor::reciprocal_polynomial() const {
    std::vector<Complex> c{1.0};
    for (const auto& a : alphas_) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= a * c[i - 1];
    }
    return c;
}

Complex LocalFactor::power_sum(unsigned m) const {
    Complex total = 0.0;
    for (const auto& a : alphas_) {
        Complex p = 1.0;
        for (unsigned i = 0; i < m; ++i) p *= a;
        total += p;
    }
    return total;
}

Complex eval_local(const LocalFactor& f, Complex s) {
    const Complex x = std::exp(-s * std::log(static_cast<double>(f.q())));
    Complex value = 1.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Complex d = 1.0 - f.alphas()[i] * x;
        if (std::abs(d) < 1e-12) throw Error(ErrorCode::PoleHit, "pole of parameter " + std::to_string(i));
        value /= d;
    }
    return value;
}

std::optional<double> first_pole_line(const LocalFactor& f) {
    if (f.size() == 0) return std::nullopt;
    return std::log(f.max_abs()) / std::log(static_cast<double>(f.q()));
}

LocalFactor rankin_selberg_local(const LocalFactor& f, const LocalFactor& g, bool conjugate_second) {
    if (f.q() != g.q())
        throw Error(ErrorCode::NormMismatch,
                    "norms " + std::to_string(f.q()) + " and " + std::to_string(g.q()) + " differ");
    std::vector<Complex> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.alphas())
        for (const auto& b : g.alphas()) out.push_back(a * (conjugate_second ? std::conj(b) : b));
    return LocalFactor(f.q(), std::move(out), f.degree() * g.degree());
}

RsCoefficient rs_leading_coefficient(const LocalFactor& f) {
    if (f.size() == 0) throw Error(ErrorCode::InvalidArgument, "no Satake parameters");
    RsCoefficient c{0.0, 0.0};
    for (const auto& a : f.alphas())
        for (const auto& b : f.alphas()) {
            c.conjugated += a * std::conj(b);
            c.unconjugated += a * b;
        }
    return c;
}

LocalFactor shifted(const LocalFactor& f, double t) {
    const double scale = std::pow(static_cast<double>(f.q()), t);
    std::vector<Complex> out;
    for (const auto& a : f.alphas()) out.push_back(a * scale);
    return LocalFactor(f.q(), std::move(out), f.degree());
}

}  // namespace smolab::euler
