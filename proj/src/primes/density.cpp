#include "smolab/primes/density.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "smolab/error.hpp"
#include "smolab/primes/sieve.hpp"

namespace smolab::primes {

namespace {

void check_cutoff(std::uint64_t x) {
    if (x > kMaxPrimeLimit) throw Error(ErrorCode::LimitExceeded, "cutoff " + std::to_string(x) + " exceeds 10^9");
}

// Least-squares pole coefficient: regress sums on [L - T, 1, s - 1] (fewer columns for short grids).
double fit_pole_coefficient(const std::vector<double>& s, const std::vector<double>& pole_term,
                            const std::vector<double>& sums) {
    const auto m = static_cast<Eigen::Index>(s.size());
    if (m == 1) return sums[0] / pole_term[0];
    const Eigen::Index cols = m >= 3 ? 3 : 2;
    Eigen::MatrixXd a(m, cols);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        a(i, 0) = pole_term[static_cast<std::size_t>(i)];
        a(i, 1) = 1.0;
        if (cols == 3) a(i, 2) = s[static_cast<std::size_t>(i)] - 1.0;
        b(i) = sums[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(b);
    return coef(0);
}

}  // namespace

double exponential_integral_e1(double x) { return -std::expint(-x); }

DensityEstimate natural_density_estimate(const PrimeSelector& selector, const std::vector<std::uint64_t>& x_grid) {
    if (x_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty x grid");
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (x_grid[i] <= x_grid[i - 1]) throw Error(ErrorCode::InvalidArgument, "x grid must be strictly ascending");
    check_cutoff(x_grid.back());

    struct Counts {
        std::vector<std::uint64_t> selected, universe;
    };
    const auto n = x_grid.size();
    const auto parts = map_prime_segments<Counts>(x_grid.back(), [&](std::span<const std::uint32_t> seg) {
        Counts c{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0)};
        for (std::uint64_t p : seg) {
            if (selector.excluded(p)) continue;
            const auto k = static_cast<std::size_t>(std::lower_bound(x_grid.begin(), x_grid.end(), p) - x_grid.begin());
            ++c.universe[k];
            if (selector.contains(p)) ++c.selected[k];
        }
        return c;
    });

    DensityEstimate est;
    est.estimand = Estimand::Natural;
    std::uint64_t sel = 0, uni = 0;
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& part : parts) {
            sel += part.selected[k];
            uni += part.universe[k];
        }
        est.points.push_back(static_cast<double>(x_grid[k]));
        est.partial.push_back(uni == 0 ? 0.0 : static_cast<double>(sel) / static_cast<double>(uni));
    }
    est.extrapolated = est.partial.back();
    est.selected = sel;
    est.universe = uni;
    return est;
}

std::vector<double> default_dirichlet_grid() { return {1.125, 1.0625, 1.03125, 1.015625}; }

DensityEstimate dirichlet_density_estimate(const PrimeSelector& selector, const std::vector<double>& s_grid,
                                           std::uint64_t cutoff, NormMode mode) {
    if (s_grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty s grid");
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (!(s_grid[i] > 1.0 && s_grid[i] <= 2.0)) throw Error(ErrorCode::InvalidArgument, "s values must lie in (1, 2]");
        if (i > 0 && s_grid[i] >= s_grid[i - 1])
            throw Error(ErrorCode::InvalidArgument, "s grid must descend toward 1");
    }
    check_cutoff(cutoff);

    DensityEstimate est;
    est.estimand = Estimand::Dirichlet;
    const auto n = s_grid.size();
    for (double s : s_grid) {
        const double wanted = std::exp(4.0 / (s - 1.0));
        const bool feasible = wanted <= static_cast<double>(cutoff);
        est.cutoffs.push_back(feasible ? static_cast<std::uint64_t>(std::ceil(wanted)) : cutoff);
        est.truncation_bias.push_back(!feasible);
    }
    const std::uint64_t sieve_to = *std::max_element(est.cutoffs.begin(), est.cutoffs.end());

    struct Sums {
        std::vector<double> selected, reference;
    };
    const auto parts = map_prime_segments<Sums>(sieve_to, [&](std::span<const std::uint32_t> seg) {
        Sums out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
        for (std::uint64_t p : seg) {
            if (selector.excluded(p)) continue;
            const double log_p = std::log(static_cast<double>(p));
            const auto item = selector.item(p);
            const double f = item && mode == NormMode::PlaceNorms ? item->f : 1.0;
            const double places = item && mode == NormMode::PlaceNorms ? item->places : 1.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double x = static_cast<double>(est.cutoffs[k]);
                if (static_cast<double>(p) <= x) out.reference[k] += std::exp(-s_grid[k] * log_p);
                if (item && f * log_p <= std::log(x) + 1e-12) out.selected[k] += places * std::exp(-s_grid[k] * f * log_p);
            }
        }
        return out;
    });

    std::vector<double> reference(n, 0.0), pole_term(n);
    est.sums.assign(n, 0.0);
    for (const auto& part : parts)
        for (std::size_t k = 0; k < n; ++k) {
            est.sums[k] += part.selected[k];
            reference[k] += part.reference[k];
        }
    for (std::size_t k = 0; k < n; ++k) {
        const double log_pole = std::log(1.0 / (s_grid[k] - 1.0));
        est.points.push_back(s_grid[k]);
        est.partial.push_back(est.sums[k] / log_pole);
        pole_term[k] = log_pole - exponential_integral_e1((s_grid[k] - 1.0) * std::log(static_cast<double>(est.cutoffs[k])));
    }
    est.absolute_coefficient = fit_pole_coefficient(s_grid, pole_term, est.sums);
    est.reference_coefficient = fit_pole_coefficient(s_grid, pole_term, reference);
    est.extrapolated = est.reference_coefficient > 0 ? est.absolute_coefficient / est.reference_coefficient : 0.0;
    return est;
}

PrimeZeta prime_zeta(double s, std::uint64_t cutoff) {
    if (!(s > 1.0)) throw Error(ErrorCode::InvalidArgument, "prime zeta needs s > 1");
    check_cutoff(cutoff);
    PrimeZeta out;
    out.s = s;
    out.cutoff = cutoff;
    if (cutoff >= 2) {
        const auto parts = map_prime_segments<double>(cutoff, [s](std::span<const std::uint32_t> seg) {
            double acc = 0.0;
            for (std::uint64_t p : seg) acc += std::exp(-s * std::log(static_cast<double>(p)));
            return acc;
        });
        for (double v : parts) out.value += v;
        out.tail_estimate = exponential_integral_e1((s - 1.0) * std::log(static_cast<double>(cutoff)));
    }
    out.deviation = out.value - std::log(1.0 / (s - 1.0));
    return out;
}

FrobeniusStatistics frobenius_statistics(const FieldSpec& field, std::uint64_t cutoff) {
    check_cutoff(cutoff);
    const std::size_t classes = field.degree();
    struct Tally {
        std::vector<std::uint64_t> counts, first;
    };
    const auto parts = map_prime_segments<Tally>(cutoff, [&](std::span<const std::uint32_t> seg) {
        Tally t{std::vector<std::uint64_t>(classes, 0), std::vector<std::uint64_t>(classes, 0)};
        for (std::uint64_t p : seg) {
            if (field.is_ramified(p)) continue;
            const auto k = static_cast<std::size_t>(field.class_of(p));
            if (t.counts[k]++ == 0) t.first[k] = p;
        }
        return t;
    });
    FrobeniusStatistics out{field, cutoff, std::vector<std::uint64_t>(classes, 0), {}, std::vector<std::uint64_t>(classes, 0),
                            std::nullopt, 0};
    for (const auto& part : parts)
        for (std::size_t k = 0; k < classes; ++k) {
            if (out.first_prime[k] == 0) out.first_prime[k] = part.first[k];
            out.counts[k] += part.counts[k];
        }
    for (auto c : out.counts) out.unramified += c;
    for (auto c : out.counts)
        out.fractions.push_back(out.unramified ? static_cast<double>(c) / static_cast<double>(out.unramified) : 0.0);
    if (std::none_of(out.first_prime.begin(), out.first_prime.end(), [](auto v) { return v == 0; }))
        out.first_hit_bound = *std::max_element(out.first_prime.begin(), out.first_prime.end());
    return out;
}

}  // namespace smolab::primes
