#include "smolab/smo/experiments.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>

#include "smolab/error.hpp"
#include "smolab/primes/density.hpp"
#include "smolab/primes/sieve.hpp"

namespace smolab::smo {

using euler::LocalFactor;
using primes::PrimeSelector;

namespace {

bool same_local_factor(const LocalFactor& a, const LocalFactor& b, unsigned n) {
    auto pa = a.reciprocal_polynomial();
    auto pb = b.reciprocal_polynomial();
    pa.resize(n + 1, 0.0);
    pb.resize(n + 1, 0.0);
    for (unsigned i = 0; i <= n; ++i)
        if (std::abs(pa[i] - pb[i]) > kLocalTolerance * std::max(1.0, std::abs(pa[i]))) return false;
    return true;
}

std::optional<std::uint64_t> min_coverage(std::optional<std::uint64_t> a, std::optional<std::uint64_t> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

Rational conjectural(unsigned n) { return Rational(1, 2 * std::int64_t{n} * n); }

}  // namespace

AgreementReport compare_local(const RepresentationData& a, const RepresentationData& b, std::uint64_t X) {
    if (a.degree() != b.degree())
        throw Error(ErrorCode::DegreeMismatch,
                    "degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()) + " differ");
    AgreementReport r;
    r.label_a = a.label();
    r.label_b = b.label();
    r.degree = a.degree();
    r.requested_limit = X;
    r.scanned_limit = std::min(X, min_coverage(a.coverage(), b.coverage()).value_or(X));
    r.conjectural_threshold = conjectural(r.degree);
    if (r.scanned_limit > primes::kMaxPrimeLimit) throw Error(ErrorCode::LimitExceeded, "scan limit exceeds 10^9");

    struct Part {
        std::vector<std::uint64_t> compared_primes;
        std::vector<std::uint64_t> differ;
    };
    const unsigned n = r.degree;
    const auto parts = primes::map_prime_segments<Part>(r.scanned_limit, [&](std::span<const std::uint32_t> seg) {
        Part part;
        for (std::uint64_t p : seg) {
            const auto fa = a.factor(p);
            const auto fb = b.factor(p);
            if (!fa || !fb) continue;
            part.compared_primes.push_back(p);
            if (!same_local_factor(*fa, *fb, n)) part.differ.push_back(p);
        }
        return part;
    });
    std::vector<std::uint64_t> compared;
    for (const auto& part : parts) {
        compared.insert(compared.end(), part.compared_primes.begin(), part.compared_primes.end());
        r.disagreements.insert(r.disagreements.end(), part.differ.begin(), part.differ.end());
    }
    r.compared = compared.size();
    if (!r.disagreements.empty()) r.first_disagreement = r.disagreements.front();

    std::vector<std::uint64_t> marks;
    for (std::uint64_t x = 10; x <= r.scanned_limit; x *= 10) marks.push_back(x);
    if (marks.empty() || marks.back() != r.scanned_limit) marks.push_back(r.scanned_limit);
    for (auto x : marks) {
        DensityPoint d;
        d.x = x;
        d.compared = static_cast<std::uint64_t>(std::upper_bound(compared.begin(), compared.end(), x) - compared.begin());
        d.disagreements = static_cast<std::uint64_t>(
            std::upper_bound(r.disagreements.begin(), r.disagreements.end(), x) - r.disagreements.begin());
        d.fraction = d.compared ? static_cast<double>(d.disagreements) / static_cast<double>(d.compared) : 0.0;
        r.densities.push_back(d);
    }
    return r;
}

std::vector<double> default_eps_grid(std::optional<std::uint64_t> coverage) {
    if (!coverage || *coverage >= kMaxPoleCutoff) return {1.0 / 16, 1.0 / 12, 1.0 / 10, 1.0 / 8};
    std::vector<double> grid;
    for (int k = 16; k >= 4 && grid.size() < 4; --k)
        if (std::exp(1.5 * k) <= static_cast<double>(*coverage)) grid.push_back(1.0 / k);
    if (grid.size() < 3)
        throw Error(ErrorCode::InfeasibleEpsilon,
                    "data up to " + std::to_string(*coverage) + " cannot support three points with x >= exp(1.5/eps)");
    std::sort(grid.begin(), grid.end());
    return grid;
}

PoleOrderEstimate pole_order_estimate(const euler::EulerProduct& ep, const PrimeSelector& S, std::vector<double> eps) {
    if (eps.empty()) eps = default_eps_grid(ep.coverage());
    if (eps.size() < 3) throw Error(ErrorCode::InvalidArgument, "the fit needs at least three eps values");
    const double eps_min = 1.0 / std::log(static_cast<double>(primes::kMaxPrimeLimit));
    for (double e : eps)
        if (!(e >= eps_min))
            throw Error(ErrorCode::InfeasibleEpsilon,
                        "eps = " + std::to_string(e) + " needs a cutoff exp(1/eps) beyond 10^9");

    PoleOrderEstimate est;
    est.eps = eps;
    std::uint64_t top = 0;
    for (double e : eps) {
        const double want = std::ceil(std::exp(1.5 / e));
        std::uint64_t x = want >= static_cast<double>(kMaxPoleCutoff) ? kMaxPoleCutoff : static_cast<std::uint64_t>(want);
        const bool limited = ep.coverage() && *ep.coverage() < x;
        if (limited) x = *ep.coverage();
        est.cutoffs.push_back(x);
        est.coverage_limited.push_back(limited);
        top = std::max(top, x);
    }
    est.values.assign(eps.size(), 0.0);
    euler::visit_log_expansion(ep, S, top, [&](const euler::LogCoefficient& c) {
        const double lm = std::log(static_cast<double>(c.m));
        for (std::size_t i = 0; i < eps.size(); ++i)
            if (c.m <= est.cutoffs[i]) est.values[i] += c.value.real() * std::exp(-(1.0 + eps[i]) * lm);
    });

    const auto k = eps.size();
    double mx = 0, my = 0;
    std::vector<double> xs(k);
    for (std::size_t i = 0; i < k; ++i) {
        xs[i] = std::log(1.0 / eps[i]);
        mx += xs[i];
        my += est.values[i];
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (est.values[i] - my);
    }
    if (sxx == 0) throw Error(ErrorCode::InvalidArgument, "eps values must be distinct");
    est.slope = sxy / sxx;
    est.intercept = my - est.slope * mx;
    double rss = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const double r = est.values[i] - est.intercept - est.slope * xs[i];
        rss += r * r;
    }
    const double se = std::sqrt(rss / static_cast<double>(k - 2) / sxx);
    const boost::math::students_t dist(static_cast<double>(k - 2));
    const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
    est.slope_low = est.slope - t * se;
    est.slope_high = est.slope + t * se;
    return est;
}

TemperedBoundReport tempered_bound_check(const RepresentationData& a, const PrimeSelector& S, std::vector<double> eps) {
    TemperedBoundReport r;
    r.n = a.degree();
    r.conjectural_threshold = conjectural(r.n);
    const auto ep = a.euler_product();
    if (eps.empty()) eps = default_eps_grid(ep.coverage());

    std::uint64_t scan = 0;
    for (double e : eps) scan = std::max(scan, static_cast<std::uint64_t>(std::min(std::ceil(std::exp(1.5 / e)), 1e8)));
    if (ep.coverage()) scan = *ep.coverage();
    struct Counts {
        std::uint64_t checked = 0, off = 0, worst = 0;
    };
    const auto parts = primes::map_prime_segments<Counts>(scan, [&](std::span<const std::uint32_t> seg) {
        Counts c;
        for (std::uint64_t p : seg) {
            const auto f = a.factor(p);
            if (!f) continue;
            ++c.checked;
            if (!f->tempered()) ++c.off;
            if (!c.worst && f->max_abs() > std::sqrt(static_cast<double>(p)) * (1 + 1e-12)) c.worst = p;
        }
        return c;
    });
    for (const auto& c : parts) {
        if (c.worst) throw Error(ErrorCode::NotTempered, "|alpha| exceeds q^(1/2) at p = " + std::to_string(c.worst));
        r.checked_primes += c.checked;
        r.non_tempered += c.off;
    }

    r.density = primes::natural_density_estimate(S, {1'000'000}).extrapolated;
    r.bound = static_cast<double>(r.n * r.n) * r.density;
    r.estimate = pole_order_estimate(euler::rankin_selberg(ep, ep), S, eps);
    r.pass = r.estimate.slope <= r.bound + 0.1;
    return r;
}

ZRatioReport z_ratio(const RepresentationData& a, const RepresentationData& b, const PrimeSelector& S,
                     const std::vector<double>& s_grid, std::uint64_t cutoff) {
    if (a.degree() != b.degree())
        throw Error(ErrorCode::DegreeMismatch,
                    "degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()) + " differ");
    for (double s : s_grid)
        if (!(s > 1.0)) throw Error(ErrorCode::InvalidArgument, "s must exceed 1");
    ZRatioReport r;
    r.cutoff = std::min(cutoff, min_coverage(a.coverage(), b.coverage()).value_or(cutoff));
    const double s_min = s_grid.empty() ? 2.0 : *std::min_element(s_grid.begin(), s_grid.end());
    const double bound = 4.0 * a.degree() * a.degree();

    std::vector<Complex> direct(s_grid.size(), 1.0);
    std::vector<double> logs(s_grid.size(), 0.0);
    bool first = true;
    for (std::uint64_t p : primes::primes_up_to(r.cutoff)) {
        if (!S.contains(p)) continue;
        const auto fa = a.factor(p);
        const auto fb = b.factor(p);
        if (!fa || !fb) continue;
        ++r.primes_used;
        const auto aa = euler::rankin_selberg_local(*fa, *fa);
        const auto bb = euler::rankin_selberg_local(*fb, *fb);
        const auto ab = euler::rankin_selberg_local(*fa, *fb);
        const auto ba = euler::rankin_selberg_local(*fb, *fa);
        for (std::size_t i = 0; i < s_grid.size(); ++i)
            direct[i] *= euler::eval_local(aa, s_grid[i]) * euler::eval_local(bb, s_grid[i]) /
                         (euler::eval_local(ab, s_grid[i]) * euler::eval_local(ba, s_grid[i]));
        const double lp = std::log(static_cast<double>(p));
        for (unsigned k = 1;; ++k) {
            const Complex d = (aa.power_sum(k) + bb.power_sum(k) - ab.power_sum(k) - ba.power_sum(k)) / double(k);
            r.min_log_coefficient = first ? d.real() : std::min(r.min_log_coefficient, d.real());
            first = false;
            if (d.real() < -euler::kPositivityTolerance || std::abs(d.imag()) > euler::kPositivityTolerance)
                r.positive_type = false;
            for (std::size_t i = 0; i < s_grid.size(); ++i) logs[i] += d.real() * std::exp(-s_grid[i] * k * lp);
            if (bound * std::exp(-s_min * k * lp) < 1e-18) break;
        }
    }
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        ZRatioPoint pt;
        pt.s = s_grid[i];
        pt.direct = direct[i].real();
        pt.via_log = std::exp(logs[i]);
        pt.agree = std::abs(pt.direct - pt.via_log) < 1e-6 && std::abs(direct[i].imag()) < 1e-6;
        r.points.push_back(pt);
    }
    return r;
}

std::string rajan_verdict_name(RajanVerdict v) {
    switch (v) {
        case RajanVerdict::Summable: return "summable";
        case RajanVerdict::Divergent: return "divergent";
        case RajanVerdict::Undecidable: return "undecidable";
    }
    return "unknown";
}

RajanReport rajan_criterion(const PrimeSelector& S, unsigned n, std::vector<std::uint64_t> cutoffs) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    if (cutoffs.empty()) throw Error(ErrorCode::InvalidArgument, "no cutoffs");
    for (std::size_t i = 1; i < cutoffs.size(); ++i)
        if (cutoffs[i] <= cutoffs[i - 1]) throw Error(ErrorCode::InvalidArgument, "cutoffs must be strictly ascending");
    if (cutoffs.back() > primes::kMaxPrimeLimit) throw Error(ErrorCode::LimitExceeded, "cutoff exceeds 10^9");
    RajanReport r;
    r.n = n;
    r.cutoffs = cutoffs;
    r.exponent = Rational(2, std::int64_t{n} * n + 1);
    if (S.is_finite()) {
        r.verdict = RajanVerdict::Summable;
    } else if (const auto j = S.uniform_degree()) {
        r.j = *j;
        r.test_exponent = Rational(2 * std::int64_t{*j}, std::int64_t{n} * n + 1);
        r.verdict = *r.test_exponent > Rational(1) ? RajanVerdict::Summable : RajanVerdict::Divergent;
    }

    const double e = r.exponent.to_double();
    const double top = static_cast<double>(cutoffs.back());
    std::uint64_t p_max = cutoffs.back();
    if (r.j && *r.j > 1) p_max = static_cast<std::uint64_t>(std::pow(top, 1.0 / *r.j)) + 1;
    const auto nc = cutoffs.size();
    const auto parts = primes::map_prime_segments<std::vector<double>>(p_max, [&](std::span<const std::uint32_t> seg) {
        std::vector<double> t(nc, 0.0);
        for (std::uint64_t p : seg) {
            const auto item = S.item(p);
            if (!item) continue;
            const double q = item->norm();
            if (q > top) continue;
            const auto b = static_cast<std::size_t>(
                std::lower_bound(cutoffs.begin(), cutoffs.end(), q,
                                 [](std::uint64_t c, double v) { return static_cast<double>(c) < v; }) -
                cutoffs.begin());
            t[b] += item->places * std::exp(-e * item->log_norm());
        }
        return t;
    });
    double running = 0.0;
    for (std::size_t b = 0; b < nc; ++b) {
        for (const auto& t : parts) running += t[b];
        r.partial_sums.push_back(running);
    }
    return r;
}

InertReport inert_experiment(const primes::FieldSpec& field, unsigned n, const euler::GRCBoundProfile& profile,
                             std::vector<std::uint64_t> cutoffs) {
    const auto p = field.degree();
    if (!primes::is_prime(p))
        throw Error(ErrorCode::NotPrimeDegree, "field degree " + std::to_string(p) + " is not prime");
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
    InertReport r;
    r.p = p;
    r.n = n;
    r.profile = profile;
    const Rational rs_delta = Rational(1) - Rational(2, std::int64_t{n} * n + 1);
    r.main_bound = rs_delta + Rational(1, p);
    r.main_sufficient = r.main_bound < Rational(1);
    r.step_bound = Rational(2) * profile.exponent + Rational(1, p);
    r.step_clears_half = r.step_bound < Rational(1, 2);

    std::vector<double> sigmas{r.main_bound.to_double() + 0.05};
    if (r.main_bound.to_double() - 0.05 > rs_delta.to_double()) sigmas.push_back(r.main_bound.to_double() - 0.05);
    r.probe = euler::convergence_probe(PrimeSelector::degree_equals(field, p), rs_delta.to_double(), sigmas, cutoffs);
    return r;
}

TowerReport tower_degree_check(const primes::FieldSpec& F, const primes::FieldSpec& K, std::uint64_t x) {
    const auto p = F.degree();
    if (!primes::is_prime(p))
        throw Error(ErrorCode::InvalidFieldSpec, "the bottom field must have prime degree, got " + std::to_string(p));
    if (!K.contains(F)) throw Error(ErrorCode::NotNested, F.describe() + " is not a subfield of " + K.describe());
    std::uint32_t m = 0;
    std::uint64_t d = K.degree();
    while (d % p == 0) {
        d /= p;
        ++m;
    }
    if (d != 1 || m < 2 || !K.is_cyclic())
        throw Error(ErrorCode::InvalidFieldSpec, K.describe() + " is not cyclic of degree p^m with m >= 2");
    if (x > primes::kMaxPrimeLimit) throw Error(ErrorCode::LimitExceeded, "limit exceeds 10^9");

    TowerReport r;
    r.p = p;
    r.m = m;
    r.limit = x;
    const std::uint64_t target = K.degree();
    primes::for_each_prime(x, [&](std::uint32_t l) {
        if (K.is_ramified(l) || F.is_ramified(l)) return;
        if (F.residue_degree(l) != p) {
            ++r.excluded;
            return;
        }
        ++r.checked;
        if (K.residue_degree(l) != target) r.counterexamples.push_back(l);
    });
    return r;
}

std::vector<TowerChain> bundled_tower_chains() {
    using primes::FieldSpec;
    return {
        {"cyclotomic-5", FieldSpec(5, {4}, "Q(sqrt 5)"), FieldSpec(5, {}, "Q(zeta_5)")},
        {"cyclotomic-13", FieldSpec(13, {4}, "Q(sqrt 13)"), FieldSpec(13, {3}, "quartic in Q(zeta_13)")},
        {"cyclotomic-17", FieldSpec(17, {9}, "Q(sqrt 17)"), FieldSpec(17, {13}, "quartic in Q(zeta_17)")},
    };
}

}  // namespace smolab::smo
