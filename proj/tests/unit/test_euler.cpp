#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>

#include "doctest.h"
#include "smolab/error.hpp"
#include "smolab/euler/abscissa.hpp"
#include "smolab/euler/euler_product.hpp"
#include "smolab/primes/sieve.hpp"

using namespace smolab;
using namespace smolab::euler;
using primes::PrimeSelector;

namespace {

Complex unit(double theta) { return std::polar(1.0, theta); }

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

// Degree-2 tempered data with angles from a fixed formula.
EulerProduct toy_tempered() {
    return EulerProduct(2, [](std::uint64_t p) {
        const double t = std::fmod(0.7 * static_cast<double>(p), std::numbers::pi);
        return std::vector<LocalFactor>{LocalFactor(p, {unit(t), unit(-t)})};
    }, {}, "toy");
}

}  // namespace

TEST_CASE("eval_local") {
    CHECK(eval_local(LocalFactor(5, {}, 2), {0.3, 7.0}) == Complex(1.0));
    CHECK(std::abs(eval_local(LocalFactor(2, {1.0}), 1.0) - 2.0) < 1e-14);
    CHECK(std::abs(eval_local(LocalFactor(3, {1.0, -1.0}), 2.0) - 81.0 / 80.0) < 1e-14);
    CHECK(code_of([] { eval_local(LocalFactor(2, {1.0}), 0.0); }) == ErrorCode::PoleHit);
    CHECK(code_of([] { eval_local(LocalFactor(4, {2.0}), 0.5); }) == ErrorCode::PoleHit);
    CHECK(code_of([] { LocalFactor(4, {1.0, 2.0}, 1); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { LocalFactor(4, {0.0}); }) == ErrorCode::InvalidArgument);

    SUBCASE("reciprocal is a polynomial of degree k in q^-s and never zero") {
        const LocalFactor f(7, {unit(0.3), unit(-0.3), Complex(0.5, 0.2)});
        const auto c = f.reciprocal_polynomial();
        REQUIRE(c.size() == 4);
        for (Complex s : {Complex(0.5, 0.0), Complex(1.2, 3.0), Complex(-0.4, 10.0)}) {
            const Complex x = std::pow(7.0, -s);
            Complex poly = 0.0, xp = 1.0;
            for (const auto& ci : c) {
                poly += ci * xp;
                xp *= x;
            }
            const Complex v = eval_local(f, s);
            CHECK(std::abs(v) > 0.0);
            CHECK(std::abs(v * poly - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("pole lines") {
    CHECK(*first_pole_line(LocalFactor(11, {unit(1.0), unit(2.0)})) == doctest::Approx(0.0));
    CHECK(*first_pole_line(LocalFactor(4, {2.0, 0.5})) == doctest::Approx(0.5));
    CHECK_FALSE(first_pole_line(LocalFactor(4, {}, 2)));

    const LocalFactor f(9, {Complex(1.3, 0.4), Complex(-0.2, 0.9)});
    const LocalFactor g(9, {Complex(0.7, -1.1), unit(2.0), Complex(0.1, 0.1)});
    const auto rs = rankin_selberg_local(f, g);
    double expected = -1e300;
    for (auto a : f.alphas())
        for (auto b : g.alphas()) expected = std::max(expected, std::log(std::abs(a) * std::abs(b)) / std::log(9.0));
    CHECK(*first_pole_line(rs) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(rs.degree() == 6);

    for (double t : {-0.3, 0.0, 0.25, 1.5}) CHECK(*first_pole_line(shifted(f, t)) == doctest::Approx(*first_pole_line(f) + t));
    CHECK(code_of([&] { rankin_selberg_local(f, LocalFactor(3, {1.0})); }) == ErrorCode::NormMismatch);
}

TEST_CASE("rankin-selberg parameters") {
    const Complex a = unit(0.9);
    const LocalFactor f(5, {a, std::conj(a)});
    const auto rs = rankin_selberg_local(f, f);
    CHECK(rs.tempered());
    CHECK(*first_pole_line(rs) == doctest::Approx(0.0).epsilon(1e-12));
    std::vector<Complex> expected{1.0, a * a, std::conj(a) * std::conj(a), 1.0};
    for (const auto& e : expected) {
        const auto hits = std::count_if(rs.alphas().begin(), rs.alphas().end(), [&](Complex z) { return std::abs(z - e) < 1e-12; });
        CHECK(hits >= 1);
    }
    const LocalFactor h(2, {std::pow(2.0, 0.25)});
    CHECK(*first_pole_line(rankin_selberg_local(h, h)) == doctest::Approx(0.5));
    // without the conjugation the product uses alpha_i alpha_j
    const auto plain = rankin_selberg_local(f, f, false);
    CHECK(std::abs(plain.alphas()[0] - a * a) < 1e-15);
}

TEST_CASE("rs leading coefficient") {
    CHECK(std::abs(rs_leading_coefficient(LocalFactor(3, {1.0, -1.0})).conjugated) < 1e-15);
    CHECK(std::abs(rs_leading_coefficient(LocalFactor(3, {1.0, 1.0})).conjugated - 4.0) < 1e-15);
    const auto c = rs_leading_coefficient(LocalFactor(3, {Complex(0, 1), Complex(0, -1)}));
    CHECK(std::abs(c.conjugated) < 1e-15);
    CHECK(std::abs(c.unconjugated) < 1e-15);
    const auto d = rs_leading_coefficient(LocalFactor(3, {unit(0.4), unit(1.9)}));
    CHECK(d.conjugated.real() <= 4.0 + 1e-12);
    CHECK(std::abs(d.conjugated - std::norm(unit(0.4) + unit(1.9))) < 1e-14);
    CHECK(code_of([] { rs_leading_coefficient(LocalFactor(3, {}, 1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("log expansion") {
    const auto zeta = log_expansion(zeta_model(), PrimeSelector::all(), 10000);
    for (auto p : primes::primes_up_to(100)) {
        std::uint64_t q = p;
        for (unsigned m = 1; q <= 10000; ++m, q *= p) CHECK(zeta.coefficient(q).real() == doctest::Approx(1.0 / m));
    }
    CHECK(zeta.coefficient(6) == Complex(0.0));
    CHECK(log_expansion(zeta_model(), PrimeSelector::explicit_list({}), 10000).coefficients.empty());
    CHECK(code_of([] { log_expansion(zeta_model(), PrimeSelector::all(), kMaxLogExpansion + 1); }) ==
          ErrorCode::LimitExceeded);

    SUBCASE("self rankin-selberg coefficients are |power sum|^2 / m") {
        const auto toy = toy_tempered();
        const auto rs = log_expansion(rankin_selberg(toy, toy), PrimeSelector::all(), 100000);
        for (const auto& c : rs.coefficients) CHECK(c.value.real() >= -1e-12);
        for (auto p : primes::primes_up_to(300)) {
            const auto f = toy.factors(p)[0];
            std::uint64_t q = p;
            for (unsigned m = 1; q <= 100000; ++m, q *= p) {
                const Complex s = std::pow(f.alphas()[0], static_cast<double>(m)) + std::pow(f.alphas()[1], static_cast<double>(m));
                CHECK(std::abs(rs.coefficient(q) - std::norm(s) / static_cast<double>(m)) < 1e-12);
            }
        }
    }

    SUBCASE("dedekind zeta of Q(i)") {
        const auto ded = log_expansion(dedekind_zeta_model(primes::FieldSpec(4, {})), PrimeSelector::all(), 100000);
        std::map<std::uint64_t, double> oracle;
        for (std::uint64_t p : primes::primes_up_to(100000)) {
            if (p == 2) continue;
            const std::uint64_t q = p % 4 == 1 ? p : p * p;
            const double places = p % 4 == 1 ? 2.0 : 1.0;
            std::uint64_t m = q;
            for (unsigned k = 1; m <= 100000; ++k, m *= q) oracle[m] += places / k;
        }
        REQUIRE(ded.coefficients.size() == oracle.size());
        for (const auto& c : ded.coefficients) CHECK(c.value.real() == doctest::Approx(oracle[c.m]));
    }
}

TEST_CASE("positive type and landau") {
    const auto toy = toy_tempered();
    CHECK(positive_type_check(rankin_selberg(toy, toy), PrimeSelector::all(), 100000).positive);
    CHECK(positive_type_check(dedekind_zeta_model(primes::FieldSpec(4, {})), PrimeSelector::all(), 100000).positive);

    const EulerProduct minus(1, [](std::uint64_t p) { return std::vector<LocalFactor>{LocalFactor(p, {-1.0})}; }, {}, "minus");
    const auto r = positive_type_check(minus, PrimeSelector::all(), 1000);
    CHECK_FALSE(r.positive);
    CHECK(*r.first_violation == 2);
    CHECK(code_of([&] { landau_region_check(minus, PrimeSelector::all(), {2.0}, 1000); }) == ErrorCode::NotPositiveType);
    // without conjugation the self product of data not closed under conjugation is not of positive type
    const EulerProduct skew(2, [](std::uint64_t p) {
        return std::vector<LocalFactor>{LocalFactor(p, {unit(0.3 * double(p)), unit(0.5 * double(p))})};
    }, {}, "skew");
    CHECK(positive_type_check(rankin_selberg(skew, skew), PrimeSelector::all(), 1000).positive);
    CHECK_FALSE(positive_type_check(rankin_selberg(skew, skew, false), PrimeSelector::all(), 1000).positive);

    const auto zeta = landau_region_check(zeta_model(), PrimeSelector::all(), {2.0, 1.5}, 1'000'000);
    CHECK(zeta.samples[0].value >= 1.0);
    CHECK(zeta.samples[0].value == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-5));
    const auto rs = landau_region_check(rankin_selberg(toy, toy), PrimeSelector::all(), {1.5}, 100000);
    CHECK(rs.samples[0].nonvanishing);
    CHECK(rs.samples[0].value >= 1.0);
}

TEST_CASE("satake file") {
    const auto path = std::filesystem::temp_directory_path() / "smolab_satake_test.csv";
    {
        std::ofstream out(path);
        out << "p,q,alpha_re_1,alpha_im_1,alpha_re_2,alpha_im_2\n2,2,1,0,-1,0\n3,9,0,1,0,-1\n5,5,0.6,0.8\n";
    }
    const auto ep = read_satake_file(path);
    CHECK(ep.degree() == 2);
    CHECK(*ep.coverage() == 5);
    CHECK(ep.factors(3)[0].q() == 9);
    CHECK(ep.factors(5)[0].size() == 1);
    CHECK(ep.factors(7).empty());
    {
        std::ofstream out(path);
        out << "4,4,1,0\n";
    }
    CHECK(code_of([&] { read_satake_file(path); }) == ErrorCode::NonPrimeRow);
    {
        std::ofstream out(path);
        out << "3,8,1,0\n";
    }
    CHECK(code_of([&] { read_satake_file(path); }) == ErrorCode::ParseError);
    std::filesystem::remove(path);
}

TEST_CASE("bound profiles") {
    CHECK(grc_profile("KSa-BB").exponent == Rational(7, 64));
    CHECK(grc_profile("LRS", 2).exponent == Rational(3, 10));
    CHECK(grc_profile("JS").exponent == Rational(1, 2));
    CHECK(grc_profile("GJ").exponent == Rational(1, 4));
    CHECK(grc_profile("KSh").exponent == Rational(1, 9));
    CHECK(parse_grc_profile("LRS(3)").exponent == Rational(2, 5));
    CHECK(code_of([] { grc_profile("RS"); }) == ErrorCode::UnknownProfile);
    CHECK(code_of([] { parse_grc_profile("LRS(x)"); }) == ErrorCode::UnknownProfile);
    CHECK(grc_profile("KSa-BB").exponent < grc_profile("KSh").exponent);
    CHECK(grc_profile("KSh").exponent < grc_profile("GJ").exponent);
    CHECK(grc_profile("GJ").exponent < grc_profile("LRS", 2).exponent);
    CHECK(grc_profile("LRS", 2).exponent < grc_profile("JS").exponent);
}

TEST_CASE("key observation abscissa") {
    CHECK(key_observation_abscissa(0.0, 2) == 0.5);
    CHECK(key_observation_abscissa(0.25, 2) == 0.75);
    CHECK(key_observation_abscissa(0.6, 3) == doctest::Approx(0.9333333333333));
    CHECK(code_of([] { key_observation_abscissa(0.1, 0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { key_observation_abscissa(-0.1, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("convergence probe") {
    const auto inert = PrimeSelector::degree_equals(primes::FieldSpec(4, {}), 2);
    const std::vector<std::uint64_t> cutoffs{10'000, 100'000, 1'000'000};
    const auto probe = convergence_probe(inert, 0.25, {0.8, 0.7, 3.0}, cutoffs);

    // oracle: direct loop over p = 3 mod 4 with norm p^2
    for (const auto& row : probe.rows) {
        for (std::size_t c = 0; c < cutoffs.size(); ++c) {
            double sum = 0.0;
            for (std::uint64_t p : primes::primes_up_to(1000))
                if (p % 4 == 3 && p * p <= cutoffs[c]) sum += -std::log(1.0 - std::pow(double(p * p), -(row.sigma - 0.25)));
            CHECK(row.sums[c] == doctest::Approx(sum).epsilon(1e-12));
        }
        for (double d : row.differences) CHECK(d >= 0.0);
    }
    CHECK(probe.rows[1].verdict == Growth::Growing);
    CHECK(probe.rows[1].differences.back() > 1e-2);
    CHECK(probe.rows[2].verdict == Growth::Stabilized);

    SUBCASE("bounded above the key observation abscissa") {
        for (double sigma : {0.8, 0.9, 1.2}) {
            const auto p = convergence_probe(inert, 0.25, {sigma}, {1'000'000});
            CHECK(p.rows[0].sums[0] <= std::log(std::riemann_zeta(2.0 * (sigma - 0.25))));
        }
    }
    SUBCASE("zeta at sigma = 3 stabilizes") {
        const auto p = convergence_probe(PrimeSelector::all(), 0.0, {3.0, 1.5}, {100'000, 1'000'000, 10'000'000});
        CHECK(p.rows[0].verdict == Growth::Stabilized);
        CHECK(p.rows[1].differences.back() < 1e-3);
    }
    CHECK(code_of([&] { convergence_probe(inert, 0.25, {0.2}, cutoffs); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { convergence_probe(inert, 0.25, {0.8}, {100, 10}); }) == ErrorCode::InvalidArgument);
}
