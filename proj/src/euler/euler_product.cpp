#include "smolab/euler/euler_product.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "smolab/error.hpp"
#include "smolab/primes/sieve.hpp"

namespace smolab::euler {

namespace {

// q^k, or nothing once it passes limit.
std::optional<std::uint64_t> checked_power(std::uint64_t q, unsigned k, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > limit / q) return std::nullopt;
        r *= q;
    }
    return r;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

EulerProduct::EulerProduct(unsigned degree, FactorSource source, std::vector<std::uint64_t> ramified,
                           std::string label, std::optional<std::uint64_t> coverage)
    : degree_(degree), source_(std::move(source)), ramified_(std::move(ramified)), label_(std::move(label)),
      coverage_(coverage) {
    std::sort(ramified_.begin(), ramified_.end());
    ramified_.erase(std::unique(ramified_.begin(), ramified_.end()), ramified_.end());
}

bool EulerProduct::is_ramified(std::uint64_t p) const {
    return std::binary_search(ramified_.begin(), ramified_.end(), p);
}

std::vector<LocalFactor> EulerProduct::factors(std::uint64_t p) const {
    if (coverage_ && p > *coverage_) return {};
    return source_(p);
}

EulerProduct zeta_model() {
    return EulerProduct(1, [](std::uint64_t p) { return std::vector<LocalFactor>{LocalFactor(p, {1.0})}; }, {},
                        "zeta");
}

EulerProduct dedekind_zeta_model(const primes::FieldSpec& field) {
    std::vector<std::uint64_t> ramified;
    for (std::uint64_t p = 2; p <= field.modulus(); ++p)
        if (field.modulus() % p == 0 && primes::is_prime(p)) ramified.push_back(p);
    auto source = [field](std::uint64_t p) {
        std::vector<LocalFactor> out;
        if (field.is_ramified(p)) return out;
        const auto f = field.residue_degree(p);
        const auto q = checked_power(p, f, std::numeric_limits<std::uint64_t>::max());
        if (!q) return out;
        for (std::uint32_t i = 0; i < field.degree() / f; ++i) out.emplace_back(*q, std::vector<Complex>{1.0}, 1);
        return out;
    };
    return EulerProduct(field.degree(), source, ramified, "dedekind(" + field.describe() + ")");
}

EulerProduct rankin_selberg(const EulerProduct& a, const EulerProduct& b, bool conjugate_second) {
    std::vector<std::uint64_t> ramified = a.ramified();
    ramified.insert(ramified.end(), b.ramified().begin(), b.ramified().end());
    std::optional<std::uint64_t> coverage = a.coverage();
    if (b.coverage()) coverage = coverage ? std::min(*coverage, *b.coverage()) : *b.coverage();
    auto source = [a, b, conjugate_second](std::uint64_t p) {
        const auto fa = a.factors(p);
        const auto fb = b.factors(p);
        std::vector<LocalFactor> out;
        if (fa.empty() || fb.empty()) return out;
        if (fa.size() != fb.size())
            throw Error(ErrorCode::NormMismatch, "different numbers of places above " + std::to_string(p));
        for (std::size_t i = 0; i < fa.size(); ++i) out.push_back(rankin_selberg_local(fa[i], fb[i], conjugate_second));
        return out;
    };
    const std::string label = a.label() + " x " + (conjugate_second ? "conj(" + b.label() + ")" : b.label());
    return EulerProduct(a.degree() * b.degree(), source, ramified, label, coverage);
}

EulerProduct read_satake_file(const std::filesystem::path& path, std::optional<unsigned> degree) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    auto table = std::make_shared<std::map<std::uint64_t, std::vector<LocalFactor>>>();
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::vector<Complex>>> rows;
    std::string line;
    unsigned width = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split_csv(line);
        if (rows.empty() && !cells.empty() && !cells[0].empty() && !std::isdigit(static_cast<unsigned char>(cells[0][0])))
            continue;  // header
        const auto where = path.string() + ":" + std::to_string(lineno);
        if (cells.size() < 2 || cells.size() % 2 != 0) throw Error(ErrorCode::ParseError, where + ": expected p,q,re,im,...");
        try {
            std::size_t used = 0;
            const auto p = std::stoull(cells[0], &used);
            if (used != cells[0].size()) throw std::invalid_argument("p");
            const auto q = std::stoull(cells[1], &used);
            if (used != cells[1].size()) throw std::invalid_argument("q");
            if (!primes::is_prime(p)) throw Error(ErrorCode::NonPrimeRow, where + ": " + cells[0] + " is not prime");
            std::uint64_t r = q;
            while (r % p == 0) r /= p;
            if (r != 1) throw Error(ErrorCode::ParseError, where + ": q is not a power of p");
            std::vector<Complex> alphas;
            for (std::size_t i = 2; i < cells.size(); i += 2) alphas.emplace_back(std::stod(cells[i]), std::stod(cells[i + 1]));
            width = std::max(width, static_cast<unsigned>(alphas.size()));
            rows.emplace_back(p, q, std::move(alphas));
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, where + ": malformed number");
        }
    }
    const unsigned n = degree.value_or(width);
    std::uint64_t coverage = 0;
    for (auto& [p, q, alphas] : rows) {
        (*table)[p].emplace_back(q, std::move(alphas), n);
        coverage = std::max(coverage, p);
    }
    auto source = [table](std::uint64_t p) {
        const auto it = table->find(p);
        return it == table->end() ? std::vector<LocalFactor>{} : it->second;
    };
    return EulerProduct(n, source, {}, path.filename().string(), coverage);
}

Complex LogExpansion::coefficient(std::uint64_t m) const {
    const auto it = std::lower_bound(coefficients.begin(), coefficients.end(), m,
                                     [](const LogCoefficient& c, std::uint64_t v) { return c.m < v; });
    return it != coefficients.end() && it->m == m ? it->value : Complex{0.0};
}

void visit_log_expansion(const EulerProduct& ep, const primes::PrimeSelector& selector, std::uint64_t M,
                         const std::function<void(const LogCoefficient&)>& visit) {
    if (M > kMaxLogExpansion) throw Error(ErrorCode::LimitExceeded, "log expansion cutoff exceeds 10^8");
    const std::uint64_t x = ep.coverage() ? std::min(M, *ep.coverage()) : M;
    const auto parts = primes::map_prime_segments<std::vector<LogCoefficient>>(x, [&](std::span<const std::uint32_t> seg) {
        std::vector<LogCoefficient> out;
        for (std::uint64_t p : seg) {
            if (!selector.contains(p)) continue;
            const auto begin = out.size();
            for (const auto& f : ep.factors(p)) {
                std::vector<Complex> powers(f.size(), 1.0);
                for (unsigned k = 1;; ++k) {
                    const auto m = checked_power(f.q(), k, M);
                    if (!m) break;
                    Complex sum = 0.0;
                    for (std::size_t i = 0; i < powers.size(); ++i) {
                        powers[i] *= f.alphas()[i];
                        sum += powers[i];
                    }
                    out.push_back({*m, sum / static_cast<double>(k)});
                }
            }
            // several places can share a norm
            std::sort(out.begin() + static_cast<std::ptrdiff_t>(begin), out.end(),
                      [](const LogCoefficient& a, const LogCoefficient& b) { return a.m < b.m; });
            std::size_t w = begin;
            for (std::size_t r = begin; r < out.size(); ++r) {
                if (w > begin && out[w - 1].m == out[r].m)
                    out[w - 1].value += out[r].value;
                else
                    out[w++] = out[r];
            }
            out.resize(w);
        }
        return out;
    });
    for (const auto& part : parts)
        for (const auto& c : part) visit(c);
}

LogExpansion log_expansion(const EulerProduct& ep, const primes::PrimeSelector& selector, std::uint64_t M) {
    LogExpansion out;
    out.cutoff = M;
    visit_log_expansion(ep, selector, M, [&](const LogCoefficient& c) { out.coefficients.push_back(c); });
    std::sort(out.coefficients.begin(), out.coefficients.end(),
              [](const LogCoefficient& a, const LogCoefficient& b) { return a.m < b.m; });
    return out;
}

PositivityResult positive_type_check(const EulerProduct& ep, const primes::PrimeSelector& selector, std::uint64_t M) {
    PositivityResult r;
    r.cutoff = M;
    visit_log_expansion(ep, selector, M, [&](const LogCoefficient& c) {
        ++r.coefficients;
        r.min_coefficient = r.coefficients == 1 ? c.value.real() : std::min(r.min_coefficient, c.value.real());
        r.max_imaginary = std::max(r.max_imaginary, std::abs(c.value.imag()));
        if (c.value.real() < -kPositivityTolerance || std::abs(c.value.imag()) > kPositivityTolerance) {
            r.positive = false;
            if (!r.first_violation || c.m < *r.first_violation) r.first_violation = c.m;
        }
    });
    return r;
}

LandauReport landau_region_check(const EulerProduct& ep, const primes::PrimeSelector& selector,
                                 const std::vector<double>& sigmas, std::uint64_t M) {
    const auto pos = positive_type_check(ep, selector, M);
    if (!pos.positive)
        throw Error(ErrorCode::NotPositiveType,
                    "log coefficient at m = " + std::to_string(*pos.first_violation) + " is not a nonnegative real");
    LandauReport report;
    report.cutoff = M;
    report.coverage = ep.coverage();
    std::vector<double> logs(sigmas.size(), 0.0);
    visit_log_expansion(ep, selector, M, [&](const LogCoefficient& c) {
        const double lm = std::log(static_cast<double>(c.m));
        for (std::size_t i = 0; i < sigmas.size(); ++i) logs[i] += c.value.real() * std::exp(-sigmas[i] * lm);
    });
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        LandauSample s;
        s.sigma = sigmas[i];
        s.log_value = logs[i];
        s.value = std::exp(logs[i]);
        s.nonvanishing = s.log_value >= -kPositivityTolerance;
        report.samples.push_back(s);
    }
    return report;
}

}  // namespace smolab::euler
