#include "smolab/smo/representation.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "smolab/error.hpp"
#include "smolab/primes/sieve.hpp"

namespace smolab::smo {

namespace {

double unit_interval(std::uint64_t seed, std::uint64_t p, std::uint64_t slot) {
    const auto h = splitmix64(splitmix64(splitmix64(seed) ^ p) ^ slot);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string source_kind_name(SourceKind kind) {
    switch (kind) {
        case SourceKind::HeckeFile: return "hecke_file";
        case SourceKind::SyntheticTempered: return "synthetic_tempered";
        case SourceKind::SyntheticWithProfile: return "synthetic_with_profile";
    }
    return "unknown";
}

RepresentationData RepresentationData::hecke(std::string label, std::map<std::uint64_t, double> a_p, unsigned weight,
                                             bool level_one, std::string path) {
    if (weight < 1) throw Error(ErrorCode::InvalidArgument, "weight must be at least 1");
    RepresentationData r;
    r.label_ = std::move(label);
    r.degree_ = 2;
    r.kind_ = SourceKind::HeckeFile;
    r.weight_ = weight;
    r.path_ = std::move(path);
    r.normalization_ = "alpha + beta = a_p / p^((k-1)/2), alpha beta = 1, k = " + std::to_string(weight) +
                       (level_one ? ", level 1" : "");
    for (const auto& [p, a] : a_p) {
        const double bound = 2.0 * std::pow(static_cast<double>(p), (weight - 1) / 2.0);
        if (std::abs(a) > bound * (1 + 1e-12)) r.warnings_.push_back({p, a, bound});
    }
    r.a_p_ = std::make_shared<const std::map<std::uint64_t, double>>(std::move(a_p));
    return r;
}

RepresentationData RepresentationData::synthetic_tempered(std::uint64_t seed, unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
    RepresentationData r;
    r.label_ = "synthetic-tempered(seed=" + std::to_string(seed) + ",n=" + std::to_string(n) + ")";
    r.degree_ = n;
    r.kind_ = SourceKind::SyntheticTempered;
    r.seed_ = seed;
    r.normalization_ = "pairs exp(+-i pi u), u = splitmix64(seed, p, pair) / 2^64";
    return r;
}

RepresentationData RepresentationData::synthetic_with_profile(std::uint64_t seed, const euler::GRCBoundProfile& profile,
                                                              unsigned n) {
    auto r = synthetic_tempered(seed, n);
    r.label_ = "synthetic-" + profile.display() + "(seed=" + std::to_string(seed) + ",n=" + std::to_string(n) + ")";
    r.kind_ = SourceKind::SyntheticWithProfile;
    r.profile_ = profile;
    r.normalization_ = "pairs r exp(i pi u), r^-1 exp(i pi u), r = p^(delta v), delta = " + profile.exponent.str();
    return r;
}

std::optional<std::uint64_t> RepresentationData::coverage() const {
    if (kind_ != SourceKind::HeckeFile) return std::nullopt;
    return a_p_->empty() ? 0 : a_p_->rbegin()->first;
}

std::optional<LocalFactor> RepresentationData::factor(std::uint64_t p) const {
    for (auto r : ramified_)
        if (r == p) return std::nullopt;
    if (kind_ == SourceKind::HeckeFile) {
        const auto it = a_p_->find(p);
        if (it == a_p_->end()) return std::nullopt;
        const double lambda = it->second / std::pow(static_cast<double>(p), (weight_ - 1) / 2.0);
        const Complex root = std::sqrt(Complex(lambda * lambda - 4.0, 0.0));
        return LocalFactor(p, {(lambda + root) / 2.0, (lambda - root) / 2.0}, 2);
    }
    std::vector<Complex> alphas;
    const double delta = profile_ ? profile_->exponent.to_double() : 0.0;
    for (unsigned k = 0; k < degree_ / 2; ++k) {
        const double theta = std::numbers::pi * unit_interval(seed_, p, 2 * k);
        if (profile_) {
            const double r = std::pow(static_cast<double>(p), delta * unit_interval(seed_, p, 2 * k + 1));
            alphas.push_back(std::polar(r, theta));
            alphas.push_back(std::polar(1.0 / r, theta));
        } else {
            alphas.push_back(std::polar(1.0, theta));
            alphas.push_back(std::polar(1.0, -theta));
        }
    }
    if (degree_ % 2 == 1) alphas.emplace_back(1.0);
    return LocalFactor(p, std::move(alphas), degree_);
}

std::optional<double> RepresentationData::reconstructed_a_p(std::uint64_t p) const {
    if (kind_ != SourceKind::HeckeFile) return std::nullopt;
    const auto f = factor(p);
    if (!f) return std::nullopt;
    return (f->alphas()[0] + f->alphas()[1]).real() * std::pow(static_cast<double>(p), (weight_ - 1) / 2.0);
}

euler::EulerProduct RepresentationData::euler_product() const {
    auto self = std::make_shared<const RepresentationData>(*this);
    return euler::EulerProduct(
        degree_,
        [self](std::uint64_t p) {
            std::vector<LocalFactor> out;
            if (auto f = self->factor(p)) out.push_back(std::move(*f));
            return out;
        },
        ramified_, label_, coverage());
}

RepresentationData load_hecke(const std::filesystem::path& path, unsigned weight) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::map<std::uint64_t, double> table;
    std::string line;
    std::size_t lineno = 0;
    bool seen_data = false;
    std::uint64_t last = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto where = path.string() + ":" + std::to_string(lineno);
        if (!seen_data && !std::isdigit(static_cast<unsigned char>(line[0]))) {
            if (line != "p,a_p") throw Error(ErrorCode::ParseError, where + ": expected header p,a_p");
            seen_data = true;
            continue;
        }
        seen_data = true;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw Error(ErrorCode::ParseError, where + ": expected two columns");
        const auto ps = trim(line.substr(0, comma));
        const auto as = trim(line.substr(comma + 1));
        std::uint64_t p = 0;
        double a = 0.0;
        try {
            std::size_t used = 0;
            p = std::stoull(ps, &used);
            if (used != ps.size()) throw std::invalid_argument(ps);
            a = std::stod(as, &used);
            if (used != as.size()) throw std::invalid_argument(as);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, where + ": malformed row '" + line + "'");
        }
        if (!primes::is_prime(p)) throw Error(ErrorCode::NonPrimeRow, where + ": " + ps + " is not prime");
        if (table.count(p)) throw Error(ErrorCode::DuplicatePrime, where + ": prime " + ps + " repeated");
        if (p < last) throw Error(ErrorCode::ParseError, where + ": primes must be ascending");
        last = p;
        table.emplace(p, a);
    }
    return RepresentationData::hecke(path.filename().string(), std::move(table), weight, true, path.string());
}

}  // namespace smolab::smo
