#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smolab/euler/abscissa.hpp"
#include "smolab/euler/euler_product.hpp"
#include "smolab/euler/local_factor.hpp"

namespace smolab::smo {

using euler::Complex;
using euler::LocalFactor;

enum class SourceKind { HeckeFile, SyntheticTempered, SyntheticWithProfile };

std::string source_kind_name(SourceKind kind);

struct RamanujanWarning {
    std::uint64_t p = 0;
    double a_p = 0.0;
    double bound = 0.0;  // 2 p^{(k-1)/2}
};

/// Coefficient data standing in for an automorphic representation: local
/// factors at unramified primes, from a Hecke eigenvalue table or a seeded
/// synthetic sampler.
class RepresentationData {
public:
    /// Degree 2. Satake pair at p: alpha + beta = a_p / p^{(k-1)/2}, alpha beta = 1.
    static RepresentationData hecke(std::string label, std::map<std::uint64_t, double> a_p, unsigned weight,
                                    bool level_one = true, std::string path = {});
    /// Conjugate pairs e^{+-i theta} on the unit circle (and 1 for odd n),
    /// theta = pi * u with u uniform from splitmix64(seed, p, pair index).
    static RepresentationData synthetic_tempered(std::uint64_t seed, unsigned n = 2);
    /// Pairs r e^{i theta}, r^{-1} e^{i theta} with r = p^{delta u'} < p^delta,
    /// so the set is stable under alpha -> 1/conj(alpha) and obeys the profile's bound.
    static RepresentationData synthetic_with_profile(std::uint64_t seed, const euler::GRCBoundProfile& profile,
                                                     unsigned n = 2);

    const std::string& label() const { return label_; }
    unsigned degree() const { return degree_; }
    SourceKind kind() const { return kind_; }
    std::uint64_t seed() const { return seed_; }
    unsigned weight() const { return weight_; }
    const std::string& path() const { return path_; }
    const std::vector<std::uint64_t>& ramified() const { return ramified_; }
    /// How coefficients map to Satake parameters, in words.
    const std::string& normalization() const { return normalization_; }
    /// Largest prime with data; unbounded for synthetic sources.
    std::optional<std::uint64_t> coverage() const;

    /// Empty for ramified primes and primes without data.
    std::optional<LocalFactor> factor(std::uint64_t p) const;

    /// Hecke sources: the raw table and the primes breaking the Ramanujan bound.
    const std::map<std::uint64_t, double>& coefficients() const { return *a_p_; }
    const std::vector<RamanujanWarning>& warnings() const { return warnings_; }
    /// a_p recovered from the Satake pair; Hecke sources only.
    std::optional<double> reconstructed_a_p(std::uint64_t p) const;

    euler::EulerProduct euler_product() const;

private:
    RepresentationData() = default;

    std::string label_;
    unsigned degree_ = 2;
    SourceKind kind_ = SourceKind::SyntheticTempered;
    std::uint64_t seed_ = 0;
    unsigned weight_ = 0;
    std::string path_;
    std::vector<std::uint64_t> ramified_;
    std::string normalization_;
    std::shared_ptr<const std::map<std::uint64_t, double>> a_p_ = std::make_shared<std::map<std::uint64_t, double>>();
    std::vector<RamanujanWarning> warnings_;
    std::optional<euler::GRCBoundProfile> profile_;
};

/// CSV `p,a_p` with p ascending. Large a_p are read as doubles.
/// Throws ParseError, NonPrimeRow, DuplicatePrime, IoError.
RepresentationData load_hecke(const std::filesystem::path& path, unsigned weight);

/// splitmix64 finalizer applied to x.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace smolab::smo
