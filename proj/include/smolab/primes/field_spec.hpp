#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace smolab::primes {

/// An abelian number field described by congruence data: the subfield of the
/// N-th cyclotomic field fixed by a subgroup H of (Z/N)^x. Frobenius at an
/// unramified p is the coset of p mod N in (Z/N)^x / H.
class FieldSpec {
public:
    /// H is the subgroup generated by `generators` (the empty list gives H = {1}).
    /// Throws InvalidFieldSpec for N = 0 or generators not coprime to N.
    FieldSpec(std::uint32_t modulus, const std::vector<std::uint32_t>& generators, std::string label = {});

    /// Text form: lines `N=<int>` and `H=<comma list>`, optional `label=<text>`, `#` comments.
    static FieldSpec parse(std::string_view text);
    static FieldSpec read(const std::filesystem::path& path);

    std::uint32_t modulus() const { return modulus_; }
    const std::vector<std::uint32_t>& generators() const { return generators_; }
    const std::vector<std::uint32_t>& subgroup() const { return subgroup_; }
    const std::string& label() const { return label_; }

    /// [(Z/N)^x : H].
    std::uint32_t degree() const { return static_cast<std::uint32_t>(coset_reps_.size()); }
    /// Least residue of each coset; class index k has representative coset_reps()[k].
    const std::vector<std::uint32_t>& coset_reps() const { return coset_reps_; }

    bool is_ramified(std::uint64_t p) const { return modulus_ > 1 && modulus_ % p == 0; }
    bool in_subgroup(std::uint64_t residue) const;
    /// Coset index of a unit residue, -1 for non-units.
    int class_of(std::uint64_t n) const;

    /// Multiplicative order of p in (Z/N)^x / H. Throws Ramified if p | N.
    std::uint32_t residue_degree(std::uint64_t p) const;

    /// True when (Z/N)^x / H is cyclic.
    bool is_cyclic() const;

    /// True when this field contains `sub`: the reduction of our H modulo
    /// sub's modulus lands inside sub's H. Requires sub.modulus() | modulus().
    bool contains(const FieldSpec& sub) const;

    std::string describe() const;

private:
    std::uint32_t modulus_;
    std::vector<std::uint32_t> generators_;
    std::vector<std::uint32_t> subgroup_;
    std::vector<int> coset_of_;  // residue -> coset index or -1
    std::vector<std::uint32_t> coset_reps_;
    std::string label_;
};

}  // namespace smolab::primes
