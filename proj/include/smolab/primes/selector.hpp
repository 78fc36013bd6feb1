#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smolab/primes/field_spec.hpp"

namespace smolab::primes {

/// A selected rational prime p with the residue degree f of the places it
/// stands for, their norm q = p^f, and how many such places lie above p.
struct PrimeItem {
    std::uint64_t p = 0;
    std::uint32_t f = 1;
    std::uint32_t places = 1;

    double norm() const { return std::pow(static_cast<double>(p), static_cast<double>(f)); }
    double log_norm() const { return static_cast<double>(f) * std::log(static_cast<double>(p)); }
};

/// A describable set S of primes. Membership is pure; primes dividing the
/// modulus of any congruence or field ingredient, and primes on the exclusion
/// list, are never selected (also not by complements).
class PrimeSelector {
public:
    enum class Kind { All, Congruence, DegreeEquals, Explicit, Complement, Intersection, Union };

    static PrimeSelector all();
    static PrimeSelector congruence(std::uint32_t modulus, std::vector<std::uint32_t> residues);
    /// Primes of the field with residue degree j, counted as places with norm p^j.
    static PrimeSelector degree_equals(FieldSpec field, std::uint32_t j);
    static PrimeSelector explicit_list(std::vector<std::uint64_t> primes);
    static PrimeSelector complement(PrimeSelector inner);
    static PrimeSelector intersection(PrimeSelector a, PrimeSelector b);
    static PrimeSelector union_of(PrimeSelector a, PrimeSelector b);

    /// Copy with extra primes that are always excluded.
    PrimeSelector excluding(std::vector<std::uint64_t> primes) const;

    Kind kind() const;

    /// The place data for p when p is selected. For intersections the operand
    /// with the larger residue degree supplies it; unions prefer the left operand.
    std::optional<PrimeItem> item(std::uint64_t p) const;
    bool contains(std::uint64_t p) const { return item(p).has_value(); }
    /// Ramified or explicitly excluded.
    bool excluded(std::uint64_t p) const;

    /// Residue degree shared by every selected place, when the selector's shape
    /// fixes it: j for degree_equals, 1 for all/congruence. Empty otherwise.
    std::optional<std::uint32_t> uniform_degree() const;
    /// The field behind a degree_equals selector.
    const FieldSpec* field() const;
    /// Explicit lists (possibly after exclusions) select finitely many primes.
    bool is_finite() const;

    std::string describe() const;

    struct Node;

private:
    explicit PrimeSelector(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses the selector mini-language: atoms `all`, `mod:N:r1,r2`,
/// `degree:<fieldspec file>:j`, `list:<file>`, combined with `not`, `and`,
/// `or` (that precedence) and parentheses. Relative paths resolve against base_dir.
PrimeSelector parse_selector(std::string_view text, const std::filesystem::path& base_dir = {});

/// Whitespace/comma separated integers, `#` comments.
std::vector<std::uint64_t> read_prime_list(const std::filesystem::path& path);

}  // namespace smolab::primes
