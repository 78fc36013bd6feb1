#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace smolab::groups {

/// A permutation of {0, ..., size-1}; entry i is the image of point i.
/// Text form uses 1-based cycle notation, e.g. "(1 2 3)(4 5)".
using Permutation = std::vector<std::uint32_t>;

/// Parses one permutation in cycle notation. "()" or an empty string is the identity.
Permutation parse_cycles(std::string_view text);

/// Cycle notation with 1-based points; the identity prints as "()".
std::string format_cycles(const Permutation& perm);

/// Group spec text: one permutation per line, `#` starts a comment.
std::vector<Permutation> parse_group_spec(std::string_view text);
std::vector<Permutation> read_group_file(const std::filesystem::path& path);

inline constexpr std::size_t kDefaultOrderLimit = 2000;

/// A permutation group closed from its generators, with a full multiplication table.
///
/// Elements are numbered breadth-first from the identity (element 0), expanding
/// each element by the generators in the order given. Products follow the
/// left-to-right convention: point x under mul(a, b) is (x^a)^b.
class FiniteGroup {
public:
    static FiniteGroup build(const std::vector<Permutation>& generators,
                             std::size_t limit = kDefaultOrderLimit, std::string label = {});

    std::size_t order() const { return elements_.size(); }
    std::size_t degree() const { return degree_; }
    const std::string& label() const { return label_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const Permutation& element(std::uint32_t index) const { return elements_[index]; }

    static constexpr std::uint32_t identity() { return 0; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order() + b]; }
    std::uint32_t inverse(std::uint32_t a) const { return inverses_[a]; }
    std::uint32_t conjugate(std::uint32_t x, std::uint32_t g) const { return mul(mul(inverse(g), x), g); }
    std::size_t element_order(std::uint32_t a) const;

    /// Index of an element given as a permutation, or order() when it is not in the group.
    std::uint32_t index_of(const Permutation& perm) const;

    /// Associativity over all triples for order <= 256, otherwise `samples` random triples.
    bool verify_associativity(std::uint64_t seed = 0, std::size_t samples = 100000) const;
    /// Identity and two-sided inverses.
    bool verify_inverses() const;

    std::vector<std::uint32_t> center() const;

private:
    std::string label_;
    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::vector<std::uint32_t> base_;  // points whose images identify an element
    std::vector<std::uint16_t> table_;
    std::vector<std::uint32_t> inverses_;

    std::vector<std::uint32_t> base_key(const Permutation& perm) const;
};

struct ConjugacyClassPartition {
    std::vector<std::uint32_t> class_of;       // element -> class index
    std::vector<std::size_t> class_sizes;      // ordered by (size, least element)
    std::vector<std::uint32_t> representatives;  // least element of each class

    std::size_t size() const { return class_sizes.size(); }
};

ConjugacyClassPartition conjugacy_classes(const FiniteGroup& group);

/// Quotient by the normal closure of the given elements, realised as the
/// regular permutation representation of the quotient.
FiniteGroup quotient(const FiniteGroup& group, const std::vector<std::uint32_t>& normal_generators,
                     std::string label = {});

/// Direct product with generators acting on disjoint point sets.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string label = {});

}  // namespace smolab::groups
