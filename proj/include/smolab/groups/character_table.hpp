#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "smolab/groups/finite_group.hpp"
#include "smolab/rational.hpp"

namespace smolab::groups {

/// Values are stored per conjugacy class. When every value is a rational
/// integer the exact copy in `integer_values` is filled as well.
struct Character {
    int degree = 0;
    std::vector<std::complex<double>> values;
    std::optional<std::vector<long long>> integer_values;

    bool is_integral() const { return integer_values.has_value(); }
};

/// Absolute tolerance for equality of character values.
inline constexpr double kValueTolerance = 1e-9;

bool values_equal(std::complex<double> a, std::complex<double> b);

/// Irreducible characters of a finite group, one row per conjugacy class,
/// sorted by degree and then by values in descending lexicographic order
/// (so the trivial character comes first).
class CharacterTable {
public:
    CharacterTable(std::shared_ptr<const FiniteGroup> group, ConjugacyClassPartition classes,
                   std::vector<Character> rows)
        : group_(std::move(group)), classes_(std::move(classes)), rows_(std::move(rows)) {}

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    const ConjugacyClassPartition& classes() const { return classes_; }
    const std::vector<Character>& rows() const { return rows_; }
    const Character& row(std::size_t i) const { return rows_[i]; }
    std::size_t size() const { return rows_.size(); }

    /// Indices of rows of the given degree.
    std::vector<std::size_t> rows_of_degree(int degree) const;

    /// Largest deviation of the row Gram matrix from |G| * identity.
    double row_orthogonality_error() const;
    /// Largest deviation of the column Gram matrix from |C_G(g)| * identity.
    double column_orthogonality_error() const;
    /// Sum of squared degrees, computed exactly.
    long long degree_square_sum() const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    ConjugacyClassPartition classes_;
    std::vector<Character> rows_;
};

/// Burnside's class-algebra method: exact integer class constants, a random
/// integer combination of the class matrices split by a double-precision
/// eigendecomposition, then normalisation via the orthogonality relations.
/// Throws NumericalDegeneracy when no combination separates the eigenvalues.
CharacterTable character_table(std::shared_ptr<const FiniteGroup> group);
CharacterTable character_table(const FiniteGroup& group);

/// (1/|G|) sum_g chi(g) conj(psi(g)).
std::complex<double> inner_product(const Character& chi, const Character& psi, const ConjugacyClassPartition& classes);
std::complex<double> inner_product(const Character& chi, const Character& psi, const CharacterTable& table);

/// |{g : chi(g) = psi(g)}| / |G|.
Rational agreement_fraction(const Character& chi, const Character& psi, const CharacterTable& table);

}  // namespace smolab::groups
