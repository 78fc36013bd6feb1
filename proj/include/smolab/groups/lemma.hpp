#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "smolab/groups/character_table.hpp"
#include "smolab/rational.hpp"

namespace smolab::groups {

enum class LemmaVerdict { ForcedEqual, BelowThreshold };

/// 1 - 1/(2 n^2): the agreement fraction above which two irreducible
/// characters of degree n must coincide.
Rational lemma_threshold(int degree);

/// ForcedEqual iff the agreement fraction strictly exceeds the threshold.
/// A ForcedEqual pair that is not identical raises LemmaViolation.
LemmaVerdict lemma_check(const Character& chi, const Character& psi, const CharacterTable& table);

/// The two sums bounded in the distinguishing argument, over the disagreement set Y:
/// sum_Y |chi conj chi| and sum_Y |chi conj psi|, both at most |Y| n^2.
struct DisagreementBounds {
    std::size_t disagreement_size = 0;
    double self_sum = 0.0;
    double cross_sum = 0.0;
    double bound = 0.0;  // |Y| n^2
};
DisagreementBounds disagreement_bounds(const Character& chi, const Character& psi, const CharacterTable& table);

struct ExtremalResult {
    int degree = 0;
    std::size_t candidates = 0;  // number of degree-n irreducibles
    std::optional<Rational> max_fraction;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // row indices, lexicographically first
};

/// Maximum agreement fraction over unordered pairs of distinct degree-n irreducibles.
ExtremalResult extremal_search(const CharacterTable& table, int degree);

}  // namespace smolab::groups
