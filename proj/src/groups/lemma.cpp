#include "smolab/groups/lemma.hpp"

#include <cmath>

#include "smolab/error.hpp"

namespace smolab::groups {

Rational lemma_threshold(int degree) {
    if (degree < 1) throw Error(ErrorCode::DegreeMismatch, "character degree must be positive");
    return Rational(1) - Rational(1, 2LL * degree * degree);
}

LemmaVerdict lemma_check(const Character& chi, const Character& psi, const CharacterTable& table) {
    if (chi.degree != psi.degree)
        throw Error(ErrorCode::DegreeMismatch, "lemma_check needs characters of equal degree");
    const auto fraction = agreement_fraction(chi, psi, table);
    if (fraction <= lemma_threshold(chi.degree)) return LemmaVerdict::BelowThreshold;
    if (fraction != Rational(1))
        throw Error(ErrorCode::LemmaViolation, "distinct irreducibles agree on fraction " + fraction.str() +
                                                   " above threshold " + lemma_threshold(chi.degree).str());
    return LemmaVerdict::ForcedEqual;
}

DisagreementBounds disagreement_bounds(const Character& chi, const Character& psi, const CharacterTable& table) {
    const auto& cls = table.classes();
    if (chi.values.size() != cls.size() || psi.values.size() != cls.size())
        throw Error(ErrorCode::ClassMismatch, "character does not match the class structure");
    DisagreementBounds out;
    for (std::size_t k = 0; k < cls.size(); ++k) {
        if (values_equal(chi.values[k], psi.values[k])) continue;
        const auto size = static_cast<double>(cls.class_sizes[k]);
        out.disagreement_size += cls.class_sizes[k];
        out.self_sum += size * std::abs(chi.values[k] * std::conj(chi.values[k]));
        out.cross_sum += size * std::abs(chi.values[k] * std::conj(psi.values[k]));
    }
    const double n = chi.degree;
    out.bound = static_cast<double>(out.disagreement_size) * n * n;
    return out;
}

ExtremalResult extremal_search(const CharacterTable& table, int degree) {
    ExtremalResult out;
    out.degree = degree;
    const auto idx = table.rows_of_degree(degree);
    out.candidates = idx.size();
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const auto f = agreement_fraction(table.row(idx[a]), table.row(idx[b]), table);
            if (!out.max_fraction || f > *out.max_fraction) {
                out.max_fraction = f;
                out.witness = std::make_pair(idx[a], idx[b]);
            }
        }
    return out;
}

}  // namespace smolab::groups
