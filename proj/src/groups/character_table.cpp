#include "smolab/groups/character_table.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "smolab/error.hpp"

namespace smolab::groups {

namespace {

constexpr double kSeparationTolerance = 1e-8;
constexpr double kSnapTolerance = 1e-7;
constexpr int kMaxAttempts = 32;

using ClassConstants = std::vector<std::vector<std::vector<long long>>>;  // [i][j][k]

ClassConstants class_constants(const FiniteGroup& g, const ConjugacyClassPartition& cls) {
    const std::size_t r = cls.size();
    ClassConstants a(r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
        const auto z = cls.representatives[k];
        for (std::uint32_t x = 0; x < g.order(); ++x) {
            const auto y = g.mul(g.inverse(x), z);
            ++a[cls.class_of[x]][cls.class_of[y]][k];
        }
    }
    return a;
}

std::complex<double> snap(std::complex<double> v) {
    const double re = std::round(v.real()), im = std::round(v.imag());
    if (std::abs(v.real() - re) < kSnapTolerance && std::abs(v.imag() - im) < kSnapTolerance) return {re, im};
    return v;
}

// -1, 0, +1 comparing values lexicographically by (real, imag) with tolerance.
int compare_values(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (std::abs(a[k].real() - b[k].real()) > kValueTolerance) return a[k].real() < b[k].real() ? -1 : 1;
        if (std::abs(a[k].imag() - b[k].imag()) > kValueTolerance) return a[k].imag() < b[k].imag() ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool values_equal(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) <= kValueTolerance; }

CharacterTable character_table(const FiniteGroup& group) {
    return character_table(std::make_shared<const FiniteGroup>(group));
}

CharacterTable character_table(std::shared_ptr<const FiniteGroup> group) {
    const FiniteGroup& g = *group;
    auto cls = conjugacy_classes(g);
    const std::size_t r = cls.size();
    const auto order = static_cast<double>(g.order());
    const auto constants = class_constants(g, cls);

    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> coeff(-1000, 1000);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
        for (std::size_t i = 0; i < r; ++i) {
            const double c = coeff(rng);
            for (std::size_t j = 0; j < r; ++j)
                for (std::size_t k = 0; k < r; ++k)
                    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) +=
                        c * static_cast<double>(constants[i][j][k]);
        }
        Eigen::EigenSolver<Eigen::MatrixXd> solver(m, true);
        if (solver.info() != Eigen::Success) continue;
        const auto lambda = solver.eigenvalues();
        double scale = 1.0;
        for (Eigen::Index a = 0; a < lambda.size(); ++a) scale = std::max(scale, std::abs(lambda[a]));
        bool separated = true;
        for (Eigen::Index a = 0; a < lambda.size() && separated; ++a)
            for (Eigen::Index b = a + 1; b < lambda.size(); ++b)
                if (std::abs(lambda[a] - lambda[b]) <= kSeparationTolerance * scale) {
                    separated = false;
                    break;
                }
        if (!separated) continue;

        const auto vectors = solver.eigenvectors();
        std::vector<Character> rows;
        bool ok = true;
        for (Eigen::Index a = 0; a < vectors.cols() && ok; ++a) {
            const std::complex<double> lead = vectors(0, a);
            if (std::abs(lead) < 1e-12) {
                ok = false;
                break;
            }
            // Central character omega_k = |C_k| chi(g_k) / chi(1), normalised so omega_0 = 1.
            std::vector<std::complex<double>> omega(r);
            double norm = 0.0;
            for (std::size_t k = 0; k < r; ++k) {
                omega[k] = vectors(static_cast<Eigen::Index>(k), a) / lead;
                norm += std::norm(omega[k]) / static_cast<double>(cls.class_sizes[k]);
            }
            const double degree_f = std::sqrt(order / norm);
            const double degree_r = std::round(degree_f);
            if (std::abs(degree_f - degree_r) > 1e-6 || degree_r < 1) {
                ok = false;
                break;
            }
            Character chi;
            chi.degree = static_cast<int>(degree_r);
            chi.values.resize(r);
            bool integral = true;
            for (std::size_t k = 0; k < r; ++k) {
                chi.values[k] = snap(degree_r * omega[k] / static_cast<double>(cls.class_sizes[k]));
                if (chi.values[k].imag() != 0.0 || chi.values[k].real() != std::round(chi.values[k].real()))
                    integral = false;
            }
            if (integral) {
                std::vector<long long> ints(r);
                for (std::size_t k = 0; k < r; ++k) ints[k] = std::llround(chi.values[k].real());
                chi.integer_values = std::move(ints);
            }
            rows.push_back(std::move(chi));
        }
        if (!ok) continue;

        std::stable_sort(rows.begin(), rows.end(), [](const Character& x, const Character& y) {
            if (x.degree != y.degree) return x.degree < y.degree;
            return compare_values(x.values, y.values) > 0;
        });
        CharacterTable table(group, std::move(cls), std::move(rows));
        if (table.degree_square_sum() != static_cast<long long>(g.order()) ||
            table.row_orthogonality_error() > 1e-6 * order)
            throw Error(ErrorCode::NumericalDegeneracy, "character table failed orthogonality checks");
        return table;
    }
    throw Error(ErrorCode::NumericalDegeneracy,
                "could not separate class-algebra eigenspaces for group of order " + std::to_string(g.order()));
}

std::vector<std::size_t> CharacterTable::rows_of_degree(int degree) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].degree == degree) out.push_back(i);
    return out;
}

double CharacterTable::row_orthogonality_error() const {
    const double order = static_cast<double>(group_->order());
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            std::complex<double> s = 0.0;
            for (std::size_t k = 0; k < classes_.size(); ++k)
                s += static_cast<double>(classes_.class_sizes[k]) * rows_[i].values[k] * std::conj(rows_[j].values[k]);
            worst = std::max(worst, std::abs(s - (i == j ? order : 0.0)));
        }
    return worst;
}

double CharacterTable::column_orthogonality_error() const {
    const double order = static_cast<double>(group_->order());
    double worst = 0.0;
    for (std::size_t k = 0; k < classes_.size(); ++k)
        for (std::size_t l = 0; l < classes_.size(); ++l) {
            std::complex<double> s = 0.0;
            for (const auto& row : rows_) s += row.values[k] * std::conj(row.values[l]);
            const double expect = k == l ? order / static_cast<double>(classes_.class_sizes[k]) : 0.0;
            worst = std::max(worst, std::abs(s - expect));
        }
    return worst;
}

long long CharacterTable::degree_square_sum() const {
    long long s = 0;
    for (const auto& row : rows_) s += static_cast<long long>(row.degree) * row.degree;
    return s;
}

std::complex<double> inner_product(const Character& chi, const Character& psi, const ConjugacyClassPartition& classes) {
    if (chi.values.size() != classes.size() || psi.values.size() != classes.size())
        throw Error(ErrorCode::ClassMismatch, "character does not match the class structure");
    std::complex<double> s = 0.0;
    std::size_t order = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        s += static_cast<double>(classes.class_sizes[k]) * chi.values[k] * std::conj(psi.values[k]);
        order += classes.class_sizes[k];
    }
    return s / static_cast<double>(order);
}

std::complex<double> inner_product(const Character& chi, const Character& psi, const CharacterTable& table) {
    return inner_product(chi, psi, table.classes());
}

Rational agreement_fraction(const Character& chi, const Character& psi, const CharacterTable& table) {
    const auto& cls = table.classes();
    if (chi.values.size() != cls.size() || psi.values.size() != cls.size())
        throw Error(ErrorCode::ClassMismatch, "character does not match the class structure");
    std::int64_t agree = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) {
        const bool equal = chi.is_integral() && psi.is_integral()
                               ? (*chi.integer_values)[k] == (*psi.integer_values)[k]
                               : values_equal(chi.values[k], psi.values[k]);
        if (equal) agree += static_cast<std::int64_t>(cls.class_sizes[k]);
    }
    return {agree, static_cast<std::int64_t>(table.group().order())};
}

}  // namespace smolab::groups
