#include <algorithm>
#include <array>
#include <complex>
#include <set>

#include "doctest.h"
#include "smolab/error.hpp"
#include "smolab/groups/catalog.hpp"
#include "smolab/groups/character_table.hpp"
#include "smolab/groups/lemma.hpp"

using namespace smolab;
using namespace smolab::groups;
using cd = std::complex<double>;

namespace {

std::vector<std::size_t> sorted_sizes(const ConjugacyClassPartition& p) {
    auto s = p.class_sizes;
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<int> degrees(const CharacterTable& t) {
    std::vector<int> d;
    for (const auto& r : t.rows()) d.push_back(r.degree);
    return d;
}

}  // namespace

TEST_CASE("cycle notation parsing") {
    CHECK(parse_cycles("(1 2 3)(4 5)") == Permutation{1, 2, 0, 4, 3});
    CHECK(parse_cycles("()").empty());
    CHECK(format_cycles(parse_cycles("(1,3)(2 4 5)")) == "(1 3)(2 4 5)");
    CHECK_THROWS_AS(parse_cycles("(1 2"), Error);
    CHECK_THROWS_AS(parse_cycles("(1 2 1)"), Error);
    CHECK_THROWS_AS(parse_cycles("(0 1)"), Error);
    CHECK_THROWS_AS(parse_cycles("(1 a)"), Error);
    try {
        parse_cycles("(1 2)(2 3)");
        FAIL("expected InvalidPermutation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidPermutation);
    }
}

TEST_CASE("group spec text skips comments and blank lines") {
    const auto gens = parse_group_spec("# Q8\n(1 2 4 8)(3 6 5 7)\n\n(1 3 4 5)(2 7 8 6)  # j\n");
    REQUIRE(gens.size() == 2);
    CHECK(FiniteGroup::build(gens).order() == 8);
}

TEST_CASE("build_group closure") {
    SUBCASE("C2") {
        const auto g = FiniteGroup::build({parse_cycles("(1 2)")});
        CHECK(g.order() == 2);
    }
    SUBCASE("empty generator list is the trivial group") {
        const auto g = FiniteGroup::build({});
        CHECK(g.order() == 1);
        CHECK(conjugacy_classes(g).size() == 1);
    }
    SUBCASE("Q8 on 8 points") {
        const auto g = quaternion8();
        CHECK(g.order() == 8);
        CHECK(conjugacy_classes(g).size() == 5);
        CHECK(g.verify_associativity());
        CHECK(g.verify_inverses());
    }
    SUBCASE("deterministic breadth-first numbering") {
        const auto g = FiniteGroup::build({parse_cycles("(1 2 3)"), parse_cycles("(1 2)")});
        CHECK(g.element(0) == Permutation{0, 1, 2});
        CHECK(g.element(1) == parse_cycles("(1 2 3)"));
        CHECK(g.element(2) == Permutation{1, 0, 2});
        // left-to-right products: (1 2 3) then (1 2) sends 1 -> 2 -> 1
        CHECK(g.element(g.mul(1, 2))[0] == 0);
    }
    SUBCASE("limit") {
        CHECK_THROWS_AS(FiniteGroup::build({parse_cycles("(1 2)"), parse_cycles("(1 2 3 4 5 6 7)")}, 2000), Error);
        try {
            FiniteGroup::build({parse_cycles("(1 2 3 4 5)")}, 4);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ClosureExceedsLimit);
        }
    }
    SUBCASE("larger groups keep a valid table") {
        const auto s5 = symmetric(5);
        CHECK(s5.order() == 120);
        CHECK(s5.verify_associativity());
        const auto s6 = symmetric(6);
        CHECK(s6.order() == 720);
        CHECK(s6.verify_associativity(7, 100000));
        CHECK(s6.verify_inverses());
    }
}

TEST_CASE("conjugacy classes") {
    CHECK(sorted_sizes(conjugacy_classes(cyclic(2))) == std::vector<std::size_t>{1, 1});
    CHECK(sorted_sizes(conjugacy_classes(quaternion8())) == std::vector<std::size_t>{1, 1, 2, 2, 2});
    const auto s3 = FiniteGroup::build({parse_cycles("(1 2)"), parse_cycles("(1 2 3)")});
    const auto cls = conjugacy_classes(s3);
    CHECK(cls.class_sizes == std::vector<std::size_t>{1, 2, 3});

    for (const auto& entry : bundled_catalog()) {
        const auto& g = entry.group;
        const auto p = conjugacy_classes(g);
        std::size_t total = 0;
        for (auto s : p.class_sizes) {
            total += s;
            CHECK(g.order() % s == 0);
        }
        CHECK(total == g.order());
        for (std::uint32_t x = 0; x < g.order(); ++x)
            for (std::uint32_t y = 0; y < g.order(); ++y) CHECK_EQ(p.class_of[g.conjugate(x, y)], p.class_of[x]);
        CHECK(std::is_sorted(p.class_sizes.begin(), p.class_sizes.end()));
    }
}

TEST_CASE("character tables of small groups") {
    SUBCASE("C2") {
        const auto t = character_table(cyclic(2));
        REQUIRE(t.size() == 2);
        CHECK(t.row(0).values == std::vector<cd>{1.0, 1.0});
        CHECK(t.row(1).values == std::vector<cd>{1.0, -1.0});
        CHECK(t.row(1).is_integral());
    }
    SUBCASE("Q8") {
        const auto t = character_table(quaternion8());
        CHECK(degrees(t) == std::vector<int>{1, 1, 1, 1, 2});
        // classes ordered by size: {1}, {-1}, then the three pairs
        CHECK(*t.row(4).integer_values == std::vector<long long>{2, -2, 0, 0, 0});
    }
    SUBCASE("S3") { CHECK(degrees(character_table(symmetric(3))) == std::vector<int>{1, 1, 2}); }
    SUBCASE("C3 has non-real values") {
        const auto t = character_table(cyclic(3));
        REQUIRE(t.size() == 3);
        CHECK_FALSE(t.row(1).is_integral());
        const bool primitive_cube_root = std::abs(t.row(1).values[1] - std::polar(1.0, 2 * M_PI / 3)) < 1e-9 ||
                                         std::abs(t.row(1).values[1] - std::polar(1.0, -2 * M_PI / 3)) < 1e-9;
        CHECK(primitive_cube_root);
    }
    SUBCASE("S5 and S6") {
        for (int n : {5, 6}) {
            const auto t = character_table(symmetric(n));
            CHECK(t.degree_square_sum() == static_cast<long long>(t.group().order()));
            CHECK(t.row_orthogonality_error() < 1e-6 * static_cast<double>(t.group().order()));
            CHECK(t.column_orthogonality_error() < 1e-6 * static_cast<double>(t.group().order()));
        }
    }
    SUBCASE("trivial group") {
        const auto t = character_table(cyclic(1));
        REQUIRE(t.size() == 1);
        CHECK(t.row(0).degree == 1);
        CHECK(agreement_fraction(t.row(0), t.row(0), t) == Rational(1));
        CHECK(lemma_check(t.row(0), t.row(0), t) == LemmaVerdict::ForcedEqual);
    }
}

TEST_CASE("inner products and agreement") {
    const auto c2 = character_table(cyclic(2));
    CHECK(std::abs(inner_product(c2.row(0), c2.row(0), c2) - 1.0) < 1e-12);
    CHECK(std::abs(inner_product(c2.row(0), c2.row(1), c2)) < 1e-12);
    CHECK(agreement_fraction(c2.row(0), c2.row(1), c2) == Rational(1, 2));
    CHECK(agreement_fraction(c2.row(1), c2.row(1), c2) == Rational(1));

    const auto q8 = character_table(quaternion8());
    CHECK(std::abs(inner_product(q8.row(4), q8.row(4), q8) - 1.0) < 1e-9);

    Character bad{1, {1.0, 1.0, 1.0}, std::nullopt};
    CHECK_THROWS_AS(inner_product(bad, c2.row(0), c2), Error);
    CHECK_THROWS_AS(agreement_fraction(bad, c2.row(0), c2), Error);
}

TEST_CASE("Q8 x C2: the two degree-2 irreducibles agree on 7/8 of the group") {
    // Oracle: enumerate Q8 as unit quaternions acting by 2x2 complex matrices,
    // pair with +-1, and compare traces of rho (x) 1 and rho (x) sign element by element.
    const cd i{0, 1};
    using M = std::array<cd, 4>;
    const std::array<M, 4> units = {M{1, 0, 0, 1}, M{i, 0, 0, -i}, M{0, 1, -1, 0}, M{0, i, i, 0}};
    int agree = 0, total = 0;
    for (const auto& u : units)
        for (double q_sign : {1.0, -1.0})
            for (double c : {1.0, -1.0}) {
                const cd tr = q_sign * (u[0] + u[3]);
                agree += std::abs(tr - tr * c) < 1e-12;
                ++total;
            }
    REQUIRE(total == 16);
    REQUIRE(agree == 14);

    const auto t = character_table(direct_product(quaternion8(), cyclic(2)));
    const auto two = t.rows_of_degree(2);
    REQUIRE(two.size() == 2);
    CHECK(agreement_fraction(t.row(two[0]), t.row(two[1]), t) == Rational(agree, total));
}

TEST_CASE("lemma threshold and verdicts") {
    CHECK(lemma_threshold(2) == Rational(7, 8));
    CHECK(lemma_threshold(1) == Rational(1, 2));
    const auto c2 = character_table(cyclic(2));
    CHECK(lemma_check(c2.row(0), c2.row(1), c2) == LemmaVerdict::BelowThreshold);
    CHECK(lemma_check(c2.row(1), c2.row(1), c2) == LemmaVerdict::ForcedEqual);
    const auto q8 = character_table(quaternion8());
    CHECK_THROWS_AS(lemma_check(q8.row(0), q8.row(4), q8), Error);
}

TEST_CASE("extremal search") {
    const auto c4 = extremal_search(character_table(cyclic(4)), 1);
    REQUIRE(c4.max_fraction);
    CHECK(*c4.max_fraction == Rational(1, 2));
    REQUIRE(c4.witness);
    // lexicographically first maximising pair, by brute force over the table
    const auto t4 = character_table(cyclic(4));
    std::pair<std::size_t, std::size_t> first{99, 99};
    for (std::size_t a = 0; a < t4.size() && first.first == 99; ++a)
        for (std::size_t b = a + 1; b < t4.size(); ++b)
            if (agreement_fraction(t4.row(a), t4.row(b), t4) == Rational(1, 2)) {
                first = {a, b};
                break;
            }
    CHECK(*c4.witness == first);

    const auto q8 = extremal_search(character_table(quaternion8()), 2);
    CHECK(q8.candidates == 1);
    CHECK_FALSE(q8.max_fraction);
    CHECK_FALSE(q8.witness);
}

TEST_CASE("catalog") {
    const auto c6 = catalog("cyclic(6)");
    CHECK(c6.order() == 6);
    CHECK(conjugacy_classes(c6).size() == 6);
    CHECK(catalog("quaternion8").order() == 8);
    const auto q1 = q8_power_family(1);
    CHECK(q1.order() == 16);
    CHECK(character_table(q1).rows_of_degree(2).size() >= 2);
    CHECK(q8_power_family(2).order() == 64);
    CHECK(catalog("central_product_mod_diagonal_center(quaternion8, quaternion8)").order() == 32);
    CHECK(dicyclic(16).order() == 16);
    CHECK(alternating(4).order() == 12);
    CHECK_THROWS_AS(catalog("monster"), Error);
    CHECK_THROWS_AS(catalog("cyclic(2"), Error);
    CHECK_THROWS_AS(catalog("cyclic(2,3)"), Error);

    const auto all = bundled_catalog();
    CHECK(all.size() >= 20);
    for (const auto& e : all) CHECK(e.group.order() <= 64);
}

TEST_CASE("character lemma holds on the bundled catalog") {
    for (const auto& entry : bundled_catalog()) {
        CAPTURE(entry.expression);
        const auto t = character_table(entry.group);
        const double order = static_cast<double>(t.group().order());
        CHECK(t.size() == t.classes().size());
        CHECK(t.degree_square_sum() == static_cast<long long>(t.group().order()));
        CHECK(t.row_orthogonality_error() <= 1e-6 * order);
        CHECK(t.column_orthogonality_error() <= 1e-6 * order);
        for (std::size_t a = 0; a < t.size(); ++a) {
            const auto& chi = t.row(a);
            CHECK(std::abs(chi.values[0] - cd(chi.degree)) < 1e-9);
            for (const auto& v : chi.values) CHECK(std::abs(v) <= chi.degree + 1e-9);
            for (std::size_t b = 0; b < t.size(); ++b) {
                const auto& psi = t.row(b);
                const auto f = agreement_fraction(chi, psi, t);
                CHECK(f == agreement_fraction(psi, chi, t));
                CHECK((f == Rational(1)) == (a == b));
                if (a == b || chi.degree != psi.degree) continue;
                CHECK(f <= lemma_threshold(chi.degree));
                CHECK(lemma_check(chi, psi, t) == LemmaVerdict::BelowThreshold);
                const auto bounds = disagreement_bounds(chi, psi, t);
                CHECK(bounds.self_sum <= bounds.bound + 1e-9);
                CHECK(bounds.cross_sum <= bounds.bound + 1e-9);
            }
        }
    }
}

TEST_CASE("character table is deterministic") {
    const auto g = catalog("q8_power_family(2)");
    const auto a = character_table(g);
    const auto b = character_table(g);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.row(i).values == b.row(i).values);
}

TEST_CASE("sharpness: a 2-group pair attains exactly 7/8") {
    bool found = false;
    for (const auto& entry : two_group_catalog()) {
        const auto r = extremal_search(character_table(entry.group), 2);
        if (r.max_fraction && *r.max_fraction == Rational(7, 8)) found = true;
        if (r.max_fraction) CHECK(*r.max_fraction <= Rational(7, 8));
    }
    CHECK(found);
    // degree 4 in the m = 2 member reaches 1 - 1/32
    const auto r4 = extremal_search(character_table(q8_power_family(2)), 4);
    REQUIRE(r4.max_fraction);
    CHECK(*r4.max_fraction == Rational(31, 32));
}
