#include "smolab/groups/catalog.hpp"

#include <cctype>
#include <functional>

#include "smolab/error.hpp"

namespace smolab::groups {

namespace {

Permutation cycle_perm(const std::vector<std::uint32_t>& points, std::size_t degree) {
    Permutation p(degree);
    for (std::uint32_t x = 0; x < degree; ++x) p[x] = x;
    for (std::size_t k = 0; k < points.size(); ++k) p[points[k]] = points[(k + 1) % points.size()];
    return p;
}

Permutation range_cycle(std::uint32_t first, std::uint32_t last, std::size_t degree) {
    std::vector<std::uint32_t> pts;
    for (auto x = first; x <= last; ++x) pts.push_back(x);
    return cycle_perm(pts, degree);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::UnknownCatalogEntry, what);
}

std::uint32_t first_central_involution(const FiniteGroup& g) {
    for (auto z : g.center())
        if (g.element_order(z) == 2) return z;
    throw Error(ErrorCode::UnknownCatalogEntry, "group " + g.label() + " has no central involution");
}

// Embeds element e of factor f (acting on points [offset, offset + degree)) into a product of total degree.
Permutation embed(const Permutation& e, std::size_t offset, std::size_t degree) {
    Permutation p(degree);
    for (std::uint32_t x = 0; x < degree; ++x) p[x] = x;
    for (std::uint32_t x = 0; x < e.size(); ++x) p[x + offset] = static_cast<std::uint32_t>(e[x] + offset);
    return p;
}

// Recursive-descent reader for catalog expressions.
class ExpressionReader {
public:
    explicit ExpressionReader(std::string_view text) : text_(text) {}

    FiniteGroup read_group() {
        const auto name = read_name();
        std::vector<FiniteGroup> group_args;
        std::vector<int> int_args;
        skip_space();
        if (peek() == '(') {
            ++pos_;
            for (;;) {
                skip_space();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    int_args.push_back(read_int());
                } else {
                    group_args.push_back(read_group());
                }
                skip_space();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                expect(')');
                break;
            }
        }
        return make(name, int_args, group_args);
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::UnknownCatalogEntry, "catalog expression '" + std::string(text_) + "': " + why);
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string read_name() {
        skip_space();
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += text_[pos_++];
        if (name.empty()) fail("expected a group name");
        return name;
    }
    int read_int() {
        int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_++] - '0');
            if (v > 100000) fail("parameter too large");
        }
        return v;
    }

    FiniteGroup make(const std::string& name, const std::vector<int>& ints, const std::vector<FiniteGroup>& groups) {
        auto need = [&](std::size_t n_int, std::size_t n_group) {
            if (ints.size() != n_int || groups.size() != n_group) fail("wrong arguments for " + name);
        };
        if (name == "cyclic") return need(1, 0), cyclic(ints[0]);
        if (name == "dihedral") return need(1, 0), dihedral(ints[0]);
        if (name == "quaternion8") return need(0, 0), quaternion8();
        if (name == "dicyclic") return need(1, 0), dicyclic(ints[0]);
        if (name == "symmetric") return need(1, 0), symmetric(ints[0]);
        if (name == "alternating") return need(1, 0), alternating(ints[0]);
        if (name == "q8_power_family") return need(1, 0), q8_power_family(ints[0]);
        if (name == "direct_product") {
            need(0, 2);
            return direct_product(groups[0], groups[1],
                                  "direct_product(" + groups[0].label() + "," + groups[1].label() + ")");
        }
        if (name == "central_product_mod_diagonal_center") return need(0, 2), central_product(groups[0], groups[1]);
        fail("unknown catalog entry '" + name + "'");
    }
};

}  // namespace

FiniteGroup cyclic(int n) {
    require(n >= 1, "cyclic(n) needs n >= 1");
    if (n == 1) return FiniteGroup::build({}, kDefaultOrderLimit, "cyclic(1)");
    const auto deg = static_cast<std::size_t>(n);
    return FiniteGroup::build({range_cycle(0, static_cast<std::uint32_t>(n - 1), deg)}, kDefaultOrderLimit,
                              "cyclic(" + std::to_string(n) + ")");
}

FiniteGroup dihedral(int n) {
    require(n >= 2, "dihedral(n) needs n >= 2");
    const std::string label = "dihedral(" + std::to_string(n) + ")";
    if (n == 2) return FiniteGroup::build({parse_cycles("(1 2)(3 4)"), parse_cycles("(1 3)(2 4)")}, kDefaultOrderLimit, label);
    const auto deg = static_cast<std::size_t>(n);
    Permutation flip(deg);
    for (std::uint32_t x = 0; x < deg; ++x) flip[x] = static_cast<std::uint32_t>(deg - 1 - x);
    return FiniteGroup::build({range_cycle(0, static_cast<std::uint32_t>(n - 1), deg), flip}, kDefaultOrderLimit, label);
}

FiniteGroup quaternion8() {
    return FiniteGroup::build({parse_cycles("(1 2 4 8)(3 6 5 7)"), parse_cycles("(1 3 4 5)(2 7 8 6)")},
                              kDefaultOrderLimit, "quaternion8");
}

FiniteGroup dicyclic(int order) {
    require(order >= 8 && order % 4 == 0, "dicyclic(order) needs order a multiple of 4, at least 8");
    // Elements a^i b^j, index i + 2m j, with b^2 = a^m and b a = a^{-1} b.
    const int m = order / 4, two_m = 2 * m;
    auto index = [&](int i, int j) { return static_cast<std::uint32_t>(((i % two_m) + two_m) % two_m + two_m * j); };
    auto mul = [&](std::uint32_t x, std::uint32_t y) {
        const int i = static_cast<int>(x) % two_m, j = static_cast<int>(x) / two_m;
        const int k = static_cast<int>(y) % two_m, l = static_cast<int>(y) / two_m;
        if (j == 0) return index(i + k, l);
        if (l == 0) return index(i - k, 1);
        return index(i - k + m, 0);
    };
    std::vector<Permutation> gens;
    for (auto g : {index(1, 0), index(0, 1)}) {
        Permutation p(static_cast<std::size_t>(order));
        for (std::uint32_t x = 0; x < p.size(); ++x) p[x] = mul(x, g);
        gens.push_back(std::move(p));
    }
    return FiniteGroup::build(gens, kDefaultOrderLimit, "dicyclic(" + std::to_string(order) + ")");
}

FiniteGroup symmetric(int n) {
    require(n >= 1, "symmetric(n) needs n >= 1");
    const std::string label = "symmetric(" + std::to_string(n) + ")";
    if (n == 1) return FiniteGroup::build({}, kDefaultOrderLimit, label);
    const auto deg = static_cast<std::size_t>(n);
    if (n == 2) return FiniteGroup::build({cycle_perm({0, 1}, deg)}, kDefaultOrderLimit, label);
    return FiniteGroup::build({cycle_perm({0, 1}, deg), range_cycle(0, static_cast<std::uint32_t>(n - 1), deg)},
                              kDefaultOrderLimit, label);
}

FiniteGroup alternating(int n) {
    require(n >= 1, "alternating(n) needs n >= 1");
    const std::string label = "alternating(" + std::to_string(n) + ")";
    if (n <= 2) return FiniteGroup::build({}, kDefaultOrderLimit, label);
    const auto deg = static_cast<std::size_t>(n);
    std::vector<Permutation> gens;
    for (std::uint32_t k = 0; k + 2 < deg; ++k) gens.push_back(cycle_perm({k, k + 1, k + 2}, deg));
    return FiniteGroup::build(gens, kDefaultOrderLimit, label);
}

FiniteGroup central_product(const FiniteGroup& a, const FiniteGroup& b) {
    const auto product = direct_product(a, b);
    const std::size_t degree = a.degree() + b.degree();
    auto za = embed(a.element(first_central_involution(a)), 0, degree);
    auto zb = embed(b.element(first_central_involution(b)), a.degree(), degree);
    Permutation z(degree);
    for (std::uint32_t x = 0; x < degree; ++x) z[x] = zb[za[x]];
    return quotient(product, {product.index_of(z)},
                    "central_product_mod_diagonal_center(" + a.label() + "," + b.label() + ")");
}

FiniteGroup q8_power_family(int m) {
    require(m >= 1 && m <= 3, "q8_power_family(m) supports 1 <= m <= 3");
    const auto q8 = quaternion8();
    const auto z = q8.element(first_central_involution(q8));
    const std::size_t degree = 8 * static_cast<std::size_t>(m) + 2;
    std::vector<Permutation> gens;
    for (int f = 0; f < m; ++f)
        for (const auto& s : q8.generators()) gens.push_back(embed(s, 8 * static_cast<std::size_t>(f), degree));
    gens.push_back(cycle_perm({static_cast<std::uint32_t>(degree - 2), static_cast<std::uint32_t>(degree - 1)}, degree));
    const auto big = FiniteGroup::build(gens, kDefaultOrderLimit);
    std::vector<std::uint32_t> identify;
    for (int f = 1; f < m; ++f) {
        auto z0 = embed(z, 0, degree);
        auto zf = embed(z, 8 * static_cast<std::size_t>(f), degree);
        Permutation p(degree);
        for (std::uint32_t x = 0; x < degree; ++x) p[x] = zf[z0[x]];  // z_0 z_f, and z_f has order 2
        identify.push_back(big.index_of(p));
    }
    const std::string label = "q8_power_family(" + std::to_string(m) + ")";
    if (identify.empty()) return FiniteGroup::build(gens, kDefaultOrderLimit, label);
    return quotient(big, identify, label);
}

FiniteGroup catalog(std::string_view expression) {
    ExpressionReader reader(expression);
    auto g = reader.read_group();
    reader.finish();
    return g;
}

std::vector<CatalogEntry> bundled_catalog() {
    static const char* const kExpressions[] = {
        "cyclic(1)",
        "cyclic(2)",
        "cyclic(3)",
        "cyclic(4)",
        "cyclic(5)",
        "cyclic(6)",
        "cyclic(8)",
        "dihedral(2)",
        "symmetric(3)",
        "dihedral(4)",
        "dihedral(5)",
        "dihedral(6)",
        "dihedral(8)",
        "quaternion8",
        "dicyclic(12)",
        "dicyclic(16)",
        "alternating(4)",
        "symmetric(4)",
        "direct_product(cyclic(2),cyclic(4))",
        "direct_product(cyclic(2),quaternion8)",
        "direct_product(dihedral(4),cyclic(2))",
        "direct_product(cyclic(3),symmetric(3))",
        "q8_power_family(1)",
        "central_product_mod_diagonal_center(dihedral(4),cyclic(4))",
        "central_product_mod_diagonal_center(quaternion8,quaternion8)",
        "central_product_mod_diagonal_center(dihedral(4),quaternion8)",
        "direct_product(central_product_mod_diagonal_center(quaternion8,quaternion8),cyclic(2))",
        "q8_power_family(2)",
    };
    std::vector<CatalogEntry> out;
    for (const char* e : kExpressions) out.push_back({e, catalog(e)});
    return out;
}

std::vector<CatalogEntry> two_group_catalog() {
    std::vector<CatalogEntry> out;
    for (auto& entry : bundled_catalog()) {
        const auto n = entry.group.order();
        if (n >= 2 && (n & (n - 1)) == 0) out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace smolab::groups
