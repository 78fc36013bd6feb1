#include "smolab/groups/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>

#include "smolab/error.hpp"

namespace smolab::groups {

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

[[noreturn]] void bad_permutation(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::InvalidPermutation, "invalid permutation '" + std::string(text) + "': " + why);
}

Permutation padded(const Permutation& p, std::size_t degree) {
    Permutation out(degree);
    for (std::uint32_t i = 0; i < degree; ++i) out[i] = i < p.size() ? p[i] : i;
    return out;
}

}  // namespace

Permutation parse_cycles(std::string_view text) {
    std::vector<std::vector<std::uint32_t>> cycles;
    bool in_cycle = false;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '(') {
            if (in_cycle) bad_permutation(text, "nested '('");
            in_cycle = true;
            cycles.emplace_back();
            ++i;
        } else if (c == ')') {
            if (!in_cycle) bad_permutation(text, "unbalanced ')'");
            in_cycle = false;
            ++i;
        } else if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
            ++i;
        } else if (c >= '0' && c <= '9') {
            if (!in_cycle) bad_permutation(text, "point outside a cycle");
            std::uint64_t v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (v > 1000000) bad_permutation(text, "point too large");
                ++i;
            }
            if (v == 0) bad_permutation(text, "points are numbered from 1");
            cycles.back().push_back(static_cast<std::uint32_t>(v - 1));
        } else {
            bad_permutation(text, std::string("unexpected character '") + c + "'");
        }
    }
    if (in_cycle) bad_permutation(text, "unterminated cycle");

    std::uint32_t degree = 0;
    for (const auto& cyc : cycles)
        for (auto x : cyc) degree = std::max(degree, x + 1);
    Permutation perm(degree);
    std::vector<bool> seen(degree, false);
    for (std::uint32_t x = 0; x < degree; ++x) perm[x] = x;
    for (const auto& cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (seen[cyc[k]]) bad_permutation(text, "point " + std::to_string(cyc[k] + 1) + " repeated");
            seen[cyc[k]] = true;
            perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
        }
    }
    return perm;
}

std::string format_cycles(const Permutation& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::uint32_t x = 0; x < perm.size(); ++x) {
        if (seen[x] || perm[x] == x) continue;
        out += '(';
        for (std::uint32_t y = x; !seen[y]; y = perm[y]) {
            seen[y] = true;
            if (y != x) out += ' ';
            out += std::to_string(y + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::vector<Permutation> parse_group_spec(std::string_view text) {
    std::vector<Permutation> gens;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        gens.push_back(parse_cycles(line));
    }
    return gens;
}

std::vector<Permutation> read_group_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot read group file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_group_spec(buf.str());
}

FiniteGroup FiniteGroup::build(const std::vector<Permutation>& generators, std::size_t limit, std::string label) {
    FiniteGroup g;
    g.label_ = std::move(label);
    for (const auto& p : generators) g.degree_ = std::max(g.degree_, p.size());
    for (const auto& p : generators) {
        auto q = padded(p, g.degree_);
        std::vector<bool> hit(g.degree_, false);
        for (auto x : q) {
            if (x >= g.degree_ || hit[x]) throw Error(ErrorCode::InvalidPermutation, "generator is not a bijection");
            hit[x] = true;
        }
        g.generators_.push_back(std::move(q));
    }

    // Breadth-first closure from the identity.
    std::unordered_map<Permutation, std::uint32_t, VectorHash> index;
    Permutation id(g.degree_);
    for (std::uint32_t x = 0; x < g.degree_; ++x) id[x] = x;
    g.elements_.push_back(id);
    index.emplace(id, 0);
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (const auto& s : g.generators_) {
            Permutation h(g.degree_);
            const auto& cur = g.elements_[head];
            for (std::uint32_t x = 0; x < g.degree_; ++x) h[x] = s[cur[x]];
            if (index.contains(h)) continue;
            if (g.elements_.size() >= limit)
                throw Error(ErrorCode::ClosureExceedsLimit,
                            "group closure exceeds order limit " + std::to_string(limit));
            index.emplace(h, static_cast<std::uint32_t>(g.elements_.size()));
            g.elements_.push_back(std::move(h));
        }
    }

    // A base: points whose images separate all elements.
    const std::size_t n = g.elements_.size();
    for (;;) {
        std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> seen;
        bool split = false;
        for (std::uint32_t e = 0; e < n && !split; ++e) {
            auto [it, fresh] = seen.emplace(g.base_key(g.elements_[e]), e);
            if (fresh) continue;
            const auto& a = g.elements_[it->second];
            const auto& b = g.elements_[e];
            for (std::uint32_t x = 0; x < g.degree_; ++x) {
                if (a[x] != b[x]) {
                    g.base_.push_back(x);
                    break;
                }
            }
            split = true;
        }
        if (!split) break;
    }

    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> by_key;
    for (std::uint32_t e = 0; e < n; ++e) by_key.emplace(g.base_key(g.elements_[e]), e);

    g.table_.resize(n * n);
    g.inverses_.assign(n, 0);
    std::vector<std::uint32_t> key(g.base_.size());
    for (std::uint32_t a = 0; a < n; ++a) {
        const auto& pa = g.elements_[a];
        for (std::uint32_t b = 0; b < n; ++b) {
            const auto& pb = g.elements_[b];
            for (std::size_t k = 0; k < g.base_.size(); ++k) key[k] = pb[pa[g.base_[k]]];
            const auto prod = by_key.at(key);
            g.table_[a * n + b] = static_cast<std::uint16_t>(prod);
            if (prod == 0) g.inverses_[a] = b;
        }
    }
    return g;
}

std::vector<std::uint32_t> FiniteGroup::base_key(const Permutation& perm) const {
    std::vector<std::uint32_t> key(base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k) key[k] = perm[base_[k]];
    return key;
}

std::uint32_t FiniteGroup::index_of(const Permutation& perm) const {
    const auto p = padded(perm, degree_);
    if (perm.size() > degree_) {
        for (std::size_t x = degree_; x < perm.size(); ++x)
            if (perm[x] != x) return static_cast<std::uint32_t>(order());
    }
    for (std::uint32_t e = 0; e < order(); ++e)
        if (elements_[e] == p) return e;
    return static_cast<std::uint32_t>(order());
}

std::size_t FiniteGroup::element_order(std::uint32_t a) const {
    std::size_t k = 1;
    for (std::uint32_t x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::verify_associativity(std::uint64_t seed, std::size_t samples) const {
    const auto n = static_cast<std::uint32_t>(order());
    if (n <= 256) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto a = pick(rng), b = pick(rng), c = pick(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    }
    return true;
}

bool FiniteGroup::verify_inverses() const {
    for (std::uint32_t a = 0; a < order(); ++a) {
        if (mul(a, identity()) != a || mul(identity(), a) != a) return false;
        if (mul(a, inverse(a)) != identity() || mul(inverse(a), a) != identity()) return false;
    }
    return true;
}

std::vector<std::uint32_t> FiniteGroup::center() const {
    std::vector<std::uint32_t> z;
    for (std::uint32_t a = 0; a < order(); ++a) {
        bool central = true;
        for (const auto& s : generators_) {
            const auto si = index_of(s);
            if (mul(a, si) != mul(si, a)) {
                central = false;
                break;
            }
        }
        if (central) z.push_back(a);
    }
    return z;
}

ConjugacyClassPartition conjugacy_classes(const FiniteGroup& group) {
    const auto n = static_cast<std::uint32_t>(group.order());
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> raw(n, unset);
    std::vector<std::pair<std::size_t, std::uint32_t>> classes;  // (size, least element)
    for (std::uint32_t x = 0; x < n; ++x) {
        if (raw[x] != unset) continue;
        const auto id = static_cast<std::uint32_t>(classes.size());
        std::size_t size = 0;
        for (std::uint32_t g = 0; g < n; ++g) {
            const auto y = group.conjugate(x, g);
            if (raw[y] == unset) {
                raw[y] = id;
                ++size;
            }
        }
        classes.emplace_back(size, x);
    }
    std::vector<std::uint32_t> order(classes.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return classes[a] < classes[b]; });
    std::vector<std::uint32_t> rank(classes.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

    ConjugacyClassPartition out;
    out.class_of.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) out.class_of[x] = rank[raw[x]];
    for (auto i : order) {
        out.class_sizes.push_back(classes[i].first);
        out.representatives.push_back(classes[i].second);
    }
    return out;
}

FiniteGroup quotient(const FiniteGroup& group, const std::vector<std::uint32_t>& normal_generators,
                     std::string label) {
    const auto n = static_cast<std::uint32_t>(group.order());
    // Normal closure: close the conjugates of the generators under multiplication.
    std::vector<bool> in_sub(n, false);
    std::vector<std::uint32_t> sub{FiniteGroup::identity()};
    in_sub[0] = true;
    std::vector<std::uint32_t> gens;
    for (auto x : normal_generators)
        for (std::uint32_t g = 0; g < n; ++g) gens.push_back(group.conjugate(x, g));
    for (std::size_t head = 0; head < sub.size(); ++head) {
        for (auto s : gens) {
            const auto y = group.mul(sub[head], s);
            if (!in_sub[y]) {
                in_sub[y] = true;
                sub.push_back(y);
            }
        }
    }

    // Right cosets N x, numbered by least element.
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> coset(n, unset);
    std::uint32_t count = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (coset[x] != unset) continue;
        for (auto h : sub) coset[group.mul(h, x)] = count;
        ++count;
    }
    std::vector<std::uint32_t> rep(count);
    for (std::uint32_t x = n; x-- > 0;) rep[coset[x]] = x;

    std::vector<Permutation> gens_q;
    for (const auto& s : group.generators()) {
        const auto si = group.index_of(s);
        Permutation p(count);
        for (std::uint32_t c = 0; c < count; ++c) p[c] = coset[group.mul(rep[c], si)];
        gens_q.push_back(std::move(p));
    }
    return FiniteGroup::build(gens_q, kDefaultOrderLimit, std::move(label));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string label) {
    const auto shift = static_cast<std::uint32_t>(a.degree());
    const std::size_t degree = a.degree() + b.degree();
    std::vector<Permutation> gens;
    for (const auto& s : a.generators()) {
        Permutation p(degree);
        for (std::uint32_t x = 0; x < degree; ++x) p[x] = x < shift ? s[x] : x;
        gens.push_back(std::move(p));
    }
    for (const auto& s : b.generators()) {
        Permutation p(degree);
        for (std::uint32_t x = 0; x < degree; ++x) p[x] = x < shift ? x : s[x - shift] + shift;
        gens.push_back(std::move(p));
    }
    return FiniteGroup::build(gens, kDefaultOrderLimit, std::move(label));
}

}  // namespace smolab::groups
