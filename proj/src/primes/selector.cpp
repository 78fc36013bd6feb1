#include "smolab/primes/selector.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "smolab/error.hpp"

namespace smolab::primes {

struct PrimeSelector::Node {
    Kind kind = Kind::All;
    std::uint32_t modulus = 1;
    std::vector<bool> residues;
    std::optional<FieldSpec> field;
    std::uint32_t j = 1;
    std::vector<std::uint64_t> list;
    std::shared_ptr<const Node> a, b;
    std::vector<std::uint64_t> exclusions;  // sorted
};

namespace {

using Node = PrimeSelector::Node;

bool node_excluded(const Node& n, std::uint64_t p) {
    if (std::binary_search(n.exclusions.begin(), n.exclusions.end(), p)) return true;
    switch (n.kind) {
        case PrimeSelector::Kind::Congruence: return n.modulus > 1 && n.modulus % p == 0;
        case PrimeSelector::Kind::DegreeEquals: return n.field->is_ramified(p);
        case PrimeSelector::Kind::Complement: return node_excluded(*n.a, p);
        case PrimeSelector::Kind::Intersection:
        case PrimeSelector::Kind::Union: return node_excluded(*n.a, p) || node_excluded(*n.b, p);
        default: return false;
    }
}

std::optional<PrimeItem> node_item(const Node& n, std::uint64_t p) {
    if (node_excluded(n, p)) return std::nullopt;
    const PrimeItem plain{p, 1, 1};
    switch (n.kind) {
        case PrimeSelector::Kind::All: return plain;
        case PrimeSelector::Kind::Congruence:
            return n.residues[p % n.modulus] ? std::optional(plain) : std::nullopt;
        case PrimeSelector::Kind::DegreeEquals: {
            const auto f = n.field->residue_degree(p);
            if (f != n.j) return std::nullopt;
            return PrimeItem{p, f, n.field->degree() / f};
        }
        case PrimeSelector::Kind::Explicit:
            return std::binary_search(n.list.begin(), n.list.end(), p) ? std::optional(plain) : std::nullopt;
        case PrimeSelector::Kind::Complement:
            return node_item(*n.a, p) ? std::nullopt : std::optional(plain);
        case PrimeSelector::Kind::Intersection: {
            auto x = node_item(*n.a, p);
            if (!x) return std::nullopt;
            auto y = node_item(*n.b, p);
            if (!y) return std::nullopt;
            return y->f > x->f ? y : x;
        }
        case PrimeSelector::Kind::Union: {
            if (auto x = node_item(*n.a, p)) return x;
            return node_item(*n.b, p);
        }
    }
    return std::nullopt;
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string node_describe(const Node& n) {
    std::string s;
    switch (n.kind) {
        case PrimeSelector::Kind::All: s = "all"; break;
        case PrimeSelector::Kind::Congruence: {
            std::vector<std::uint64_t> r;
            for (std::uint32_t i = 0; i < n.modulus; ++i)
                if (n.residues[i]) r.push_back(i);
            s = "mod:" + std::to_string(n.modulus) + ":" + join(r);
            break;
        }
        case PrimeSelector::Kind::DegreeEquals:
            s = "degree:[" + n.field->describe() + "]:" + std::to_string(n.j);
            break;
        case PrimeSelector::Kind::Explicit: s = "list:[" + join(n.list) + "]"; break;
        case PrimeSelector::Kind::Complement: s = "not (" + node_describe(*n.a) + ")"; break;
        case PrimeSelector::Kind::Intersection:
            s = "(" + node_describe(*n.a) + ") and (" + node_describe(*n.b) + ")";
            break;
        case PrimeSelector::Kind::Union: s = "(" + node_describe(*n.a) + ") or (" + node_describe(*n.b) + ")"; break;
    }
    if (!n.exclusions.empty()) s += " excluding [" + join(n.exclusions) + "]";
    return s;
}

}  // namespace

PrimeSelector PrimeSelector::all() { return PrimeSelector(std::make_shared<Node>()); }

PrimeSelector PrimeSelector::congruence(std::uint32_t modulus, std::vector<std::uint32_t> residues) {
    if (modulus == 0) throw Error(ErrorCode::InvalidSelector, "congruence modulus must be positive");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Congruence;
    n->modulus = modulus;
    n->residues.assign(modulus, false);
    for (auto r : residues) n->residues[r % modulus] = true;
    return PrimeSelector(std::move(n));
}

PrimeSelector PrimeSelector::degree_equals(FieldSpec field, std::uint32_t j) {
    if (j == 0 || field.degree() % j != 0)
        throw Error(ErrorCode::InvalidSelector,
                    "residue degree " + std::to_string(j) + " does not divide field degree " +
                        std::to_string(field.degree()));
    auto n = std::make_shared<Node>();
    n->kind = Kind::DegreeEquals;
    n->field = std::move(field);
    n->j = j;
    return PrimeSelector(std::move(n));
}

PrimeSelector PrimeSelector::explicit_list(std::vector<std::uint64_t> primes) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Explicit;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    n->list = std::move(primes);
    return PrimeSelector(std::move(n));
}

PrimeSelector PrimeSelector::complement(PrimeSelector inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Complement;
    n->a = std::move(inner.node_);
    return PrimeSelector(std::move(n));
}

PrimeSelector PrimeSelector::intersection(PrimeSelector a, PrimeSelector b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Intersection;
    n->a = std::move(a.node_);
    n->b = std::move(b.node_);
    return PrimeSelector(std::move(n));
}

PrimeSelector PrimeSelector::union_of(PrimeSelector a, PrimeSelector b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Union;
    n->a = std::move(a.node_);
    n->b = std::move(b.node_);
    return PrimeSelector(std::move(n));
}

PrimeSelector PrimeSelector::excluding(std::vector<std::uint64_t> primes) const {
    auto n = std::make_shared<Node>(*node_);
    n->exclusions.insert(n->exclusions.end(), primes.begin(), primes.end());
    std::sort(n->exclusions.begin(), n->exclusions.end());
    n->exclusions.erase(std::unique(n->exclusions.begin(), n->exclusions.end()), n->exclusions.end());
    return PrimeSelector(std::move(n));
}

PrimeSelector::Kind PrimeSelector::kind() const { return node_->kind; }

std::optional<PrimeItem> PrimeSelector::item(std::uint64_t p) const { return node_item(*node_, p); }

bool PrimeSelector::excluded(std::uint64_t p) const { return node_excluded(*node_, p); }

std::optional<std::uint32_t> PrimeSelector::uniform_degree() const {
    switch (node_->kind) {
        case Kind::All:
        case Kind::Congruence: return 1u;
        case Kind::DegreeEquals: return node_->j;
        default: return std::nullopt;
    }
}

const FieldSpec* PrimeSelector::field() const { return node_->field ? &*node_->field : nullptr; }

bool PrimeSelector::is_finite() const { return node_->kind == Kind::Explicit; }

std::string PrimeSelector::describe() const { return node_describe(*node_); }

std::vector<std::uint64_t> read_prime_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot read prime list " + path.string());
    std::vector<std::uint64_t> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream items(line);
        std::string tok;
        while (items >> tok) {
            try {
                std::size_t used = 0;
                out.push_back(std::stoull(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error(ErrorCode::InvalidSelector, "bad prime '" + tok + "' in " + path.string());
            }
        }
    }
    return out;
}

namespace {

class SelectorParser {
public:
    SelectorParser(std::string_view text, std::filesystem::path base) : base_(std::move(base)) {
        std::string cur;
        for (char c : text) {
            if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) tokens_.push_back(std::move(cur));
                cur.clear();
                if (c == '(' || c == ')') tokens_.emplace_back(1, c);
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) tokens_.push_back(std::move(cur));
    }

    PrimeSelector parse() {
        if (tokens_.empty()) fail("empty selector");
        auto s = parse_or();
        if (pos_ != tokens_.size()) fail("unexpected '" + tokens_[pos_] + "'");
        return s;
    }

private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
    std::filesystem::path base_;

    [[noreturn]] static void fail(const std::string& why) { throw Error(ErrorCode::InvalidSelector, "selector: " + why); }

    bool accept(std::string_view tok) {
        if (pos_ < tokens_.size() && tokens_[pos_] == tok) {
            ++pos_;
            return true;
        }
        return false;
    }

    PrimeSelector parse_or() {
        auto s = parse_and();
        while (accept("or")) s = PrimeSelector::union_of(s, parse_and());
        return s;
    }
    PrimeSelector parse_and() {
        auto s = parse_not();
        while (accept("and")) s = PrimeSelector::intersection(s, parse_not());
        return s;
    }
    PrimeSelector parse_not() {
        if (accept("not")) return PrimeSelector::complement(parse_not());
        if (accept("(")) {
            auto s = parse_or();
            if (!accept(")")) fail("missing ')'");
            return s;
        }
        if (pos_ >= tokens_.size()) fail("unexpected end");
        return atom(tokens_[pos_++]);
    }

    std::filesystem::path resolve(const std::string& p) const {
        std::filesystem::path path(p);
        return path.is_relative() && !base_.empty() ? base_ / path : path;
    }

    static std::uint64_t number(const std::string& s) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        fail("bad number '" + s + "'");
    }

    PrimeSelector atom(const std::string& tok) {
        if (tok == "all") return PrimeSelector::all();
        const auto colon = tok.find(':');
        if (colon == std::string::npos) fail("unknown atom '" + tok + "'");
        const auto head = tok.substr(0, colon);
        const auto rest = tok.substr(colon + 1);
        if (head == "mod") {
            const auto c2 = rest.find(':');
            if (c2 == std::string::npos) fail("expected mod:N:r1,r2");
            const auto modulus = number(rest.substr(0, c2));
            std::vector<std::uint32_t> residues;
            std::istringstream items(rest.substr(c2 + 1));
            std::string r;
            while (std::getline(items, r, ',')) residues.push_back(static_cast<std::uint32_t>(number(r)));
            if (residues.empty()) fail("mod selector needs residues");
            return PrimeSelector::congruence(static_cast<std::uint32_t>(modulus), residues);
        }
        if (head == "degree") {
            const auto c2 = rest.rfind(':');
            if (c2 == std::string::npos) fail("expected degree:fieldspec:j");
            return PrimeSelector::degree_equals(FieldSpec::read(resolve(rest.substr(0, c2))),
                                                static_cast<std::uint32_t>(number(rest.substr(c2 + 1))));
        }
        if (head == "list") return PrimeSelector::explicit_list(read_prime_list(resolve(rest)));
        fail("unknown atom '" + tok + "'");
    }
};

}  // namespace

PrimeSelector parse_selector(std::string_view text, const std::filesystem::path& base_dir) {
    return SelectorParser(text, base_dir).parse();
}

}  // namespace smolab::primes
