#include "smolab/primes/field_spec.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "smolab/error.hpp"

namespace smolab::primes {

namespace {

std::string trim(std::string s) {
    const auto a = s.find_first_not_of(" \t\r{}");
    const auto b = s.find_last_not_of(" \t\r{}");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
}

std::uint64_t parse_uint(const std::string& text, std::string_view what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidFieldSpec, "bad " + std::string(what) + " '" + text + "'");
    }
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t modulus, const std::vector<std::uint32_t>& generators, std::string label)
    : modulus_(modulus), label_(std::move(label)) {
    if (modulus_ == 0) throw Error(ErrorCode::InvalidFieldSpec, "modulus must be positive");
    if (modulus_ > 10'000'000) throw Error(ErrorCode::InvalidFieldSpec, "modulus too large");
    for (auto g : generators) {
        const auto r = g % modulus_;
        if (std::gcd(r, modulus_) != 1 && modulus_ > 1)
            throw Error(ErrorCode::InvalidFieldSpec,
                        "generator " + std::to_string(g) + " is not a unit mod " + std::to_string(modulus_));
        generators_.push_back(r);
    }

    std::vector<bool> in_h(modulus_, false);
    const std::uint32_t one = modulus_ == 1 ? 0 : 1;
    in_h[one] = true;
    subgroup_.push_back(one);
    for (std::size_t head = 0; head < subgroup_.size(); ++head)
        for (auto g : generators_) {
            const auto y = static_cast<std::uint32_t>(std::uint64_t{subgroup_[head]} * g % modulus_);
            if (!in_h[y]) {
                in_h[y] = true;
                subgroup_.push_back(y);
            }
        }
    std::sort(subgroup_.begin(), subgroup_.end());

    coset_of_.assign(modulus_, -1);
    for (std::uint32_t r = 0; r < modulus_; ++r) {
        const bool unit = modulus_ == 1 || std::gcd(r, modulus_) == 1;
        if (!unit || coset_of_[r] >= 0) continue;
        const int id = static_cast<int>(coset_reps_.size());
        coset_reps_.push_back(r);
        for (auto h : subgroup_) coset_of_[std::uint64_t{r} * h % modulus_] = id;
    }
}

FieldSpec FieldSpec::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line, label;
    std::optional<std::uint32_t> modulus;
    std::vector<std::uint32_t> gens;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::InvalidFieldSpec, "expected key=value, got '" + line + "'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "N") {
            modulus = static_cast<std::uint32_t>(parse_uint(value, "modulus"));
        } else if (key == "H") {
            std::istringstream items(value);
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (!item.empty()) gens.push_back(static_cast<std::uint32_t>(parse_uint(item, "generator")));
            }
        } else if (key == "label") {
            label = value;
        } else {
            throw Error(ErrorCode::InvalidFieldSpec, "unknown key '" + key + "'");
        }
    }
    if (!modulus) throw Error(ErrorCode::InvalidFieldSpec, "missing N=");
    return FieldSpec(*modulus, gens, label);
}

FieldSpec FieldSpec::read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot read field spec " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    auto fs = parse(buf.str());
    if (fs.label_.empty()) fs.label_ = path.stem().string();
    return fs;
}

bool FieldSpec::in_subgroup(std::uint64_t residue) const {
    return std::binary_search(subgroup_.begin(), subgroup_.end(), static_cast<std::uint32_t>(residue % modulus_));
}

int FieldSpec::class_of(std::uint64_t n) const { return coset_of_[n % modulus_]; }

std::uint32_t FieldSpec::residue_degree(std::uint64_t p) const {
    if (is_ramified(p))
        throw Error(ErrorCode::Ramified, std::to_string(p) + " divides the modulus " + std::to_string(modulus_));
    const std::uint64_t base = p % modulus_;
    std::uint64_t r = base;
    std::uint32_t f = 1;
    while (!in_subgroup(r)) {
        r = r * base % modulus_;
        ++f;
    }
    return f;
}

bool FieldSpec::is_cyclic() const {
    for (auto r : coset_reps_) {
        if (modulus_ == 1) return true;
        std::uint64_t x = r;
        std::uint32_t f = 1;
        while (!in_subgroup(x)) {
            x = x * r % modulus_;
            ++f;
        }
        if (f == degree()) return true;
    }
    return false;
}

bool FieldSpec::contains(const FieldSpec& sub) const {
    if (modulus_ % sub.modulus_ != 0) return false;
    for (auto h : subgroup_)
        if (!sub.in_subgroup(h % sub.modulus_)) return false;
    return true;
}

std::string FieldSpec::describe() const {
    std::string s = "N=" + std::to_string(modulus_) + " H={";
    for (std::size_t i = 0; i < subgroup_.size(); ++i) s += (i ? "," : "") + std::to_string(subgroup_[i]);
    return s + "}";
}

}  // namespace smolab::primes
