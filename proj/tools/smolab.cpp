// smolab: command-line front end for the character, prime, Euler-product and
// multiplicity-one experiments. Every command emits one report (json or csv).

#include <CLI11.hpp>
#include <cmath>
#include <functional>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "smolab/error.hpp"
#include "smolab/groups/catalog.hpp"
#include "smolab/parallel.hpp"
#include "smolab/primes/field_spec.hpp"
#include "smolab/primes/selector.hpp"
#include "smolab/reports.hpp"

using namespace smolab;

namespace {

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorCode::UsageError, msg); }

std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

// Accepts decimals, exponents and fractions such as 1/16.
double parse_real(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) return parse_real(text.substr(0, slash)) / parse_real(text.substr(slash + 1));
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    usage("not a number: '" + text + "'");
}

std::uint64_t parse_count(const std::string& text) {
    const double v = parse_real(text);  // allows 1e6
    if (v < 0 || v != std::floor(v) || v > 1.8e19) usage("not a nonnegative integer: '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

std::vector<double> real_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& t : split(text)) out.push_back(parse_real(t));
    return out;
}

std::vector<std::uint64_t> count_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& t : split(text)) out.push_back(parse_count(t));
    return out;
}

// a, bi, a+bi, a-bi, i
std::complex<double> parse_complex(std::string text) {
    if (text.empty()) usage("empty complex number");
    if (text.back() != 'i') return parse_real(text);
    text.pop_back();
    std::size_t split_at = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;)
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split_at = k;
            break;
        }
    auto imag_of = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t);
    };
    if (split_at == std::string::npos) return {0.0, imag_of(text)};
    return {parse_real(text.substr(0, split_at)), imag_of(text.substr(split_at))};
}

std::vector<std::complex<double>> complex_list(const std::string& text) {
    std::vector<std::complex<double>> out;
    if (text.empty()) return out;
    for (const auto& t : split(text)) out.push_back(parse_complex(t));
    return out;
}

groups::FiniteGroup load_group(const std::string& source) {
    if (source.rfind("catalog:", 0) == 0) return groups::catalog(source.substr(8));
    return groups::FiniteGroup::build(groups::read_group_file(source), groups::kDefaultOrderLimit,
                                      std::filesystem::path(source).filename().string());
}

// A Hecke CSV path, or synthetic[:seed[:profile]].
smo::RepresentationData load_source(const std::string& text, unsigned weight, unsigned degree, std::uint64_t seed) {
    if (text.rfind("synthetic", 0) == 0) {
        const auto parts = split(text, ':');
        const std::uint64_t s = parts.size() > 1 && !parts[1].empty() ? parse_count(parts[1]) : seed;
        if (parts.size() > 2) return smo::RepresentationData::synthetic_with_profile(s, euler::parse_grc_profile(parts[2], degree), degree);
        return smo::RepresentationData::synthetic_tempered(s, degree);
    }
    return smo::load_hecke(text, weight);
}

// zeta, dedekind:<fieldspec>, satake:<csv>
euler::EulerProduct load_model(const std::string& text) {
    if (text == "zeta") return euler::zeta_model();
    if (text.rfind("dedekind:", 0) == 0) return euler::dedekind_zeta_model(primes::FieldSpec::read(text.substr(9)));
    if (text.rfind("satake:", 0) == 0) return euler::read_satake_file(text.substr(7));
    usage("unknown model '" + text + "' (zeta, dedekind:<file>, satake:<file>)");
}

// Lets scalar options accept 1e6 and 1/4 like the list options do.
const CLI::Validator kCount(
    [](std::string& text) {
        try {
            text = std::to_string(parse_count(text));
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string();
    },
    "INT");
const CLI::Validator kReal(
    [](std::string& text) {
        try {
            std::ostringstream os;
            os.precision(17);
            os << parse_real(text);
            text = os.str();
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string();
    },
    "REAL");

primes::PrimeSelector selector_of(const std::string& text) { return primes::parse_selector(text, std::filesystem::current_path()); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"smolab: character tables, prime densities, Euler products and multiplicity-one experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned workers = 0;
    std::uint64_t seed = 0;
    std::string format_text = "json";
    std::string out_path = "-";
    app.add_option("--workers", workers, "worker threads (default: SMOLAB_WORKERS or 1)");
    app.add_option("--seed", seed, "seed for synthetic sources without an explicit seed");
    app.add_option("--format", format_text, "report format: json or csv");
    app.add_option("--out", out_path, "report path, - for stdout");

    std::function<Report()> run;

    // charlab
    auto* charlab = app.add_subcommand("charlab", "character tables and the distinguishing lemma");
    charlab->require_subcommand(1);
    std::string group_source;
    int degree = 2;
    auto* table_cmd = charlab->add_subcommand("table", "character table of a permutation group");
    table_cmd->add_option("group", group_source, "group file or catalog:<expression>")->required();
    table_cmd->callback([&] {
        run = [&] { return reports::charlab_table(groups::character_table(load_group(group_source)), group_source); };
    });
    auto* extremal_cmd = charlab->add_subcommand("extremal", "largest agreement between distinct irreducibles of one degree");
    extremal_cmd->add_option("group", group_source, "group file or catalog:<expression>")->required();
    extremal_cmd->add_option("--degree", degree, "character degree n")->required();
    extremal_cmd->callback([&] {
        run = [&] { return reports::charlab_extremal(groups::character_table(load_group(group_source)), degree, group_source); };
    });
    auto* sweep_cmd = charlab->add_subcommand("sweep", "lemma check over the bundled catalog");
    sweep_cmd->callback([&] { run = [] { return reports::charlab_sweep(groups::bundled_catalog()); }; });

    // density
    auto* density = app.add_subcommand("density", "natural and Dirichlet density estimates");
    density->require_subcommand(1);
    std::string selector_text = "all", x_text = "1000,10000,100000,1000000", s_text, norms = "places";
    std::uint64_t cutoff = 10'000'000;
    auto* natural_cmd = density->add_subcommand("natural", "counting ratios on an x grid");
    natural_cmd->add_option("--selector", selector_text, "prime set expression");
    natural_cmd->add_option("--x", x_text, "ascending x grid");
    natural_cmd->callback([&] { run = [&] { return reports::density_natural(selector_of(selector_text), count_list(x_text)); }; });
    auto* dirichlet_cmd = density->add_subcommand("dirichlet", "sum q^-s / log(1/(s-1)) on an s grid");
    dirichlet_cmd->add_option("--selector", selector_text, "prime set expression");
    dirichlet_cmd->add_option("--s", s_text, "descending s grid (default 1 + 2^-3 .. 1 + 2^-6)");
    dirichlet_cmd->add_option("--cutoff", cutoff, "largest norm summed")->transform(kCount);
    dirichlet_cmd->add_option("--norms", norms, "places or rational");
    dirichlet_cmd->callback([&] {
        run = [&] {
            if (norms != "places" && norms != "rational") usage("--norms must be places or rational");
            const auto grid = s_text.empty() ? primes::default_dirichlet_grid() : real_list(s_text);
            return reports::density_dirichlet(selector_of(selector_text), grid, cutoff,
                                              norms == "places" ? primes::NormMode::PlaceNorms : primes::NormMode::RationalPrimes);
        };
    });
    auto* zeta_cmd = density->add_subcommand("zeta", "truncated prime zeta against log(1/(s-1))");
    zeta_cmd->add_option("--s", s_text, "s values (default 1.5,1.25,1.1,1.0625)");
    zeta_cmd->add_option("--cutoff", cutoff, "prime cutoff")->transform(kCount);
    zeta_cmd->callback([&] {
        run = [&] { return reports::density_zeta(s_text.empty() ? std::vector<double>{1.5, 1.25, 1.1, 1.0625} : real_list(s_text), cutoff); };
    });

    // frobstats
    std::string field_path;
    std::uint64_t frob_x = 1'000'000;
    auto* frob_cmd = app.add_subcommand("frobstats", "Frobenius class counts of an abelian field");
    frob_cmd->add_option("fieldspec", field_path, "field spec file")->required();
    frob_cmd->add_option("--x", frob_x, "prime cutoff")->transform(kCount);
    frob_cmd->callback([&] { run = [&] { return reports::frobstats(primes::FieldSpec::read(field_path), frob_x); }; });

    // euler
    auto* euler_cmd = app.add_subcommand("euler", "local factors, Rankin-Selberg products and positivity");
    euler_cmd->require_subcommand(1);
    std::uint64_t q = 0;
    std::string alphas_text, betas_text, s_value = "2", sigma_text, cutoffs_text, profile_text, data_text, model_text;
    std::uint64_t M = 1'000'000;
    unsigned weight = 12, n_degree = 2;
    double delta = -1.0;
    bool no_conjugate = false;
    auto* eval_cmd = euler_cmd->add_subcommand("eval", "evaluate a local factor");
    eval_cmd->add_option("--q", q, "norm")->transform(kCount)->required();
    eval_cmd->add_option("--alphas", alphas_text, "Satake parameters, e.g. 1,-1 or 0.6+0.8i");
    eval_cmd->add_option("--s", s_value, "point s (complex allowed)");
    eval_cmd->callback([&] {
        run = [&] { return reports::euler_eval(euler::LocalFactor(q, complex_list(alphas_text)), parse_complex(s_value)); };
    });
    auto* pole_cmd = euler_cmd->add_subcommand("poleline", "first pole line of a local factor");
    pole_cmd->add_option("--q", q, "norm")->transform(kCount)->required();
    pole_cmd->add_option("--alphas", alphas_text, "Satake parameters");
    pole_cmd->callback([&] { run = [&] { return reports::euler_poleline(euler::LocalFactor(q, complex_list(alphas_text))); }; });
    auto* rs_cmd = euler_cmd->add_subcommand("rs", "local Rankin-Selberg product");
    rs_cmd->add_option("--q", q, "norm")->transform(kCount)->required();
    rs_cmd->add_option("--alphas", alphas_text, "parameters of the first factor")->required();
    rs_cmd->add_option("--betas", betas_text, "parameters of the second factor (default: the first)");
    rs_cmd->add_flag("--no-conjugate", no_conjugate, "use beta_j instead of conj(beta_j)");
    rs_cmd->callback([&] {
        run = [&] {
            const euler::LocalFactor f(q, complex_list(alphas_text));
            const euler::LocalFactor g(q, complex_list(betas_text.empty() ? alphas_text : betas_text));
            return reports::euler_rs(f, g, !no_conjugate);
        };
    });
    auto* posi_cmd = euler_cmd->add_subcommand("positivity", "positive type and Landau check of a log expansion");
    posi_cmd->add_option("--data", data_text, "Hecke CSV or synthetic[:seed[:profile]]; checks L(pi x conj pi)");
    posi_cmd->add_option("--model", model_text, "zeta, dedekind:<fieldspec> or satake:<csv>, checked as given");
    posi_cmd->add_option("--weight", weight, "weight of Hecke data");
    posi_cmd->add_option("--selector", selector_text, "prime set expression");
    posi_cmd->add_option("--M", M, "largest m in the log expansion")->transform(kCount);
    posi_cmd->add_option("--sigma", sigma_text, "sigma values for the Landau check (default 1.5,2)");
    posi_cmd->callback([&] {
        run = [&] {
            if (data_text.empty() == model_text.empty()) usage("give exactly one of --data and --model");
            const auto sig = sigma_text.empty() ? std::vector<double>{1.5, 2.0} : real_list(sigma_text);
            if (!data_text.empty()) {
                const auto ep = load_source(data_text, weight, n_degree, seed).euler_product();
                return reports::euler_positivity(euler::rankin_selberg(ep, ep), selector_of(selector_text), M, sig);
            }
            return reports::euler_positivity(load_model(model_text), selector_of(selector_text), M, sig);
        };
    });
    auto* probe_cmd = euler_cmd->add_subcommand("probe", "worst-case partial log-sums over degree-j places");
    probe_cmd->add_option("--selector", selector_text, "prime set expression")->required();
    probe_cmd->add_option("--delta", delta, "bound exponent delta")->transform(kReal);
    probe_cmd->add_option("--profile", profile_text, "bound profile instead of --delta: JS, GJ, KSh, KSa-BB, LRS(n)");
    probe_cmd->add_option("--sigma", sigma_text, "sigma values")->required();
    probe_cmd->add_option("--cutoffs", cutoffs_text, "ascending norm cutoffs (default 1e5,1e6,1e7)");
    probe_cmd->callback([&] {
        run = [&] {
            if ((delta >= 0) == !profile_text.empty()) usage("give exactly one of --delta and --profile");
            const double d = profile_text.empty() ? delta : euler::parse_grc_profile(profile_text).exponent.to_double();
            const auto cuts = cutoffs_text.empty() ? std::vector<std::uint64_t>{100'000, 1'000'000, 10'000'000} : count_list(cutoffs_text);
            return reports::euler_probe(selector_of(selector_text), d, real_list(sigma_text), cuts, profile_text);
        };
    });

    // smo
    auto* smo_cmd = app.add_subcommand("smo", "multiplicity-one experiments");
    smo_cmd->require_subcommand(1);
    std::string other_text, eps_text;
    std::uint64_t X = 10'000;
    unsigned rep_n = 2;
    auto* compare_cmd = smo_cmd->add_subcommand("compare", "primes where two sources have different local factors");
    compare_cmd->add_option("--data", data_text, "first source")->required();
    compare_cmd->add_option("--other", other_text, "second source")->required();
    compare_cmd->add_option("--weight", weight, "weight of Hecke data");
    compare_cmd->add_option("--X", X, "scan limit")->transform(kCount);
    compare_cmd->callback([&] {
        run = [&] {
            return reports::smo_compare(load_source(data_text, weight, n_degree, seed), load_source(other_text, weight, n_degree, seed), X);
        };
    });
    auto* poleorder_cmd = smo_cmd->add_subcommand("poleorder", "slope of truncated log L_S(1 + eps) against log(1/eps)");
    poleorder_cmd->add_option("--data", data_text, "source; uses L(pi x conj pi)");
    poleorder_cmd->add_option("--model", model_text, "zeta, dedekind:<fieldspec> or satake:<csv>");
    poleorder_cmd->add_option("--weight", weight, "weight of Hecke data");
    poleorder_cmd->add_option("--selector", selector_text, "prime set S");
    poleorder_cmd->add_option("--eps", eps_text, "eps grid, e.g. 1/16,1/12,1/10,1/8");
    poleorder_cmd->callback([&] {
        run = [&] {
            if (!data_text.empty() && !model_text.empty()) usage("give at most one of --data and --model");
            const auto eps = eps_text.empty() ? std::vector<double>{} : real_list(eps_text);
            if (!data_text.empty()) {
                const auto ep = load_source(data_text, weight, n_degree, seed).euler_product();
                return reports::smo_poleorder(euler::rankin_selberg(ep, ep), selector_of(selector_text), eps);
            }
            return reports::smo_poleorder(load_model(model_text.empty() ? "zeta" : model_text), selector_of(selector_text), eps);
        };
    });
    auto* tempered_cmd = smo_cmd->add_subcommand("tempered", "pole order of L_S(pi x conj pi) against n^2 delta(S)");
    tempered_cmd->add_option("--data", data_text, "source")->required();
    tempered_cmd->add_option("--weight", weight, "weight of Hecke data");
    tempered_cmd->add_option("--selector", selector_text, "prime set S");
    tempered_cmd->add_option("--eps", eps_text, "eps grid");
    tempered_cmd->callback([&] {
        run = [&] {
            const auto eps = eps_text.empty() ? std::vector<double>{} : real_list(eps_text);
            return reports::smo_tempered(load_source(data_text, weight, n_degree, seed), selector_of(selector_text), eps);
        };
    });
    auto* zratio_cmd = smo_cmd->add_subcommand("zratio", "Z_S(s) by direct product and by log expansion");
    zratio_cmd->add_option("--data", data_text, "first source")->required();
    zratio_cmd->add_option("--other", other_text, "second source")->required();
    zratio_cmd->add_option("--weight", weight, "weight of Hecke data");
    zratio_cmd->add_option("--selector", selector_text, "prime set S");
    zratio_cmd->add_option("--s", s_text, "s values > 1 (default 1.25,1.5)");
    zratio_cmd->add_option("--cutoff", X, "prime cutoff")->transform(kCount);
    zratio_cmd->callback([&] {
        run = [&] {
            return reports::smo_zratio(load_source(data_text, weight, n_degree, seed), load_source(other_text, weight, n_degree, seed),
                                       selector_of(selector_text), s_text.empty() ? std::vector<double>{1.25, 1.5} : real_list(s_text), X);
        };
    });
    auto* rajan_cmd = smo_cmd->add_subcommand("rajan", "summability of q^(-2/(n^2+1)) over S");
    rajan_cmd->add_option("--selector", selector_text, "prime set S")->required();
    rajan_cmd->add_option("--n", rep_n, "degree n");
    rajan_cmd->add_option("--cutoffs", cutoffs_text, "ascending cutoffs (default 1e3 .. 1e7)");
    rajan_cmd->callback([&] {
        run = [&] {
            const auto cuts = cutoffs_text.empty() ? std::vector<std::uint64_t>{1'000, 10'000, 100'000, 1'000'000, 10'000'000}
                                                   : count_list(cutoffs_text);
            return reports::smo_rajan(selector_of(selector_text), rep_n, cuts);
        };
    });
    auto* inert_cmd = smo_cmd->add_subcommand("inert", "abscissa arithmetic over inert places of a prime-degree field");
    inert_cmd->add_option("fieldspec", field_path, "cyclic field of prime degree")->required();
    inert_cmd->add_option("--n", rep_n, "degree n");
    inert_cmd->add_option("--profile", profile_text, "bound profile for the 2 delta + 1/p variant (default LRS(n))");
    inert_cmd->add_option("--cutoffs", cutoffs_text, "probe cutoffs (default 1e5,1e6,1e7)");
    inert_cmd->callback([&] {
        run = [&] {
            const auto prof = profile_text.empty() ? euler::grc_profile("LRS", rep_n) : euler::parse_grc_profile(profile_text, rep_n);
            const auto cuts = cutoffs_text.empty() ? std::vector<std::uint64_t>{100'000, 1'000'000, 10'000'000} : count_list(cutoffs_text);
            return reports::smo_inert(primes::FieldSpec::read(field_path), rep_n, prof, cuts);
        };
    });
    std::string k_path, chain_name;
    std::uint64_t tower_x = 100'000;
    auto* tower_cmd = smo_cmd->add_subcommand("tower", "residue degrees along a cyclic tower F in K");
    tower_cmd->add_option("F", field_path, "field spec of F");
    tower_cmd->add_option("K", k_path, "field spec of K");
    tower_cmd->add_option("--bundled", chain_name, "bundled chain: cyclotomic-5, cyclotomic-13 or cyclotomic-17");
    tower_cmd->add_option("--x", tower_x, "prime cutoff")->transform(kCount);
    tower_cmd->callback([&] {
        run = [&] {
            if (!chain_name.empty()) {
                for (const auto& c : smo::bundled_tower_chains())
                    if (c.label == chain_name) return reports::smo_tower(c.F, c.K, tower_x);
                usage("unknown bundled chain '" + chain_name + "'");
            }
            if (field_path.empty() || k_path.empty()) usage("give F and K field specs or --bundled");
            return reports::smo_tower(primes::FieldSpec::read(field_path), primes::FieldSpec::read(k_path), tower_x);
        };
    });

    // data
    auto* data_cmd = app.add_subcommand("data", "bundled data generation");
    data_cmd->require_subcommand(1);
    std::uint64_t tau_limit = 10'000;
    std::string tau_file;
    auto* gen_cmd = data_cmd->add_subcommand("gen-tau", "write p,tau(p) for primes up to the limit");
    gen_cmd->add_option("--limit", tau_limit, "largest p (at most 100000)")->transform(kCount);
    gen_cmd->add_option("file", tau_file, "output CSV (default tau_<limit>.csv)");
    gen_cmd->callback([&] {
        run = [&] { return reports::data_gen_tau(tau_file.empty() ? "tau_" + std::to_string(tau_limit) + ".csv" : tau_file, tau_limit); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_worker_count(workers ? workers : workers_from_environment());
        const auto format = parse_format(format_text);
        if (!run) usage("no command given");
        const auto report = run();
        emit(report, format, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return e.code() == ErrorCode::UsageError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
