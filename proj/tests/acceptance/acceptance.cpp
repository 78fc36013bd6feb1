// Acceptance suite: one PASS/FAIL line per criterion, then a determinism check
// that reruns everything at a different worker count and compares reports.

#include <array>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "smolab/groups/catalog.hpp"
#include "smolab/parallel.hpp"
#include "smolab/primes/field_spec.hpp"
#include "smolab/primes/selector.hpp"
#include "smolab/reports.hpp"
#include "smolab/smo/representation.hpp"

using namespace smolab;
using primes::FieldSpec;
using primes::PrimeSelector;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<Report> reports;
    double seconds = 0;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit;  // seconds, 0 for none
    std::function<void(Outcome&)> run;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

PrimeSelector sel(const std::string& text) { return primes::parse_selector(text); }

const std::filesystem::path& tau_path() {
    static const auto path = std::filesystem::current_path() / "acceptance_tau_10000.csv";
    return path;
}

// q * prod (1 - q^n)^24, coefficients of q^1..q^limit, by direct polynomial products.
std::vector<long long> tau_series_oracle(int limit) {
    std::vector<long long> poly(limit, 0);  // index k is the q^k coefficient of prod (1-q^n)^24
    poly[0] = 1;
    for (int n = 1; n < limit; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (int k = limit - 1; k >= n; --k) poly[k] -= poly[k - n];
    std::vector<long long> tau(limit + 1, 0);
    for (int m = 1; m <= limit; ++m) tau[m] = poly[m - 1];
    return tau;
}

const smo::RepresentationData& tau_data() {
    static const auto data = smo::load_hecke(tau_path(), 12);
    return data;
}

std::vector<Criterion> criteria() {
    return {
        {1, "character lemma sweep over the bundled catalog", 60,
         [](Outcome& o) {
             const auto cat = groups::bundled_catalog();
             auto r = reports::charlab_sweep(cat);
             o.check(cat.size() >= 20, "catalog has " + std::to_string(cat.size()) + " groups");
             for (const auto& e : cat) o.check(e.group.order() <= 64, e.expression + " exceeds order 64");
             for (const char* needed : {"quaternion8", "dihedral(4)", "symmetric(3)", "symmetric(4)", "q8_power_family(1)"}) {
                 bool found = false;
                 for (const auto& e : cat) found = found || e.expression == needed;
                 o.check(found, std::string("catalog lacks ") + needed);
             }
             o.check(r.verdicts["zero_violations"].get<bool>(), "violations: " + r.values["violations"].dump());
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("pairs=") + r.values["pairs"].dump();
             o.reports.push_back(std::move(r));
         }},
        {2, "sharpness witness 7/8 over the 2-group catalog", 60,
         [](Outcome& o) {
             auto r = reports::charlab_sharpness(groups::two_group_catalog(), 2);
             o.check(r.verdicts["attains_threshold"].get<bool>(), "best fraction " + r.values["best_fraction"].dump());
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("best ") + r.values["best_fraction"].get<std::string>() +
                         " in " + r.values["best_group"].get<std::string>();
             o.reports.push_back(std::move(r));
         }},
        {3, "character table orthogonality and degree square sums", 0,
         [](Outcome& o) {
             auto cat = groups::bundled_catalog();
             for (auto& e : groups::two_group_catalog()) cat.push_back(e);
             for (const auto& e : cat) {
                 auto r = reports::charlab_table(groups::character_table(e.group), e.expression);
                 o.check(r.verdicts["orthogonal"].get<bool>(), e.expression + " not orthogonal");
                 o.check(r.verdicts["square_sum_equals_order"].get<bool>(), e.expression + " square sum");
                 o.reports.push_back(std::move(r));
             }
             o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(cat.size()) + " tables";
         }},
        {4, "prime zeta minus log(1/(s-1)) stays below 2", 30,
         [](Outcome& o) {
             auto r = reports::density_zeta({1.5, 1.25, 1.1, 1.0625}, 10'000'000);
             const double worst = r.values["max_abs_deviation"].get<double>();
             o.check(worst < 2.0, "max deviation " + fmt(worst));
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("max deviation ") + fmt(worst);
             o.reports.push_back(std::move(r));
         }},
        {5, "natural density of 1 mod 4 and Frobenius classes mod 8", 0,
         [](Outcome& o) {
             auto r = reports::density_natural(sel("mod:4:1"), {1'000'000});
             const double d = r.values["partial"].back().get<double>();
             o.check(std::abs(d - 0.5) <= 0.01, "density " + fmt(d));
             auto f = reports::frobstats(FieldSpec(8, {1}), 1'000'000);
             for (const auto& fr : f.values["fractions"])
                 o.check(std::abs(fr.get<double>() - 0.25) <= 0.01, "class fraction " + fmt(fr.get<double>()));
             o.check(f.values["fractions"].size() == 4, "expected 4 classes");
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("density ") + fmt(d) + ", classes " +
                         f.values["fractions"].dump();
             o.reports.push_back(std::move(r));
             o.reports.push_back(std::move(f));
         }},
        {6, "key observation probe: sigma 0.80 stabilizes, sigma 0.70 grows", 60,
         [](Outcome& o) {
             auto r = reports::euler_probe(PrimeSelector::degree_equals(FieldSpec(4, {}), 2), 0.25, {0.80, 0.70},
                                           {1'000'000, 10'000'000});
             const auto& rows = r.values["rows"];
             const double d80 = std::abs(rows[0]["differences"][0].get<double>());
             const double d70 = rows[1]["differences"][0].get<double>();
             o.check(d80 < 1e-6, "sigma 0.80 difference " + fmt(d80) + " >= 1e-6");
             o.check(d70 > 1e-2, "sigma 0.70 difference " + fmt(d70) + " <= 1e-2");
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("diff(0.80)=") + fmt(d80) + ", diff(0.70)=" + fmt(d70);
             o.reports.push_back(std::move(r));
         }},
        {7, "tau data and positive type of L(pi x conj pi)", 0,
         [](Outcome& o) {
             auto gen = reports::data_gen_tau(tau_path().string(), 10'000);
             const auto oracle = tau_series_oracle(6);
             const auto& a = tau_data().coefficients();
             const std::array<std::pair<std::uint64_t, long long>, 3> known{{{2, -24}, {3, 252}, {5, 4830}}};
             for (auto [p, v] : known) {
                 o.check(oracle[p] == v, "series oracle tau(" + std::to_string(p) + ")");
                 const auto it = a.find(p);
                 o.check(it != a.end() && std::llround(it->second) == v, "file tau(" + std::to_string(p) + ")");
             }
             const auto ep = tau_data().euler_product();
             auto r = reports::euler_positivity(euler::rankin_selberg(ep, ep), sel("all"), 1'000'000, {1.5, 2.0});
             const double mn = r.values["min_coefficient"].get<double>();
             o.check(mn >= -1e-9, "min coefficient " + fmt(mn));
             o.check(r.verdicts.contains("landau_value_at_least_1") && r.verdicts["landau_value_at_least_1"].get<bool>(),
                     "landau value below 1");
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("min coefficient ") + fmt(mn);
             o.reports.push_back(std::move(gen));
             o.reports.push_back(std::move(r));
         }},
        {8, "pole-order slope for zeta: all primes and 1 mod 4", 120,
         [](Outcome& o) {
             auto all = reports::smo_poleorder(euler::zeta_model(), sel("all"), {});
             auto quarter = reports::smo_poleorder(euler::zeta_model(), sel("mod:4:1"), {});
             const double s1 = all.values["slope"].get<double>(), s2 = quarter.values["slope"].get<double>();
             o.check(s1 >= 0.85 && s1 <= 1.15, "all-primes slope " + fmt(s1) + " outside [0.85, 1.15]");
             o.check(s2 >= 0.35 && s2 <= 0.65, "1 mod 4 slope " + fmt(s2) + " outside [0.35, 0.65]");
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("slopes ") + fmt(s1) + ", " + fmt(s2);
             o.reports.push_back(std::move(all));
             o.reports.push_back(std::move(quarter));
         }},
        {9, "tempered bound for tau data over 1 mod 8", 0,
         [](Outcome& o) {
             auto r = reports::smo_tempered(tau_data(), sel("mod:8:1"), {});
             const double slope = r.values["slope"].get<double>();
             o.check(slope <= 1.1, "slope " + fmt(slope) + " > 1.1");
             o.check(r.verdicts["slope_within_bound"].get<bool>(), "bound verdict false");
             const auto& th = r.values["thresholds"];
             o.check(th.contains("refined") && th.contains("nondihedral"), "threshold annotations missing");
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("slope ") + fmt(slope) + ", thresholds " + th.dump();
             o.reports.push_back(std::move(r));
         }},
        {10, "Z ratio by direct product and by log expansion", 0,
         [](Outcome& o) {
             const auto synth = smo::RepresentationData::synthetic_tempered(1, 2);
             auto r = reports::smo_zratio(tau_data(), synth, sel("mod:4:1"), {1.25, 1.5}, 10'000);
             double worst = 0;
             for (const auto& p : r.values["points"])
                 worst = std::max(worst, std::abs(p["direct"].get<double>() - p["via_log"].get<double>()));
             o.check(worst <= 1e-6, "path difference " + fmt(worst));
             auto same = reports::smo_zratio(tau_data(), tau_data(), sel("mod:4:1"), {1.25, 1.5}, 10'000);
             double off = 0;
             for (const auto& p : same.values["points"])
                 off = std::max({off, std::abs(p["direct"].get<double>() - 1.0), std::abs(p["via_log"].get<double>() - 1.0)});
             o.check(off <= 1e-12, "identical inputs give |Z - 1| = " + fmt(off));
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("path difference ") + fmt(worst) + ", |Z-1| " + fmt(off);
             o.reports.push_back(std::move(r));
             o.reports.push_back(std::move(same));
         }},
        {11, "summability verdicts for n = 2", 0,
         [](Outcome& o) {
             const std::vector<std::uint64_t> cuts{1'000, 10'000, 100'000, 1'000'000, 10'000'000};
             auto j3 = reports::smo_rajan(PrimeSelector::degree_equals(FieldSpec(7, {6}), 3), 2, cuts);
             auto j2 = reports::smo_rajan(PrimeSelector::degree_equals(FieldSpec(4, {}), 2), 2, cuts);
             const auto v3 = j3.verdicts["verdict"].get<std::string>(), v2 = j2.verdicts["verdict"].get<std::string>();
             o.check(v3 == "summable", "j=3 verdict " + v3);
             o.check(v2 == "divergent", "j=2 verdict " + v2);
             o.check(!j3.table.rows.empty() && !j2.table.rows.empty(), "partial-sum tables missing");
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("j=3 ") + v3 + ", j=2 " + v2;
             o.reports.push_back(std::move(j3));
             o.reports.push_back(std::move(j2));
         }},
        {12, "inert abscissa arithmetic", 0,
         [](Outcome& o) {
             struct Case {
                 FieldSpec field;
                 const char* bound;
                 double value;
                 bool sufficient;
             };
             const std::vector<std::uint64_t> cuts{100'000, 1'000'000};
             const std::vector<Case> cases{{FieldSpec(4, {}), "11/10", 1.1, false},
                                           {FieldSpec(7, {6}), "14/15", 14.0 / 15.0, true},
                                           {FieldSpec(11, {10}), "4/5", 0.8, true}};
             for (const auto& c : cases) {
                 auto r = reports::smo_inert(c.field, 2, euler::grc_profile("LRS", 2), cuts);
                 const auto p = r.values["p"].dump();
                 o.check(r.values["main_bound"].get<std::string>() == c.bound, "p=" + p + " bound " + r.values["main_bound"].dump());
                 o.check(r.values["main_bound_value"].get<double>() == c.value, "p=" + p + " bound value");
                 o.check(r.verdicts["main_sufficient"].get<bool>() == c.sufficient, "p=" + p + " sufficiency flag");
                 o.reports.push_back(std::move(r));
             }
             auto step = reports::smo_inert(FieldSpec(4, {}), 2, euler::grc_profile("KSa-BB", 2), cuts);
             const auto sb = step.values["step_bound"].get<std::string>();
             o.check(step.values["delta"].get<std::string>() == "7/64", "delta " + step.values["delta"].dump());
             o.check(step.values["step_bound_value"].get<double>() > 0.5 && !step.verdicts["step_clears_half"].get<bool>(),
                     "step bound " + sb + " not flagged above 1/2");
             o.detail += (o.detail.empty() ? "" : "; ") + std::string("bounds 11/10, 14/15, 4/5; step ") + sb;
             o.reports.push_back(std::move(step));
         }},
        {13, "residue degree doubling in the 5th cyclotomic tower", 0,
         [](Outcome& o) {
             const auto chains = smo::bundled_tower_chains();
             const auto& c = chains.front();
             auto r = reports::smo_tower(c.F, c.K, 100'000);
             const auto bad = r.values["counterexamples"].size();
             const auto checked = r.values["checked"].get<std::uint64_t>();
             o.check(c.label == "cyclotomic-5", "first bundled chain is " + c.label);
             o.check(bad == 0, std::to_string(bad) + " counterexamples");
             o.check(checked > 0, "no primes checked");
             o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " primes checked";
             o.reports.push_back(std::move(r));
         }},
    };
}

std::vector<Outcome> run_all(const std::vector<Criterion>& list, unsigned workers) {
    ScopedWorkers scope(workers);
    std::vector<Outcome> out;
    for (const auto& c : list) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
        }
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && o.seconds >= c.time_limit) o.check(false, "runtime " + fmt(o.seconds) + " s");
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace

int main() {
    const auto list = criteria();
    const auto first = run_all(list, 1);
    int failures = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& o = first[i];
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << list[i].id << ": " << list[i].name << " ("
                  << fmt(o.seconds) << " s) " << o.detail << "\n";
        failures += !o.pass;
    }

    const auto second = run_all(list, 8);
    std::size_t compared = 0;
    std::string mismatch;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (first[i].reports.size() != second[i].reports.size()) {
            mismatch = "criterion " + std::to_string(list[i].id) + " report count";
            continue;
        }
        for (std::size_t k = 0; k < first[i].reports.size(); ++k)
            for (auto f : {Format::Json, Format::Csv}) {
                ++compared;
                if (render(first[i].reports[k], f) != render(second[i].reports[k], f))
                    mismatch = "criterion " + std::to_string(list[i].id) + " " + first[i].reports[k].experiment;
            }
    }
    const bool det = mismatch.empty();
    std::cout << (det ? "PASS" : "FAIL") << " criterion 14: reports identical at 1 and 8 workers (" << compared
              << " renderings)" << (det ? "" : " first mismatch: " + mismatch) << "\n";
    failures += !det;
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
