#include "smolab/reports.hpp"

#include <cmath>
#include <cstdio>

#include "smolab/error.hpp"
#include "smolab/groups/lemma.hpp"
#include "smolab/smo/tau.hpp"

namespace smolab::reports {

namespace {

constexpr const char* kLemmaAnchor =
    "distinct irreducible characters of degree n agree on at most a fraction 1 - 1/(2n^2) of the group";
constexpr const char* kSharpAnchor = "for n = 2 the bound 7/8 is attained by a central quotient of a power of Q8";
constexpr const char* kOrthogonalityAnchor = "row orthogonality of irreducible characters";
constexpr const char* kPoleDetectsNote =
    "a pole at s = 1 of L(s, pi x conj(pi')) detects pi = pi'; interpretive only, never computed";

Report make(std::string experiment) {
    Report r;
    r.experiment = std::move(experiment);
    r.timestamp = report_timestamp();
    return r;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::string complex_text(std::complex<double> z) {
    char buf[64];
    const double re = std::abs(z.real()) < 5e-13 ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
    if (im == 0.0)
        std::snprintf(buf, sizeof buf, "%.12g", re);
    else
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    return buf;
}

Json character_json(const groups::Character& c) {
    Json j;
    j["degree"] = c.degree;
    if (c.integer_values) {
        j["values"] = *c.integer_values;
    } else {
        Json vals = Json::array();
        for (auto v : c.values) vals.push_back(complex_text(v));
        j["values"] = vals;
    }
    return j;
}

Json rational_json(const Rational& q) { return q.str(); }

Json factor_json(const euler::LocalFactor& f) {
    Json j;
    j["q"] = f.q();
    j["degree"] = f.degree();
    Json a = Json::array();
    for (auto z : f.alphas()) a.push_back(complex_json(z));
    j["alphas"] = a;
    return j;
}

Json u64_array(const std::vector<std::uint64_t>& v) { return Json(v); }

std::string selector_text(const primes::PrimeSelector& s) { return s.describe(); }

}  // namespace

Json describe_source(const smo::RepresentationData& data) {
    Json j;
    j["label"] = data.label();
    j["source"] = smo::source_kind_name(data.kind());
    j["degree"] = data.degree();
    if (data.kind() == smo::SourceKind::HeckeFile) {
        j["weight"] = data.weight();
        j["primes"] = data.coefficients().size();
        j["coverage"] = data.coverage().value_or(0);
    } else {
        j["seed"] = data.seed();
    }
    j["normalization"] = data.normalization();
    return j;
}

Report charlab_table(const groups::CharacterTable& table, const std::string& source) {
    auto r = make("charlab.table");
    r.inputs["group"] = source;
    r.values["order"] = table.group().order();
    r.values["class_sizes"] = table.classes().class_sizes;
    Json reps = Json::array();
    for (auto i : table.classes().representatives) reps.push_back(groups::format_cycles(table.group().element(i)));
    r.values["class_representatives"] = reps;
    Json rows = Json::array();
    for (const auto& c : table.rows()) rows.push_back(character_json(c));
    r.values["characters"] = rows;
    r.values["row_orthogonality_error"] = table.row_orthogonality_error();
    r.values["degree_square_sum"] = table.degree_square_sum();
    r.verdicts["orthogonal"] = table.row_orthogonality_error() <= 1e-6 * static_cast<double>(table.group().order());
    r.verdicts["square_sum_equals_order"] = table.degree_square_sum() == static_cast<long long>(table.group().order());
    r.paper_anchor = {kOrthogonalityAnchor, "the sum of squared degrees of the irreducible characters is |G|"};
    for (auto s : table.classes().class_sizes) r.table.header.push_back(std::to_string(s));
    for (const auto& c : table.rows()) {
        std::vector<Json> row;
        for (std::size_t k = 0; k < c.values.size(); ++k)
            row.push_back(c.integer_values ? Json((*c.integer_values)[k]) : Json(complex_text(c.values[k])));
        r.table.rows.push_back(row);
    }
    return r;
}

Report charlab_extremal(const groups::CharacterTable& table, int degree, const std::string& source) {
    auto r = make("charlab.extremal");
    r.inputs["group"] = source;
    r.inputs["degree"] = degree;
    const auto res = groups::extremal_search(table, degree);
    const auto threshold = groups::lemma_threshold(degree);
    r.values["order"] = table.group().order();
    r.values["candidates"] = res.candidates;
    r.values["threshold"] = rational_json(threshold);
    r.values["max_fraction"] = res.max_fraction ? Json(res.max_fraction->str()) : Json(nullptr);
    if (res.witness) {
        Json w;
        w["rows"] = Json::array({res.witness->first, res.witness->second});
        w["first"] = character_json(table.row(res.witness->first));
        w["second"] = character_json(table.row(res.witness->second));
        r.values["witness"] = w;
    } else {
        r.values["witness"] = nullptr;
    }
    r.verdicts["witness_found"] = res.witness.has_value();
    r.verdicts["within_bound"] = !res.max_fraction || *res.max_fraction <= threshold;
    r.verdicts["attains_bound"] = res.max_fraction && *res.max_fraction == threshold;
    r.paper_anchor = {kLemmaAnchor, kSharpAnchor};
    r.table.header = {"degree", "candidates", "max_fraction", "row_a", "row_b"};
    r.table.rows.push_back({degree, res.candidates, res.max_fraction ? Json(res.max_fraction->str()) : Json(""),
                            res.witness ? Json(res.witness->first) : Json(""),
                            res.witness ? Json(res.witness->second) : Json("")});
    return r;
}

Report charlab_sweep(const std::vector<groups::CatalogEntry>& entries) {
    auto r = make("charlab.sweep");
    Json names = Json::array();
    for (const auto& e : entries) names.push_back(e.expression);
    r.inputs["catalog"] = names;
    std::uint64_t pairs = 0, violations = 0;
    bool orthogonal = true, square_sums = true;
    Json groups_json = Json::array();
    r.table.header = {"group", "order", "classes", "pairs", "violations", "row_error", "square_sum"};
    for (const auto& e : entries) {
        const auto table = groups::character_table(e.group);
        std::uint64_t gp = 0, gv = 0;
        std::optional<Rational> worst;
        for (std::size_t i = 0; i < table.size(); ++i)
            for (std::size_t j = i + 1; j < table.size(); ++j) {
                if (table.row(i).degree != table.row(j).degree) continue;
                ++gp;
                const auto frac = groups::agreement_fraction(table.row(i), table.row(j), table);
                const auto gap = frac - groups::lemma_threshold(table.row(i).degree);
                if (!worst || gap > *worst) worst = gap;
                if (frac > groups::lemma_threshold(table.row(i).degree)) ++gv;
            }
        const double err = table.row_orthogonality_error();
        const bool ok = err <= 1e-6 * static_cast<double>(e.group.order());
        const bool sq = table.degree_square_sum() == static_cast<long long>(e.group.order());
        orthogonal = orthogonal && ok;
        square_sums = square_sums && sq;
        pairs += gp;
        violations += gv;
        Json g;
        g["group"] = e.expression;
        g["order"] = e.group.order();
        g["classes"] = table.size();
        g["pairs"] = gp;
        g["violations"] = gv;
        g["closest_gap"] = worst ? Json(worst->str()) : Json(nullptr);
        g["row_orthogonality_error"] = err;
        g["degree_square_sum"] = table.degree_square_sum();
        groups_json.push_back(g);
        r.table.rows.push_back({e.expression, e.group.order(), table.size(), gp, gv, err, table.degree_square_sum()});
    }
    r.values["groups"] = groups_json;
    r.values["pairs"] = pairs;
    r.values["violations"] = violations;
    r.verdicts["zero_violations"] = violations == 0;
    r.verdicts["orthogonality"] = orthogonal;
    r.verdicts["square_sums"] = square_sums;
    r.paper_anchor = {kLemmaAnchor, kOrthogonalityAnchor};
    return r;
}

Report charlab_sharpness(const std::vector<groups::CatalogEntry>& entries, int degree) {
    auto r = make("charlab.sharpness");
    Json names = Json::array();
    for (const auto& e : entries) names.push_back(e.expression);
    r.inputs["catalog"] = names;
    r.inputs["degree"] = degree;
    const auto threshold = groups::lemma_threshold(degree);
    std::optional<Rational> best;
    std::string best_group;
    Json per = Json::array();
    r.table.header = {"group", "order", "candidates", "max_fraction"};
    for (const auto& e : entries) {
        const auto table = groups::character_table(e.group);
        const auto res = groups::extremal_search(table, degree);
        Json g;
        g["group"] = e.expression;
        g["candidates"] = res.candidates;
        g["max_fraction"] = res.max_fraction ? Json(res.max_fraction->str()) : Json(nullptr);
        if (res.witness) g["witness_rows"] = Json::array({res.witness->first, res.witness->second});
        per.push_back(g);
        r.table.rows.push_back({e.expression, e.group.order(), res.candidates,
                                res.max_fraction ? Json(res.max_fraction->str()) : Json("")});
        if (res.max_fraction && (!best || *res.max_fraction > *best)) {
            best = res.max_fraction;
            best_group = e.expression;
        }
    }
    r.values["groups"] = per;
    r.values["threshold"] = threshold.str();
    r.values["best_fraction"] = best ? Json(best->str()) : Json(nullptr);
    r.values["best_group"] = best_group;
    r.verdicts["attains_threshold"] = best && *best == threshold;
    r.paper_anchor = {kSharpAnchor};
    return r;
}

Report density_natural(const primes::PrimeSelector& selector, const std::vector<std::uint64_t>& x_grid) {
    auto r = make("density.natural");
    r.inputs["selector"] = selector_text(selector);
    r.inputs["x"] = x_grid;
    const auto est = primes::natural_density_estimate(selector, x_grid);
    r.cutoffs = x_grid;
    r.values["partial"] = est.partial;
    r.values["estimate"] = est.extrapolated;
    r.values["selected"] = est.selected;
    r.values["unramified"] = est.universe;
    r.paper_anchor = {"natural density: limit of #{p <= x : p in S} / #{p <= x}"};
    r.table.header = {"x", "partial"};
    for (std::size_t i = 0; i < x_grid.size(); ++i) r.table.rows.push_back({x_grid[i], est.partial[i]});
    return r;
}

Report density_dirichlet(const primes::PrimeSelector& selector, const std::vector<double>& s_grid,
                         std::uint64_t cutoff, primes::NormMode mode) {
    auto r = make("density.dirichlet");
    r.inputs["selector"] = selector_text(selector);
    r.inputs["s"] = s_grid;
    r.inputs["cutoff"] = cutoff;
    r.inputs["norms"] = mode == primes::NormMode::PlaceNorms ? "places" : "rational";
    const auto est = primes::dirichlet_density_estimate(selector, s_grid, cutoff, mode);
    r.cutoffs = est.cutoffs;
    r.values["partial"] = est.partial;
    r.values["sums"] = est.sums;
    r.values["truncation_bias"] = est.truncation_bias;
    r.values["estimate"] = est.extrapolated;
    r.values["pole_coefficient"] = est.absolute_coefficient;
    r.values["reference_coefficient"] = est.reference_coefficient;
    r.paper_anchor = {"Dirichlet density: limit of sum_{p in S} p^-s / log(1/(s-1)) as s -> 1+"};
    r.notes = {"estimate = fitted pole coefficient of S over that of all unramified primes, "
               "after subtracting the exponential-integral tail beyond the cutoff"};
    r.table.header = {"s", "partial", "sum", "cutoff"};
    for (std::size_t i = 0; i < s_grid.size(); ++i)
        r.table.rows.push_back({s_grid[i], est.partial[i], est.sums[i], est.cutoffs[i]});
    return r;
}

Report density_zeta(const std::vector<double>& s_grid, std::uint64_t cutoff) {
    auto r = make("density.zeta");
    r.inputs["s"] = s_grid;
    r.inputs["cutoff"] = cutoff;
    r.cutoffs = Json::array({cutoff});
    Json vals = Json::array(), devs = Json::array(), tails = Json::array();
    double worst = 0.0;
    r.table.header = {"s", "value", "log(1/(s-1))", "deviation", "tail_estimate"};
    for (double s : s_grid) {
        const auto z = primes::prime_zeta(s, cutoff);
        vals.push_back(z.value);
        devs.push_back(z.deviation);
        tails.push_back(z.tail_estimate);
        worst = std::max(worst, std::abs(z.deviation));
        r.table.rows.push_back({s, z.value, z.value - z.deviation, z.deviation, z.tail_estimate});
    }
    r.values["prime_zeta"] = vals;
    r.values["deviation"] = devs;
    r.values["tail_estimate"] = tails;
    r.values["max_abs_deviation"] = worst;
    r.verdicts["bounded_by_2"] = worst < 2.0;
    r.paper_anchor = {"prime zeta: sum_p p^-s = log(1/(s-1)) + O(1) as s -> 1+"};
    return r;
}

Report frobstats(const primes::FieldSpec& field, std::uint64_t cutoff) {
    auto r = make("frobstats");
    r.inputs["field"] = field.describe();
    r.inputs["cutoff"] = cutoff;
    const auto st = primes::frobenius_statistics(field, cutoff);
    r.cutoffs = Json::array({cutoff});
    r.values["degree"] = field.degree();
    r.values["coset_representatives"] = field.coset_reps();
    r.values["counts"] = st.counts;
    r.values["fractions"] = st.fractions;
    r.values["first_prime"] = st.first_prime;
    r.values["first_hit_bound"] = st.first_hit_bound ? Json(*st.first_hit_bound) : Json(nullptr);
    r.values["unramified"] = st.unramified;
    double worst = 0.0;
    for (double f : st.fractions) worst = std::max(worst, std::abs(f - 1.0 / field.degree()));
    r.values["max_deviation_from_uniform"] = worst;
    r.paper_anchor = {"Chebotarev: Frobenius classes are equidistributed among unramified primes"};
    r.table.header = {"class", "representative", "count", "fraction", "first_prime"};
    for (std::size_t k = 0; k < st.counts.size(); ++k)
        r.table.rows.push_back({k, field.coset_reps()[k], st.counts[k], st.fractions[k], st.first_prime[k]});
    return r;
}

Report euler_eval(const euler::LocalFactor& f, std::complex<double> s) {
    auto r = make("euler.eval");
    r.inputs["factor"] = factor_json(f);
    r.inputs["s"] = complex_json(s);
    const auto v = euler::eval_local(f, s);
    r.values["value"] = complex_json(v);
    r.values["reciprocal_polynomial"] = Json::array();
    for (auto c : f.reciprocal_polynomial()) r.values["reciprocal_polynomial"].push_back(complex_json(c));
    r.verdicts["nonzero"] = std::abs(v) > 0.0;
    r.paper_anchor = {"a local factor prod (1 - alpha q^-s)^-1 is a nowhere vanishing meromorphic function"};
    r.table.header = {"s_re", "s_im", "value_re", "value_im"};
    r.table.rows.push_back({s.real(), s.imag(), v.real(), v.imag()});
    return r;
}

Report euler_poleline(const euler::LocalFactor& f) {
    auto r = make("euler.poleline");
    r.inputs["factor"] = factor_json(f);
    const auto line = euler::first_pole_line(f);
    r.values["poleline"] = line ? Json(*line) : Json(nullptr);
    r.values["tempered"] = f.tempered();
    r.paper_anchor = {"the first (rightmost) pole of a local factor lies on Re(s) = max log|alpha| / log q"};
    r.table.header = {"q", "poleline"};
    r.table.rows.push_back({f.q(), line ? Json(*line) : Json("")});
    return r;
}

Report euler_rs(const euler::LocalFactor& f, const euler::LocalFactor& g, bool conjugate) {
    auto r = make("euler.rs");
    r.inputs["f"] = factor_json(f);
    r.inputs["g"] = factor_json(g);
    r.inputs["conjugate_second"] = conjugate;
    const auto rs = euler::rankin_selberg_local(f, g, conjugate);
    r.values["product"] = factor_json(rs);
    const auto line = euler::first_pole_line(rs);
    r.values["poleline"] = line ? Json(*line) : Json(nullptr);
    r.values["tempered"] = rs.tempered();
    if (f.size() > 0) {
        const auto c = euler::rs_leading_coefficient(f);
        r.values["c_p_conjugated"] = complex_json(c.conjugated);
        r.values["c_p_unconjugated"] = complex_json(c.unconjugated);
    }
    r.paper_anchor = {"Rankin-Selberg local parameters are alpha_i conj(beta_j); the first pole of the product is "
                      "max log|alpha_i beta_j| / log q"};
    r.table.header = {"index", "re", "im"};
    for (std::size_t i = 0; i < rs.size(); ++i) r.table.rows.push_back({i, rs.alphas()[i].real(), rs.alphas()[i].imag()});
    return r;
}

Report euler_positivity(const euler::EulerProduct& ep, const primes::PrimeSelector& selector, std::uint64_t M,
                        const std::vector<double>& sigmas) {
    auto r = make("euler.positivity");
    r.inputs["product"] = ep.label();
    r.inputs["selector"] = selector_text(selector);
    r.inputs["M"] = M;
    r.inputs["sigma"] = sigmas;
    const auto pos = euler::positive_type_check(ep, selector, M);
    r.cutoffs = Json::array({M});
    r.values["coefficients"] = pos.coefficients;
    r.values["min_coefficient"] = pos.min_coefficient;
    r.values["max_imaginary"] = pos.max_imaginary;
    r.values["first_violation"] = pos.first_violation ? Json(*pos.first_violation) : Json(nullptr);
    r.values["coverage"] = ep.coverage() ? Json(*ep.coverage()) : Json(nullptr);
    r.verdicts["positive_type"] = pos.positive;
    r.paper_anchor = {"log L(s, pi x conj(pi)) is a Dirichlet series with nonnegative coefficients",
                      "Landau: a series of positive type has no zero to the right of its first real pole"};
    r.table.header = {"sigma", "log_value", "value", "nonvanishing"};
    if (pos.positive && !sigmas.empty()) {
        const auto land = euler::landau_region_check(ep, selector, sigmas, M);
        Json samples = Json::array();
        bool all = true;
        for (const auto& s : land.samples) {
            samples.push_back({{"sigma", s.sigma}, {"log_value", s.log_value}, {"value", s.value}});
            all = all && s.value >= 1.0;
            r.table.rows.push_back({s.sigma, s.log_value, s.value, s.nonvanishing});
        }
        r.values["landau"] = samples;
        r.verdicts["landau_value_at_least_1"] = all;
    }
    return r;
}

Report euler_probe(const primes::PrimeSelector& selector, double delta, const std::vector<double>& sigmas,
                   const std::vector<std::uint64_t>& cutoffs, const std::string& profile) {
    auto r = make("euler.probe");
    r.inputs["selector"] = selector_text(selector);
    r.inputs["delta"] = delta;
    if (!profile.empty()) r.inputs["profile"] = profile;
    r.inputs["sigma"] = sigmas;
    r.inputs["cutoffs"] = cutoffs;
    const auto probe = euler::convergence_probe(selector, delta, sigmas, cutoffs);
    r.cutoffs = cutoffs;
    Json rows = Json::array();
    r.table.header = {"sigma", "cutoff", "sum", "difference", "verdict"};
    for (const auto& row : probe.rows) {
        rows.push_back({{"sigma", row.sigma}, {"sums", row.sums}, {"differences", row.differences}});
        r.verdicts["sigma=" + Json(row.sigma).dump()] = euler::growth_name(row.verdict);
        for (std::size_t c = 0; c < cutoffs.size(); ++c)
            r.table.rows.push_back({row.sigma, cutoffs[c], row.sums[c], c ? Json(row.differences[c - 1]) : Json(""),
                                    euler::growth_name(row.verdict)});
    }
    r.values["rows"] = rows;
    if (const auto j = selector.uniform_degree()) r.values["abscissa"] = euler::key_observation_abscissa(delta, *j);
    r.values["threshold"] = euler::kStabilizedThreshold;
    r.paper_anchor = {"a product over degree-j places with |alpha| < q^delta converges absolutely for "
                      "Re(s) > delta + 1/j, since q >= p^j"};
    return r;
}

Report smo_compare(const smo::RepresentationData& a, const smo::RepresentationData& b, std::uint64_t X) {
    auto r = make("smo.compare");
    r.inputs["a"] = describe_source(a);
    r.inputs["b"] = describe_source(b);
    r.inputs["X"] = X;
    const auto rep = smo::compare_local(a, b, X);
    r.cutoffs = Json::array({rep.scanned_limit});
    r.values["compared"] = rep.compared;
    r.values["disagreement_count"] = rep.disagreements.size();
    r.values["disagreements"] = u64_array(std::vector<std::uint64_t>(
        rep.disagreements.begin(), rep.disagreements.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(rep.disagreements.size(), 100))));
    r.values["first_disagreement"] = rep.first_disagreement ? Json(*rep.first_disagreement) : Json(nullptr);
    r.values["density"] = rep.densities.empty() ? 0.0 : rep.densities.back().fraction;
    r.values["thresholds"] = {{"refined", rep.refined_threshold.str()},
                              {"nondihedral", rep.nondihedral_threshold.str()},
                              {"conjectural", rep.conjectural_threshold.str()}};
    const double d = rep.densities.empty() ? 0.0 : rep.densities.back().fraction;
    r.verdicts["identical_on_range"] = rep.disagreements.empty();
    r.verdicts["below_refined_threshold"] = d < rep.refined_threshold.to_double();
    r.paper_anchor = {"strong multiplicity one: agreement of local factors outside a finite set S forces isomorphism",
                      "refined: density of S below 1/8 suffices; 1/4 for non-dihedral forms; conjecturally 1/(2n^2)",
                      "the first distinguishing prime bounds how many coefficients separate two forms"};
    r.notes = {kPoleDetectsNote};
    if (rep.disagreements.size() > 100) r.notes.push_back("disagreement list truncated to the first 100 primes");
    r.table.header = {"x", "compared", "disagreements", "fraction"};
    for (const auto& p : rep.densities) r.table.rows.push_back({p.x, p.compared, p.disagreements, p.fraction});
    return r;
}

namespace {

void fill_pole_order(Report& r, const smo::PoleOrderEstimate& est) {
    r.cutoffs = est.cutoffs;
    r.values["eps"] = est.eps;
    r.values["values"] = est.values;
    r.values["coverage_limited"] = est.coverage_limited;
    r.values["slope"] = est.slope;
    r.values["intercept"] = est.intercept;
    r.values["slope_interval"] = Json::array({est.slope_low, est.slope_high});
    r.table.header = {"eps", "log(1/eps)", "cutoff", "value"};
    for (std::size_t i = 0; i < est.eps.size(); ++i)
        r.table.rows.push_back({est.eps[i], std::log(1.0 / est.eps[i]), est.cutoffs[i], est.values[i]});
}

}  // namespace

Report smo_poleorder(const euler::EulerProduct& ep, const primes::PrimeSelector& S, const std::vector<double>& eps) {
    auto r = make("smo.poleorder");
    r.inputs["product"] = ep.label();
    r.inputs["selector"] = selector_text(S);
    r.inputs["eps"] = eps;
    fill_pole_order(r, smo::pole_order_estimate(ep, S, eps));
    r.paper_anchor = {"it suffices to show log L_S(s) / log(1/(s-1)) has the right limit as s -> 1+"};
    r.notes = {"slope of truncated log L_S(1 + eps) against log(1/eps), cutoffs x = min(10^8, ceil(exp(1.5/eps)))"};
    return r;
}

Report smo_tempered(const smo::RepresentationData& a, const primes::PrimeSelector& S, const std::vector<double>& eps) {
    auto r = make("smo.tempered");
    r.inputs["data"] = describe_source(a);
    r.inputs["selector"] = selector_text(S);
    r.inputs["eps"] = eps;
    const auto rep = smo::tempered_bound_check(a, S, eps);
    fill_pole_order(r, rep.estimate);
    r.values["density"] = rep.density;
    r.values["bound"] = rep.bound;
    r.values["checked_primes"] = rep.checked_primes;
    r.values["non_tempered_primes"] = rep.non_tempered;
    r.values["thresholds"] = {{"refined", rep.refined_threshold.str()},
                              {"nondihedral", rep.nondihedral_threshold.str()},
                              {"conjectural", rep.conjectural_threshold.str()}};
    r.verdicts["slope_within_bound"] = rep.pass;
    r.paper_anchor = {"for tempered pi, log L_S(s, pi x conj(pi)) <= n^2 delta(S) log(1/(s-1)) + O(1)",
                      "refined strong multiplicity one holds for delta(S) < 1/8; 1/4 for non-dihedral forms"};
    return r;
}

Report smo_zratio(const smo::RepresentationData& a, const smo::RepresentationData& b, const primes::PrimeSelector& S,
                  const std::vector<double>& s_grid, std::uint64_t cutoff) {
    auto r = make("smo.zratio");
    r.inputs["a"] = describe_source(a);
    r.inputs["b"] = describe_source(b);
    r.inputs["selector"] = selector_text(S);
    r.inputs["s"] = s_grid;
    r.inputs["cutoff"] = cutoff;
    const auto rep = smo::z_ratio(a, b, S, s_grid, cutoff);
    r.cutoffs = Json::array({rep.cutoff});
    Json pts = Json::array();
    bool agree = true;
    r.table.header = {"s", "direct", "via_log", "agree"};
    for (const auto& p : rep.points) {
        pts.push_back({{"s", p.s}, {"direct", p.direct}, {"via_log", p.via_log}});
        agree = agree && p.agree;
        r.table.rows.push_back({p.s, p.direct, p.via_log, p.agree});
    }
    r.values["points"] = pts;
    r.values["primes_used"] = rep.primes_used;
    r.values["min_log_coefficient"] = rep.min_log_coefficient;
    r.verdicts["paths_agree"] = agree;
    r.verdicts["positive_type"] = rep.positive_type;
    r.paper_anchor = {"Z(s) = L(pi x conj pi) L(pi' x conj pi') / (L(pi x conj pi') L(pi' x conj pi)) has a pole "
                      "of order 2 at s = 1 when pi and pi' differ",
                      "D_S(s) is a Dirichlet series of positive type"};
    r.notes = {kPoleDetectsNote};
    return r;
}

Report smo_rajan(const primes::PrimeSelector& S, unsigned n, const std::vector<std::uint64_t>& cutoffs) {
    auto r = make("smo.rajan");
    r.inputs["selector"] = selector_text(S);
    r.inputs["n"] = n;
    r.inputs["cutoffs"] = cutoffs;
    const auto rep = smo::rajan_criterion(S, n, cutoffs);
    r.cutoffs = cutoffs;
    r.values["exponent"] = rep.exponent.str();
    r.values["j"] = rep.j ? Json(*rep.j) : Json(nullptr);
    r.values["test_exponent"] = rep.test_exponent ? Json(rep.test_exponent->str()) : Json(nullptr);
    r.values["partial_sums"] = rep.partial_sums;
    r.verdicts["verdict"] = smo::rajan_verdict_name(rep.verdict);
    r.paper_anchor = {"sum over v in S of q_v^(-2/(n^2+1)) < infinity suffices for agreement outside S"};
    r.table.header = {"cutoff", "partial_sum"};
    for (std::size_t i = 0; i < cutoffs.size(); ++i) r.table.rows.push_back({cutoffs[i], rep.partial_sums[i]});
    return r;
}

Report smo_inert(const primes::FieldSpec& field, unsigned n, const euler::GRCBoundProfile& profile,
                 const std::vector<std::uint64_t>& cutoffs) {
    auto r = make("smo.inert");
    r.inputs["field"] = field.describe();
    r.inputs["n"] = n;
    r.inputs["profile"] = profile.display();
    r.inputs["cutoffs"] = cutoffs;
    const auto rep = smo::inert_experiment(field, n, profile, cutoffs);
    r.cutoffs = cutoffs;
    r.values["p"] = rep.p;
    r.values["main_bound"] = rep.main_bound.str();
    r.values["main_bound_value"] = rep.main_bound.to_double();
    r.values["delta"] = profile.exponent.str();
    r.values["step_bound"] = rep.step_bound.str();
    r.values["step_bound_value"] = rep.step_bound.to_double();
    r.verdicts["main_sufficient"] = rep.main_sufficient;
    r.verdicts["step_clears_half"] = rep.step_clears_half;
    Json rows = Json::array();
    r.table.header = {"sigma", "cutoff", "sum", "verdict"};
    for (const auto& row : rep.probe.rows) {
        rows.push_back({{"sigma", row.sigma}, {"sums", row.sums}, {"verdict", euler::growth_name(row.verdict)}});
        for (std::size_t c = 0; c < cutoffs.size(); ++c)
            r.table.rows.push_back({row.sigma, cutoffs[c], row.sums[c], euler::growth_name(row.verdict)});
    }
    r.values["probe_delta"] = rep.probe.delta;
    r.values["probe"] = rows;
    r.paper_anchor = {"over inert places of a cyclic field of prime degree p there is no pole in "
                      "Re(s) > 1 - 2/(n^2+1) + 1/p",
                      "with |alpha| < q^delta there are no poles in Re(s) > 2 delta + 1/p"};
    return r;
}

Report smo_tower(const primes::FieldSpec& F, const primes::FieldSpec& K, std::uint64_t x) {
    auto r = make("smo.tower");
    r.inputs["F"] = F.describe();
    r.inputs["K"] = K.describe();
    r.inputs["x"] = x;
    const auto rep = smo::tower_degree_check(F, K, x);
    r.cutoffs = Json::array({x});
    r.values["p"] = rep.p;
    r.values["m"] = rep.m;
    r.values["checked"] = rep.checked;
    r.values["excluded"] = rep.excluded;
    r.values["counterexamples"] = rep.counterexamples;
    r.verdicts["no_counterexamples"] = rep.counterexamples.empty();
    r.paper_anchor = {"a place of degree p in F has degree p^m in K when K/k is cyclic of degree p^m"};
    r.table.header = {"p", "m", "checked", "excluded", "counterexamples"};
    r.table.rows.push_back({rep.p, rep.m, rep.checked, rep.excluded, rep.counterexamples.size()});
    return r;
}

Report data_gen_tau(const std::string& path, std::uint64_t limit) {
    auto r = make("data.gen-tau");
    r.inputs["limit"] = limit;
    r.inputs["out"] = path;
    smo::write_tau_csv(path, limit);
    const auto tau = smo::tau_coefficients(std::min<std::uint64_t>(limit, 11));
    Json head;
    for (std::uint64_t n : {2, 3, 5, 7, 11})
        if (n <= limit) head[std::to_string(n)] = smo::int128_to_string(tau[n]);
    r.values["tau"] = head;
    r.values["file"] = path;
    r.paper_anchor = {"Ramanujan tau: q prod (1 - q^n)^24 = sum tau(n) q^n"};
    return r;
}

}  // namespace smolab::reports
