#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "smolab/euler/abscissa.hpp"
#include "smolab/euler/euler_product.hpp"
#include "smolab/groups/catalog.hpp"
#include "smolab/groups/character_table.hpp"
#include "smolab/primes/density.hpp"
#include "smolab/report.hpp"
#include "smolab/smo/experiments.hpp"

/// One report builder per experiment; the CLI and the acceptance suite share them.
namespace smolab::reports {

Report charlab_table(const groups::CharacterTable& table, const std::string& source);
Report charlab_extremal(const groups::CharacterTable& table, int degree, const std::string& source);
/// Lemma verdicts and orthogonality over a list of catalog groups.
Report charlab_sweep(const std::vector<groups::CatalogEntry>& entries);
/// Extremal search for one degree over a list of groups.
Report charlab_sharpness(const std::vector<groups::CatalogEntry>& entries, int degree);

Report density_natural(const primes::PrimeSelector& selector, const std::vector<std::uint64_t>& x_grid);
Report density_dirichlet(const primes::PrimeSelector& selector, const std::vector<double>& s_grid,
                         std::uint64_t cutoff, primes::NormMode mode);
Report density_zeta(const std::vector<double>& s_grid, std::uint64_t cutoff);
Report frobstats(const primes::FieldSpec& field, std::uint64_t cutoff);

Report euler_eval(const euler::LocalFactor& f, std::complex<double> s);
Report euler_poleline(const euler::LocalFactor& f);
Report euler_rs(const euler::LocalFactor& f, const euler::LocalFactor& g, bool conjugate);
Report euler_positivity(const euler::EulerProduct& ep, const primes::PrimeSelector& selector, std::uint64_t M,
                        const std::vector<double>& sigmas);
Report euler_probe(const primes::PrimeSelector& selector, double delta, const std::vector<double>& sigmas,
                   const std::vector<std::uint64_t>& cutoffs, const std::string& profile = {});

Report smo_compare(const smo::RepresentationData& a, const smo::RepresentationData& b, std::uint64_t X);
Report smo_poleorder(const euler::EulerProduct& ep, const primes::PrimeSelector& S, const std::vector<double>& eps);
Report smo_tempered(const smo::RepresentationData& a, const primes::PrimeSelector& S, const std::vector<double>& eps);
Report smo_zratio(const smo::RepresentationData& a, const smo::RepresentationData& b, const primes::PrimeSelector& S,
                  const std::vector<double>& s_grid, std::uint64_t cutoff);
Report smo_rajan(const primes::PrimeSelector& S, unsigned n, const std::vector<std::uint64_t>& cutoffs);
Report smo_inert(const primes::FieldSpec& field, unsigned n, const euler::GRCBoundProfile& profile,
                 const std::vector<std::uint64_t>& cutoffs);
Report smo_tower(const primes::FieldSpec& F, const primes::FieldSpec& K, std::uint64_t x);

Report data_gen_tau(const std::string& path, std::uint64_t limit);

/// Inputs block describing a representation source.
Json describe_source(const smo::RepresentationData& data);

}  // namespace smolab::reports
