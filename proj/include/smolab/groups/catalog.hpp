#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "smolab/groups/finite_group.hpp"

namespace smolab::groups {

FiniteGroup cyclic(int n);
/// Dihedral group of order 2n; dihedral(2) is the Klein four-group.
FiniteGroup dihedral(int n);
FiniteGroup quaternion8();
/// Generalised quaternion (dicyclic) group of the given order, a multiple of 4.
FiniteGroup dicyclic(int order);
FiniteGroup symmetric(int n);
FiniteGroup alternating(int n);
/// (A x B) / <(z_A, z_B)> for the first central involutions z_A, z_B.
FiniteGroup central_product(const FiniteGroup& a, const FiniteGroup& b);
/// Q8^m x C2 modulo the subgroup generated by z_i z_j^{-1} for the central
/// involutions z_i of the Q8 factors. The m-1 identifications leave order 2^{2m+2}.
FiniteGroup q8_power_family(int m);

/// Builds a catalog group from an expression such as `cyclic(6)`,
/// `direct_product(quaternion8, cyclic(2))` or `q8_power_family(2)`.
/// Throws UnknownCatalogEntry for names outside the catalog.
FiniteGroup catalog(std::string_view expression);

struct CatalogEntry {
    std::string expression;
    FiniteGroup group;
};

/// The bundled sweep catalog: at least 20 groups, all of order <= 64.
std::vector<CatalogEntry> bundled_catalog();
/// Members of the bundled catalog whose order is a power of two.
std::vector<CatalogEntry> two_group_catalog();

}  // namespace smolab::groups
