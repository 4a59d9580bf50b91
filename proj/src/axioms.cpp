#include "kleinpencil/axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleinpencil {

const std::vector<Axiom>& axiom_table() {
    static const std::vector<Axiom> table = {
        {"b0-square-eight",
         "The distinguished genus-3 branch curve has self-intersection 8 on the minimal model, "
         "by adjunction through the double cover.",
         "doc/claims.md#mori-audit"},
        {"branch-orbit-seven",
         "Rational branch curves move in orbits of size exactly 7 under the 21-element group: "
         "sizes 1 and 3 would add fixed points of the order-7 subgroup beyond its 3-point fixed "
         "locus, and size 21 would span a negative-definite rank-21 sublattice.",
         "doc/claims.md#mori-audit"},
        {"fiber-config",
         "When rational branch curves are present (n = 7 or 14), the intersection configuration "
         "forces at least n + 7 Mori fibers, and the unique Euler-consistent scenario attaining "
         "n + 7 (genus 3, minimal model the plane) is geometrically excluded, capping the fiber "
         "count at n + 6.",
         "doc/claims.md#mori-audit"},
        {"fiber-orbit-sizes",
         "A Mori-fiber orbit under the 21-element group has size 3 or 7: an invariant fiber "
         "would carry extra fixed points of the order-7 subgroup.",
         "doc/claims.md#mori-audit"},
        {"fiber-triple-excluded",
         "Size-3 orbits of Mori fibers are excluded: each member is invariant under the order-7 "
         "subgroup, which then has more than its 3 allowed fixed points.",
         "doc/claims.md#mori-audit"},
        {"fix-order7-three",
         "An order-7 symplectic automorphism of a K3-surface has exactly 3 fixed points.",
         "Nikulin, Finite groups of automorphisms of Kaehlerian K3 surfaces, "
         "Trans. Moscow Math. Soc. 38 (1980)"},
        {"hmin-delpezzo",
         "An equivariant minimal model of the quotient surface is a del Pezzo surface, so its "
         "Euler characteristic lies in [3, 11]; the conic-bundle case does not occur.",
         "doc/claims.md#mori-audit"},
        {"mori-fiber-bound",
         "The total number of Mori fibers is bounded by n + 9, where n is the number of "
         "rational branch curves.",
         "doc/claims.md#mori-audit"},
        {"no-neg-rank21",
         "The Picard lattice of the covering K3-surface admits no negative-definite sublattice "
         "of rank 21.",
         "doc/claims.md#mori-audit"},
        {"orbit-min-21",
         "Every orbit of the 168-element group on the relevant intersection locus has at least "
         "21 points: smaller orbits would have stabilizers of order at least 8, which the "
         "curve geometry rules out.",
         "doc/claims.md#l27-unique"},
    };
    return table;
}

const Axiom& axiom(const std::string& id) {
    const std::vector<Axiom>& table = axiom_table();
    auto it = std::lower_bound(table.begin(), table.end(), id,
                               [](const Axiom& a, const std::string& key) { return a.id < key; });
    if (it == table.end() || it->id != id) throw std::invalid_argument("unknown axiom id: " + id);
    return *it;
}

}  // namespace kleinpencil
