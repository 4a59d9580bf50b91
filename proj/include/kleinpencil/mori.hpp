// Arithmetic audit of the equivariant Mori-reduction case analysis: Euler
// bookkeeping, fiber bounds, orbit-size feasibility, and the exhaustive
// scenario sweep.  Everything here is exact integer combinatorics; geometric
// steps enter only as named axioms (see axioms.hpp) cited per row.
#pragma once

#include <set>
#include <string>
#include <vector>

namespace kleinpencil {

// One case of the reduction bookkeeping.  The Euler identity ties the fields
// together: 13 - g = e_min + fibers - n.
struct MoriScenario {
    long g = 0;       // genus of the distinguished branch curve, >= 3
    long n = 0;       // number of rational branch curves, >= 0
    long e_min = 0;   // Euler characteristic of the minimal model, in [3, 11]
    long fibers = 0;  // number of Mori fibers, >= 0
};

// Throws std::invalid_argument when a field is out of its documented range.
void validate_scenario(const MoriScenario& s);

// True iff 13 - g = e_min + fibers - n.  Validates first.
bool euler_feasible(const MoriScenario& s);

// Generic bound fibers <= n + 9.  Requires n >= 0.
long fiber_bound(long n);

// Sharpened fiber cap for n rational branch curves, n in {7, 14}, re-derived
// from the Euler identity: the arithmetic maximum n + 7 is attained by a
// unique scenario (g = 3, e_min = 3), which is excluded on geometric grounds,
// leaving the cap at n + 6.
struct EstimateLemma {
    long bound = 0;           // n + 6
    long arithmetic_max = 0;  // n + 7, attained only by the witness below
    long witness_g = 0;
    long witness_e_min = 0;
    bool requires_geometric_input = true;
    std::vector<std::string> axioms;  // ids backing the witness exclusion
};
EstimateLemma estimate_lemma_report(long n);
// The cap alone.
long estimate_lemma(long n);

// Orbit sizes realizable for some group action.
struct OrbitSizeSet {
    long group_order = 0;
    std::set<long> allowed;  // positive divisors of group_order
};
void validate_orbit_sizes(const OrbitSizeSet& sizes);
// All positive divisors of group_order.
OrbitSizeSet divisor_orbits(long group_order);
// Orbit sizes available to rational branch curves under the 21-element group
// after the documented exclusions: {7}.
OrbitSizeSet standard_branch_orbit_sizes();

// True iff total is a sum (with repetition, any length) of elements of
// sizes.allowed that are >= min_size.  The empty sum gives 0.
bool orbit_sum_feasible(long total, const OrbitSizeSet& sizes, long min_size);

// All totals of at most max_orbits orbits (with repetition) drawn from
// sizes.allowed.  Always contains 0.
std::set<long> branch_count_admissible(const OrbitSizeSet& sizes, int max_orbits = 2);

// Candidate self-intersections b0_sq + orbit * m^2 for m in multiplicities,
// kept when they are a perfect square d^2 with d realizable as the degree of
// a plane curve with 7 nodes: d(d-3)/2 + 1 - 7 >= 0.  Returns the degrees d.
std::set<long> image_self_intersection_test(long b0_sq, long orbit,
                                            const std::set<long>& multiplicities);

// Configuration lower bound on the fiber count: 0 when n = 0, n + 7 when
// n in {7, 14} (each branch orbit threads a fiber orbit, plus the fibers
// through the distinguished curve).  Axiom-backed, see "fiber-config".
long config_min_fibers(long n);

// Degree of the blow-up of a del Pezzo surface of degree start_degree in
// `points` general points; throws when the result leaves [1, 9].
long delpezzo_degree_after_blowups(long start_degree, long points);

// Euler characteristic 12 - degree of a del Pezzo surface.
long delpezzo_euler(long degree);

// One audited case of the sweep.  `fibers` inside `s` is the unique value
// closing the Euler identity and may be negative (then the row is infeasible
// on arithmetic grounds alone).  `axioms` lists the assumption-backed rules
// consulted for this row, whether or not one of them fired.
struct ScenarioRow {
    MoriScenario s;
    bool feasible = false;
    std::string reason;               // empty iff feasible
    std::vector<std::string> axioms;  // ids from axiom_table()
};

struct SweepRanges {
    long g_lo = 3, g_hi = 10;
    std::vector<long> n_values{0, 7, 14};
    long e_lo = 3, e_hi = 11;
};

// Exhaustive audit over the ranges, ordered by (g, n, e_min).  Ranges must
// stay inside the scenario invariants; empty ranges give an empty table.
std::vector<ScenarioRow> enumerate_scenarios(const SweepRanges& ranges);

// Aligned plain-text rendering of the table, one row per line.
std::string format_scenario_table(const std::vector<ScenarioRow>& rows);

}  // namespace kleinpencil
