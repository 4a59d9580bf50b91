#include "kleinpencil/mori.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "kleinpencil/axioms.hpp"

namespace kleinpencil {

namespace {

long isqrt_floor(long c) {
    long d = 0;
    while ((d + 1) * (d + 1) <= c) ++d;
    return d;
}

// Totals reachable as sums of elements of `sizes` that are >= min_size.
std::vector<char> reachable_sums(long total, const std::set<long>& sizes, long min_size) {
    std::vector<char> reach(static_cast<size_t>(total) + 1, 0);
    reach[0] = 1;
    for (long s : sizes) {
        if (s < min_size || s > total) continue;
        for (long i = s; i <= total; ++i)
            if (reach[static_cast<size_t>(i - s)]) reach[static_cast<size_t>(i)] = 1;
    }
    return reach;
}

}  // namespace

void validate_scenario(const MoriScenario& s) {
    if (s.g < 3) throw std::invalid_argument("scenario genus must be at least 3");
    if (s.n < 0) throw std::invalid_argument("scenario branch count must be nonnegative");
    if (s.e_min < 3 || s.e_min > 11)
        throw std::invalid_argument("scenario minimal-model Euler characteristic must lie in [3, 11]");
    if (s.fibers < 0) throw std::invalid_argument("scenario fiber count must be nonnegative");
}

bool euler_feasible(const MoriScenario& s) {
    validate_scenario(s);
    return 13 - s.g == s.e_min + s.fibers - s.n;
}

long fiber_bound(long n) {
    if (n < 0) throw std::invalid_argument("branch count must be nonnegative");
    return n + 9;
}

EstimateLemma estimate_lemma_report(long n) {
    if (n != 7 && n != 14)
        throw std::invalid_argument("the estimate lemma applies to 7 or 14 branch curves");
    EstimateLemma out;
    out.arithmetic_max = -1;
    int maximizers = 0;
    for (long g = 3; g <= 13 + n; ++g)
        for (long e = 3; e <= 11; ++e) {
            long fibers = 13 - g - e + n;
            if (fibers < 0) continue;
            if (fibers > out.arithmetic_max) {
                out.arithmetic_max = fibers;
                out.witness_g = g;
                out.witness_e_min = e;
                maximizers = 1;
            } else if (fibers == out.arithmetic_max) {
                ++maximizers;
            }
        }
    // The cap below the maximum is only honest if exactly one scenario
    // attains the maximum and that scenario is the excluded one.
    if (maximizers != 1) throw std::logic_error("fiber maximum is not uniquely attained");
    out.bound = out.arithmetic_max - 1;
    out.requires_geometric_input = true;
    out.axioms = {"fiber-config"};
    return out;
}

long estimate_lemma(long n) { return estimate_lemma_report(n).bound; }

void validate_orbit_sizes(const OrbitSizeSet& sizes) {
    if (sizes.group_order < 1) throw std::invalid_argument("group order must be positive");
    for (long a : sizes.allowed)
        if (a < 1 || sizes.group_order % a != 0)
            throw std::invalid_argument("orbit sizes must be positive divisors of the group order");
}

OrbitSizeSet divisor_orbits(long group_order) {
    if (group_order < 1) throw std::invalid_argument("group order must be positive");
    OrbitSizeSet out;
    out.group_order = group_order;
    for (long d = 1; d <= group_order; ++d)
        if (group_order % d == 0) out.allowed.insert(d);
    return out;
}

OrbitSizeSet standard_branch_orbit_sizes() {
    // Divisors of 21 minus the documented exclusions: 1 and 3 (fixed-point
    // cap of the order-7 subgroup), 21 (lattice rank bound).
    OrbitSizeSet out;
    out.group_order = 21;
    out.allowed = {7};
    return out;
}

bool orbit_sum_feasible(long total, const OrbitSizeSet& sizes, long min_size) {
    validate_orbit_sizes(sizes);
    if (total < 0) throw std::invalid_argument("orbit-sum total must be nonnegative");
    return reachable_sums(total, sizes.allowed, min_size)[static_cast<size_t>(total)] != 0;
}

std::set<long> branch_count_admissible(const OrbitSizeSet& sizes, int max_orbits) {
    validate_orbit_sizes(sizes);
    if (max_orbits < 0) throw std::invalid_argument("orbit count must be nonnegative");
    std::set<long> totals{0};
    for (int k = 0; k < max_orbits; ++k) {
        std::set<long> next = totals;
        for (long t : totals)
            for (long s : sizes.allowed) next.insert(t + s);
        totals.swap(next);
    }
    return totals;
}

std::set<long> image_self_intersection_test(long b0_sq, long orbit,
                                            const std::set<long>& multiplicities) {
    std::set<long> degrees;
    for (long m : multiplicities) {
        long c = b0_sq + orbit * m * m;
        if (c < 0) continue;
        long d = isqrt_floor(c);
        if (d * d != c) continue;  // self-intersection of a plane image is a square
        if (d * (d - 3) / 2 + 1 - 7 < 0) continue;  // cannot carry the 7 nodes
        degrees.insert(d);
    }
    return degrees;
}

long config_min_fibers(long n) {
    if (n == 0) return 0;
    if (n != 7 && n != 14)
        throw std::invalid_argument("configuration bound applies to 0, 7, or 14 branch curves");
    return n + 7;
}

long delpezzo_degree_after_blowups(long start_degree, long points) {
    if (start_degree < 1 || start_degree > 9)
        throw std::invalid_argument("del Pezzo degree must lie in [1, 9]");
    if (points < 0) throw std::invalid_argument("number of blown-up points must be nonnegative");
    long degree = start_degree - points;
    if (degree < 1)
        throw std::invalid_argument("blowing up this many points leaves no del Pezzo surface");
    return degree;
}

long delpezzo_euler(long degree) {
    if (degree < 1 || degree > 9)
        throw std::invalid_argument("del Pezzo degree must lie in [1, 9]");
    return 12 - degree;
}

std::vector<ScenarioRow> enumerate_scenarios(const SweepRanges& ranges) {
    std::vector<ScenarioRow> rows;
    if (ranges.g_lo > ranges.g_hi || ranges.e_lo > ranges.e_hi || ranges.n_values.empty())
        return rows;
    if (ranges.g_lo < 3) throw std::invalid_argument("genus range must start at 3 or above");
    if (ranges.e_lo < 3 || ranges.e_hi > 11)
        throw std::invalid_argument("Euler range must stay inside [3, 11]");
    std::vector<long> ns = ranges.n_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (long n : ns)
        if (n < 0) throw std::invalid_argument("branch counts must be nonnegative");

    const std::set<long> branch_ok =
        branch_count_admissible(standard_branch_orbit_sizes(), 2);  // {0, 7, 14}

    for (long g = ranges.g_lo; g <= ranges.g_hi; ++g)
        for (long n : ns)
            for (long e = ranges.e_lo; e <= ranges.e_hi; ++e) {
                ScenarioRow row;
                row.s = MoriScenario{g, n, e, 13 - g - e + n};
                long fibers = row.s.fibers;

                if (n > 0) row.axioms.push_back("branch-orbit-seven");
                if (n > 0 && branch_ok.count(n) == 0) {
                    row.reason = "branch count is not a total of at most two 7-orbits";
                    rows.push_back(std::move(row));
                    continue;
                }
                if (fibers < 0) {
                    row.reason = "the Euler identity forces a negative fiber count";
                    rows.push_back(std::move(row));
                    continue;
                }
                row.axioms.push_back("mori-fiber-bound");
                if (fibers > fiber_bound(n)) {
                    row.reason = "fiber count exceeds the generic bound n + 9";
                    rows.push_back(std::move(row));
                    continue;
                }
                if (n == 0) {
                    if (fibers > 0) {
                        row.axioms.push_back("fiber-orbit-sizes");
                        if (!reachable_sums(fibers, {3, 7}, 0)[static_cast<size_t>(fibers)]) {
                            row.reason = "fiber count is not a sum of orbit sizes 3 and 7";
                            rows.push_back(std::move(row));
                            continue;
                        }
                        row.axioms.push_back("fiber-triple-excluded");
                        if (fibers % 7 != 0) {
                            row.reason =
                                "fiber count needs a size-3 orbit, exceeding the order-7 "
                                "fixed-point cap";
                            rows.push_back(std::move(row));
                            continue;
                        }
                    }
                    row.feasible = true;
                    rows.push_back(std::move(row));
                    continue;
                }
                row.axioms.push_back("fiber-config");
                EstimateLemma lemma = estimate_lemma_report(n);
                if (fibers < config_min_fibers(n)) {
                    std::ostringstream why;
                    why << "the branch configuration needs at least " << config_min_fibers(n)
                        << " fibers; the Euler identity gives " << fibers;
                    row.reason = why.str();
                    rows.push_back(std::move(row));
                    continue;
                }
                if (fibers > lemma.bound) {
                    std::ostringstream why;
                    why << "fiber count " << fibers << " exceeds the sharpened cap "
                        << lemma.bound;
                    row.reason = why.str();
                    rows.push_back(std::move(row));
                    continue;
                }
                row.feasible = true;
                rows.push_back(std::move(row));
            }
    return rows;
}

std::string format_scenario_table(const std::vector<ScenarioRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "g" << std::setw(4) << "n" << std::setw(7) << "e_min"
        << std::setw(8) << "fibers" << std::setw(12) << "status"
        << "notes\n";
    for (const ScenarioRow& row : rows) {
        out << std::left << std::setw(4) << row.s.g << std::setw(4) << row.s.n << std::setw(7)
            << row.s.e_min << std::setw(8) << row.s.fibers << std::setw(12)
            << (row.feasible ? "feasible" : "infeasible");
        out << (row.feasible ? "ok" : row.reason);
        if (!row.axioms.empty()) {
            out << "  [assumes:";
            for (const std::string& a : row.axioms) out << ' ' << a;
            out << ']';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace kleinpencil
