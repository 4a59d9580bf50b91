#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "kleinpencil/axioms.hpp"
#include "kleinpencil/mori.hpp"

using namespace kleinpencil;

namespace {

// Independent reference for orbit_sum_feasible: plain recursion.
bool brute_sum(long total, const std::set<long>& sizes, long min_size) {
    if (total == 0) return true;
    for (long s : sizes)
        if (s >= min_size && s <= total && brute_sum(total - s, sizes, min_size)) return true;
    return false;
}

const ScenarioRow& row_at(const std::vector<ScenarioRow>& rows, long g, long n, long e) {
    for (const ScenarioRow& r : rows)
        if (r.s.g == g && r.s.n == n && r.s.e_min == e) return r;
    REQUIRE(false);
    return rows.front();
}

bool lists_axiom(const ScenarioRow& r, const std::string& id) {
    for (const std::string& a : r.axioms)
        if (a == id) return true;
    return false;
}

}  // namespace

TEST_CASE("axiom table integrity") {
    const std::vector<Axiom>& table = axiom_table();
    REQUIRE(!table.empty());
    for (size_t i = 0; i + 1 < table.size(); ++i) CHECK(table[i].id < table[i + 1].id);
    for (const Axiom& a : table) {
        CHECK(!a.id.empty());
        CHECK(!a.statement.empty());
        CHECK(!a.source.empty());
        CHECK(axiom(a.id).statement == a.statement);
    }
    CHECK_THROWS_AS(axiom("no-such-assumption"), std::invalid_argument);
}

TEST_CASE("Euler identity bookkeeping") {
    CHECK(euler_feasible({3, 0, 3, 7}));
    CHECK(euler_feasible({10, 0, 3, 0}));
    CHECK_FALSE(euler_feasible({3, 7, 3, 13}));
    CHECK_THROWS_AS(euler_feasible({2, 0, 3, 8}), std::invalid_argument);
    CHECK_THROWS_AS(euler_feasible({3, 0, 12, 0}), std::invalid_argument);
    CHECK_THROWS_AS(euler_feasible({3, -1, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(euler_feasible({3, 0, 3, -2}), std::invalid_argument);
}

TEST_CASE("feasibility is preserved by the balanced shifts") {
    for (long g = 3; g <= 9; ++g)
        for (long n : {0L, 7L, 14L})
            for (long e = 3; e <= 11; ++e)
                for (long fibers = 1; fibers <= 23; ++fibers) {
                    MoriScenario s{g, n, e, fibers};
                    MoriScenario up_g{g + 1, n, e, fibers - 1};
                    MoriScenario up_n{g, n + 1, e, fibers + 1};
                    CHECK(euler_feasible(s) == euler_feasible(up_g));
                    CHECK(euler_feasible(s) == euler_feasible(up_n));
                }
}

TEST_CASE("fiber bounds and the estimate lemma") {
    CHECK(fiber_bound(0) == 9);
    CHECK(fiber_bound(7) == 16);
    CHECK(fiber_bound(14) == 23);
    CHECK_THROWS_AS(fiber_bound(-1), std::invalid_argument);

    CHECK(estimate_lemma(7) == 13);
    CHECK(estimate_lemma(14) == 20);
    CHECK_THROWS_AS(estimate_lemma(0), std::invalid_argument);
    for (long n : {7L, 14L}) {
        EstimateLemma rep = estimate_lemma_report(n);
        CHECK(rep.bound == n + 6);
        CHECK(rep.arithmetic_max == n + 7);
        CHECK(rep.witness_g == 3);
        CHECK(rep.witness_e_min == 3);
        CHECK(rep.requires_geometric_input);
        REQUIRE(rep.axioms.size() == 1);
        CHECK_NOTHROW(axiom(rep.axioms[0]));
        // The witness scenario really attains the arithmetic maximum.
        CHECK(euler_feasible({rep.witness_g, n, rep.witness_e_min, rep.arithmetic_max}));
        // The lemma genuinely tightens the generic bound.
        CHECK(estimate_lemma(n) < fiber_bound(n));
    }
}

TEST_CASE("orbit size sets and sum feasibility") {
    OrbitSizeSet d168 = divisor_orbits(168);
    CHECK(d168.allowed.size() == 16);
    CHECK(d168.allowed.count(21) == 1);
    CHECK(d168.allowed.count(56) == 1);
    CHECK_THROWS_AS(validate_orbit_sizes({21, {5}}), std::invalid_argument);
    CHECK_THROWS_AS(divisor_orbits(0), std::invalid_argument);

    CHECK_FALSE(orbit_sum_feasible(36, d168, 21));
    CHECK(orbit_sum_feasible(42, d168, 21));
    CHECK(orbit_sum_feasible(0, d168, 21));
    CHECK_THROWS_AS(orbit_sum_feasible(-1, d168, 21), std::invalid_argument);

    OrbitSizeSet d21 = divisor_orbits(21);
    OrbitSizeSet small{21, {3, 7}};
    for (long total = 0; total <= 200; ++total) {
        CHECK(orbit_sum_feasible(total, d168, 21) == brute_sum(total, d168.allowed, 21));
        CHECK(orbit_sum_feasible(total, d21, 1) == brute_sum(total, d21.allowed, 1));
        CHECK(orbit_sum_feasible(total, small, 0) == brute_sum(total, small.allowed, 0));
    }
}

TEST_CASE("admissible branch counts") {
    CHECK(branch_count_admissible(standard_branch_orbit_sizes()) == std::set<long>{0, 7, 14});
    // Counterfactual: allow a 21-orbit but at most one orbit.
    CHECK(branch_count_admissible({21, {7, 21}}, 1) == std::set<long>{0, 7, 21});
    CHECK(branch_count_admissible({21, {}}) == std::set<long>{0});
    CHECK_THROWS_AS(branch_count_admissible({21, {7}}, -1), std::invalid_argument);
}

TEST_CASE("self-intersection of the image curve picks out degree six") {
    CHECK(image_self_intersection_test(8, 7, {1, 2}) == std::set<long>{6});
    CHECK(image_self_intersection_test(8, 7, {1}).empty());
    CHECK(image_self_intersection_test(0, 0, {}).empty());
    // 8 + 7*4 = 36 = 6^2 passes the node-count filter: 6*3/2 + 1 - 7 = 3 >= 0.
    // A square too small to carry 7 nodes is rejected: 9 + 0 = 3^2, 3*0/2 + 1 - 7 < 0.
    CHECK(image_self_intersection_test(9, 7, {0}).empty());
}

TEST_CASE("configuration bounds and del Pezzo arithmetic") {
    CHECK(config_min_fibers(0) == 0);
    CHECK(config_min_fibers(7) == 14);
    CHECK(config_min_fibers(14) == 21);
    CHECK_THROWS_AS(config_min_fibers(3), std::invalid_argument);

    CHECK(delpezzo_degree_after_blowups(9, 7) == 2);
    CHECK(delpezzo_degree_after_blowups(9, 0) == 9);
    CHECK_THROWS_AS(delpezzo_degree_after_blowups(9, 9), std::invalid_argument);
    CHECK_THROWS_AS(delpezzo_degree_after_blowups(10, 0), std::invalid_argument);

    CHECK(delpezzo_euler(9) == 3);
    CHECK(delpezzo_euler(2) == 10);
    CHECK(delpezzo_euler(1) == 11);
    CHECK_THROWS_AS(delpezzo_euler(0), std::invalid_argument);
}

TEST_CASE("the full scenario sweep reproduces the case analysis") {
    SweepRanges r;
    std::vector<ScenarioRow> rows = enumerate_scenarios(r);
    REQUIRE(rows.size() == 8 * 3 * 9);

    // Rows are ordered by (g, n, e_min) and the sweep is deterministic.
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        auto key = [](const ScenarioRow& x) { return std::tuple(x.s.g, x.s.n, x.s.e_min); };
        CHECK(key(rows[i]) < key(rows[i + 1]));
    }
    CHECK(format_scenario_table(rows) == format_scenario_table(enumerate_scenarios(r)));

    // Survivors: branch-free scenarios with 0 or 7 fibers, nothing else.
    int feasible = 0;
    for (const ScenarioRow& row : rows) {
        for (const std::string& a : row.axioms) CHECK_NOTHROW(axiom(a));
        if (row.feasible) {
            ++feasible;
            CHECK(row.reason.empty());
            CHECK(row.s.n == 0);
            CHECK((row.s.fibers == 0 || row.s.fibers == 7));
            CHECK(euler_feasible(row.s));
        } else {
            CHECK(!row.reason.empty());
        }
    }
    CHECK(feasible == 9);  // g + e_min = 13 (eight rows) plus the (3, 0, 3) case

    const ScenarioRow& plane = row_at(rows, 3, 0, 3);
    CHECK(plane.feasible);
    CHECK(plane.s.fibers == 7);
    CHECK(lists_axiom(plane, "fiber-orbit-sizes"));
    CHECK(lists_axiom(plane, "fiber-triple-excluded"));

    const ScenarioRow& sextic = row_at(rows, 10, 0, 3);
    CHECK(sextic.feasible);
    CHECK(sextic.s.fibers == 0);

    CHECK(row_at(rows, 3, 0, 4).reason.find("size-3 orbit") != std::string::npos);
    CHECK(row_at(rows, 3, 0, 6).reason.find("not a sum") != std::string::npos);

    // Every scenario with branch curves dies between the configuration lower
    // bound and the sharpened cap.
    for (const ScenarioRow& row : rows) {
        if (row.s.n == 0) continue;
        CHECK_FALSE(row.feasible);
        CHECK(lists_axiom(row, "branch-orbit-seven"));
        if (row.s.fibers >= 0) CHECK(lists_axiom(row, "fiber-config"));
    }
    CHECK(row_at(rows, 3, 7, 3).reason.find("sharpened cap") != std::string::npos);
    CHECK(row_at(rows, 4, 7, 3).reason.find("needs at least 14") != std::string::npos);
    CHECK(row_at(rows, 3, 14, 3).reason.find("sharpened cap") != std::string::npos);
    CHECK(row_at(rows, 3, 14, 11).reason.find("needs at least 21") != std::string::npos);
}

TEST_CASE("sweep edge cases") {
    SweepRanges empty;
    empty.g_lo = 5;
    empty.g_hi = 4;
    CHECK(enumerate_scenarios(empty).empty());
    empty.g_lo = 3;
    empty.g_hi = 10;
    empty.n_values.clear();
    CHECK(enumerate_scenarios(empty).empty());

    SweepRanges bad;
    bad.g_lo = 2;
    CHECK_THROWS_AS(enumerate_scenarios(bad), std::invalid_argument);
    bad = SweepRanges{};
    bad.e_hi = 12;
    CHECK_THROWS_AS(enumerate_scenarios(bad), std::invalid_argument);
    bad = SweepRanges{};
    bad.n_values = {-1};
    CHECK_THROWS_AS(enumerate_scenarios(bad), std::invalid_argument);

    // A branch count outside {0, 7, 14} is rejected by orbit admissibility.
    SweepRanges odd;
    odd.g_lo = odd.g_hi = 3;
    odd.e_lo = odd.e_hi = 3;
    odd.n_values = {3};
    std::vector<ScenarioRow> rows = enumerate_scenarios(odd);
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].feasible);
    CHECK(rows[0].reason.find("7-orbits") != std::string::npos);
    CHECK(lists_axiom(rows[0], "branch-orbit-seven"));

    std::string table = format_scenario_table(rows);
    CHECK(table.find("fibers") != std::string::npos);
    CHECK(table.find("infeasible") != std::string::npos);
}
