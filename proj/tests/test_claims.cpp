#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kleinpencil/axioms.hpp"
#include "kleinpencil/claims.hpp"
#include "kleinpencil/forms.hpp"
#include "kleinpencil/wire.hpp"

using namespace kleinpencil;

namespace {

std::string src_path(const std::string& rel) {
    return std::string(KLEINPENCIL_SOURCE_DIR) + "/" + rel;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const std::vector<std::string>& all_ids() {
    static const std::vector<std::string> ids = {
        "csing-nodes",  "delpezzo-degree", "eig6-lines",  "gamma-orbits",
        "general-position", "hessian-klein", "inv4-Hprime", "inv6-H",
        "inv6-Hprime",  "klein-smooth",    "l27-closure", "l27-unique",
        "mori-audit",   "pencil-singular", "stab-F",      "tau-fixed"};
    return ids;
}

}  // namespace

TEST_CASE("claim registry shape") {
    const std::vector<std::string>& ids = claim_ids();
    REQUIRE(ids.size() == 16);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(ids == all_ids());

    CHECK(claim_tags("mori-audit") == std::vector<std::string>{"mori"});
    CHECK(claim_tags("l27-unique") == std::vector<std::string>{"pencil", "groups"});
    CHECK(claim_tags("hessian-klein") == std::vector<std::string>{"forms"});
    CHECK_THROWS_AS(run_claim("nonexistent"), std::invalid_argument);
    CHECK_THROWS_AS(claim_tags("nonexistent"), std::invalid_argument);
}

TEST_CASE("axiom data file mirrors the compiled table") {
    std::ifstream in(src_path("data/axioms.json"));
    REQUIRE(in);
    Json j = Json::parse(in);
    CHECK(j["version"] == 1);
    const std::vector<Axiom>& table = axiom_table();
    REQUIRE(j["axioms"].size() == table.size());
    for (size_t i = 0; i < table.size(); ++i) {
        CHECK(j["axioms"][i]["id"] == table[i].id);
        CHECK(j["axioms"][i]["statement"] == table[i].statement);
        CHECK(j["axioms"][i]["source"] == table[i].source);
    }
}

TEST_CASE("shipped curve files match the library constants and round-trip") {
    auto ctx = FieldCtx::create(84);
    struct Row {
        const char* rel;
        TernaryForm form;
    };
    const std::vector<Row> rows = {
        {"data/curves/klein_quartic.json", klein_quartic(ctx)},
        {"data/curves/hessian_sextic.json", hessian_sextic(ctx)},
        {"data/curves/node_sextic.json", node_sextic(ctx)},
        {"data/curves/pencil_p1.json", pencil_p1(ctx)},
        {"data/curves/pencil_p2.json", pencil_p2(ctx)},
    };
    const std::string tmp = "roundtrip_curve.json";
    for (const Row& row : rows) {
        TernaryForm f = load_curve(src_path(row.rel), ctx);
        CHECK(f == row.form);
        save_curve(tmp, f, "roundtrip");
        TernaryForm g = load_curve(tmp, ctx);
        CHECK(g == f);
    }
    std::remove(tmp.c_str());
}

TEST_CASE("coefficient wire canonicalization") {
    auto ctx = FieldCtx::create(84);
    CycNum one = CycNum::one(ctx);
    CHECK(cyc_from_wire(ctx, Json::parse("[]")).is_zero());
    CHECK(cyc_from_wire(ctx, Json::parse(R"([[84, "1"]])")) == one);
    CHECK(cyc_from_wire(ctx, Json::parse(R"([[-1, "1"]])")) ==
          CycNum::root_of_unity(ctx, 84, 83));
    CHECK(cyc_from_wire(ctx, Json::parse(R"([[0, "1/2"], [0, "1/2"]])")) == one);
    CHECK(cyc_from_wire(ctx, Json::parse(R"([[0, "2/4"], [84, "1/2"]])")) == one);

    // Serialize an arbitrary element and read it back.
    CycNum x = CycNum::root_of_unity(ctx, 84, 5) * Rational(3, 7) -
               CycNum::root_of_unity(ctx, 84, 10);
    CHECK(cyc_from_wire(ctx, cyc_to_wire(x)) == x);
    // High powers reduce through the minimal polynomial, so the wire form of
    // zeta^30 (phi(84) = 24 coefficients) still round-trips.
    CycNum y = CycNum::root_of_unity(ctx, 84, 30);
    CHECK(cyc_from_wire(ctx, cyc_to_wire(y)) == y);
}

TEST_CASE("malformed curve files name the offending term") {
    auto ctx = FieldCtx::create(84);
    Json good = Json::parse(slurp(src_path("data/curves/klein_quartic.json")));
    CHECK(curve_from_json(ctx, good) == klein_quartic(ctx));

    Json bad = good;
    bad["terms"][1]["exps"] = Json::array({1, 2});
    CHECK_THROWS_AS(curve_from_json(ctx, bad), curve_parse_error);
    try {
        curve_from_json(ctx, bad);
    } catch (const curve_parse_error& err) {
        CHECK(contains(err.what(), "term 1"));
    }

    bad = good;
    bad["terms"][2]["exps"] = Json::array({1, 1, 1});
    try {
        curve_from_json(ctx, bad);
        CHECK(false);
    } catch (const curve_parse_error& err) {
        CHECK(contains(err.what(), "term 2"));
        CHECK(contains(err.what(), "expected degree 4"));
    }

    bad = good;
    bad["terms"][0]["coeff"] = Json::parse(R"([[0, "1/0"]])");
    try {
        curve_from_json(ctx, bad);
        CHECK(false);
    } catch (const curve_parse_error& err) {
        CHECK(contains(err.what(), "term 0"));
    }

    bad = good;
    bad.erase("degree");
    CHECK_THROWS_AS(curve_from_json(ctx, bad), curve_parse_error);
    CHECK_THROWS_AS(load_curve(src_path("data/curves/missing.json"), ctx), curve_parse_error);

    // Cancelling terms: legal file, zero form, declared degree kept.
    Json zero = Json::parse(R"({"degree": 4, "terms": [
        {"exps": [4, 0, 0], "coeff": [[0, "1"]]},
        {"exps": [4, 0, 0], "coeff": [[0, "-1"]]}]})");
    TernaryForm z = curve_from_json(ctx, zero);
    CHECK(z.is_zero());
    CHECK(z.degree() == 4);
}

TEST_CASE("single claim spot checks") {
    ClaimResult inv = run_claim("inv6-H");
    CHECK(inv.status == ClaimStatus::pass);
    CHECK(inv.evidence["dimension"] == 2);
    CHECK(!inv.citations.empty());
    CHECK(inv.axioms_used.empty());

    ClaimResult hess = run_claim("hessian-klein");
    CHECK(hess.status == ClaimStatus::pass);
    CHECK(hess.evidence["constant"] == "-54");

    ClaimResult dp = run_claim("delpezzo-degree");
    CHECK(dp.status == ClaimStatus::pass);
    CHECK(dp.evidence["degree"] == 2);
    CHECK(dp.axioms_used.empty());

    ClaimResult uniq = run_claim("l27-unique");
    CHECK(uniq.status == ClaimStatus::pass);
    CHECK(uniq.axioms_used == std::vector<std::string>{"orbit-min-21"});
    CHECK(uniq.evidence["invariant_members"].size() == 1);

    ClaimResult audit = run_claim("mori-audit");
    CHECK(audit.status == ClaimStatus::pass);
    CHECK(audit.evidence["rows"] == 216);
    CHECK(audit.evidence["survivors"].size() == 9);
    // The audit consumes the full geometric assumption set.
    for (const char* id : {"b0-square-eight", "branch-orbit-seven", "fiber-config",
                           "fiber-orbit-sizes", "fiber-triple-excluded", "hmin-delpezzo",
                           "mori-fiber-bound"})
        CHECK(std::count(audit.axioms_used.begin(), audit.axioms_used.end(), id) == 1);
}

TEST_CASE("full run: order, schema, citations, determinism") {
    std::vector<ClaimResult> results = run_all();
    REQUIRE(results.size() == 16);
    std::string doc = slurp(src_path("doc/claims.md"));

    for (size_t i = 0; i < results.size(); ++i) {
        const ClaimResult& r = results[i];
        CHECK(r.id == all_ids()[i]);
        CHECK(r.status == ClaimStatus::pass);
        CHECK(!r.evidence.empty());
        REQUIRE(!r.citations.empty());
        for (const std::string& c : r.citations) {
            const std::string prefix = "doc/claims.md#";
            if (c.rfind(prefix, 0) == 0)
                CHECK(contains(doc, "## " + c.substr(prefix.size())));
        }
        for (const std::string& a : r.axioms_used) CHECK_NOTHROW(axiom(a));
    }

    Json rep = report_json(results);
    CHECK(rep["version"] == 1);
    REQUIRE(rep["results"].size() == 16);
    for (const Json& one : rep["results"]) {
        CHECK(one.contains("id"));
        CHECK(one.contains("status"));
        CHECK(one.contains("evidence"));
        CHECK(one.contains("citations"));
        CHECK(one.contains("axioms_used"));
        CHECK(one.contains("elapsed_ms"));
    }

    // Byte-identical apart from timings.
    Json rep2 = report_json(run_all());
    for (Json& one : rep["results"]) one.erase("elapsed_ms");
    for (Json& one : rep2["results"]) one.erase("elapsed_ms");
    CHECK(rep.dump() == rep2.dump());

    std::string txt = report_text(results);
    for (const std::string& id : all_ids()) CHECK(contains(txt, id));
    CHECK(contains(txt, "pass"));
}

TEST_CASE("tag filters") {
    std::vector<ClaimResult> mori = run_all("mori");
    REQUIRE(mori.size() == 2);
    CHECK(mori[0].id == "delpezzo-degree");
    CHECK(mori[1].id == "mori-audit");

    std::vector<ClaimResult> pencil = run_all("pencil");
    REQUIRE(pencil.size() == 3);
    CHECK(pencil[0].id == "csing-nodes");
    CHECK(pencil[1].id == "l27-unique");
    CHECK(pencil[2].id == "pencil-singular");

    CHECK(run_all("no-such-tag").empty());
}

TEST_CASE("claim options propagate and fail soft") {
    ClaimOptions bad_field;
    bad_field.field_order = 85;
    ClaimResult r = run_claim("tau-fixed", bad_field);
    CHECK(r.status == ClaimStatus::error);
    CHECK(contains(r.evidence["message"].get<std::string>(), "multiple of 84"));

    ClaimOptions tiny;
    tiny.max_closure = 50;
    CHECK(run_claim("l27-closure", tiny).status == ClaimStatus::error);

    // A bad starting prime climbs the ladder instead of failing.
    ClaimOptions p7;
    p7.prime = 7;
    ClaimResult k = run_claim("klein-smooth", p7);
    CHECK(k.status == ClaimStatus::pass);
    CHECK(k.evidence["prime"] == 337);

    // A larger conductor containing the 84th roots works identically.
    ClaimOptions big;
    big.field_order = 168;
    CHECK(run_claim("tau-fixed", big).status == ClaimStatus::pass);
}
