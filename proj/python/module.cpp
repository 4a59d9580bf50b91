// pybind11 surface: every structured result crosses as a JSON string and the
// package wrapper decodes it, so python sees exactly what the CLI writes.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "kleinpencil/axioms.hpp"
#include "kleinpencil/claims.hpp"
#include "kleinpencil/mori.hpp"
#include "kleinpencil/wire.hpp"

namespace py = pybind11;
using namespace kleinpencil;

namespace {

ClaimOptions make_opts(std::uint64_t prime, unsigned field_order, std::size_t max_closure) {
    ClaimOptions o;
    o.prime = prime;
    o.field_order = field_order;
    o.max_closure = max_closure;
    return o;
}

Json parse_wire(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("coefficient wire is not valid JSON");
    return j;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic checks for the Klein-quartic sextic pencil";

    m.def("claim_ids", [] { return claim_ids(); },
          "All registered claim ids, sorted.");
    m.def("claim_tags", [](const std::string& id) { return claim_tags(id); },
          py::arg("id"), "Tags of one claim; raises ValueError for an unknown id.");

    m.def(
        "run_claim_json",
        [](const std::string& id, std::uint64_t prime, unsigned field_order,
           std::size_t max_closure) {
            ClaimResult r = run_claim(id, make_opts(prime, field_order, max_closure));
            return report_json({r}).dump();
        },
        py::arg("id"), py::arg("prime") = 337, py::arg("field_order") = 84,
        py::arg("max_closure") = 10000,
        "Report JSON for one claim (a one-element results array).");
    m.def(
        "run_all_json",
        [](const std::string& tag, std::uint64_t prime, unsigned field_order,
           std::size_t max_closure) {
            return report_json(run_all(tag, make_opts(prime, field_order, max_closure))).dump();
        },
        py::arg("tag") = "", py::arg("prime") = 337, py::arg("field_order") = 84,
        py::arg("max_closure") = 10000,
        "Report JSON for every claim, optionally restricted to one tag.");
    m.def(
        "report_text",
        [](const std::string& tag, std::uint64_t prime, unsigned field_order,
           std::size_t max_closure) {
            return report_text(run_all(tag, make_opts(prime, field_order, max_closure)));
        },
        py::arg("tag") = "", py::arg("prime") = 337, py::arg("field_order") = 84,
        py::arg("max_closure") = 10000, "Aligned text table, one claim per line.");

    m.def(
        "curve_json",
        [](const std::string& path, unsigned field_order) {
            auto ctx = FieldCtx::create(field_order);
            TernaryForm f = load_curve(path, ctx);
            return curve_to_json(f).dump();
        },
        py::arg("path"), py::arg("field_order") = 84,
        "Load a curve file and return its canonicalized JSON document.");
    m.def(
        "curve_check",
        [](const std::string& path, unsigned field_order) {
            auto ctx = FieldCtx::create(field_order);
            TernaryForm f = load_curve(path, ctx);
            return curve_from_json(ctx, curve_to_json(f)) == f;
        },
        py::arg("path"), py::arg("field_order") = 84,
        "True when the file parses and survives an exact round-trip.");

    m.def(
        "mori_sweep_json",
        [](long g_lo, long g_hi, const std::vector<long>& n_values, long e_lo, long e_hi) {
            SweepRanges r;
            r.g_lo = g_lo;
            r.g_hi = g_hi;
            r.n_values = n_values;
            r.e_lo = e_lo;
            r.e_hi = e_hi;
            return sweep_to_json(enumerate_scenarios(r)).dump();
        },
        py::arg("g_lo") = 3, py::arg("g_hi") = 10,
        py::arg("n_values") = std::vector<long>{0, 7, 14}, py::arg("e_lo") = 3,
        py::arg("e_hi") = 11, "Reduction scenario sweep as the CLI's JSON document.");

    m.def(
        "axioms_json",
        [] {
            Json out;
            out["version"] = 1;
            Json arr = Json::array();
            for (const Axiom& a : axiom_table()) {
                Json one;
                one["id"] = a.id;
                one["statement"] = a.statement;
                one["source"] = a.source;
                arr.push_back(one);
            }
            out["axioms"] = arr;
            return out.dump();
        },
        "The compiled assumption table as JSON.");

    m.def(
        "cyc_arith_json",
        [](const std::string& op, const std::string& a_wire, const std::string& b_wire,
           unsigned field_order) {
            auto ctx = FieldCtx::create(field_order);
            CycNum a = cyc_from_wire(ctx, parse_wire(a_wire));
            CycNum b = cyc_from_wire(ctx, parse_wire(b_wire));
            CycNum r = CycNum::zero(ctx);
            if (op == "add")
                r = a + b;
            else if (op == "sub")
                r = a - b;
            else if (op == "mul")
                r = a * b;
            else if (op == "div")
                r = a * b.inverse();
            else
                throw std::invalid_argument("op must be add, sub, mul, or div");
            return cyc_to_wire(r).dump();
        },
        py::arg("op"), py::arg("a"), py::arg("b"), py::arg("field_order") = 84,
        "Exact field arithmetic on coefficient wire lists.");
}
