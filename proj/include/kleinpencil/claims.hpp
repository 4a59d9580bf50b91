// Registry of the verified statements: each claim binds a stable id to an
// executable exact check, its documentation anchors, and the geometric
// assumptions it consumes.  Reports are deterministic apart from timings.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kleinpencil/wire.hpp"

namespace kleinpencil {

struct ClaimOptions {
    std::uint64_t prime = 337;     // starting prime for mod-p certificates
    unsigned field_order = 84;     // field conductor; must be a multiple of 84
    std::size_t max_closure = 10000;  // element bound for group closures
};

enum class ClaimStatus { pass, fail, error };

std::string to_string(ClaimStatus s);

struct ClaimResult {
    std::string id;
    ClaimStatus status = ClaimStatus::error;
    Json evidence;  // structured payload; non-empty on pass
    std::vector<std::string> citations;
    std::vector<std::string> axioms_used;  // ids from axiom_table()
    long long elapsed_ms = 0;
};

// All registered ids, sorted.
const std::vector<std::string>& claim_ids();
// Tags of one claim ("invariants", "forms", "groups", "curves", "pencil",
// "mori"); throws std::invalid_argument for an unknown id.
const std::vector<std::string>& claim_tags(const std::string& id);

// Executes one claim.  Exceptions inside the check are captured as status
// `error` with the message in the evidence; an unknown id throws.
ClaimResult run_claim(const std::string& id, const ClaimOptions& opts = {});

// All claims in id order, optionally restricted to one tag.  A failing claim
// never aborts the run.
std::vector<ClaimResult> run_all(const std::string& tag = "", const ClaimOptions& opts = {});

// { "version": 1, "results": [ {id, status, evidence, citations,
//   axioms_used, elapsed_ms} ] }
Json report_json(const std::vector<ClaimResult>& results);
std::string report_text(const std::vector<ClaimResult>& results);

}  // namespace kleinpencil
