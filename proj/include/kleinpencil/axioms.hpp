// Geometric assumptions consumed by the audit layers, as a documented table.
// Every id referenced from a scenario row or a claim result must appear here,
// so reports can cite assumptions verbatim.
#pragma once

#include <string>
#include <vector>

namespace kleinpencil {

struct Axiom {
    std::string id;         // stable key, kebab-case
    std::string statement;  // what is assumed, in one sentence
    std::string source;     // where the assumption is established
};

// The full table, sorted by id.  Ids are stable public API.
const std::vector<Axiom>& axiom_table();

// Lookup by id; throws std::invalid_argument for an unknown id.
const Axiom& axiom(const std::string& id);

}  // namespace kleinpencil
