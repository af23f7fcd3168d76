#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace gsig {

/// Machine-readable report emitted by every subcommand under --json.
/// The canonical sections (everything but elapsed_ms) are deterministic:
/// identical inputs produce byte-identical values.
struct Report {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    double elapsed_ms = 0.0;
};

nlohmann::ordered_json report_to_json(const Report& report);

// Throws std::runtime_error when the document does not match the schema.
Report report_from_json(const nlohmann::ordered_json& doc);

// Dispatches to the subcommands. Exit codes: 0 success, 1 usage or input
// error, 2 when a verification finds a violation or a classification is
// NoAction (so shell pipelines can branch on the outcome).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gsig
