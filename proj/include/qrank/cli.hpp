#pragma once

// Batch front end: one task (or an array of tasks) in, one JSON report out.

#include <string>
#include <vector>

#include "qrank/config.hpp"
#include "qrank/json_io.hpp"

namespace qrank::cli {

using json_io::Json;

inline constexpr const char* kEngineName = "qrank";
inline constexpr const char* kEngineVersion = "0.1.0";

enum class Status { Ok, ValidationFailed, BudgetExceeded, ParseError, InternalError };

const char* to_string(Status s);
int exit_code(Status s);

struct Outcome {
  Json report;
  int exit_code = 0;
};

const std::vector<std::string>& commands();

/// `input` is a payload, a {"command", "payload"} task, or an array of either.
/// Array elements run independently; the reports keep input order and the
/// exit code is the largest among them.
Outcome run(const std::string& command, const Json& input, const EngineConfig& config);

/// As run, but starting from raw text; malformed JSON yields a parse_error report.
Outcome run_text(const std::string& command, const std::string& text, const EngineConfig& config);

/// Report for a failure before any task could run (bad arguments, bad env).
Outcome failure(const std::string& command, Status status, const std::string& message);

/// Plain-text rendering of a report.
std::string render_text(const Json& report);

}  // namespace qrank::cli
