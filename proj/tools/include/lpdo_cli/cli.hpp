#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lpdo::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,       // computed, or the checked property holds
    kCheckFailed = 1,   // checked and does not hold
    kUsageError = 2,    // bad flags or unparsable expression
    kPrecondition = 3,  // input outside an operation's domain
};

struct Report {
    /// Single structured document; key order is fixed.
    nlohmann::ordered_json document;
    int exit_code = kSuccess;

    std::string json() const { return document.dump(2); }
    /// Human-readable rendering of the same content.
    std::string text() const;

    /// Help output replaces the document when set.
    std::optional<std::string> help;
};

/// Runs one invocation. `args` excludes the program name. `read_stdin` is
/// called for the operator when no positional operand is given.
Report run(const std::vector<std::string> &args, const std::function<std::string()> &read_stdin = {});

/// True when the invocation asked for machine output.
bool wants_json(const std::vector<std::string> &args);

} // namespace lpdo::cli
