#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicross/config.hpp"
#include "bicross/error.hpp"

namespace bicross {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kDefaultMaxSimples = 300;

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInvalid = 2, kExitInternal = 3 };

int exit_code_for(ErrorKind k);
std::string to_string(ErrorKind k);

struct CommandRequest {
    std::string command;
    std::vector<std::string> args;  // simple ids for character / fuse / dual
    std::optional<int> radius;      // defaults to the config's radius
    int max_simples = kDefaultMaxSimples; // guard for fusion-table
};

struct Report {
    std::string command;
    std::string config_name;
    std::string config_hash;
    std::string status; // pass | fail | error
    int exit_code = kExitOk;
    Json payload;

    Json to_json() const;
    std::string to_text() const;
};

const std::vector<std::string>& command_names();

// Runs one command. Library errors are caught and turned into error reports.
Report run_command(const Config& cfg, const CommandRequest& req);
Report error_report(const std::string& command, const Config* cfg, const Error& e);

} // namespace bicross
