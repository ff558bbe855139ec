#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace ramsey {

struct CommandResult {
    enum class Status { ok, error, indeterminate };
    Status status = Status::ok;
    nlohmann::json payload;

    int exit_code() const {
        switch (status) {
            case Status::ok: return 0;
            case Status::error: return 1;
            case Status::indeterminate: return 2;
        }
        return 1;
    }
};

// Routes a full argument vector (without argv[0]) to the module operations
// and returns the machine-readable payload. Subcommands: density, check,
// blocks, colour, colour-triangle, triangles, decide, experiment, janson.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace ramsey
