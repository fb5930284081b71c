#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cmds {

/* Library-wide error type. `kind` is a stable machine-readable tag
 * (e.g. "NotPrimePower", "DivisionByZero"); the CLI prints it verbatim. */
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

} // namespace cmds
