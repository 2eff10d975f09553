#pragma once

#include <stdexcept>
#include <string>

namespace credence {

// Exit codes reported by the CLI. Library code throws the matching
// exception type; the CLI maps it back to the code.
enum class ExitCode : int {
    ok = 0,
    failure = 1,       // unexpected internal error
    usage = 2,         // unknown flag / subcommand / bad flag value
    missing_file = 3,  // input file absent or unreadable
    parse = 4,         // malformed input file
    validation = 5,    // corpus or config invariant violated
    bound = 6,         // enumeration bound exceeded
    numeric = 7,       // optimizer failed to converge
};

const char* exit_code_name(ExitCode code);

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ExitCode code() const { return code_; }

private:
    ExitCode code_;
};

struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error(ExitCode::usage, m) {}
};
struct MissingFileError : Error {
    explicit MissingFileError(const std::string& m) : Error(ExitCode::missing_file, m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ExitCode::parse, m) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& m) : Error(ExitCode::validation, m) {}
};
struct BoundError : Error {
    explicit BoundError(const std::string& m) : Error(ExitCode::bound, m) {}
};
struct NumericError : Error {
    explicit NumericError(const std::string& m) : Error(ExitCode::numeric, m) {}
};

}  // namespace credence
