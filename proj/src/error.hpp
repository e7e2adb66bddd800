#pragma once

#include <stdexcept>
#include <string>

namespace scenbdd {

// Every failure the engine can report, in one enum so the C API and the
// CLI exit codes can map it without string matching.
enum class ErrorKind {
    Validation,  // bad input: syntax, violated invariant, malformed argument
    SizeCap,     // a configured size guard tripped (node cap, scenario limit)
    Internal,    // an engine invariant failed; indicates a bug
    Io,          // file could not be read or written
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    static Error validation(std::string msg) { return {ErrorKind::Validation, std::move(msg)}; }
    static Error size_cap(std::string msg) { return {ErrorKind::SizeCap, std::move(msg)}; }
    static Error internal(std::string msg) { return {ErrorKind::Internal, std::move(msg)}; }
    static Error io(std::string msg) { return {ErrorKind::Io, std::move(msg)}; }

  private:
    ErrorKind kind_;
};

}  // namespace scenbdd
