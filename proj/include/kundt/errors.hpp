#pragma once

#include <stdexcept>
#include <string>

namespace kundt {

/// Structural misuse of an operation: mismatched variable lists, singular
/// frames, preconditions not met. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed serialized input. Carries a JSON-pointer-ish path to the
/// offending element. Maps to CLI exit code 2.
class SchemaError : public InputError {
public:
    SchemaError(std::string path, const std::string& what)
        : InputError(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace kundt
