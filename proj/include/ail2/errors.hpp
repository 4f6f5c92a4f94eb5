#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ail2 {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Failure while reading a canonical JSON document. `path()` is the dotted
// field path of the offending node; empty for whole-document problems.
class ParseError : public Error {
public:
    ParseError(std::string path, const std::string& message)
        : Error(message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

// Input bytes are not well-formed JSON.
class SyntaxError : public ParseError {
public:
    explicit SyntaxError(const std::string& detail)
        : ParseError("", "syntax error: " + detail) {}
};

// Well-formed document that violates the schema or a type invariant.
class SchemaError : public ParseError {
public:
    SchemaError(const std::string& path, const std::string& detail)
        : ParseError(path, "schema error at " +
                               (path.empty() ? std::string("<document>") : path) +
                               ": " + detail) {}
};

// Precondition violation in an evaluation or statistics routine.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& message) : Error(message) {}
};

}  // namespace ail2
