#pragma once

#include <stdexcept>
#include <string>

namespace refplan {

// Base class for every error raised by the planner library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

enum class ValidationErrorKind {
    DanglingReference,
    KindViolation,
    DuplicateId,
    EmptyCausedBy,
    EmptyName,
};

std::string to_string(ValidationErrorKind kind);

// A structural invariant of a problem spec does not hold. Carries the
// offending id and the relation (or declaration list) it was found in.
class ValidationError : public Error {
public:
    ValidationError(ValidationErrorKind kind, std::string id, std::string relation);

    ValidationErrorKind kind() const { return kind_; }
    const std::string& id() const { return id_; }
    const std::string& relation() const { return relation_; }

private:
    ValidationErrorKind kind_;
    std::string id_;
    std::string relation_;
};

// Lookup of an id that is not declared in the spec.
class UnknownIdError : public Error {
public:
    enum class Kind { Phenomenon, Artifact };

    UnknownIdError(Kind kind, std::string id);

    Kind kind() const { return kind_; }
    const std::string& id() const { return id_; }

private:
    Kind kind_;
    std::string id_;
};

// An introduction order repeats an artifact.
class InvalidOrderError : public Error {
public:
    explicit InvalidOrderError(const std::string& id);
};

// A step index outside 1..length(order).
class IndexOutOfRangeError : public Error {
public:
    IndexOutOfRangeError(int index, int size);
};

// Planning requested on a spec with no artifacts.
class NoArtifactsError : public Error {
public:
    NoArtifactsError();
};

// Exhaustive enumeration refused: too many artifacts for the guard.
class EnumerationGuardError : public Error {
public:
    EnumerationGuardError(int artifact_count, int limit);

    int artifact_count() const { return artifact_count_; }
    int limit() const { return limit_; }

private:
    int artifact_count_;
    int limit_;
};

enum class ParseErrorKind {
    Syntax,  // document is not well-formed
    Schema,  // well-formed but does not match the spec file schema
};

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, const std::string& message);

    ParseErrorKind kind() const { return kind_; }

private:
    ParseErrorKind kind_;
};

}  // namespace refplan
