#include "refplan/errors.hpp"

namespace refplan {

std::string to_string(ValidationErrorKind kind) {
    switch (kind) {
        case ValidationErrorKind::DanglingReference: return "dangling reference";
        case ValidationErrorKind::KindViolation: return "kind violation";
        case ValidationErrorKind::DuplicateId: return "duplicate id";
        case ValidationErrorKind::EmptyCausedBy: return "empty caused_by";
        case ValidationErrorKind::EmptyName: return "empty name";
    }
    return "unknown";
}

ValidationError::ValidationError(ValidationErrorKind kind, std::string id, std::string relation)
    : Error(to_string(kind) + ": \"" + id + "\" in " + relation),
      kind_(kind),
      id_(std::move(id)),
      relation_(std::move(relation)) {}

UnknownIdError::UnknownIdError(Kind kind, std::string id)
    : Error(std::string("unknown ") + (kind == Kind::Phenomenon ? "phenomenon" : "artifact") +
            " id \"" + id + "\""),
      kind_(kind),
      id_(std::move(id)) {}

InvalidOrderError::InvalidOrderError(const std::string& id)
    : Error("artifact \"" + id + "\" appears more than once in the introduction order") {}

IndexOutOfRangeError::IndexOutOfRangeError(int index, int size)
    : Error("step index " + std::to_string(index) + " out of range 1.." + std::to_string(size)) {}

NoArtifactsError::NoArtifactsError() : Error("the spec declares no artifacts to plan") {}

EnumerationGuardError::EnumerationGuardError(int artifact_count, int limit)
    : Error("too many artifacts to enumerate: " + std::to_string(artifact_count) +
            " exceeds the guard of " + std::to_string(limit) +
            " (raise it with --max-enumerate)"),
      artifact_count_(artifact_count),
      limit_(limit) {}

ParseError::ParseError(ParseErrorKind kind, const std::string& message)
    : Error((kind == ParseErrorKind::Syntax ? "syntax error: " : "schema error: ") + message),
      kind_(kind) {}

}  // namespace refplan
