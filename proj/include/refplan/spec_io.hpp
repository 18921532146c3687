#pragma once

#include <string>

#include "refplan/model.hpp"

namespace refplan {

// Parse a spec document (JSON text, see README for the schema). Throws
// ParseError: Syntax with line/column for malformed text, Schema naming
// the offending field or token otherwise.
ProblemSpec parse_spec(const std::string& document);

// Read and parse a spec file. An unreadable file is a ParseError.
ProblemSpec parse_spec_file(const std::string& path);

// Canonical serialization: parse_spec(emit_spec(s)) == s for every
// parseable spec, byte-stable for a given spec.
std::string emit_spec(const ProblemSpec& spec);

}  // namespace refplan
