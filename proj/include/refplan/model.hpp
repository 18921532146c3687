#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "refplan/errors.hpp"

namespace refplan {

// What a phenomenon becomes in an Event-B model. The four kinds partition
// the phenomenon set.
enum class PhenomenonKind { CarrierSet, Constant, Variable, Event };

// Canonical token, as used in spec documents and reports.
std::string to_string(PhenomenonKind kind);
std::optional<PhenomenonKind> phenomenon_kind_from_token(const std::string& token);

struct Phenomenon {
    std::string id;
    std::string name;
    PhenomenonKind kind = PhenomenonKind::CarrierSet;

    bool operator==(const Phenomenon&) const = default;
};

// A state transition together with the events that cause it.
struct Transition {
    std::string id;
    std::string name;
    std::set<std::string> caused_by;  // event phenomenon ids

    bool operator==(const Transition&) const = default;
};

// A natural-language statement about the system plus the phenomena that
// directly appear in it.
struct Artifact {
    std::string id;
    std::string text;
    std::set<std::string> appears;  // phenomenon ids

    bool operator==(const Artifact&) const = default;
};

// Raw problem description as read from a spec document. typed and
// changed_by are partial maps: an absent key means the empty set, so
// carrier sets and events never need entries.
struct ProblemSpec {
    std::vector<Phenomenon> phenomena;
    std::vector<Transition> transitions;
    std::map<std::string, std::set<std::string>> typed;       // constant/variable -> carrier sets
    std::map<std::string, std::set<std::string>> changed_by;  // variable -> transitions
    std::vector<Artifact> artifacts;

    bool operator==(const ProblemSpec&) const = default;
};

class ValidatedSpec;

// Checks every structural invariant of the spec and returns it wrapped
// with by-index lookup tables. Throws ValidationError naming the
// offending id and relation. The validated spec is structurally
// identical to the input.
ValidatedSpec validate_spec(ProblemSpec spec);

// A problem spec whose invariants have been checked. Immutable after
// construction, so instances can be shared read-only across threads.
// Indices follow declaration order, which is the canonical order for
// all reporting.
class ValidatedSpec {
public:
    const ProblemSpec& spec() const { return spec_; }

    int phenomenon_count() const { return static_cast<int>(spec_.phenomena.size()); }
    int transition_count() const { return static_cast<int>(spec_.transitions.size()); }
    int artifact_count() const { return static_cast<int>(spec_.artifacts.size()); }

    const Phenomenon& phenomenon(int index) const { return spec_.phenomena.at(index); }
    const Transition& transition(int index) const { return spec_.transitions.at(index); }
    const Artifact& artifact(int index) const { return spec_.artifacts.at(index); }

    // Throw UnknownIdError when the id is not declared.
    int phenomenon_index(const std::string& id) const;
    int artifact_index(const std::string& id) const;

    // Dependency relations resolved to indices, each list ascending.
    const std::vector<int>& typed_of(int phenomenon_index) const;
    const std::vector<int>& changed_by_of(int phenomenon_index) const;
    const std::vector<int>& caused_by_of(int transition_index) const;
    const std::vector<int>& appears_of(int artifact_index) const;

private:
    friend ValidatedSpec validate_spec(ProblemSpec spec);

    explicit ValidatedSpec(ProblemSpec spec);

    ProblemSpec spec_;
    std::map<std::string, int> phenomenon_index_;
    std::map<std::string, int> artifact_index_;
    std::vector<std::vector<int>> typed_of_;       // phenomenon -> carrier-set indices
    std::vector<std::vector<int>> changed_by_of_;  // phenomenon -> transition indices
    std::vector<std::vector<int>> caused_by_of_;   // transition -> event indices
    std::vector<std::vector<int>> appears_of_;     // artifact -> phenomenon indices
};

}  // namespace refplan
