#include "refplan/model.hpp"

#include <algorithm>
#include <utility>

namespace refplan {

std::string to_string(PhenomenonKind kind) {
    switch (kind) {
        case PhenomenonKind::CarrierSet: return "carrier_set";
        case PhenomenonKind::Constant: return "constant";
        case PhenomenonKind::Variable: return "variable";
        case PhenomenonKind::Event: return "event";
    }
    return "unknown";
}

std::optional<PhenomenonKind> phenomenon_kind_from_token(const std::string& token) {
    if (token == "carrier_set") return PhenomenonKind::CarrierSet;
    if (token == "constant") return PhenomenonKind::Constant;
    if (token == "variable") return PhenomenonKind::Variable;
    if (token == "event") return PhenomenonKind::Event;
    return std::nullopt;
}

namespace {

enum class Category { Phenomenon, Transition, Artifact };

}  // namespace

ValidatedSpec validate_spec(ProblemSpec spec) {
    // Ids share one namespace: a transition or artifact may not reuse a
    // phenomenon id, and vice versa.
    std::map<std::string, Category> declared;
    std::map<std::string, PhenomenonKind> kind_of;

    const auto declare = [&](const std::string& id, Category category, const char* relation) {
        if (!declared.emplace(id, category).second) {
            throw ValidationError(ValidationErrorKind::DuplicateId, id, relation);
        }
    };

    for (const Phenomenon& p : spec.phenomena) {
        declare(p.id, Category::Phenomenon, "phenomena");
        if (p.name.empty()) {
            throw ValidationError(ValidationErrorKind::EmptyName, p.id, "phenomena");
        }
        kind_of.emplace(p.id, p.kind);
    }
    for (const Transition& t : spec.transitions) {
        declare(t.id, Category::Transition, "transitions");
    }
    for (const Artifact& a : spec.artifacts) {
        declare(a.id, Category::Artifact, "artifacts");
    }

    const auto phenomenon_kind = [&](const std::string& id, const char* relation) {
        const auto it = declared.find(id);
        if (it == declared.end() || it->second != Category::Phenomenon) {
            throw ValidationError(ValidationErrorKind::DanglingReference, id, relation);
        }
        return kind_of.at(id);
    };

    for (const Transition& t : spec.transitions) {
        if (t.caused_by.empty()) {
            throw ValidationError(ValidationErrorKind::EmptyCausedBy, t.id, "caused_by");
        }
        for (const std::string& event_id : t.caused_by) {
            if (phenomenon_kind(event_id, "caused_by") != PhenomenonKind::Event) {
                throw ValidationError(ValidationErrorKind::KindViolation, event_id, "caused_by");
            }
        }
    }

    for (const auto& [id, carrier_sets] : spec.typed) {
        const PhenomenonKind kind = phenomenon_kind(id, "typed");
        if (kind != PhenomenonKind::Constant && kind != PhenomenonKind::Variable) {
            throw ValidationError(ValidationErrorKind::KindViolation, id, "typed");
        }
        for (const std::string& set_id : carrier_sets) {
            if (phenomenon_kind(set_id, "typed") != PhenomenonKind::CarrierSet) {
                throw ValidationError(ValidationErrorKind::KindViolation, set_id, "typed");
            }
        }
    }

    for (const auto& [id, transitions] : spec.changed_by) {
        if (phenomenon_kind(id, "changed_by") != PhenomenonKind::Variable) {
            throw ValidationError(ValidationErrorKind::KindViolation, id, "changed_by");
        }
        for (const std::string& transition_id : transitions) {
            const auto it = declared.find(transition_id);
            if (it == declared.end() || it->second != Category::Transition) {
                throw ValidationError(ValidationErrorKind::DanglingReference, transition_id,
                                      "changed_by");
            }
        }
    }

    for (const Artifact& a : spec.artifacts) {
        // Any phenomenon kind may appear in an artifact; transitions may not.
        for (const std::string& phenomenon_id : a.appears) {
            (void)phenomenon_kind(phenomenon_id, "appears");
        }
    }

    return ValidatedSpec(std::move(spec));
}

ValidatedSpec::ValidatedSpec(ProblemSpec spec) : spec_(std::move(spec)) {
    std::map<std::string, int> transition_index;
    for (int i = 0; i < phenomenon_count(); ++i) {
        phenomenon_index_.emplace(spec_.phenomena[i].id, i);
    }
    for (int i = 0; i < transition_count(); ++i) {
        transition_index.emplace(spec_.transitions[i].id, i);
    }
    for (int i = 0; i < artifact_count(); ++i) {
        artifact_index_.emplace(spec_.artifacts[i].id, i);
    }

    const auto resolve = [](const std::map<std::string, int>& index,
                            const std::set<std::string>& ids) {
        std::vector<int> out;
        out.reserve(ids.size());
        for (const std::string& id : ids) {
            out.push_back(index.at(id));
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    typed_of_.resize(phenomenon_count());
    changed_by_of_.resize(phenomenon_count());
    for (const auto& [id, carrier_sets] : spec_.typed) {
        typed_of_[phenomenon_index_.at(id)] = resolve(phenomenon_index_, carrier_sets);
    }
    for (const auto& [id, transitions] : spec_.changed_by) {
        changed_by_of_[phenomenon_index_.at(id)] = resolve(transition_index, transitions);
    }

    caused_by_of_.reserve(transition_count());
    for (const Transition& t : spec_.transitions) {
        caused_by_of_.push_back(resolve(phenomenon_index_, t.caused_by));
    }
    appears_of_.reserve(artifact_count());
    for (const Artifact& a : spec_.artifacts) {
        appears_of_.push_back(resolve(phenomenon_index_, a.appears));
    }
}

int ValidatedSpec::phenomenon_index(const std::string& id) const {
    const auto it = phenomenon_index_.find(id);
    if (it == phenomenon_index_.end()) {
        throw UnknownIdError(UnknownIdError::Kind::Phenomenon, id);
    }
    return it->second;
}

int ValidatedSpec::artifact_index(const std::string& id) const {
    const auto it = artifact_index_.find(id);
    if (it == artifact_index_.end()) {
        throw UnknownIdError(UnknownIdError::Kind::Artifact, id);
    }
    return it->second;
}

const std::vector<int>& ValidatedSpec::typed_of(int phenomenon_index) const {
    return typed_of_.at(phenomenon_index);
}

const std::vector<int>& ValidatedSpec::changed_by_of(int phenomenon_index) const {
    return changed_by_of_.at(phenomenon_index);
}

const std::vector<int>& ValidatedSpec::caused_by_of(int transition_index) const {
    return caused_by_of_.at(transition_index);
}

const std::vector<int>& ValidatedSpec::appears_of(int artifact_index) const {
    return appears_of_.at(artifact_index);
}

}  // namespace refplan
