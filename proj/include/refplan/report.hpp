#pragma once

#include <string>

#include "refplan/closure.hpp"
#include "refplan/model.hpp"
#include "refplan/search.hpp"

namespace refplan {

enum class ReportFormat { Table, Json };

// Headline counts of a validated spec.
struct SpecSummary {
    int carrier_sets = 0;
    int constants = 0;
    int variables = 0;
    int events = 0;
    int transitions = 0;
    int artifacts = 0;

    bool operator==(const SpecSummary&) const = default;
};

SpecSummary summarize_spec(const ValidatedSpec& spec);

// All emitters return UTF-8 text ending in a newline and are byte-stable
// for a given input and format.

std::string emit_validate_report(const ValidatedSpec& spec, ReportFormat format);

// Per-artifact required-phenomena listing, artifacts in declaration
// order, phenomena in canonical order within each set.
std::string emit_closure_report(const ValidatedSpec& spec, ReportFormat format);

// One row per order: order, nums, rank. Renders the rank table when the
// result carries one, otherwise the best orders (all rank 1). The Json
// format carries the whole result losslessly.
std::string emit_plan_report(const PlanResult& result, ReportFormat format);

// Inverse of emit_plan_report's Json format.
PlanResult parse_plan_report(const std::string& json_text);

// DOT digraph of the dependency relations: phenomenon nodes shaped by
// kind, transition nodes dashed, edges labeled typed / changed_by /
// caused_by. Node order is canonical, so output is byte-stable.
std::string emit_dependency_graph(const ValidatedSpec& spec);

}  // namespace refplan
