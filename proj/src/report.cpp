#include "refplan/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace refplan {

namespace {

using nlohmann::json;

std::string joined(const std::vector<std::string>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += parts[i];
    }
    return out + ")";
}

std::string format_order(const IntroductionOrder& order) { return joined(order.steps); }

std::string format_nums(const std::vector<int>& nums) {
    std::vector<std::string> parts;
    parts.reserve(nums.size());
    for (const int n : nums) {
        parts.push_back(std::to_string(n));
    }
    return joined(parts);
}

std::string render_rows(const std::vector<RankedOrderRow>& rows) {
    const std::array<std::string, 3> header = {"order", "nums", "rank"};
    std::vector<std::array<std::string, 3>> cells;
    cells.reserve(rows.size());
    for (const RankedOrderRow& row : rows) {
        cells.push_back({format_order(row.order), format_nums(row.history.nums()),
                         std::to_string(row.rank)});
    }
    std::array<std::size_t, 3> width = {header[0].size(), header[1].size(), header[2].size()};
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 3; ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    const auto emit_row = [&](const std::array<std::string, 3>& row, std::ostream& out) {
        for (std::size_t c = 0; c < 3; ++c) {
            out << row[c];
            if (c + 1 < 3) {
                out << std::string(width[c] - row[c].size() + 2, ' ');
            }
        }
        out << "\n";
    };
    std::ostringstream out;
    emit_row(header, out);
    for (const auto& row : cells) {
        emit_row(row, out);
    }
    return out.str();
}

json order_to_json(const IntroductionOrder& order, const NumsHistory& history) {
    json entry;
    entry["order"] = order.steps;
    entry["nums"] = history.nums();
    entry["snums"] = history.snums();
    return entry;
}

std::vector<int> int_vector(const json& value, const std::string& path) {
    if (!value.is_array()) {
        throw ParseError(ParseErrorKind::Schema, path + " must be an array");
    }
    std::vector<int> out;
    for (const json& entry : value) {
        if (!entry.is_number_integer() || entry.get<long long>() < 0) {
            throw ParseError(ParseErrorKind::Schema,
                             path + " must contain non-negative integers");
        }
        out.push_back(entry.get<int>());
    }
    return out;
}

std::pair<IntroductionOrder, NumsHistory> order_from_json(const json& entry,
                                                          const std::string& path) {
    if (!entry.is_object() || !entry.contains("order") || !entry.contains("nums") ||
        !entry.contains("snums")) {
        throw ParseError(ParseErrorKind::Schema,
                         path + " must be an object with order, nums, and snums");
    }
    IntroductionOrder order;
    if (!entry["order"].is_array()) {
        throw ParseError(ParseErrorKind::Schema, path + ".order must be an array");
    }
    for (const json& step : entry["order"]) {
        if (!step.is_string()) {
            throw ParseError(ParseErrorKind::Schema, path + ".order must contain strings");
        }
        order.steps.push_back(step.get<std::string>());
    }
    NumsHistory history(int_vector(entry["nums"], path + ".nums"));
    if (history.snums() != int_vector(entry["snums"], path + ".snums")) {
        throw ParseError(ParseErrorKind::Schema,
                         path + ".snums is not the descending sort of nums");
    }
    return {std::move(order), std::move(history)};
}

std::string dot_quote(const std::string& text) {
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out += c;
        }
    }
    return out + "\"";
}

const char* shape_for(PhenomenonKind kind) {
    switch (kind) {
        case PhenomenonKind::CarrierSet: return "box3d";
        case PhenomenonKind::Constant: return "hexagon";
        case PhenomenonKind::Variable: return "ellipse";
        case PhenomenonKind::Event: return "diamond";
    }
    return "ellipse";
}

}  // namespace

SpecSummary summarize_spec(const ValidatedSpec& spec) {
    SpecSummary summary;
    for (const Phenomenon& p : spec.spec().phenomena) {
        switch (p.kind) {
            case PhenomenonKind::CarrierSet: ++summary.carrier_sets; break;
            case PhenomenonKind::Constant: ++summary.constants; break;
            case PhenomenonKind::Variable: ++summary.variables; break;
            case PhenomenonKind::Event: ++summary.events; break;
        }
    }
    summary.transitions = spec.transition_count();
    summary.artifacts = spec.artifact_count();
    return summary;
}

std::string emit_validate_report(const ValidatedSpec& spec, ReportFormat format) {
    const SpecSummary s = summarize_spec(spec);
    if (format == ReportFormat::Json) {
        json doc;
        doc["valid"] = true;
        doc["phenomena"] = {{"carrier_set", s.carrier_sets},
                            {"constant", s.constants},
                            {"variable", s.variables},
                            {"event", s.events},
                            {"total", spec.phenomenon_count()}};
        doc["transitions"] = s.transitions;
        doc["artifacts"] = s.artifacts;
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "phenomena: " << spec.phenomenon_count() << " (carrier_set " << s.carrier_sets
        << ", constant " << s.constants << ", variable " << s.variables << ", event " << s.events
        << ")\n";
    out << "transitions: " << s.transitions << "\n";
    out << "artifacts: " << s.artifacts << "\n";
    out << "ok\n";
    return out.str();
}

std::string emit_closure_report(const ValidatedSpec& spec, ReportFormat format) {
    const RequirementClosure closure = RequirementClosure::compute(spec);
    if (format == ReportFormat::Json) {
        json rows = json::array();
        for (int a = 0; a < spec.artifact_count(); ++a) {
            json row;
            row["artifact"] = spec.artifact(a).id;
            json required = json::array();
            for (const int p : closure.req_a_by_index(a)) {
                required.push_back(spec.phenomenon(p).id);
            }
            row["requires"] = std::move(required);
            rows.push_back(std::move(row));
        }
        json doc;
        doc["req_a"] = std::move(rows);
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    for (int a = 0; a < spec.artifact_count(); ++a) {
        out << spec.artifact(a).id << ": {";
        bool first = true;
        for (const int p : closure.req_a_by_index(a)) {
            if (!first) {
                out << ", ";
            }
            out << spec.phenomenon(p).id;
            first = false;
        }
        out << "}\n";
    }
    return out.str();
}

std::string emit_plan_report(const PlanResult& result, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json doc;
        json best = json::array();
        for (const OrderSummary& summary : result.best_orders) {
            best.push_back(order_to_json(summary.order, summary.history));
        }
        doc["best_orders"] = std::move(best);
        if (result.rank_table) {
            json table = json::array();
            for (const RankedOrderRow& row : *result.rank_table) {
                json entry = order_to_json(row.order, row.history);
                entry["rank"] = row.rank;
                table.push_back(std::move(entry));
            }
            doc["rank_table"] = std::move(table);
        }
        return doc.dump(2) + "\n";
    }
    std::vector<RankedOrderRow> rows;
    if (result.rank_table) {
        rows = *result.rank_table;
    } else {
        for (const OrderSummary& summary : result.best_orders) {
            rows.push_back({summary.order, summary.history, 1});
        }
    }
    return render_rows(rows);
}

PlanResult parse_plan_report(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseErrorKind::Syntax, e.what());
    }
    if (!doc.is_object() || !doc.contains("best_orders")) {
        throw ParseError(ParseErrorKind::Schema, "plan report must contain best_orders");
    }
    PlanResult result;
    int i = 0;
    for (const json& entry : doc["best_orders"]) {
        auto [order, history] = order_from_json(entry, "best_orders[" + std::to_string(i) + "]");
        result.best_orders.push_back({std::move(order), std::move(history)});
        ++i;
    }
    if (doc.contains("rank_table")) {
        std::vector<RankedOrderRow> table;
        i = 0;
        for (const json& entry : doc["rank_table"]) {
            const std::string path = "rank_table[" + std::to_string(i) + "]";
            auto [order, history] = order_from_json(entry, path);
            if (!entry.contains("rank") || !entry["rank"].is_number_integer()) {
                throw ParseError(ParseErrorKind::Schema, path + ".rank must be an integer");
            }
            table.push_back({std::move(order), std::move(history), entry["rank"].get<int>()});
            ++i;
        }
        result.rank_table = std::move(table);
    }
    return result;
}

std::string emit_dependency_graph(const ValidatedSpec& spec) {
    std::ostringstream out;
    out << "digraph dependencies {\n";
    for (int p = 0; p < spec.phenomenon_count(); ++p) {
        const Phenomenon& ph = spec.phenomenon(p);
        out << "  " << dot_quote(ph.id) << " [label=" << dot_quote(ph.id + ": " + ph.name)
            << ", shape=" << shape_for(ph.kind) << "];\n";
    }
    for (int t = 0; t < spec.transition_count(); ++t) {
        const Transition& tr = spec.transition(t);
        out << "  " << dot_quote(tr.id) << " [label=" << dot_quote(tr.id + ": " + tr.name)
            << ", shape=box, style=dashed];\n";
    }
    for (int p = 0; p < spec.phenomenon_count(); ++p) {
        for (const int s : spec.typed_of(p)) {
            out << "  " << dot_quote(spec.phenomenon(p).id) << " -> "
                << dot_quote(spec.phenomenon(s).id) << " [label=\"typed\"];\n";
        }
    }
    for (int p = 0; p < spec.phenomenon_count(); ++p) {
        for (const int t : spec.changed_by_of(p)) {
            out << "  " << dot_quote(spec.phenomenon(p).id) << " -> "
                << dot_quote(spec.transition(t).id) << " [label=\"changed_by\"];\n";
        }
    }
    for (int t = 0; t < spec.transition_count(); ++t) {
        for (const int e : spec.caused_by_of(t)) {
            out << "  " << dot_quote(spec.transition(t).id) << " -> "
                << dot_quote(spec.phenomenon(e).id) << " [label=\"caused_by\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace refplan
