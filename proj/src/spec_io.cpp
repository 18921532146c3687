#include "refplan/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace refplan {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& message) {
    throw ParseError(ParseErrorKind::Schema, message);
}

std::string type_name(const json& value) {
    if (value.is_array()) return "array";
    if (value.is_object()) return "object";
    if (value.is_string()) return "string";
    if (value.is_null()) return "null";
    if (value.is_boolean()) return "boolean";
    return "number";
}

const json& member(const json& object, const char* key, const std::string& path) {
    const auto it = object.find(key);
    if (it == object.end()) {
        schema_error("missing field \"" + std::string(key) + "\" in " + path);
    }
    return *it;
}

void expect_keys(const json& object, std::initializer_list<const char*> allowed,
                 const std::string& path) {
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (const char* candidate : allowed) {
            known = known || key == candidate;
        }
        if (!known) {
            schema_error("unknown field \"" + key + "\" in " + path);
        }
    }
}

std::string as_string(const json& value, const std::string& path) {
    if (!value.is_string()) {
        schema_error(path + " must be a string, got " + type_name(value));
    }
    return value.get<std::string>();
}

const json& as_array(const json& value, const std::string& path) {
    if (!value.is_array()) {
        schema_error(path + " must be an array, got " + type_name(value));
    }
    return value;
}

const json& as_object(const json& value, const std::string& path) {
    if (!value.is_object()) {
        schema_error(path + " must be an object, got " + type_name(value));
    }
    return value;
}

// Duplicate entries collapse silently: the relations are sets.
std::set<std::string> id_set(const json& value, const std::string& path) {
    std::set<std::string> out;
    int i = 0;
    for (const json& entry : as_array(value, path)) {
        out.insert(as_string(entry, path + "[" + std::to_string(i) + "]"));
        ++i;
    }
    return out;
}

std::map<std::string, std::set<std::string>> id_set_map(const json& value,
                                                        const std::string& path) {
    std::map<std::string, std::set<std::string>> out;
    for (const auto& [key, entry] : as_object(value, path).items()) {
        out.emplace(key, id_set(entry, path + "." + key));
    }
    return out;
}

std::string strip_exception_tag(const std::string& what) {
    // nlohmann prefixes messages with "[json.exception...] ".
    if (!what.empty() && what.front() == '[') {
        const auto end = what.find("] ");
        if (end != std::string::npos) {
            return what.substr(end + 2);
        }
    }
    return what;
}

}  // namespace

ProblemSpec parse_spec(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseErrorKind::Syntax, strip_exception_tag(e.what()));
    }
    if (!doc.is_object()) {
        schema_error("top-level value must be an object, got " + type_name(doc));
    }
    expect_keys(doc, {"phenomena", "transitions", "typed", "changed_by", "artifacts"},
                "the top-level object");

    ProblemSpec spec;

    int i = 0;
    for (const json& entry : as_array(member(doc, "phenomena", "the top-level object"),
                                      "phenomena")) {
        const std::string path = "phenomena[" + std::to_string(i) + "]";
        as_object(entry, path);
        expect_keys(entry, {"id", "name", "kind"}, path);
        Phenomenon p;
        p.id = as_string(member(entry, "id", path), path + ".id");
        p.name = as_string(member(entry, "name", path), path + ".name");
        const std::string token = as_string(member(entry, "kind", path), path + ".kind");
        const auto kind = phenomenon_kind_from_token(token);
        if (!kind) {
            schema_error("unknown phenomenon kind \"" + token + "\" at " + path + ".kind");
        }
        p.kind = *kind;
        spec.phenomena.push_back(std::move(p));
        ++i;
    }

    i = 0;
    for (const json& entry : as_array(member(doc, "transitions", "the top-level object"),
                                      "transitions")) {
        const std::string path = "transitions[" + std::to_string(i) + "]";
        as_object(entry, path);
        expect_keys(entry, {"id", "name", "caused_by"}, path);
        Transition t;
        t.id = as_string(member(entry, "id", path), path + ".id");
        t.name = as_string(member(entry, "name", path), path + ".name");
        t.caused_by = id_set(member(entry, "caused_by", path), path + ".caused_by");
        spec.transitions.push_back(std::move(t));
        ++i;
    }

    spec.typed = id_set_map(member(doc, "typed", "the top-level object"), "typed");
    spec.changed_by = id_set_map(member(doc, "changed_by", "the top-level object"), "changed_by");

    i = 0;
    for (const json& entry : as_array(member(doc, "artifacts", "the top-level object"),
                                      "artifacts")) {
        const std::string path = "artifacts[" + std::to_string(i) + "]";
        as_object(entry, path);
        expect_keys(entry, {"id", "text", "appears"}, path);
        Artifact a;
        a.id = as_string(member(entry, "id", path), path + ".id");
        a.text = as_string(member(entry, "text", path), path + ".text");
        a.appears = id_set(member(entry, "appears", path), path + ".appears");
        spec.artifacts.push_back(std::move(a));
        ++i;
    }

    return spec;
}

ProblemSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(ParseErrorKind::Syntax, "cannot open \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

std::string emit_spec(const ProblemSpec& spec) {
    ordered_json doc;

    ordered_json phenomena = ordered_json::array();
    for (const Phenomenon& p : spec.phenomena) {
        ordered_json entry;
        entry["id"] = p.id;
        entry["name"] = p.name;
        entry["kind"] = to_string(p.kind);
        phenomena.push_back(std::move(entry));
    }
    doc["phenomena"] = std::move(phenomena);

    ordered_json transitions = ordered_json::array();
    for (const Transition& t : spec.transitions) {
        ordered_json entry;
        entry["id"] = t.id;
        entry["name"] = t.name;
        entry["caused_by"] = t.caused_by;
        transitions.push_back(std::move(entry));
    }
    doc["transitions"] = std::move(transitions);

    doc["typed"] = ordered_json::object();
    for (const auto& [id, carrier_sets] : spec.typed) {
        doc["typed"][id] = carrier_sets;
    }
    doc["changed_by"] = ordered_json::object();
    for (const auto& [id, transition_ids] : spec.changed_by) {
        doc["changed_by"][id] = transition_ids;
    }

    ordered_json artifacts = ordered_json::array();
    for (const Artifact& a : spec.artifacts) {
        ordered_json entry;
        entry["id"] = a.id;
        entry["text"] = a.text;
        entry["appears"] = a.appears;
        artifacts.push_back(std::move(entry));
    }
    doc["artifacts"] = std::move(artifacts);

    return doc.dump(2) + "\n";
}

}  // namespace refplan
