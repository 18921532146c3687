#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "refplan/model.hpp"
#include "refplan/spec_io.hpp"

namespace refplan::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(REFPLAN_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline ProblemSpec load_fixture(const std::string& name) {
    return parse_spec_file(fixture_path(name));
}

// The library-management example, built in code so mutation tests do not
// depend on the parser.
inline ProblemSpec library_spec() {
    ProblemSpec spec;
    spec.phenomena = {
        {"p1", "Loaning a reserved book", PhenomenonKind::Event},
        {"p2", "Returning a book", PhenomenonKind::Event},
        {"p3", "Loaning a book from the open stack", PhenomenonKind::Event},
        {"p4", "reservation state", PhenomenonKind::Variable},
        {"p5", "loan state", PhenomenonKind::Variable},
        {"p6", "open stack state", PhenomenonKind::Variable},
        {"p7", "books", PhenomenonKind::CarrierSet},
        {"p8", "members", PhenomenonKind::CarrierSet},
    };
    spec.transitions = {
        {"t1", "Remove one from reservation state", {"p1"}},
        {"t2", "Add one to loan state", {"p1", "p3"}},
        {"t3", "Remove one from loan state", {"p2"}},
        {"t4", "Remove one from open stack state", {"p3"}},
    };
    spec.typed = {{"p4", {"p7", "p8"}}, {"p5", {"p7", "p8"}}, {"p6", {"p7"}}};
    spec.changed_by = {{"p4", {"t1"}}, {"p5", {"t2", "t3"}}, {"p6", {"t4"}}};
    spec.artifacts = {
        {"a", "Loan is done only for members", {"p5", "p8"}},
        {"b", "Books on loan are not in the open stack", {"p5", "p7", "p6"}},
        {"c", "No reserved books are in the open stack", {"p4", "p7", "p6"}},
    };
    return spec;
}

}  // namespace refplan::testing
