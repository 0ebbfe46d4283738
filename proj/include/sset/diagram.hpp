#pragma once

#include "sset/json_io.hpp"
#include "sset/simplicial_map.hpp"

#include <string>
#include <vector>

namespace sset {

// A finite diagram of named objects and maps together with the identities
// checked on it. Serialized as {"name", "nodes", "edges", "checks"}.
struct Diagram {
    struct Edge {
        std::string name;
        std::string source;
        std::string target;
    };
    struct Check {
        std::string identity;
        bool status = false;
        std::string detail;
    };

    std::string name;
    std::vector<std::string> nodes;
    std::vector<Edge> edges;
    std::vector<Check> checks;

    void node(const std::string& n);
    void edge(const std::string& name, const std::string& source, const std::string& target);
    // Records a check and returns its status.
    bool check(const std::string& identity, bool status, const std::string& detail = {});
    // f == g as maps: equal domains, equal codomains, equal components.
    bool check_equal(const std::string& identity, const SimplicialMap& f, const SimplicialMap& g);
    // validate_map passes.
    bool check_simplicial(const std::string& identity, const SimplicialMap& f);
    bool check_identity(const std::string& identity, const SimplicialMap& f);

    [[nodiscard]] bool ok() const;
    [[nodiscard]] std::vector<std::string> failures() const;
    [[nodiscard]] json to_json() const;
};

bool same_map(const SimplicialMap& f, const SimplicialMap& g);

} // namespace sset
