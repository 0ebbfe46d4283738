#pragma once

#include "sset/error.hpp"
#include "sset/json_io.hpp"
#include "sset/simplicial_map.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sset::cli {

// Bad command line or expression; exit status 2.
class UsageError : public Error {
public:
    using Error::Error;
};

// An object or map that fails validation; exit status 1.
class InvalidObject : public Error {
public:
    using Error::Error;
};

// An evaluated expression: an object, or a map together with its endpoints.
struct Value {
    SSetPtr object;
    std::optional<SimplicialMap> map;

    [[nodiscard]] bool is_map() const { return map.has_value(); }
};

// A stored entry: {"kind", "name", "expression", "data"} where kind is
// "simplicial_set" or "map".
struct Stored {
    std::string name;
    std::string expression;
    Value value;
};

// Named objects and maps as JSON files <name>.json in a directory.
class Workspace {
public:
    explicit Workspace(std::filesystem::path dir);

    [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
    [[nodiscard]] std::filesystem::path file(const std::string& name) const;
    [[nodiscard]] bool contains(const std::string& name) const;
    // Throws UsageError for a missing name and InvalidObject when the stored
    // entry fails validation.
    [[nodiscard]] Stored load(const std::string& name) const;
    void save(const Stored& s) const;

private:
    std::filesystem::path dir_;
};

json to_json(const Stored& s);
Stored stored_from_json(const json& j);
// Validation report of a stored value; empty when it is valid.
std::string validation_failure(const Value& v);

// Write to a temporary file next to path, then rename over it.
void write_atomic(const std::filesystem::path& path, const std::string& content);

// delta(n) | boundary(n) | J | nerve(file) | product(a,b) | fullsub(a,{v..})
// | skeleton(a,k) | widen(a,{v..}) | isoplex(n,i) | isohorn(n,i)
// | pushout_product(f,g) | class_A(n) | horn(n,k) | boundary_inclusion(n)
// | dom(f) | cod(f) | <workspace name>
// Vertices are indices or labels. fullsub, skeleton, horn and the inclusion
// builders give maps; widen of a map is the widened inclusion.
Value evaluate(const std::string& expression, int D, const Workspace* ws = nullptr);

// The 1-skeleton as a directed graph; opposite edge pairs are iso pairs.
struct Graph {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, std::string>> iso_pairs;
};
Graph one_skeleton(const SimplicialSet& x);
std::string to_dot(const Graph& g, const std::string& name);
json to_json(const Graph& g);

// Runs ssetctl; returns the exit status (0 pass, 1 fail, 2 usage).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sset::cli
