#include "sset/diagram.hpp"

#include "sset/validate.hpp"

#include <algorithm>

namespace sset {

bool same_map(const SimplicialMap& f, const SimplicialMap& g)
{
    if (f.components() != g.components())
        return false;
    const bool dom = f.domain() == g.domain() || *f.domain() == *g.domain();
    const bool cod = f.codomain() == g.codomain() || *f.codomain() == *g.codomain();
    return dom && cod;
}

void Diagram::node(const std::string& n)
{
    if (std::find(nodes.begin(), nodes.end(), n) == nodes.end())
        nodes.push_back(n);
}

void Diagram::edge(const std::string& e, const std::string& source, const std::string& target)
{
    node(source);
    node(target);
    edges.push_back({e, source, target});
}

bool Diagram::check(const std::string& identity, bool status, const std::string& detail)
{
    checks.push_back({identity, status, detail});
    return status;
}

bool Diagram::check_equal(const std::string& identity, const SimplicialMap& f, const SimplicialMap& g)
{
    return check(identity, same_map(f, g));
}

bool Diagram::check_simplicial(const std::string& identity, const SimplicialMap& f)
{
    const auto r = validate_map(f);
    return check(identity, r.ok(), r.ok() ? std::string{} : r.summary(3));
}

bool Diagram::check_identity(const std::string& identity, const SimplicialMap& f)
{
    return check(identity, same_map(f, SimplicialMap::identity(f.domain())));
}

bool Diagram::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status; });
}

std::vector<std::string> Diagram::failures() const
{
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.status)
            out.push_back(c.identity);
    return out;
}

json Diagram::to_json() const
{
    json j;
    j["name"] = name;
    j["nodes"] = nodes;
    json es = json::array();
    for (const auto& e : edges)
        es.push_back({{"name", e.name}, {"source", e.source}, {"target", e.target}});
    j["edges"] = std::move(es);
    json cs = json::array();
    for (const auto& c : checks) {
        json entry = {{"identity", c.identity}, {"status", c.status ? "pass" : "fail"}};
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        cs.push_back(std::move(entry));
    }
    j["checks"] = std::move(cs);
    return j;
}

} // namespace sset
