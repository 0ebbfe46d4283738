#include "sset/json_io.hpp"

#include "sset/error.hpp"

#include <unordered_map>

namespace sset {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(std::string("JSON document lacks field \"") + key + "\"");
    return j.at(key);
}

} // namespace

json to_json(const SimplicialSet& x)
{
    json j;
    j["truncation_dim"] = x.dim();
    json simplices = json::array();
    for (int n = 0; n <= x.dim(); ++n) {
        json row = json::array();
        for (const auto& l : x.labels(n))
            row.push_back(l.str());
        simplices.push_back(std::move(row));
    }
    j["simplices"] = std::move(simplices);
    json face = json::object();
    for (int n = 1; n <= x.dim(); ++n) {
        json table = json::object();
        for (int k = 0; k < static_cast<int>(x.size(n)); ++k) {
            json faces = json::array();
            for (int i = 0; i <= n; ++i)
                faces.push_back(x.label(n - 1, x.face(n, i, k)).str());
            table[x.label(n, k).str()] = std::move(faces);
        }
        face[std::to_string(n)] = std::move(table);
    }
    j["face"] = std::move(face);
    json deg = json::object();
    for (int n = 0; n < x.dim(); ++n) {
        json table = json::object();
        for (int k = 0; k < static_cast<int>(x.size(n)); ++k) {
            json degs = json::array();
            for (int i = 0; i <= n; ++i)
                degs.push_back(x.label(n + 1, x.degeneracy(n, i, k)).str());
            table[x.label(n, k).str()] = std::move(degs);
        }
        deg[std::to_string(n)] = std::move(table);
    }
    j["degeneracy"] = std::move(deg);
    return j;
}

SSetPtr sset_from_json(const json& j)
{
    try {
        const int D = field(j, "truncation_dim").get<int>();
        if (D < 0)
            throw Error("truncation_dim must be non-negative");
        const auto& simplices = field(j, "simplices");
        if (!simplices.is_array() || static_cast<int>(simplices.size()) != D + 1)
            throw Error("\"simplices\" must list D+1 dimensions");
        SimplicialSet::Tables t;
        t.dim = D;
        t.labels.resize(D + 1);
        t.face.resize(D + 1);
        t.degeneracy.resize(D + 1);
        std::vector<std::unordered_map<Label, int, LabelHash>> idx(D + 1);
        for (int n = 0; n <= D; ++n) {
            for (const auto& s : simplices[n]) {
                t.labels[n].push_back(Label::parse(s.get<std::string>()));
                if (!idx[n].emplace(t.labels[n].back(), static_cast<int>(t.labels[n].size()) - 1).second)
                    throw Error("duplicate simplex " + s.get<std::string>() + " in dimension " + std::to_string(n));
            }
        }
        auto lookup = [&](int n, const json& s) {
            auto it = idx[n].find(Label::parse(s.get<std::string>()));
            if (it == idx[n].end())
                throw Error("unknown simplex " + s.get<std::string>() + " in dimension " + std::to_string(n));
            return it->second;
        };
        auto read_table = [&](const json& tables, int n, int target, std::vector<std::vector<int>>& out) {
            const auto& table = field(tables, std::to_string(n).c_str());
            out.assign(n + 1, std::vector<int>(t.labels[n].size(), -1));
            for (std::size_t k = 0; k < t.labels[n].size(); ++k) {
                const auto key = t.labels[n][k].str();
                if (!table.contains(key))
                    throw Error("no structure maps given for " + key + " in dimension " + std::to_string(n));
                const auto& row = table.at(key);
                if (!row.is_array() || static_cast<int>(row.size()) != n + 1)
                    throw Error("wrong number of structure maps for " + key);
                for (int i = 0; i <= n; ++i)
                    out[i][k] = lookup(target, row[i]);
            }
        };
        const auto& face = field(j, "face");
        for (int n = 1; n <= D; ++n)
            read_table(face, n, n - 1, t.face[n]);
        const auto& deg = field(j, "degeneracy");
        for (int n = 0; n < D; ++n)
            read_table(deg, n, n + 1, t.degeneracy[n]);
        return share(SimplicialSet::from_tables(std::move(t)));
    } catch (const json::exception& e) {
        throw Error(std::string("malformed simplicial set document: ") + e.what());
    }
}

json to_json(const SimplicialMap& f)
{
    json j;
    j["domain"] = to_json(*f.domain());
    j["codomain"] = to_json(*f.codomain());
    json comps = json::array();
    for (int n = 0; n <= f.dim(); ++n) {
        json table = json::object();
        for (int k = 0; k < static_cast<int>(f.domain()->size(n)); ++k)
            table[f.domain()->label(n, k).str()] = f.codomain()->label(n, f(n, k)).str();
        comps.push_back(std::move(table));
    }
    j["components"] = std::move(comps);
    return j;
}

SimplicialMap map_from_json(const json& j)
{
    try {
        auto dom = sset_from_json(field(j, "domain"));
        auto cod = sset_from_json(field(j, "codomain"));
        const auto& comps = field(j, "components");
        if (!comps.is_array() || static_cast<int>(comps.size()) != dom->dim() + 1)
            throw Error("\"components\" must list D+1 dimensions");
        std::vector<std::vector<int>> c(dom->dim() + 1);
        for (int n = 0; n <= dom->dim(); ++n) {
            c[n].resize(dom->size(n));
            for (int k = 0; k < static_cast<int>(dom->size(n)); ++k) {
                const auto key = dom->label(n, k).str();
                if (!comps[n].contains(key))
                    throw Error("no image given for " + key + " in dimension " + std::to_string(n));
                c[n][k] = cod->index_of(n, Label::parse(comps[n].at(key).get<std::string>()));
            }
        }
        return {dom, cod, std::move(c)};
    } catch (const json::exception& e) {
        throw Error(std::string("malformed map document: ") + e.what());
    }
}

json to_json(const FiniteCategory& c)
{
    json j;
    j["objects"] = c.objects();
    json mors = json::array();
    for (const auto& m : c.morphisms())
        mors.push_back({{"name", m.name}, {"src", m.source}, {"tgt", m.target}});
    j["morphisms"] = std::move(mors);
    json comp = json::array();
    for (const auto& row : c.composition_table())
        comp.push_back({row[0], row[1], row[2]});
    j["compose"] = std::move(comp);
    return j;
}

FiniteCategory category_from_json(const json& j)
{
    try {
        auto objects = field(j, "objects").get<std::vector<std::string>>();
        std::vector<Morphism> mors;
        for (const auto& m : field(j, "morphisms"))
            mors.push_back({field(m, "name").get<std::string>(), field(m, "src").get<std::string>(),
                            field(m, "tgt").get<std::string>()});
        std::vector<std::array<std::string, 3>> comp;
        if (j.contains("compose"))
            for (const auto& row : j.at("compose")) {
                if (!row.is_array() || row.size() != 3)
                    throw Error("composition entries must be [g, f, gf] triples");
                comp.push_back({row[0].get<std::string>(), row[1].get<std::string>(), row[2].get<std::string>()});
            }
        return {std::move(objects), std::move(mors), std::move(comp)};
    } catch (const json::exception& e) {
        throw Error(std::string("malformed category document: ") + e.what());
    }
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

} // namespace sset
