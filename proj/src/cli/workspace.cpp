#include "sset/cli.hpp"

#include "sset/validate.hpp"

#include <fstream>
#include <sstream>

#include <unistd.h>

namespace sset::cli {

namespace fs = std::filesystem;

void write_atomic(const fs::path& path, const std::string& content)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out)
            throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

json to_json(const Stored& s)
{
    const bool map = s.value.is_map();
    return {{"kind", map ? "map" : "simplicial_set"},
            {"name", s.name},
            {"expression", s.expression},
            {"data", map ? sset::to_json(*s.value.map) : sset::to_json(*s.value.object)}};
}

Stored stored_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.contains("data"))
        throw Error("stored entry needs \"kind\" and \"data\"");
    Stored s;
    s.name = j.value("name", "");
    s.expression = j.value("expression", "");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "map") {
        auto f = map_from_json(j["data"]);
        s.value.object = f.codomain();
        s.value.map = std::move(f);
    } else if (kind == "simplicial_set") {
        s.value.object = sset_from_json(j["data"]);
    } else {
        throw Error("unknown stored kind '" + kind + "'");
    }
    return s;
}

std::string validation_failure(const Value& v)
{
    if (v.is_map()) {
        for (const auto* x : {&v.map->domain(), &v.map->codomain()}) {
            auto r = validate_sset(**x);
            if (!r.ok())
                return r.summary(10);
        }
        auto r = validate_map(*v.map);
        return r.ok() ? std::string{} : r.summary(10);
    }
    auto r = validate_sset(*v.object);
    return r.ok() ? std::string{} : r.summary(10);
}

Workspace::Workspace(fs::path dir) : dir_(std::move(dir)) {}

fs::path Workspace::file(const std::string& name) const
{
    if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos)
        throw UsageError("invalid name '" + name + "'");
    return dir_ / (name + ".json");
}

bool Workspace::contains(const std::string& name) const
{
    return fs::exists(file(name));
}

Stored Workspace::load(const std::string& name) const
{
    const auto path = file(name);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("no object named '" + name + "' in " + dir_.string());
    std::stringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::exception& e) {
        throw Error(path.string() + ": " + e.what());
    }
    auto s = stored_from_json(j);
    if (auto bad = validation_failure(s.value); !bad.empty())
        throw InvalidObject(path.string() + " fails validation:\n" + bad);
    return s;
}

void Workspace::save(const Stored& s) const
{
    write_atomic(file(s.name), dump(to_json(s)));
}

} // namespace sset::cli
