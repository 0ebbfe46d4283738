#include "sset/category.hpp"

#include "sset/error.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace sset {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<std::array<std::string, 3>> compositions)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms))
{
    std::set<std::string> obj(objects_.begin(), objects_.end());
    if (obj.size() != objects_.size())
        throw Error("duplicate object in category");
    for (std::size_t k = 0; k < morphisms_.size(); ++k) {
        const auto& m = morphisms_[k];
        if (!obj.count(m.source) || !obj.count(m.target))
            throw Error("morphism " + m.name + " has an unknown endpoint");
        if (!by_name_.emplace(m.name, k).second)
            throw Error("duplicate morphism name " + m.name);
    }
    for (const auto& [g, f, gf] : compositions) {
        if (!by_name_.count(g) || !by_name_.count(f) || !by_name_.count(gf))
            throw Error("composition mentions an unknown morphism: " + g + " o " + f);
        const auto& mg = morphism(g);
        const auto& mf = morphism(f);
        const auto& mgf = morphism(gf);
        if (mf.target != mg.source)
            throw Error("composition " + g + " o " + f + " is not composable");
        if (mgf.source != mf.source || mgf.target != mg.target)
            throw Error("composite " + gf + " has the wrong endpoints");
        auto [it, fresh] = compose_.emplace(std::pair{g, f}, gf);
        if (!fresh && it->second != gf)
            throw Error("composition " + g + " o " + f + " is given twice");
    }

    // Identify identities from the table: an endomorphism e of x with
    // e∘f = f and g∘e = g wherever composable, and e∘e = e.
    for (const auto& x : objects_) {
        for (const auto& m : morphisms_) {
            if (m.source != x || m.target != x)
                continue;
            bool unit = true;
            for (const auto& f : morphisms_) {
                if (f.target == x) {
                    auto it = compose_.find({m.name, f.name});
                    if (it == compose_.end() || it->second != f.name)
                        unit = false;
                }
                if (f.source == x) {
                    auto it = compose_.find({f.name, m.name});
                    if (it == compose_.end() || it->second != f.name)
                        unit = false;
                }
            }
            if (unit) {
                identity_[x] = m.name;
                break;
            }
        }
        if (!identity_.count(x)) {
            std::string id = "id_" + x;
            if (by_name_.count(id))
                throw Error("morphism " + id + " exists but is not an identity");
            by_name_.emplace(id, morphisms_.size());
            morphisms_.push_back({id, x, x});
            identity_[x] = id;
            for (const auto& f : morphisms_) {
                if (f.target == x)
                    compose_[{id, f.name}] = f.name;
                if (f.source == x)
                    compose_[{f.name, id}] = f.name;
            }
        }
    }
    validate();
}

void FiniteCategory::validate() const
{
    for (const auto& f : morphisms_) {
        for (const auto& g : morphisms_) {
            const bool composable = f.target == g.source;
            const bool defined = compose_.count({g.name, f.name}) > 0;
            if (composable != defined)
                throw Error("composition " + g.name + " o " + f.name
                            + (composable ? " is missing" : " is defined but not composable"));
        }
    }
    for (const auto& f : morphisms_) {
        for (const auto& g : morphisms_) {
            if (f.target != g.source)
                continue;
            for (const auto& h : morphisms_) {
                if (g.target != h.source)
                    continue;
                const auto& hg = compose_.at({h.name, g.name});
                const auto& gf = compose_.at({g.name, f.name});
                if (compose_.at({hg, f.name}) != compose_.at({h.name, gf}))
                    throw Error("composition is not associative at " + h.name + ", " + g.name + ", " + f.name);
            }
        }
    }
}

const Morphism& FiniteCategory::morphism(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw Error("unknown morphism " + name);
    return morphisms_[it->second];
}

const std::string& FiniteCategory::identity(const std::string& object) const
{
    auto it = identity_.find(object);
    if (it == identity_.end())
        throw Error("unknown object " + object);
    return it->second;
}

bool FiniteCategory::is_identity(const std::string& m) const
{
    const auto& mor = morphism(m);
    return mor.source == mor.target && identity(mor.source) == m;
}

std::optional<std::string> FiniteCategory::compose(const std::string& g, const std::string& f) const
{
    auto it = compose_.find({g, f});
    if (it == compose_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::string> FiniteCategory::out_of(const std::string& object) const
{
    std::vector<std::string> out;
    for (const auto& m : morphisms_)
        if (m.source == object)
            out.push_back(m.name);
    return out;
}

FiniteCategory FiniteCategory::full_subcategory(const std::vector<std::string>& keep) const
{
    std::set<std::string> k(keep.begin(), keep.end());
    for (const auto& x : keep)
        if (!identity_.count(x))
            throw Error("unknown object " + x);
    std::vector<std::string> objs;
    for (const auto& x : objects_)
        if (k.count(x))
            objs.push_back(x);
    std::vector<Morphism> mors;
    for (const auto& m : morphisms_)
        if (k.count(m.source) && k.count(m.target))
            mors.push_back(m);
    std::vector<std::array<std::string, 3>> comp;
    for (const auto& [gf, h] : compose_) {
        const auto& g = morphism(gf.first);
        const auto& f = morphism(gf.second);
        if (k.count(f.source) && k.count(f.target) && k.count(g.target))
            comp.push_back({gf.first, gf.second, h});
    }
    return {std::move(objs), std::move(mors), std::move(comp)};
}

std::vector<std::array<std::string, 3>> FiniteCategory::composition_table() const
{
    std::vector<std::array<std::string, 3>> out;
    for (const auto& [gf, h] : compose_)
        out.push_back({gf.first, gf.second, h});
    return out;
}

FiniteCategory preorder_category(int objects, const std::vector<std::vector<bool>>& leq)
{
    if (objects < 0 || static_cast<int>(leq.size()) != objects)
        throw Error("preorder relation has the wrong size");
    for (int a = 0; a < objects; ++a) {
        if (static_cast<int>(leq[a].size()) != objects)
            throw Error("preorder relation has the wrong size");
        if (!leq[a][a])
            throw Error("preorder relation must be reflexive");
        for (int b = 0; b < objects; ++b)
            for (int c = 0; c < objects; ++c)
                if (leq[a][b] && leq[b][c] && !leq[a][c])
                    throw Error("preorder relation must be transitive");
    }
    auto name = [](int a, int b) {
        return a == b ? "id" + std::to_string(a) : "f" + std::to_string(a) + "_" + std::to_string(b);
    };
    std::vector<std::string> objs;
    for (int a = 0; a < objects; ++a)
        objs.push_back(std::to_string(a));
    std::vector<Morphism> mors;
    for (int a = 0; a < objects; ++a)
        for (int b = 0; b < objects; ++b)
            if (leq[a][b])
                mors.push_back({name(a, b), std::to_string(a), std::to_string(b)});
    std::vector<std::array<std::string, 3>> comp;
    for (int a = 0; a < objects; ++a)
        for (int b = 0; b < objects; ++b)
            for (int c = 0; c < objects; ++c)
                if (leq[a][b] && leq[b][c])
                    comp.push_back({name(b, c), name(a, b), name(a, c)});
    return {std::move(objs), std::move(mors), std::move(comp)};
}

FiniteCategory poset_category(int n)
{
    if (n < 0)
        throw Error("poset [n] needs n >= 0");
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            leq[a][b] = a <= b;
    return preorder_category(n + 1, leq);
}

FiniteCategory interval_groupoid()
{
    return preorder_category(2, {{true, true}, {true, true}});
}

FiniteCategory inverted_poset_category(int n, int i)
{
    if (n < 1 || i < 0 || i > n - 1)
        throw Error("[n]_i needs n >= 1 and 0 <= i <= n-1");
    // Collapse i+1 onto i, then compare.
    auto rank = [i](int a) { return a > i ? a - 1 : a; };
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
            leq[a][b] = rank(a) <= rank(b);
    return preorder_category(n + 1, leq);
}

FiniteCategory cyclic_group_category(int order)
{
    if (order < 1)
        throw Error("group order must be positive");
    std::vector<Morphism> mors;
    for (int k = 0; k < order; ++k)
        mors.push_back({k == 0 ? "e" : "g" + std::to_string(k), "pt", "pt"});
    std::vector<std::array<std::string, 3>> comp;
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            comp.push_back({mors[a].name, mors[b].name, mors[(a + b) % order].name});
    return {{"pt"}, std::move(mors), std::move(comp)};
}

} // namespace sset
