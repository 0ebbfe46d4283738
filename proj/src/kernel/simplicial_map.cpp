#include "sset/simplicial_map.hpp"

#include "sset/error.hpp"

namespace sset {

SimplicialMap::SimplicialMap(SSetPtr domain, SSetPtr codomain, std::vector<std::vector<int>> components)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), components_(std::move(components))
{
    if (!domain_ || !codomain_)
        throw Error("simplicial map needs a domain and a codomain");
    if (domain_->dim() != codomain_->dim())
        throw Error("simplicial map between different truncation dimensions");
    if (static_cast<int>(components_.size()) != domain_->dim() + 1)
        throw Error("simplicial map needs one component per dimension");
    for (int n = 0; n <= domain_->dim(); ++n) {
        if (components_[n].size() != domain_->size(n))
            throw Error("component " + std::to_string(n) + " has wrong length");
        for (int v : components_[n])
            if (v < 0 || static_cast<std::size_t>(v) >= codomain_->size(n))
                throw Error("component " + std::to_string(n) + " points outside the codomain");
    }
}

SimplicialMap SimplicialMap::identity(const SSetPtr& x)
{
    std::vector<std::vector<int>> comp(x->dim() + 1);
    for (int n = 0; n <= x->dim(); ++n) {
        comp[n].resize(x->size(n));
        for (std::size_t k = 0; k < comp[n].size(); ++k)
            comp[n][k] = static_cast<int>(k);
    }
    return {x, x, std::move(comp)};
}

bool SimplicialMap::injective() const
{
    for (int n = 0; n <= dim(); ++n) {
        std::vector<std::uint8_t> seen(codomain_->size(n), 0);
        for (int v : components_[n]) {
            if (seen[v])
                return false;
            seen[v] = 1;
        }
    }
    return true;
}

bool SimplicialMap::bijective() const
{
    for (int n = 0; n <= dim(); ++n)
        if (domain_->size(n) != codomain_->size(n))
            return false;
    return injective();
}

Mask SimplicialMap::image() const
{
    Mask m = empty_mask(*codomain_);
    for (int n = 0; n <= dim(); ++n)
        for (int v : components_[n])
            m[n][v] = 1;
    return m;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (f.codomain() != g.domain() && !(*f.codomain() == *g.domain()))
        throw Error("cannot compose: codomain and domain differ");
    std::vector<std::vector<int>> comp(f.dim() + 1);
    for (int n = 0; n <= f.dim(); ++n) {
        comp[n].resize(f.component(n).size());
        for (std::size_t k = 0; k < comp[n].size(); ++k)
            comp[n][k] = g(n, f(n, static_cast<int>(k)));
    }
    return {f.domain(), g.codomain(), std::move(comp)};
}

bool equal_by_labels(const SimplicialMap& f, const SimplicialMap& g)
{
    if (f.dim() != g.dim())
        return false;
    for (int n = 0; n <= f.dim(); ++n) {
        if (f.domain()->size(n) != g.domain()->size(n))
            return false;
        for (std::size_t k = 0; k < f.domain()->size(n); ++k) {
            const int kk = static_cast<int>(k);
            if (!(f.domain()->label(n, kk) == g.domain()->label(n, kk)))
                return false;
            if (!(f.codomain()->label(n, f(n, kk)) == g.codomain()->label(n, g(n, kk))))
                return false;
        }
    }
    return true;
}

SimplicialMap inverse(const SimplicialMap& f)
{
    if (!f.bijective())
        throw Error("map is not invertible");
    std::vector<std::vector<int>> comp(f.dim() + 1);
    for (int n = 0; n <= f.dim(); ++n) {
        comp[n].resize(f.component(n).size());
        for (std::size_t k = 0; k < comp[n].size(); ++k)
            comp[n][f(n, static_cast<int>(k))] = static_cast<int>(k);
    }
    return {f.codomain(), f.domain(), std::move(comp)};
}

Inclusion::Inclusion(SimplicialMap map) : map_(std::move(map))
{
    if (!map_.injective())
        throw Error("inclusion must be injective in every dimension");
}

std::vector<std::vector<int>> Inclusion::preimage() const
{
    std::vector<std::vector<int>> pre(map_.dim() + 1);
    for (int n = 0; n <= map_.dim(); ++n) {
        pre[n].assign(codomain()->size(n), -1);
        for (std::size_t k = 0; k < map_.component(n).size(); ++k)
            pre[n][map_(n, static_cast<int>(k))] = static_cast<int>(k);
    }
    return pre;
}

SimplicialMap corestrict(const SimplicialMap& f, const Inclusion& sub)
{
    if (f.codomain() != sub.codomain() && !(*f.codomain() == *sub.codomain()))
        throw Error("corestriction target is not a subobject of the codomain");
    const auto pre = sub.preimage();
    std::vector<std::vector<int>> comp(f.dim() + 1);
    for (int n = 0; n <= f.dim(); ++n) {
        comp[n].resize(f.component(n).size());
        for (std::size_t k = 0; k < comp[n].size(); ++k) {
            const int v = pre[n][f(n, static_cast<int>(k))];
            if (v < 0)
                throw Error("map does not land in the requested subcomplex");
            comp[n][k] = v;
        }
    }
    return {f.domain(), sub.domain(), std::move(comp)};
}

} // namespace sset
