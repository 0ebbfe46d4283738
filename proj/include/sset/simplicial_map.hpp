#pragma once

#include "sset/simplicial_set.hpp"

#include <vector>

namespace sset {

// A dimensionwise function between two simplicial sets of equal truncation.
// Construction checks shapes and index ranges only; whether the map commutes
// with faces and degeneracies is the business of validate_map.
class SimplicialMap {
public:
    SimplicialMap(SSetPtr domain, SSetPtr codomain, std::vector<std::vector<int>> components);

    static SimplicialMap identity(const SSetPtr& x);

    [[nodiscard]] const SSetPtr& domain() const { return domain_; }
    [[nodiscard]] const SSetPtr& codomain() const { return codomain_; }
    [[nodiscard]] int dim() const { return domain_->dim(); }

    [[nodiscard]] int operator()(int n, int k) const { return components_[n][k]; }
    [[nodiscard]] const std::vector<int>& component(int n) const { return components_[n]; }
    [[nodiscard]] const std::vector<std::vector<int>>& components() const { return components_; }

    [[nodiscard]] bool injective() const;
    [[nodiscard]] bool bijective() const;
    // Simplices of the codomain hit by the map.
    [[nodiscard]] Mask image() const;

private:
    SSetPtr domain_;
    SSetPtr codomain_;
    std::vector<std::vector<int>> components_;
};

// g after f. The codomain of f and the domain of g must be equal objects.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// Same domain labels and, simplex by simplex, same image labels. Used to
// compare maps built along different routes into equal-looking objects.
bool equal_by_labels(const SimplicialMap& f, const SimplicialMap& g);

// Inverse of a bijective map.
SimplicialMap inverse(const SimplicialMap& f);

// An injective simplicial map, i.e. a monomorphism A -> B. Its image is a
// subcomplex of B.
class Inclusion {
public:
    explicit Inclusion(SimplicialMap map);

    [[nodiscard]] const SimplicialMap& map() const { return map_; }
    [[nodiscard]] const SSetPtr& domain() const { return map_.domain(); }
    [[nodiscard]] const SSetPtr& codomain() const { return map_.codomain(); }
    [[nodiscard]] int operator()(int n, int k) const { return map_(n, k); }
    [[nodiscard]] Mask image() const { return map_.image(); }
    // For each codomain simplex, its preimage index or -1.
    [[nodiscard]] std::vector<std::vector<int>> preimage() const;

private:
    SimplicialMap map_;
};

// f followed by a map out of its codomain, restricted to land in the image of
// sub; the result is re-expressed with codomain sub.domain().
SimplicialMap corestrict(const SimplicialMap& f, const Inclusion& sub);

} // namespace sset
