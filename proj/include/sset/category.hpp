#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sset {

struct Morphism {
    std::string name;
    std::string source;
    std::string target;
};

// A finite category given by objects, named morphisms and a composition
// table. compose(g, f) is defined exactly when target(f) == source(g).
class FiniteCategory {
public:
    // Identities are found in the composition table; an object without one
    // gets a fresh morphism "id_<object>". Throws unless the result is a
    // category (closed, associative, unital composition).
    FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                   std::vector<std::array<std::string, 3>> compositions);

    [[nodiscard]] const std::vector<std::string>& objects() const { return objects_; }
    [[nodiscard]] const std::vector<Morphism>& morphisms() const { return morphisms_; }
    [[nodiscard]] const Morphism& morphism(const std::string& name) const;
    [[nodiscard]] const std::string& identity(const std::string& object) const;
    [[nodiscard]] bool is_identity(const std::string& morphism) const;
    // g after f; nullopt when not composable.
    [[nodiscard]] std::optional<std::string> compose(const std::string& g, const std::string& f) const;
    // Morphisms leaving an object, in declaration order.
    [[nodiscard]] std::vector<std::string> out_of(const std::string& object) const;

    // The full subcategory on a subset of objects.
    [[nodiscard]] FiniteCategory full_subcategory(const std::vector<std::string>& keep) const;

    // The composition table as [g, f, g∘f] triples, including identities.
    [[nodiscard]] std::vector<std::array<std::string, 3>> composition_table() const;

private:
    void validate() const;

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::map<std::string, std::size_t> by_name_;
    std::map<std::string, std::string> identity_;
    std::map<std::pair<std::string, std::string>, std::string> compose_;
};

// The poset [n] = {0 < 1 < ... < n}.
FiniteCategory poset_category(int n);
// The free-living isomorphism: two objects, one morphism in each hom-set.
FiniteCategory interval_groupoid();
// [n] with the arrow i -> i+1 inverted.
FiniteCategory inverted_poset_category(int n, int i);
// A cyclic group of the given order as a one-object category.
FiniteCategory cyclic_group_category(int order);
// The thin category of a preorder given by a reflexive, transitive relation.
FiniteCategory preorder_category(int objects, const std::vector<std::vector<bool>>& leq);

} // namespace sset
