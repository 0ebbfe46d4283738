#pragma once

#include "sset/simplicial_map.hpp"
#include "sset/simplicial_set.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace sset {

// Simplices of X grouped by their tuple of faces, so that the fillers of a
// given boundary can be listed directly. Candidates come out in index order.
class FaceIndex {
public:
    explicit FaceIndex(SSetPtr x);

    [[nodiscard]] const SSetPtr& object() const { return x_; }
    // n-simplices with d_i = faces[i]; n >= 1.
    [[nodiscard]] const std::vector<int>& fillers(int n, const std::vector<int>& faces) const;

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };
    SSetPtr x_;
    std::vector<std::unordered_map<std::vector<int>, std::vector<int>, KeyHash>> by_faces_;
    std::vector<int> none_;
};

// Backtracking enumeration of simplicial maps B -> X.
//
// Dimensions are filled in increasing order. Entering a dimension forces the
// images of degenerate simplices and checks every preassigned one; the
// nondegenerate simplices left open are then tried in index order, each
// against the fillers of its already-assigned boundary in index order. The
// first map found and the enumeration order are therefore deterministic.
class MapSearch {
public:
    struct Options {
        // Preassigned images, -1 where open. Empty means nothing fixed.
        std::vector<std::vector<int>> fixed;
        // Extra constraint on the image of simplex k of dimension n.
        std::function<bool(int n, int k, int image)> allowed;
        bool injective = false;
        // Nondegenerate simplices go to nondegenerate ones and degenerate to
        // degenerate; with injective and equal sizes this searches for
        // isomorphisms.
        bool preserve_degeneracy = false;
    };

    MapSearch(SSetPtr domain, SSetPtr codomain, Options options, std::shared_ptr<const FaceIndex> index = nullptr);

    // Calls visit on every map; visit returns false to stop early. Returns the
    // number of maps visited.
    std::size_t for_each(const std::function<bool(const SimplicialMap&)>& visit);
    std::optional<SimplicialMap> first();

    // Search nodes expanded by the last run.
    [[nodiscard]] std::size_t nodes() const { return nodes_; }

private:
    bool enter(int n);
    void leave(int n);
    bool accept(int n, int k, int image) const;
    bool edge_lookahead(int v) const;
    bool recurse(int n, std::size_t pos);

    SSetPtr b_;
    SSetPtr x_;
    Options opt_;
    std::shared_ptr<const FaceIndex> index_;
    std::vector<std::vector<int>> comp_;
    std::vector<std::vector<int>> open_;       // open nondegenerate cells per dimension
    std::vector<std::vector<int>> forced_;     // cells assigned by enter(n), undone by leave(n)
    std::vector<std::vector<std::uint8_t>> used_;
    std::vector<std::vector<std::pair<int, int>>> edges_at_;  // vertex -> (edge, other end)
    const std::function<bool(const SimplicialMap&)>* visit_ = nullptr;
    std::size_t found_ = 0;
    std::size_t nodes_ = 0;
};

// An isomorphism X -> Y, searched for with the engine above. allowed may
// restrict images further (e.g. to respect markings).
std::optional<SimplicialMap> find_isomorphism(const SSetPtr& x, const SSetPtr& y,
                                              std::function<bool(int n, int k, int image)> allowed = {});

} // namespace sset
