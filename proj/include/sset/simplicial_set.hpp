#pragma once

#include "sset/label.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace sset {

// Per-dimension membership flags over the simplices of some simplicial set.
using Mask = std::vector<std::vector<std::uint8_t>>;

// A finite simplicial set truncated at dimension D: simplex tables in
// dimensions 0..D, face maps d_i for n >= 1 and degeneracy maps s_i for n < D.
//
// Simplices of each dimension are stored sorted by label, so the index of a
// simplex is also its rank in label order. Every search and enumeration in
// the library walks simplices by index, which makes results deterministic.
//
// Instances are immutable; share them through SSetPtr.
class SimplicialSet {
public:
    // Raw construction input. Rows need not be sorted; from_tables sorts
    // labels and permutes the tables to match.
    struct Tables {
        int dim = 0;
        std::vector<std::vector<Label>> labels;                 // labels[n][k]
        std::vector<std::vector<std::vector<int>>> face;        // face[n][i][k], empty for n = 0
        std::vector<std::vector<std::vector<int>>> degeneracy;  // degeneracy[n][i][k], empty for n = D
    };

    // Checks shape, index ranges and label uniqueness, but not the simplicial
    // identities: a corrupted table is representable so validate_sset can
    // report on it.
    static SimplicialSet from_tables(Tables t);

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] std::size_t size(int n) const { return tables_.labels.at(n).size(); }
    [[nodiscard]] std::size_t total_size() const;
    [[nodiscard]] bool empty() const { return tables_.labels[0].empty(); }

    [[nodiscard]] const Label& label(int n, int k) const { return tables_.labels[n][k]; }
    [[nodiscard]] std::span<const Label> labels(int n) const { return tables_.labels.at(n); }

    [[nodiscard]] int face(int n, int i, int k) const { return tables_.face[n][i][k]; }
    [[nodiscard]] int degeneracy(int n, int i, int k) const { return tables_.degeneracy[n][i][k]; }

    [[nodiscard]] std::optional<int> find(int n, const Label& l) const;
    [[nodiscard]] int index_of(int n, const Label& l) const;

    // Vertex j of an n-simplex, obtained by iterated faces.
    [[nodiscard]] std::span<const int> vertices(int n, int k) const
    {
        return {vertices_[n].data() + static_cast<std::size_t>(k) * (n + 1), static_cast<std::size_t>(n + 1)};
    }

    [[nodiscard]] bool is_degenerate(int n, int k) const { return degenerate_[n][k] != 0; }
    [[nodiscard]] std::vector<int> nondegenerate(int n) const;
    [[nodiscard]] std::size_t nondegenerate_count(int n) const;
    // Highest dimension holding a nondegenerate simplex, or -1 when empty.
    [[nodiscard]] int max_nondegenerate_dim() const;

    // Pulls simplex k of dimension n back along a monotone map [m] -> [n],
    // given as its list of values. The result lives in dimension m, which must
    // not exceed D.
    [[nodiscard]] int apply(int n, int k, std::span<const int> op) const;

    [[nodiscard]] const Tables& tables() const { return tables_; }

    // Same labels and same tables.
    friend bool operator==(const SimplicialSet& a, const SimplicialSet& b);

private:
    SimplicialSet() = default;

    int dim_ = 0;
    Tables tables_;
    std::vector<std::unordered_map<Label, int, LabelHash>> index_;
    std::vector<std::vector<int>> vertices_;
    std::vector<std::vector<std::uint8_t>> degenerate_;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

inline SSetPtr share(SimplicialSet s) { return std::make_shared<const SimplicialSet>(std::move(s)); }

Mask empty_mask(const SimplicialSet& x);
Mask full_mask(const SimplicialSet& x);
Mask mask_union(const Mask& a, const Mask& b);
Mask mask_intersection(const Mask& a, const Mask& b);
bool mask_subset(const Mask& a, const Mask& b);
std::size_t mask_count(const Mask& m, int n);

} // namespace sset
