#pragma once

#include "sset/category.hpp"
#include "sset/simplicial_map.hpp"
#include "sset/simplicial_set.hpp"

#include <functional>
#include <vector>

namespace sset {

// Builds a simplicial set from labels alone: face and degeneracy tables are
// obtained by applying the given label operations and looking the result up.
using LabelOp = std::function<Label(int n, int i, const Label&)>;
SimplicialSet from_label_ops(int D, std::vector<std::vector<Label>> labels, const LabelOp& face, const LabelOp& degeneracy);

// Builds a map whose component on each simplex is given by a label function.
SimplicialMap map_by_labels(const SSetPtr& domain, const SSetPtr& codomain,
                            const std::function<Label(int n, const Label&)>& f);

enum class StandardKind { simplex, boundary, interval_groupoid_nerve };

// Δ[n], ∂Δ[n] or J, truncated at D. Simplices of Δ[n] are monotone sequences,
// simplices of J are bit-vectors.
SSetPtr make_standard(StandardKind kind, int n, int D);
SSetPtr standard_simplex(int n, int D);
SSetPtr interval_nerve(int D);
SSetPtr terminal(int D);
SSetPtr empty_set(int D);

SSetPtr nerve(const FiniteCategory& c, int D);

// X×Y with pair labels. In each dimension the pair (a, b) sits at index
// a·|Y_n| + b, which is also its label rank.
SSetPtr product(const SSetPtr& x, const SSetPtr& y);
SimplicialMap projection_first(const SSetPtr& prod, const SSetPtr& x);
SimplicialMap projection_second(const SSetPtr& prod, const SSetPtr& y);
// (f, g): W -> X×Y.
SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g, const SSetPtr& prod);
// f×g: A×C -> B×D.
SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, const SSetPtr& source, const SSetPtr& target);

// Subcomplex given by a mask that must already be closed under faces and
// degeneracies.
Inclusion subcomplex(const SSetPtr& x, const Mask& mask);
// Smallest subcomplex mask containing the marked simplices.
Mask closure(const SimplicialSet& x, Mask marked);
bool is_subcomplex(const SimplicialSet& x, const Mask& mask);

// Simplices all of whose vertices are in the marked vertex set.
Mask full_mask_on(const SimplicialSet& x, const std::vector<std::uint8_t>& vertex_marks);
Inclusion full_subcomplex(const SSetPtr& x, const std::vector<Label>& vertices);
Inclusion full_subcomplex_by_index(const SSetPtr& x, const std::vector<int>& vertices);

Inclusion skeleton(const SSetPtr& x, int k);
// ∂Δ[n] ↪ Δ[n].
Inclusion boundary_inclusion(int n, int D);
// Λ^n_k ↪ Δ[n]: all faces except the k-th.
Inclusion horn_inclusion(int n, int k, int D);
// Union of subcomplexes of one ambient object.
Inclusion union_of(const SSetPtr& ambient, const std::vector<Mask>& parts);

struct Coproduct {
    SSetPtr object;
    std::vector<SimplicialMap> injections;
};
// Labels are tagged with the summand position.
Coproduct coproduct(const std::vector<SSetPtr>& summands, int D);
// Copairing [f_0, ..., f_m] out of a coproduct.
SimplicialMap copairing(const Coproduct& c, const std::vector<SimplicialMap>& maps);

// Pushout of C <- A ↪ B. Simplices of C keep the tag 0, simplices of B off
// the image of A get the tag 1.
struct Pushout {
    SSetPtr object;
    SimplicialMap from_b;
    Inclusion from_c;
};
Pushout pushout(const Inclusion& f, const SimplicialMap& g);
// The unique map out of a pushout given a cocone (u: B -> T, v: C -> T).
// Throws if the cocone does not commute.
SimplicialMap pushout_induced(const Pushout& p, const Inclusion& f, const SimplicialMap& g,
                              const SimplicialMap& u, const SimplicialMap& v);

// Δ[n] -> X classifying the n-simplex k.
SimplicialMap classifying_map(const SSetPtr& x, int n, int k);
SimplicialMap to_terminal(const SSetPtr& x);
SimplicialMap from_empty(const SSetPtr& x);
// Every m-simplex goes to the totally degenerate m-simplex on the vertex.
SimplicialMap constant_map(const SSetPtr& domain, const SSetPtr& codomain, int vertex);

// All monotone maps [m] -> [n], in lexicographic order.
std::vector<std::vector<int>> monotone_sequences(int m, int n);

} // namespace sset
