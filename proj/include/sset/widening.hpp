#pragma once

#include "sset/constructions.hpp"
#include "sset/diagram.hpp"
#include "sset/simplicial_map.hpp"

#include <optional>
#include <vector>

namespace sset {

// W_ν(X): the full subcomplex of J×X on ({0}×X_0) ∪ ({1}×ν). Simplices are
// labelled <bits, σ>. Vertex sets are sorted lists of vertex indices of X.
struct Widening {
    SSetPtr base;
    std::vector<int> marked;
    SSetPtr product;   // J×X
    Inclusion result;  // W_ν(X) ↪ J×X

    [[nodiscard]] const SSetPtr& object() const { return result.domain(); }
};

Widening widen(const SSetPtr& x, std::vector<int> marked);
Widening widen(const SSetPtr& x, const std::vector<Label>& marked);

// Indices of the given vertex labels; throws on unknown labels.
std::vector<int> vertex_indices(const SimplicialSet& x, const std::vector<Label>& vertices);
// The vertex (0, y) of a widening, for a vertex label y of its base.
Label zero_vertex(const Label& y);

// r_ν: J×X -> J, zeroing a_i wherever vertex i of σ lies outside ν.
// jx must be product(J, x).
SimplicialMap partial_projection(const SSetPtr& jx, const SSetPtr& x, const std::vector<int>& nu);
// R_{ν,X} = (r_ν, p_X) with codomain W_ν(X).
SimplicialMap retraction(const Widening& w);

// Narrowness read on nondegenerate simplices of dimension <= D. A non-narrow
// answer carries a simplex repeating the vertex.
struct NarrowCheck {
    bool narrow = true;
    int witness_dim = -1;
    int witness = -1;
};
NarrowCheck is_narrow(const SimplicialSet& x, int v);

// The inclusion X ↪ Y widened at ν ⊆ Y_0:
// ({0}×Y) ∪ W_{ν∩X_0}(X) ↪ W_ν(Y), all living inside J×Y.
struct WidenedInclusion {
    Inclusion inner;                 // X ↪ Y
    std::vector<int> marked;         // ν, vertex indices of Y
    std::vector<int> marked_inner;   // ν ∩ X_0, vertex indices of X
    Widening wide;                   // W_ν(Y) ↪ J×Y
    Inclusion domain_in_product;     // ({0}×Y) ∪ W_{ν∩X_0}(X) ↪ J×Y
    Inclusion map;                   // ({0}×Y) ∪ W_{ν∩X_0}(X) ↪ W_ν(Y)

    [[nodiscard]] const SSetPtr& domain() const { return map.domain(); }
    [[nodiscard]] const SSetPtr& codomain() const { return map.codomain(); }
    [[nodiscard]] const SSetPtr& product() const { return wide.product; }
};

WidenedInclusion widened_inclusion(const Inclusion& inner, std::vector<int> marked);

// φ′: W_μ(X) -> W_{μ∖ν}(W_ν(X)), (a, σ) ↦ (r_{μ∖ν}(a, σ), (r_ν(a, σ), σ)).
// The second widening is taken at the vertices (0, y), y ∈ μ∖ν.
struct WideningIso {
    Widening outer;   // W_μ(X)
    Widening first;   // W_ν(X)
    Widening second;  // W_{μ∖ν}(W_ν(X))
    SimplicialMap phi;
};
WideningIso widening_iso(const SSetPtr& x, const std::vector<int>& nu, const std::vector<int>& mu);

// The factorization of an inclusion widened at μ through ν ⊆ μ:
//   C = ({0}×Y) ∪ W_{μ'}(X)  --(a)-->  U = W_ν(Y) ∪ W_{μ'}(X)  --(b)-->  W_μ(Y)
// where (a) is the pushout of stage1 (the inclusion widened at ν) along
// A = ({0}×Y) ∪ W_{ν'}(X) ↪ C, and (b) is carried by φ′ onto stage2, the
// inclusion W_{ν'}(X) ↪ W_ν(Y) widened at μ∖ν.
struct FactorWitness {
    std::vector<int> nu;
    WidenedInclusion stage1;
    Inclusion along;            // A ↪ C
    Pushout square;             // of stage1.map and along
    Inclusion union_in_product; // U ↪ J×Y
    SimplicialMap comparison;   // P -> U
    Inclusion b;                // U ↪ W_μ(Y)
    WideningIso iso;            // φ′ for Y, ν ⊆ μ
    WidenedInclusion stage2;
    SimplicialMap psi;          // U -> stage2 domain, φ′ restricted
    Diagram diagram;
};
FactorWitness factor_widened(const WidenedInclusion& w, const std::vector<int>& nu);

// The retract diagram exhibiting a widened inclusion as a retract of
// ({0} ↪ J) □ (X ↪ Y):
//   D  ↪  M = ({0}×Y) ∪ (J×X)  --id ∪ R_{ν',X}-->  D
//   ↓           ↓                                   ↓
//   W_ν(Y) ↪    J×Y            --R_{ν,Y}-->        W_ν(Y)
struct RetractWitness {
    Inclusion middle;           // M ↪ J×Y
    Inclusion top_incl;         // D ↪ M
    SimplicialMap top_retr;     // M -> D
    Inclusion bottom_incl;      // W_ν(Y) ↪ J×Y
    SimplicialMap bottom_retr;  // J×Y -> W_ν(Y)
    Diagram diagram;
};
RetractWitness retract_witness(const WidenedInclusion& w);

// Peels the marked vertices one at a time, in label order. Step j factors the
// current widened inclusion through its first marked vertex; the next step
// works on that factorization's stage2. to_original carries each step's
// codomain back to the original W_μ(Y), where before/after record the images
// of the step's source and target.
struct PeelStep {
    Label vertex;               // label in the original Y
    FactorWitness factor;
    SimplicialMap to_original;
    Mask before;
    Mask after;
    bool narrow = false;        // vertex narrow in the step's Y
};
struct SingleVertexChain {
    std::vector<PeelStep> steps;
    Diagram diagram;
};
SingleVertexChain decompose_to_single(const WidenedInclusion& w);

} // namespace sset
