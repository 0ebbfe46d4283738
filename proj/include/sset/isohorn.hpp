#pragma once

#include "sset/category.hpp"
#include "sset/constructions.hpp"
#include "sset/diagram.hpp"
#include "sset/error.hpp"
#include "sset/json_io.hpp"
#include "sset/widening.hpp"

#include <vector>

namespace sset {

// ∇ᵢ[n] = W_i(Δ[n−1]), with its identification with the nerve of [n]_i
// (objects 0..n, i ≅ i+1). Vertex (0, v) sits at position v for v <= i and
// v + 1 above; (1, i) sits at position i + 1.
struct Isoplex {
    int n = 0;
    int i = 0;
    Widening wide;
    SSetPtr nerve_body;
    SimplicialMap to_nerve;

    [[nodiscard]] const SSetPtr& body() const { return wide.object(); }
    // Vertex index of body at nerve position p.
    [[nodiscard]] int vertex_at(int p) const;
};

Isoplex isoplex(int n, int i, int D);

// Vᵢ[n] = ({0}×Δ[n−1]) ∪ W_i(∂Δ[n−1]) ↪ ∇ᵢ[n], i.e. ∂Δ[n−1] ↪ Δ[n−1]
// widened at {i}.
struct IsoHorn {
    int n = 0;
    int i = 0;
    WidenedInclusion widened;
    Isoplex plex;

    [[nodiscard]] const SSetPtr& body() const { return widened.domain(); }
    [[nodiscard]] const Inclusion& inclusion() const { return widened.map; }
};

IsoHorn isohorn(int n, int i, int D);

// d_j∇ᵢ[n], the full subcomplex on all vertices but the one at position j.
// For j ∈ {i, i+1} it is an (n−1)-simplex, otherwise an (n−1)-isoplex whose
// index is found by isomorphism search and reported in observed_i.
struct IsoplexFace {
    int j = 0;
    Inclusion face;
    bool simplex = false;
    int observed_i = -1;
    SimplicialMap iso;  // face -> Δ[n−1] or face -> ∇_{observed_i}[n−1]
};

IsoplexFace isoplex_face(int n, int i, int j, int D);

// Raised when decomposing at a vertex that is not narrow.
class NotNarrow : public Error {
public:
    NotNarrow(const Label& vertex, const Label& witness);
    Label vertex;
    Label witness;
};

struct Cell {
    Label sigma;   // nondegenerate k-simplex of Y
    int i_sigma;   // position of y in sigma
};

// One pushout of a coproduct of iso-horn inclusions:
//   ∐ V_{i_σ}[k+1] --attaching--> C_{k-1}
//        ↓ horns                    ↓
//   ∐ ∇_{i_σ}[k+1] --cells----->   C_k
// C_{k-1} and C_k are subcomplexes of W_y(Y). The stage k = 0 exists only
// when y is not in X and attaches {0} ↪ J at y.
struct CellStage {
    int k = 0;
    bool truncated = false;  // cells of dimension D+1, kept up to D
    std::vector<Cell> cells;
    std::vector<IsoHorn> horns;
    Coproduct horn_sum;
    Coproduct plex_sum;
    Inclusion horn_inclusion;  // ∐V ↪ ∐∇
    SimplicialMap attaching;   // ∐V -> C_{k-1}
    SimplicialMap cell_map;    // ∐∇ -> C_k
    Inclusion before;          // C_{k-1} ↪ W_y(Y)
    Inclusion after;           // C_k ↪ W_y(Y)
    Inclusion step;            // C_{k-1} ↪ C_k
    Pushout square;
    SimplicialMap comparison;  // pushout -> C_k
};

struct CellDecomposition {
    Inclusion inner;  // X ↪ Y
    int y = -1;
    WidenedInclusion target;  // X ↪ Y widened at {y}
    std::vector<CellStage> stages;
    bool truncated = false;

    [[nodiscard]] std::size_t cell_count() const;
};

// Throws NotNarrow when y is not narrow in Y. Only nonempty stages are listed.
CellDecomposition decompose_single_narrow(const Inclusion& inner, int y);

// Replays every stage: squares commute, comparisons are isomorphisms, stages
// chain, and the chain runs from the widened inclusion's domain to W_y(Y).
Diagram verify_decomposition(const CellDecomposition& d);

json to_json(const CellDecomposition& d, const Diagram& checks);

} // namespace sset
