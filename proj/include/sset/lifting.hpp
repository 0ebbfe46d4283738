#pragma once

#include "sset/constructions.hpp"
#include "sset/isohorn.hpp"
#include "sset/json_io.hpp"
#include "sset/search.hpp"
#include "sset/widening.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sset {

// f □ g for f: A ↪ B, g: W ↪ Z: (A×Z) ∪ (B×W) ↪ B×Z. The factor of f comes
// first, so ({0} ↪ J) □ (X ↪ Y) lives in J×Y like the widenings do.
Inclusion pushout_product(const Inclusion& f, const Inclusion& g);
// The isomorphism B×Z -> Z×B swapping coordinates.
SimplicialMap swap_factors(const SSetPtr& bz, const SSetPtr& zb);

// {0} ↪ J.
Inclusion zero_in_j(int D);
// ({0} ↪ J) □ (∂Δ[n] ↪ Δ[n]).
Inclusion class_a(int n, int D);

// A square
//   A --top--> X
//   ↓ left     ↓ right
//   B --bottom-> Y
struct LiftingProblem {
    Inclusion left;
    SimplicialMap right;
    SimplicialMap top;
    SimplicialMap bottom;
};

// The square against X -> ∗.
LiftingProblem fibrancy_problem(const Inclusion& left, const SimplicialMap& top);
bool commutes(const LiftingProblem& p);

// First lift in the search order, or nullopt when none exists up to the
// truncation. Throws Error when the square does not commute.
std::optional<SimplicialMap> solve_lift(const LiftingProblem& p, std::shared_ptr<const FaceIndex> index = nullptr);

enum class Family { iso_horns, class_a };
std::string family_name(Family f);
Family parse_family(const std::string& name);

struct MemberVerdict {
    std::string member;  // "V_i[n]" or "A(n)"
    int n = 0;
    int i = 0;
    Inclusion left;
    std::size_t squares = 0;
    std::vector<SimplicialMap> failures;  // tops without a lift, in search order

    [[nodiscard]] bool pass() const { return failures.empty(); }
};

struct RlpReport {
    std::string target;
    SSetPtr object;
    Family family = Family::iso_horns;
    int N = 0;
    int D = 0;
    std::vector<MemberVerdict> members;
    // A pass only says that no obstruction shows up to dimension D.
    bool pass_is_truncated = true;

    [[nodiscard]] bool pass() const;
    [[nodiscard]] std::size_t squares() const;
    [[nodiscard]] std::size_t failures() const;
    [[nodiscard]] json to_json() const;
};

// The replayable witness of one failure: target, left map and top map.
json witness_json(const RlpReport& r, const MemberVerdict& m, const SimplicialMap& top);

// The family members up to N: V_i[n] for 1 <= n <= N, A(n) for 0 <= n <= N.
std::vector<MemberVerdict> family_members(Family family, int N, int D);

struct RlpOptions {
    // Called on every square found to have no lift; equivalence_report may
    // call it from several threads at once.
    std::function<void(const LiftingProblem&)> on_no_lift;
};

// Every map from each member's domain into X, each checked for a lift.
// Throws Error when N > D.
RlpReport check_rlp(const SSetPtr& x, const std::string& name, Family family, int N, const RlpOptions& options = {});

struct EquivalenceRow {
    RlpReport iso_horns;
    RlpReport class_a;

    [[nodiscard]] bool agree() const { return iso_horns.pass() == class_a.pass(); }
};

struct EquivalenceReport {
    int N = 0;
    int D = 0;
    std::vector<EquivalenceRow> rows;

    [[nodiscard]] bool agree() const;
    [[nodiscard]] json to_json() const;
};

// Rows run concurrently (up to jobs at a time) and are kept in corpus order.
EquivalenceReport equivalence_report(const std::vector<std::pair<std::string, SSetPtr>>& corpus, int N,
                                     const RlpOptions& options = {}, unsigned jobs = 0);

// A lift against a widened inclusion obtained from a lift against the
// pushout-product it is a retract of: solve for top∘(id ∪ R) on M ↪ J×Y,
// then restrict along W_ν(Y) ↪ J×Y.
std::optional<SimplicialMap> lift_via_retract(const RetractWitness& r, const SimplicialMap& top);

// A lift against X ↪ Y widened at y, assembled stage by stage from lifts
// against the iso-horn cells. top is a map out of the widened inclusion's
// domain into the target of the fibrancy square X -> ∗.
std::optional<SimplicialMap> lift_via_cells(const CellDecomposition& d, const SimplicialMap& top);

} // namespace sset
