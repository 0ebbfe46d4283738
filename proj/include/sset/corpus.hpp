#pragma once

#include "sset/simplicial_set.hpp"
#include "sset/widening.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sset {

using NamedObject = std::pair<std::string, SSetPtr>;

// Δ[n] and ∂Δ[n] for n <= 3, the horns Λ²₀, Λ²₁, Λ²₂, Λ³₁, J, sk₁J, V₀[2],
// ∇₀[2] and the nerves of [2], of the free isomorphism and of Z/2.
std::vector<NamedObject> builtin_corpus(int D);

struct NamedWidened {
    std::string name;
    WidenedInclusion widened;
};

// Widened inclusions for the retract and factorization suites, starting with
// every iso-horn inclusion V_i[n], n <= 3.
std::vector<NamedWidened> widened_corpus(int D);

} // namespace sset
