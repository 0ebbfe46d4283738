#pragma once

#include "sset/simplicial_map.hpp"
#include "sset/simplicial_set.hpp"

#include <string>
#include <vector>

namespace sset {

// One failed identity. entries names every table entry read while checking
// it, e.g. "d1[2](0,1,2)" for the face d_1 of the 2-simplex (0,1,2) or
// "f[1](0,1)" for a map component.
struct Violation {
    std::string identity;
    int dim = 0;
    std::string simplex;
    std::vector<std::string> entries;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] std::string summary(std::size_t limit = 5) const;
};

// Simplicial identities and injectivity of degeneracies, everywhere both
// sides are defined within 0..D.
ValidationReport validate_sset(const SimplicialSet& x);
// Commutation with every face and degeneracy map.
ValidationReport validate_map(const SimplicialMap& f);

std::string face_entry(const SimplicialSet& x, int n, int i, int k);
std::string degeneracy_entry(const SimplicialSet& x, int n, int i, int k);

} // namespace sset
