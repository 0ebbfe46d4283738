#include "sset/corpus.hpp"

#include "sset/category.hpp"
#include "sset/constructions.hpp"
#include "sset/isohorn.hpp"

namespace sset {

std::vector<NamedObject> builtin_corpus(int D)
{
    std::vector<NamedObject> out;
    for (int n = 0; n <= 3; ++n)
        out.emplace_back("delta" + std::to_string(n), standard_simplex(n, D));
    for (int n = 0; n <= 3; ++n)
        out.emplace_back("boundary" + std::to_string(n), make_standard(StandardKind::boundary, n, D));
    for (auto [n, k] : {std::pair{2, 0}, {2, 1}, {2, 2}, {3, 1}})
        out.emplace_back("horn" + std::to_string(n) + "_" + std::to_string(k), horn_inclusion(n, k, D).domain());
    auto j = interval_nerve(D);
    out.emplace_back("J", j);
    out.emplace_back("sk1J", skeleton(j, 1).domain());
    out.emplace_back("V0[2]", isohorn(2, 0, D).body());
    out.emplace_back("nabla0[2]", isoplex(2, 0, D).body());
    out.emplace_back("N[2]", nerve(poset_category(2), D));
    out.emplace_back("N(iso)", nerve(interval_groupoid(), D));
    out.emplace_back("N(Z/2)", nerve(cyclic_group_category(2), D));
    return out;
}

std::vector<NamedWidened> widened_corpus(int D)
{
    std::vector<NamedWidened> out;
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i < n; ++i)
            out.push_back({"V_" + std::to_string(i) + "[" + std::to_string(n) + "]", isohorn(n, i, D).widened});
    auto add = [&](const std::string& name, const Inclusion& inner, std::vector<int> nu) {
        std::string tag = name + " at {";
        for (std::size_t k = 0; k < nu.size(); ++k)
            tag += (k ? "," : "") + std::to_string(nu[k]);
        out.push_back({tag + "}", widened_inclusion(inner, std::move(nu))});
    };
    add("bdry1", boundary_inclusion(1, D), {0, 1});
    add("bdry1", boundary_inclusion(1, D), {1});
    add("bdry2", boundary_inclusion(2, D), {0, 1, 2});
    add("bdry2", boundary_inclusion(2, D), {0});
    add("bdry2", boundary_inclusion(2, D), {1, 2});
    add("horn2_0", horn_inclusion(2, 0, D), {0, 1, 2});
    add("horn2_0", horn_inclusion(2, 0, D), {1});
    add("horn2_0", horn_inclusion(2, 0, D), {2});
    add("horn2_1", horn_inclusion(2, 1, D), {0, 2});
    add("horn3_1", horn_inclusion(3, 1, D), {0});
    add("horn3_1", horn_inclusion(3, 1, D), {0, 1, 2, 3});
    add("id_delta1", Inclusion(SimplicialMap::identity(standard_simplex(1, D))), {0});
    add("empty_in_point", Inclusion(from_empty(standard_simplex(0, D))), {0});
    add("sk0J", skeleton(interval_nerve(D), 0), {0});
    add("sk0delta2", skeleton(standard_simplex(2, D), 0), {1});
    add("vertex0_delta1", full_subcomplex_by_index(standard_simplex(1, D), {0}), {0});
    return out;
}

} // namespace sset
