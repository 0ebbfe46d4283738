#include "sset/isohorn.hpp"

#include "sset/search.hpp"
#include "sset/validate.hpp"

#include <algorithm>
#include <map>

namespace sset {

namespace {

void check_range(int n, int i)
{
    if (n < 1 || i < 0 || i > n - 1)
        throw Error("isoplex needs n >= 1 and 0 <= i <= n-1, got n=" + std::to_string(n) + " i=" + std::to_string(i));
}

Isoplex build_isoplex(int n, int i, Widening wide)
{
    const int D = wide.base->dim();
    const auto cat = inverted_poset_category(n, i);
    auto nerve_body = nerve(cat, D);
    // Thin category: at most one morphism a -> b.
    std::vector<std::vector<std::string>> arrow(n + 1, std::vector<std::string>(n + 1));
    for (const auto& m : cat.morphisms())
        arrow[std::stoi(m.source)][std::stoi(m.target)] = m.name;
    auto position = [i](int a, int v) { return v < i ? v : v > i ? v + 1 : v + a; };
    auto to_nerve = map_by_labels(wide.object(), nerve_body, [&](int m, const Label& l) {
        auto a = l.first().ints();
        auto tau = l.second().ints();
        if (m == 0)
            return Label::object(std::to_string(position(a[0], tau[0])));
        std::vector<std::string> word;
        for (int j = 0; j < m; ++j)
            word.push_back(arrow[position(a[j], tau[j])][position(a[j + 1], tau[j + 1])]);
        return Label::word(std::move(word));
    });
    return {n, i, std::move(wide), std::move(nerve_body), std::move(to_nerve)};
}

Inclusion label_inclusion(const SSetPtr& sub, const SSetPtr& super)
{
    return Inclusion(map_by_labels(sub, super, [](int, const Label& l) { return l; }));
}

} // namespace

int Isoplex::vertex_at(int p) const
{
    if (p < 0 || p > n)
        throw Error("isoplex position " + std::to_string(p) + " out of range");
    const int a = p == i + 1 ? 1 : 0;
    const int v = p <= i + 1 ? std::min(p, i) : p - 1;
    return body()->index_of(0, Label::pair(Label::bits({a}), Label::seq({v})));
}

Isoplex isoplex(int n, int i, int D)
{
    check_range(n, i);
    return build_isoplex(n, i, widen(standard_simplex(n - 1, D), std::vector<int>{i}));
}

IsoHorn isohorn(int n, int i, int D)
{
    check_range(n, i);
    auto widened = widened_inclusion(boundary_inclusion(n - 1, D), {i});
    auto plex = build_isoplex(n, i, widened.wide);
    return {n, i, std::move(widened), std::move(plex)};
}

IsoplexFace isoplex_face(int n, int i, int j, int D)
{
    check_range(n, i);
    if (j < 0 || j > n)
        throw Error("face index " + std::to_string(j) + " out of range for an " + std::to_string(n) + "-isoplex");
    const auto plex = isoplex(n, i, D);
    std::vector<int> keep;
    for (int p = 0; p <= n; ++p)
        if (p != j)
            keep.push_back(plex.vertex_at(p));
    auto face = full_subcomplex_by_index(plex.body(), keep);
    if (j == i || j == i + 1) {
        auto iso = find_isomorphism(face.domain(), standard_simplex(n - 1, D));
        if (!iso)
            throw InternalError("face " + std::to_string(j) + " of an isoplex is not a simplex");
        return {j, std::move(face), true, -1, std::move(*iso)};
    }
    for (int ip = 0; ip <= n - 2; ++ip) {
        auto iso = find_isomorphism(face.domain(), isoplex(n - 1, ip, D).body());
        if (iso)
            return {j, std::move(face), false, ip, std::move(*iso)};
    }
    throw InternalError("face " + std::to_string(j) + " of an isoplex matches no smaller isoplex");
}

NotNarrow::NotNarrow(const Label& v, const Label& w)
    : Error("vertex " + v.str() + " is not narrow: it repeats in " + w.str()), vertex(v), witness(w)
{
}

std::size_t CellDecomposition::cell_count() const
{
    std::size_t total = 0;
    for (const auto& s : stages)
        total += s.cells.size();
    return total;
}

CellDecomposition decompose_single_narrow(const Inclusion& inner, int y)
{
    const auto& Y = inner.codomain();
    const int D = Y->dim();
    const auto narrow = is_narrow(*Y, y);
    if (!narrow.narrow)
        throw NotNarrow(Y->label(0, y), Y->label(narrow.witness_dim, narrow.witness));

    CellDecomposition out{inner, y, widened_inclusion(inner, {y}), {}, false};
    const auto& wy = out.target.codomain();
    const Mask in_x = inner.image();
    Mask current = out.target.map.image();
    std::map<std::pair<int, int>, IsoHorn> horn_cache;

    for (int k = 0; k <= D; ++k) {
        std::vector<Cell> cells;
        std::vector<int> sigmas;
        for (int s : Y->nondegenerate(k)) {
            if (in_x[k][s])
                continue;
            auto verts = Y->vertices(k, s);
            auto it = std::find(verts.begin(), verts.end(), y);
            if (it == verts.end())
                continue;
            cells.push_back({Y->label(k, s), static_cast<int>(it - verts.begin())});
            sigmas.push_back(s);
        }
        if (cells.empty())
            continue;

        std::vector<IsoHorn> horns;
        std::vector<SSetPtr> horn_bodies, plex_bodies;
        std::vector<SimplicialMap> cell_maps;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::pair key{k + 1, cells[c].i_sigma};
            auto it = horn_cache.find(key);
            if (it == horn_cache.end())
                it = horn_cache.emplace(key, isohorn(k + 1, cells[c].i_sigma, D)).first;
            horns.push_back(it->second);
            horn_bodies.push_back(horns.back().body());
            plex_bodies.push_back(horns.back().plex.body());
            // W_y(σ): (a, τ) ↦ (a, σ∘τ).
            const int s = sigmas[c];
            cell_maps.push_back(map_by_labels(plex_bodies.back(), wy, [&](int m, const Label& l) {
                return Label::pair(l.first(), Y->label(m, Y->apply(k, s, l.second().ints())));
            }));
        }
        auto horn_sum = coproduct(horn_bodies, D);
        auto plex_sum = coproduct(plex_bodies, D);
        std::vector<SimplicialMap> legs, glue;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            legs.push_back(compose(plex_sum.injections[c], horns[c].inclusion().map()));
            glue.push_back(compose(cell_maps[c], horns[c].inclusion().map()));
        }
        auto horn_incl = Inclusion(copairing(horn_sum, legs));
        auto all_cells = copairing(plex_sum, cell_maps);

        auto before = subcomplex(wy, current);
        current = mask_union(current, all_cells.image());
        auto after = subcomplex(wy, current);
        auto step = label_inclusion(before.domain(), after.domain());
        auto attaching = corestrict(copairing(horn_sum, glue), before);
        auto cell_map = corestrict(all_cells, after);
        auto square = pushout(horn_incl, attaching);
        auto comparison = pushout_induced(square, horn_incl, attaching, cell_map, step.map());

        out.stages.push_back({k, k == D, std::move(cells), std::move(horns), std::move(horn_sum),
                              std::move(plex_sum), std::move(horn_incl), std::move(attaching), std::move(cell_map),
                              std::move(before), std::move(after), std::move(step), std::move(square),
                              std::move(comparison)});
        out.truncated = out.truncated || k == D;
    }
    return out;
}

Diagram verify_decomposition(const CellDecomposition& d)
{
    Diagram diag;
    const auto& Y = d.inner.codomain();
    diag.name = "cell decomposition at " + Y->label(0, d.y).str();
    const Mask in_x = d.inner.image();
    Mask prev = d.target.map.image();
    std::string prev_node = "({0}xY) u W_y(X)";
    int prev_k = -1;
    for (const auto& st : d.stages) {
        const std::string tag = "stage k=" + std::to_string(st.k);
        const std::string node = "C_" + std::to_string(st.k);
        diag.edge(tag + " horns", "coprod V", "coprod nabla");
        diag.edge(tag + " attaching", "coprod V", prev_node);
        diag.edge(tag + " cells", "coprod nabla", node);
        diag.edge(tag + " step", prev_node, node);
        prev_node = node;

        bool cells_ok = st.k > prev_k && !st.cells.empty();
        for (const auto& c : st.cells) {
            auto s = Y->find(st.k, c.sigma);
            cells_ok = cells_ok && s && !Y->is_degenerate(st.k, *s) && !in_x[st.k][*s] && c.i_sigma >= 0 &&
                       c.i_sigma <= st.k && Y->vertices(st.k, *s)[c.i_sigma] == d.y;
        }
        prev_k = st.k;
        diag.check(tag + ": cells are nondegenerate k-simplices through y outside X", cells_ok);
        diag.check(tag + ": starts where the previous stage ended", st.before.image() == prev);
        diag.check_simplicial(tag + ": attaching map simplicial", st.attaching);
        diag.check_simplicial(tag + ": cell map simplicial", st.cell_map);
        diag.check(tag + ": pushout square commutes",
                   same_map(compose(st.square.from_b, st.horn_inclusion.map()),
                            compose(st.square.from_c.map(), st.attaching)));
        diag.check(tag + ": cells extend the attaching map",
                   same_map(compose(st.cell_map, st.horn_inclusion.map()), compose(st.step.map(), st.attaching)));
        diag.check(tag + ": comparison is an isomorphism",
                   st.comparison.bijective() && validate_map(st.comparison).ok());
        diag.check_equal(tag + ": comparison restricts to the cells", compose(st.comparison, st.square.from_b),
                         st.cell_map);
        diag.check_equal(tag + ": comparison restricts to the previous stage",
                         compose(st.comparison, st.square.from_c.map()), st.step.map());
        prev = st.after.image();
    }
    diag.check("chain ends at W_y(Y)", prev == full_mask(*d.target.codomain()));
    return diag;
}

json to_json(const CellDecomposition& d, const Diagram& checks)
{
    const auto& Y = d.inner.codomain();
    json stages = json::array();
    for (const auto& st : d.stages) {
        json cells = json::array();
        for (const auto& c : st.cells)
            cells.push_back({{"sigma", c.sigma.str()}, {"i_sigma", c.i_sigma}});
        stages.push_back({{"k", st.k}, {"truncated", st.truncated}, {"cells", std::move(cells)}});
    }
    return {{"vertex", Y->label(0, d.y).str()},
            {"truncation_dim", Y->dim()},
            {"truncated", d.truncated},
            {"cell_count", d.cell_count()},
            {"stages", std::move(stages)},
            {"checks", checks.to_json()}};
}

} // namespace sset
