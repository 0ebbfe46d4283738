#include "sset/widening.hpp"

#include "sset/error.hpp"
#include "sset/validate.hpp"

#include <algorithm>

namespace sset {

namespace {

std::vector<std::uint8_t> marks_of(std::size_t count, const std::vector<int>& set)
{
    std::vector<std::uint8_t> m(count, 0);
    for (int v : set) {
        if (v < 0 || static_cast<std::size_t>(v) >= count)
            throw Error("vertex index " + std::to_string(v) + " out of range");
        m[v] = 1;
    }
    return m;
}

std::vector<int> normalized(std::vector<int> set, std::size_t count)
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int v : set)
        if (v < 0 || static_cast<std::size_t>(v) >= count)
            throw Error("vertex index " + std::to_string(v) + " out of range");
    return set;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Inclusion of one subcomplex of an ambient object into another, matched by
// label.
Inclusion label_inclusion(const SSetPtr& sub, const SSetPtr& super)
{
    return Inclusion(map_by_labels(sub, super, [](int, const Label& l) { return l; }));
}

// a with a_i zeroed wherever keep(vertex i) is false.
std::vector<int> zeroed(std::span<const int> a, std::span<const int> verts, const std::vector<std::uint8_t>& keep)
{
    std::vector<int> out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!keep[verts[i]])
            out[i] = 0;
    return out;
}

} // namespace

std::vector<int> vertex_indices(const SimplicialSet& x, const std::vector<Label>& vertices)
{
    std::vector<int> out;
    for (const auto& v : vertices) {
        auto k = x.find(0, v);
        if (!k)
            throw Error("unknown vertex " + v.str());
        out.push_back(*k);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Label zero_vertex(const Label& y)
{
    return Label::pair(Label::bits({0}), y);
}

Widening widen(const SSetPtr& x, std::vector<int> marked)
{
    marked = normalized(std::move(marked), x->size(0));
    auto jx = product(interval_nerve(x->dim()), x);
    const std::size_t nv = x->size(0);
    std::vector<std::uint8_t> marks(2 * nv, 0);
    for (std::size_t v = 0; v < nv; ++v)
        marks[v] = 1;
    for (int v : marked)
        marks[nv + v] = 1;
    auto result = subcomplex(jx, full_mask_on(*jx, marks));
    return {x, std::move(marked), jx, std::move(result)};
}

Widening widen(const SSetPtr& x, const std::vector<Label>& marked)
{
    return widen(x, vertex_indices(*x, marked));
}

SimplicialMap partial_projection(const SSetPtr& jx, const SSetPtr& x, const std::vector<int>& nu)
{
    const auto keep = marks_of(x->size(0), nu);
    auto j = interval_nerve(x->dim());
    std::vector<std::vector<int>> comp(x->dim() + 1);
    for (int n = 0; n <= x->dim(); ++n) {
        const std::size_t nx = x->size(n);
        if (jx->size(n) != j->size(n) * nx)
            throw Error("partial projection needs the product J×X");
        comp[n].resize(jx->size(n));
        for (std::size_t k = 0; k < comp[n].size(); ++k) {
            const int code = static_cast<int>(k / nx);
            auto verts = x->vertices(n, static_cast<int>(k % nx));
            int out = code;
            for (int i = 0; i <= n; ++i)
                if (!keep[verts[i]])
                    out &= ~(1 << (n - i));
            comp[n][k] = out;
        }
    }
    return {jx, j, std::move(comp)};
}

SimplicialMap retraction(const Widening& w)
{
    const auto r = partial_projection(w.product, w.base, w.marked);
    const auto pre = w.result.preimage();
    std::vector<std::vector<int>> comp(w.base->dim() + 1);
    for (int n = 0; n <= w.base->dim(); ++n) {
        const int nx = static_cast<int>(w.base->size(n));
        comp[n].resize(w.product->size(n));
        for (std::size_t k = 0; k < comp[n].size(); ++k) {
            const int target = pre[n][r(n, static_cast<int>(k)) * nx + static_cast<int>(k) % nx];
            if (target < 0)
                throw InternalError("partial projection left the widening at " + w.product->label(n, static_cast<int>(k)).str());
            comp[n][k] = target;
        }
    }
    return {w.product, w.object(), std::move(comp)};
}

NarrowCheck is_narrow(const SimplicialSet& x, int v)
{
    if (v < 0 || static_cast<std::size_t>(v) >= x.size(0))
        throw Error("unknown vertex index " + std::to_string(v));
    for (int n = 1; n <= x.dim(); ++n)
        for (int k : x.nondegenerate(n)) {
            auto vs = x.vertices(n, k);
            if (std::count(vs.begin(), vs.end(), v) > 1)
                return {false, n, k};
        }
    return {};
}

WidenedInclusion widened_inclusion(const Inclusion& inner, std::vector<int> marked)
{
    const auto& y = inner.codomain();
    auto wide = widen(y, std::move(marked));
    const auto keep = marks_of(y->size(0), wide.marked);
    std::vector<int> marked_inner;
    for (int v = 0; v < static_cast<int>(inner.domain()->size(0)); ++v)
        if (keep[inner(0, v)])
            marked_inner.push_back(v);

    const auto& jy = wide.product;
    const Mask in_x = inner.image();
    const Mask in_w = wide.result.image();
    Mask dmask = empty_mask(*jy);
    for (int n = 0; n <= jy->dim(); ++n) {
        const std::size_t ny = y->size(n);
        for (std::size_t k = 0; k < jy->size(n); ++k) {
            const bool zero = k / ny == 0;
            dmask[n][k] = zero || (in_x[n][k % ny] && in_w[n][k]);
        }
    }
    auto dom = subcomplex(jy, dmask);
    auto map = Inclusion(corestrict(dom.map(), wide.result));
    return {inner, wide.marked, std::move(marked_inner), std::move(wide), std::move(dom), std::move(map)};
}

WideningIso widening_iso(const SSetPtr& x, const std::vector<int>& nu_in, const std::vector<int>& mu_in)
{
    const auto nu = normalized(nu_in, x->size(0));
    const auto mu = normalized(mu_in, x->size(0));
    if (!is_subset(nu, mu))
        throw Error("widening iso needs ν ⊆ μ");
    std::vector<int> diff;
    std::set_difference(mu.begin(), mu.end(), nu.begin(), nu.end(), std::back_inserter(diff));

    auto outer = widen(x, mu);
    auto first = widen(x, nu);
    std::vector<Label> second_marks;
    for (int v : diff)
        second_marks.push_back(zero_vertex(x->label(0, v)));
    auto second = widen(first.object(), second_marks);

    const auto in_nu = marks_of(x->size(0), nu);
    const auto in_diff = marks_of(x->size(0), diff);
    auto phi = map_by_labels(outer.object(), second.object(), [&](int n, const Label& l) {
        const Label& sigma = l.second();
        auto verts = x->vertices(n, x->index_of(n, sigma));
        auto a = l.first().ints();
        return Label::pair(Label::bits(zeroed(a, verts, in_diff)),
                           Label::pair(Label::bits(zeroed(a, verts, in_nu)), sigma));
    });
    return {std::move(outer), std::move(first), std::move(second), std::move(phi)};
}

FactorWitness factor_widened(const WidenedInclusion& w, const std::vector<int>& nu_in)
{
    const auto& y = w.inner.codomain();
    const auto nu = normalized(nu_in, y->size(0));
    if (!is_subset(nu, w.marked))
        throw Error("factorization needs ν ⊆ μ");
    const auto& jy = w.product();

    auto stage1 = widened_inclusion(w.inner, nu);
    auto along = label_inclusion(stage1.domain(), w.domain());
    auto square = pushout(stage1.map, along.map());

    auto u_in_jy = subcomplex(jy, mask_union(stage1.wide.result.image(), w.domain_in_product.image()));
    const auto& u = u_in_jy.domain();
    auto b_to_u = map_by_labels(stage1.codomain(), u, [](int, const Label& l) { return l; });
    auto c_to_u = map_by_labels(w.domain(), u, [](int, const Label& l) { return l; });
    auto comparison = pushout_induced(square, stage1.map, along.map(), b_to_u, c_to_u);
    auto b = label_inclusion(u, w.codomain());

    auto iso = widening_iso(y, nu, w.marked);
    const auto& wnu = iso.first;
    const Mask in_x = w.inner.image();
    Mask inner2_mask = empty_mask(*wnu.object());
    for (int n = 0; n <= y->dim(); ++n)
        for (std::size_t k = 0; k < wnu.object()->size(n); ++k)
            inner2_mask[n][k] = in_x[n][wnu.result(n, static_cast<int>(k)) % y->size(n)];
    auto inner2 = subcomplex(wnu.object(), inner2_mask);
    std::vector<int> diff;
    std::set_difference(w.marked.begin(), w.marked.end(), nu.begin(), nu.end(), std::back_inserter(diff));
    std::vector<Label> marks2;
    for (int v : diff)
        marks2.push_back(zero_vertex(y->label(0, v)));
    auto stage2 = widened_inclusion(inner2, vertex_indices(*wnu.object(), marks2));
    const auto phi_b = compose(iso.phi, b.map());
    auto psi = corestrict(phi_b, stage2.map);

    Diagram d;
    d.name = "factorization through a smaller widening";
    d.edge("stage1", "({0}xY) u W_nu'(X)", "W_nu(Y)");
    d.edge("along", "({0}xY) u W_nu'(X)", "({0}xY) u W_mu'(X)");
    d.edge("pushout leg", "W_nu(Y)", "P");
    d.edge("(a) = pushout leg", "({0}xY) u W_mu'(X)", "P");
    d.edge("comparison", "P", "W_nu(Y) u W_mu'(X)");
    d.edge("(b)", "W_nu(Y) u W_mu'(X)", "W_mu(Y)");
    d.edge("phi'", "W_mu(Y)", "W_(mu-nu)(W_nu(Y))");
    d.edge("psi", "W_nu(Y) u W_mu'(X)", "({0}xW_nu(Y)) u W(W_nu'(X))");
    d.edge("stage2", "({0}xW_nu(Y)) u W(W_nu'(X))", "W_(mu-nu)(W_nu(Y))");
    d.check_simplicial("stage1 simplicial", stage1.map.map());
    d.check("pushout square commutes",
            same_map(compose(square.from_b, stage1.map.map()), compose(square.from_c.map(), along.map())));
    d.check_simplicial("comparison simplicial", comparison);
    d.check("comparison bijective", comparison.bijective());
    d.check_equal("comparison restricts to W_nu(Y) -> U", compose(comparison, square.from_b), b_to_u);
    d.check_equal("comparison restricts to C -> U", compose(comparison, square.from_c.map()), c_to_u);
    d.check_equal("(b) (a) = widened inclusion", compose(b.map(), compose(comparison, square.from_c.map())),
                  w.map.map());
    d.check("phi' source is W_mu(Y)", *iso.outer.object() == *w.codomain());
    d.check_simplicial("phi' simplicial", iso.phi);
    d.check("phi' bijective", iso.phi.bijective());
    d.check("stage2 codomain is W_(mu-nu)(W_nu(Y))", *stage2.codomain() == *iso.second.object());
    d.check_simplicial("stage2 simplicial", stage2.map.map());
    d.check("psi bijective", psi.bijective());
    d.check_equal("phi' (b) = stage2 psi", phi_b, compose(stage2.map.map(), psi));

    return {nu,
            std::move(stage1),
            std::move(along),
            std::move(square),
            std::move(u_in_jy),
            std::move(comparison),
            std::move(b),
            std::move(iso),
            std::move(stage2),
            std::move(psi),
            std::move(d)};
}

RetractWitness retract_witness(const WidenedInclusion& w)
{
    const auto& x = w.inner.domain();
    const auto& y = w.inner.codomain();
    const auto& jy = w.product();
    const Mask in_x = w.inner.image();
    Mask mmask = empty_mask(*jy);
    for (int n = 0; n <= jy->dim(); ++n) {
        const std::size_t ny = y->size(n);
        for (std::size_t k = 0; k < jy->size(n); ++k)
            mmask[n][k] = k / ny == 0 || in_x[n][k % ny];
    }
    auto middle = subcomplex(jy, mmask);
    auto top_incl = label_inclusion(w.domain(), middle.domain());

    // id on {0}×Y, R_{ν',X} on J×X.
    const auto pre = w.inner.preimage();
    const auto keep = marks_of(x->size(0), w.marked_inner);
    auto top_retr = map_by_labels(middle.domain(), w.domain(), [&](int n, const Label& l) {
        auto a = l.first().ints();
        if (std::all_of(a.begin(), a.end(), [](int v) { return v == 0; }))
            return l;
        const int s = pre[n][y->index_of(n, l.second())];
        if (s < 0)
            throw InternalError("simplex " + l.str() + " of ({0}×Y) ∪ (J×X) lies in neither part");
        return Label::pair(Label::bits(zeroed(a, x->vertices(n, s), keep)), l.second());
    });
    auto bottom_retr = retraction(w.wide);

    Diagram d;
    d.name = "widened inclusion as a retract of a pushout-product";
    d.edge("i", "D", "M");
    d.edge("id u R_nu',X", "M", "D");
    d.edge("j", "W_nu(Y)", "JxY");
    d.edge("R_nu,Y", "JxY", "W_nu(Y)");
    d.edge("w", "D", "W_nu(Y)");
    d.edge("pushout-product", "M", "JxY");
    d.edge("w'", "D", "W_nu(Y)");
    for (const auto& [name, f] : {std::pair<const char*, const SimplicialMap*>{"i", &top_incl.map()},
                                  {"id u R_nu',X", &top_retr},
                                  {"j", &w.wide.result.map()},
                                  {"R_nu,Y", &bottom_retr},
                                  {"pushout-product", &middle.map()}})
        d.check_simplicial(std::string(name) + " simplicial", *f);
    d.check_equal("left square commutes", compose(middle.map(), top_incl.map()),
                  compose(w.wide.result.map(), w.map.map()));
    d.check_equal("right square commutes", compose(w.map.map(), top_retr), compose(bottom_retr, middle.map()));
    d.check_identity("top composite is the identity", compose(top_retr, top_incl.map()));
    d.check_identity("bottom composite is the identity", compose(bottom_retr, w.wide.result.map()));
    return {std::move(middle), std::move(top_incl), std::move(top_retr), w.wide.result, std::move(bottom_retr),
            std::move(d)};
}

SingleVertexChain decompose_to_single(const WidenedInclusion& w)
{
    SingleVertexChain chain;
    auto& d = chain.diagram;
    d.name = "single-vertex factorization";
    const auto& y = w.inner.codomain();
    std::vector<Label> order;
    for (int v : w.marked)
        order.push_back(y->label(0, v));

    WidenedInclusion current = w;
    SimplicialMap to_original = SimplicialMap::identity(w.codomain());
    for (std::size_t j = 0; j < order.size(); ++j) {
        const int v = current.marked.front();
        auto factor = factor_widened(current, {v});
        Mask before = compose(to_original, current.map.map()).image();
        Mask after = compose(to_original, factor.b.map()).image();
        const bool narrow = is_narrow(*current.inner.codomain(), v).narrow;
        const std::string tag = "step " + std::to_string(j + 1) + " (" + order[j].str() + ")";
        d.edge(tag, "C" + std::to_string(j), "C" + std::to_string(j + 1));
        d.check(tag + " factorization", factor.diagram.ok(),
                factor.diagram.ok() ? std::string{} : factor.diagram.failures().front());
        d.check(tag + " widened at one vertex", factor.stage1.marked.size() == 1);
        if (j == 0)
            d.check(tag + " starts at the widened inclusion's domain", before == w.map.image());
        else
            d.check(tag + " starts where the previous step ended", before == chain.steps.back().after);
        d.check(tag + " grows the image", mask_subset(before, after));
        auto next_to_original = compose(to_original, inverse(factor.iso.phi));
        WidenedInclusion next = factor.stage2;
        chain.steps.push_back({order[j], std::move(factor), to_original, std::move(before), std::move(after), narrow});
        current = std::move(next);
        to_original = std::move(next_to_original);
    }
    d.check("final stage is an isomorphism", current.map.map().bijective());
    if (!chain.steps.empty())
        d.check("chain ends at the whole codomain", chain.steps.back().after == full_mask(*w.codomain()));
    return chain;
}

} // namespace sset
