#include "sset/category.hpp"
#include "sset/constructions.hpp"
#include "sset/error.hpp"
#include "sset/search.hpp"
#include "sset/validate.hpp"
#include "sset/widening.hpp"

#include <doctest.h>

using namespace sset;

namespace {

constexpr int D = 4;

Inclusion identity_inclusion(const SSetPtr& x)
{
    return Inclusion(SimplicialMap::identity(x));
}

std::size_t nondeg_total(const SimplicialSet& x)
{
    std::size_t n = 0;
    for (int d = 0; d <= x.dim(); ++d)
        n += x.nondegenerate_count(d);
    return n;
}

// Oracle for W_ν(X): a simplex (a, σ) of J×X survives iff every vertex with
// a_i = 1 is marked.
std::size_t widening_size_oracle(const SimplicialSet& x, const std::vector<int>& nu, int n)
{
    std::size_t count = 0;
    for (int k = 0; k < static_cast<int>(x.size(n)); ++k) {
        auto vs = x.vertices(n, k);
        for (int code = 0; code < (1 << (n + 1)); ++code) {
            bool ok = true;
            for (int i = 0; i <= n; ++i)
                if ((code >> (n - i)) & 1)
                    ok = ok && std::find(nu.begin(), nu.end(), vs[i]) != nu.end();
            count += ok;
        }
    }
    return count;
}

void require_ok(const Diagram& d)
{
    INFO(d.name);
    for (const auto& f : d.failures())
        INFO(f);
    for (const auto& c : d.checks) {
        INFO(c.identity << " " << c.detail);
        CHECK(c.status);
    }
}

} // namespace

TEST_CASE("widen")
{
    auto d2 = standard_simplex(2, D);
    SUBCASE("at every vertex gives J x X")
    {
        auto w = widen(d2, std::vector<int>{0, 1, 2});
        CHECK(w.result.map().bijective());
        CHECK(*w.object() == *product(interval_nerve(D), d2));
    }
    SUBCASE("at no vertex gives {0} x X")
    {
        auto w = widen(d2, std::vector<int>{});
        CHECK(w.object()->size(0) == 3);
        CHECK(find_isomorphism(w.object(), d2).has_value());
    }
    SUBCASE("Delta[2] at {2} is the nerve of 0 -> 1 -> 2 <-> 3")
    {
        auto w = widen(d2, std::vector<Label>{Label::seq({2})});
        CHECK(w.object()->size(0) == 4);
        CHECK(w.object()->nondegenerate_count(1) == 7);
        std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                leq[a][b] = a <= b || (a >= 2 && b >= 2);
        CHECK(find_isomorphism(w.object(), nerve(preorder_category(4, leq), D)).has_value());
    }
    SUBCASE("sizes against the vertex oracle")
    {
        auto b2 = make_standard(StandardKind::boundary, 2, D);
        for (const auto& x : {d2, b2, interval_nerve(D)})
            for (std::vector<int> nu : {std::vector<int>{}, {0}, {1}, {0, 1}})
                for (int n = 0; n <= D; ++n)
                    CHECK(widen(x, nu).object()->size(n) == widening_size_oracle(*x, nu, n));
    }
    SUBCASE("validates")
    {
        auto w = widen(d2, std::vector<int>{1});
        CHECK(validate_sset(*w.object()).ok());
        CHECK(validate_map(w.result.map()).ok());
    }
    CHECK_THROWS_AS((void)widen(d2, std::vector<int>{3}), Error);
    CHECK_THROWS_AS((void)widen(d2, std::vector<Label>{Label::seq({7})}), Error);
}

TEST_CASE("partial projection and retraction")
{
    auto d2 = standard_simplex(2, D);
    auto jx = product(interval_nerve(D), d2);
    SUBCASE("zeroes the entries at unmarked vertices")
    {
        auto r = partial_projection(jx, d2, {2});
        CHECK(validate_map(r).ok());
        const auto src = jx->index_of(2, Label::pair(Label::bits({1, 0, 1}), Label::seq({0, 1, 2})));
        CHECK(r.codomain()->label(2, r(2, src)) == Label::bits({0, 0, 1}));
    }
    SUBCASE("all vertices gives the projection, none the constant map")
    {
        CHECK(same_map(partial_projection(jx, d2, {0, 1, 2}), projection_first(jx, interval_nerve(D))));
        auto zero = partial_projection(jx, d2, {});
        CHECK(same_map(zero, constant_map(jx, interval_nerve(D), 0)));
    }
    SUBCASE("the retraction splits the inclusion")
    {
        auto b2 = make_standard(StandardKind::boundary, 2, D);
        for (const auto& x : {standard_simplex(1, D), d2, b2, interval_nerve(D)})
            for (std::vector<int> nu : {std::vector<int>{}, {0}, {1}, {0, 1}}) {
                auto w = widen(x, nu);
                auto r = retraction(w);
                CHECK(validate_map(r).ok());
                CHECK(same_map(compose(r, w.result.map()), SimplicialMap::identity(w.object())));
                // Image of (r_ν, p_X) is exactly the full subcomplex.
                auto pair = pairing(partial_projection(w.product, x, w.marked), projection_second(w.product, x), w.product);
                CHECK(pair.image() == w.result.image());
            }
        auto all = widen(d2, std::vector<int>{0, 1, 2});
        CHECK(same_map(retraction(all), SimplicialMap::identity(all.object())));
    }
}

TEST_CASE("narrow vertices")
{
    for (int n = 0; n <= 3; ++n) {
        auto d = standard_simplex(n, D);
        for (int v = 0; v <= n; ++v)
            CHECK(is_narrow(*d, v).narrow);
    }
    auto j = interval_nerve(D);
    const auto c = is_narrow(*j, 0);
    CHECK_FALSE(c.narrow);
    CHECK(c.witness_dim == 2);
    CHECK(j->label(2, c.witness) == Label::bits({0, 1, 0}));
    CHECK_THROWS_AS((void)is_narrow(*j, 2), Error);

    SUBCASE("narrowness passes to subcomplexes")
    {
        auto d3 = standard_simplex(3, D);
        auto nv = nerve(inverted_poset_category(3, 1), D);
        for (const auto& y : {d3, nv, j}) {
            for (int v = 0; v < static_cast<int>(y->size(0)); ++v) {
                if (!is_narrow(*y, v).narrow)
                    continue;
                for (int k = 0; k < y->dim(); ++k) {
                    auto sk = skeleton(y, k);
                    CHECK(is_narrow(*sk.domain(), sk.preimage()[0][v]).narrow);
                }
            }
        }
        // The collapsed vertex pair of the inverted poset is not narrow.
        CHECK_FALSE(is_narrow(*nv, 1).narrow);
        CHECK(is_narrow(*nv, 0).narrow);
    }
}

TEST_CASE("widened inclusions")
{
    auto d1 = standard_simplex(1, D);
    auto d2 = standard_simplex(2, D);
    SUBCASE("identity stays identity")
    {
        for (std::vector<int> nu : {std::vector<int>{}, {0}, {0, 2}}) {
            auto w = widened_inclusion(identity_inclusion(d2), nu);
            CHECK(w.map.map().bijective());
        }
    }
    SUBCASE("boundary of Delta[1] at {0} is an iso-horn")
    {
        auto w = widened_inclusion(boundary_inclusion(1, D), {0});
        // ∇₀[2] has 3 vertices; V₀[2] is the edge (0,0)->(0,1) plus J at (·,0).
        CHECK(w.codomain()->size(0) == 3);
        CHECK(nondeg_total(*w.codomain()) == 3 + 4 + 4 + 4 + 4);
        CHECK(w.domain()->nondegenerate_count(1) == 3);
        CHECK(w.domain()->nondegenerate_count(2) == 2);
        std::vector<std::vector<bool>> leq = {{true, true, true}, {true, true, true}, {false, false, true}};
        CHECK(find_isomorphism(w.codomain(), nerve(preorder_category(3, leq), D)).has_value());
        CHECK(w.marked_inner == std::vector<int>{0});
    }
    SUBCASE("at every vertex: the pushout-product of {0} -> J with X -> Y")
    {
        auto inner = boundary_inclusion(2, D);
        auto w = widened_inclusion(inner, {0, 1, 2});
        // Oracle: (a,σ) with a = 0 or σ in ∂Δ[2].
        const auto& jy = w.product();
        const auto img = inner.image();
        for (int n = 0; n <= D; ++n)
            for (int k = 0; k < static_cast<int>(jy->size(n)); ++k) {
                const auto& l = jy->label(n, k);
                auto a = l.first().ints();
                const bool zero = std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
                const bool expect = zero || img[n][d2->index_of(n, l.second())];
                CHECK(w.domain_in_product.image()[n][k] == expect);
            }
        CHECK(w.map.map().bijective() == false);
    }
    CHECK(validate_map(widened_inclusion(boundary_inclusion(2, D), {1}).map.map()).ok());
    CHECK_THROWS_AS((void)widened_inclusion(identity_inclusion(d1), {2}), Error);
}

TEST_CASE("composition of widenings")
{
    auto d1 = standard_simplex(1, D);
    auto d2 = standard_simplex(2, D);
    auto b2 = make_standard(StandardKind::boundary, 2, D);
    for (const auto& x : {d1, d2, b2}) {
        const int nv = static_cast<int>(x->size(0));
        for (int mu_bits = 0; mu_bits < (1 << nv); ++mu_bits)
            for (int nu_bits = mu_bits;; nu_bits = (nu_bits - 1) & mu_bits) {
                std::vector<int> mu, nu;
                for (int v = 0; v < nv; ++v) {
                    if (mu_bits >> v & 1)
                        mu.push_back(v);
                    if (nu_bits >> v & 1)
                        nu.push_back(v);
                }
                auto iso = widening_iso(x, nu, mu);
                CHECK(iso.phi.bijective());
                CHECK(validate_map(iso.phi).ok());
                if (nu_bits == 0)
                    break;
            }
    }
    CHECK_THROWS_AS((void)widening_iso(d2, {1}, {0}), Error);
}

TEST_CASE("factorization through a smaller widening")
{
    auto inner = boundary_inclusion(2, D);
    auto w = widened_inclusion(inner, {0, 1, 2});
    for (std::vector<int> nu : {std::vector<int>{0}, {}, {0, 1, 2}, {1, 2}}) {
        auto f = factor_widened(w, nu);
        require_ok(f.diagram);
    }
    SUBCASE("nu = mu leaves an isomorphism")
    {
        auto f = factor_widened(w, {0, 1, 2});
        CHECK(f.stage2.map.map().bijective());
    }
    SUBCASE("nu empty gives a plain inclusion")
    {
        auto f = factor_widened(w, {});
        CHECK(f.stage1.map.map().bijective());
    }
    auto horn = horn_inclusion(2, 1, D);
    require_ok(factor_widened(widened_inclusion(horn, {0, 2}), {2}).diagram);
    CHECK_THROWS_AS((void)factor_widened(widened_inclusion(horn, {0}), {1}), Error);
}

TEST_CASE("widened inclusions are retracts of pushout-products")
{
    auto pt = standard_simplex(0, D);
    auto empty_in_pt = Inclusion(from_empty(pt));
    auto w0 = widened_inclusion(empty_in_pt, {0});
    auto r0 = retract_witness(w0);
    require_ok(r0.diagram);
    // ({0} -> J) itself.
    CHECK(w0.domain()->size(0) == 1);
    CHECK(nondeg_total(*w0.codomain()) == nondeg_total(*interval_nerve(D)));

    for (auto inner : {boundary_inclusion(1, D), boundary_inclusion(2, D), horn_inclusion(2, 0, D),
                       horn_inclusion(3, 1, D)}) {
        const int nv = static_cast<int>(inner.codomain()->size(0));
        for (int bits = 0; bits < (1 << nv); ++bits) {
            std::vector<int> nu;
            for (int v = 0; v < nv; ++v)
                if (bits >> v & 1)
                    nu.push_back(v);
            require_ok(retract_witness(widened_inclusion(inner, nu)).diagram);
        }
    }
}

TEST_CASE("peeling one vertex at a time")
{
    auto w = widened_inclusion(boundary_inclusion(2, D), {0, 1, 2});
    auto chain = decompose_to_single(w);
    require_ok(chain.diagram);
    REQUIRE(chain.steps.size() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(chain.steps[j].vertex == Label::seq({j}));
        CHECK(chain.steps[j].narrow);
        CHECK(chain.steps[j].factor.stage1.marked.size() == 1);
    }
    CHECK(chain.steps[0].before == w.map.image());
    CHECK(chain.steps[2].after == full_mask(*w.codomain()));

    SUBCASE("single vertex is one step")
    {
        auto w1 = widened_inclusion(boundary_inclusion(1, D), {0});
        auto c1 = decompose_to_single(w1);
        require_ok(c1.diagram);
        REQUIRE(c1.steps.size() == 1);
        CHECK(same_map(c1.steps[0].factor.stage1.map.map(), w1.map.map()));
    }
    SUBCASE("no vertex is no step")
    {
        auto c0 = decompose_to_single(widened_inclusion(boundary_inclusion(2, D), {}));
        CHECK(c0.steps.empty());
        require_ok(c0.diagram);
    }
    SUBCASE("non-narrow vertices are reported")
    {
        auto j = interval_nerve(D);
        auto c = decompose_to_single(widened_inclusion(skeleton(j, 0), {0}));
        require_ok(c.diagram);
        CHECK_FALSE(c.steps[0].narrow);
    }
}
