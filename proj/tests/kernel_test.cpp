#include "sset/constructions.hpp"
#include "sset/diagram.hpp"
#include "sset/error.hpp"
#include "sset/json_io.hpp"
#include "sset/search.hpp"
#include "sset/validate.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace sset;

namespace {

// Nondegenerate bit-vectors of length len: no two equal neighbours.
int alternating_count(int len)
{
    int count = 0;
    for (int code = 0; code < (1 << len); ++code) {
        bool alt = true;
        for (int j = 0; j + 1 < len; ++j)
            alt = alt && (((code >> j) & 1) != ((code >> (j + 1)) & 1));
        count += alt;
    }
    return count;
}

std::vector<std::string> nondeg_labels(const SimplicialSet& x, int n)
{
    std::vector<std::string> out;
    for (int k : x.nondegenerate(n))
        out.push_back(x.label(n, k).str());
    return out;
}

Label vertex_pair(const std::string& a, int b)
{
    return Label::pair(Label::parse(a), Label::seq({b}));
}

} // namespace

TEST_CASE("labels print and parse back")
{
    for (const char* text : {"*", "(0,1,2)", "b(0,1,0)", "o[x]", "m[f,id_x]", "<b(1),(2)>", "t3{<(0),o[a]>}"}) {
        const auto l = Label::parse(text);
        CHECK(l.str() == text);
        CHECK(Label::parse(l.str()) == l);
    }
    CHECK(Label::seq({0, 1}) < Label::seq({0, 2}));
    CHECK(Label::tagged(0, Label::seq({5})) < Label::tagged(1, Label::seq({0})));
    CHECK_THROWS_AS(Label::parse("(0,1"), Error);
    CHECK_THROWS_AS(Label::bits({0, 2}), Error);
}

TEST_CASE("standard objects")
{
    SUBCASE("J in low dimensions")
    {
        auto j = make_standard(StandardKind::interval_groupoid_nerve, 0, 2);
        CHECK(j->size(2) == 8);
        CHECK(nondeg_labels(*j, 2) == std::vector<std::string>{"b(0,1,0)", "b(1,0,1)"});
        CHECK(static_cast<int>(j->nondegenerate_count(2)) == alternating_count(3));
        auto j3 = interval_nerve(3);
        CHECK(nondeg_labels(*j3, 3) == std::vector<std::string>{"b(0,1,0,1)", "b(1,0,1,0)"});
    }
    SUBCASE("boundary of a point is empty")
    {
        auto b = make_standard(StandardKind::boundary, 0, 3);
        CHECK(b->total_size() == 0);
        CHECK(b->empty());
    }
    SUBCASE("standard simplex")
    {
        auto d2 = standard_simplex(2, 3);
        CHECK(nondeg_labels(*d2, 2) == std::vector<std::string>{"(0,1,2)"});
        CHECK(d2->nondegenerate_count(3) == 0);
        CHECK(standard_simplex(0, 2)->nondegenerate_count(1) == 0);
        // |Δ[2]_m| = C(m+3, 2)
        CHECK(d2->size(3) == 15);
    }
    SUBCASE("bad arguments")
    {
        CHECK_THROWS_AS(make_standard(StandardKind::simplex, 1, -1), Error);
        CHECK_THROWS_AS(make_standard(StandardKind::simplex, -1, 2), Error);
    }
}

TEST_CASE("vertices and simplicial operators")
{
    auto d3 = standard_simplex(3, 3);
    const int k = d3->index_of(2, Label::seq({0, 2, 3}));
    auto v = d3->vertices(2, k);
    CHECK(std::vector<int>(v.begin(), v.end()) == std::vector<int>{0, 2, 3});
    const int face = d3->apply(2, k, std::vector<int>{0, 2});
    CHECK(d3->label(1, face) == Label::seq({0, 3}));
    const int deg = d3->apply(2, k, std::vector<int>{0, 1, 1, 2});
    CHECK(d3->label(3, deg) == Label::seq({0, 2, 2, 3}));
}

TEST_CASE("nerves")
{
    auto n2 = nerve(poset_category(2), 3);
    CHECK(find_isomorphism(n2, standard_simplex(2, 3)).has_value());
    auto ni = nerve(interval_groupoid(), 2);
    CHECK(find_isomorphism(ni, interval_nerve(2)).has_value());
    CHECK_FALSE(find_isomorphism(ni, standard_simplex(1, 2)).has_value());

    auto z2 = nerve(cyclic_group_category(2), 3);
    CHECK(z2->size(0) == 1);
    CHECK(z2->size(3) == 8);
    // Degenerate exactly when the string contains the identity.
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < static_cast<int>(z2->size(n)); ++k) {
            const auto& w = z2->label(n, k).words();
            const bool has_id = std::find(w.begin(), w.end(), "e") != w.end();
            CHECK(z2->is_degenerate(n, k) == has_id);
        }
    CHECK(validate_sset(*z2).ok());
}

TEST_CASE("categories reject broken tables")
{
    CHECK_THROWS_AS(FiniteCategory({"a"}, {{"f", "a", "b"}}, {}), Error);
    // f∘f missing.
    CHECK_THROWS_AS(FiniteCategory({"a"}, {{"f", "a", "a"}}, {}), Error);
    // Non-associative: a one-object "monoid" table that is not associative.
    CHECK_THROWS_AS(FiniteCategory({"p"}, {{"e", "p", "p"}, {"x", "p", "p"}, {"y", "p", "p"}},
                                   {{"e", "e", "e"}, {"e", "x", "x"}, {"x", "e", "x"}, {"e", "y", "y"}, {"y", "e", "y"},
                                    {"x", "x", "y"}, {"x", "y", "x"}, {"y", "x", "y"}, {"y", "y", "y"}}),
                      Error);
    // Identities are synthesized when absent.
    FiniteCategory c({"a", "b"}, {{"f", "a", "b"}}, {});
    CHECK(c.identity("a") == "id_a");
    CHECK(*c.compose("f", "id_a") == "f");
}

TEST_CASE("products")
{
    const int D = 2;
    auto d1 = standard_simplex(1, D);
    auto d0 = standard_simplex(0, D);
    CHECK(find_isomorphism(product(d1, d0), d1).has_value());

    auto sq = product(d1, d1);
    CHECK(sq->size(0) == 4);
    // Oracle: a pair of monotone sequences is degenerate iff some adjacent
    // entries repeat in both coordinates at once.
    auto count_nondeg = [](int m) {
        int c = 0;
        for (const auto& a : monotone_sequences(m, 1))
            for (const auto& b : monotone_sequences(m, 1)) {
                bool deg = false;
                for (int j = 0; j < m; ++j)
                    deg = deg || (a[j] == a[j + 1] && b[j] == b[j + 1]);
                c += !deg;
            }
        return c;
    };
    CHECK(sq->nondegenerate_count(1) == 5);
    CHECK(sq->nondegenerate_count(2) == 2);
    CHECK(static_cast<int>(sq->nondegenerate_count(1)) == count_nondeg(1));
    CHECK(static_cast<int>(sq->nondegenerate_count(2)) == count_nondeg(2));

    auto j = interval_nerve(D);
    auto jd2 = product(j, standard_simplex(2, D));
    CHECK(jd2->size(1) == 24);
    CHECK(jd2->size(1) == j->size(1) * standard_simplex(2, D)->size(1));

    // Labels sit at their lexicographic rank.
    for (int n = 0; n <= D; ++n)
        for (int k = 0; k < static_cast<int>(jd2->size(n)); ++k) {
            const auto& l = jd2->label(n, k);
            CHECK(l.first() == j->label(n, k / static_cast<int>(standard_simplex(2, D)->size(n))));
        }

    auto p1 = projection_first(jd2, j);
    auto p2 = projection_second(jd2, standard_simplex(2, D));
    CHECK(validate_map(p1).ok());
    CHECK(validate_map(p2).ok());
    for (int n = 0; n <= D; ++n) {
        std::set<std::pair<int, int>> seen;
        for (int k = 0; k < static_cast<int>(jd2->size(n)); ++k)
            seen.emplace(p1(n, k), p2(n, k));
        CHECK(seen.size() == jd2->size(n));
    }
    CHECK_THROWS_AS(product(standard_simplex(1, 2), standard_simplex(1, 3)), Error);
}

TEST_CASE("full subcomplexes and skeleta")
{
    auto x = standard_simplex(2, 3);
    auto all = full_subcomplex_by_index(x, {0, 1, 2});
    CHECK(*all.domain() == *x);

    auto edge = full_subcomplex(x, {Label::seq({0}), Label::seq({2})});
    CHECK(find_isomorphism(edge.domain(), standard_simplex(1, 3)).has_value());
    CHECK_THROWS_AS(full_subcomplex(x, {Label::seq({7})}), Error);

    auto jd2 = product(interval_nerve(3), x);
    auto w = full_subcomplex(jd2, {vertex_pair("b(0)", 0), vertex_pair("b(0)", 1), vertex_pair("b(0)", 2),
                                   vertex_pair("b(1)", 2)});
    CHECK(w.domain()->size(0) == 4);
    CHECK(w.domain()->nondegenerate_count(1) == 7);

    CHECK(*skeleton(x, 2).domain() == *x);
    CHECK(find_isomorphism(skeleton(x, 1).domain(), boundary_inclusion(2, 3).domain()).has_value());
    auto sk = skeleton(interval_nerve(3), 1).domain();
    CHECK(sk->nondegenerate_count(2) == 0);
    CHECK(sk->nondegenerate_count(3) == 0);
    CHECK(sk->nondegenerate_count(1) == 2);
    CHECK_THROWS_AS(skeleton(x, 4), Error);
}

TEST_CASE("nondegenerate simplices")
{
    CHECK(nondeg_labels(*standard_simplex(0, 2), 1).empty());
    CHECK_THROWS_AS((void)standard_simplex(0, 2)->nondegenerate(3), Error);
}

TEST_CASE("horns")
{
    auto h = horn_inclusion(2, 1, 2);
    CHECK(h.domain()->nondegenerate_count(1) == 2);
    CHECK(h.domain()->nondegenerate_count(2) == 0);
    CHECK(h.domain()->find(1, Label::seq({0, 2})) == std::nullopt);
    auto b3 = boundary_inclusion(3, 3);
    CHECK(b3.domain()->nondegenerate_count(2) == 4);
    CHECK(b3.domain()->nondegenerate_count(3) == 0);
}

TEST_CASE("validation flags a corrupted face entry")
{
    auto d3 = standard_simplex(3, 4);
    CHECK(validate_sset(*d3).ok());
    auto t = d3->tables();
    const int n = 2;
    const int k = d3->index_of(2, Label::seq({0, 1, 3}));
    const int wrong = d3->index_of(1, Label::seq({1, 2}));
    t.face[n][1][k] = wrong;
    auto bad = SimplicialSet::from_tables(t);
    const auto entry = face_entry(bad, n, 1, k);
    const auto r = validate_sset(bad);
    REQUIRE_FALSE(r.ok());
    for (const auto& v : r.violations)
        CHECK(std::find(v.entries.begin(), v.entries.end(), entry) != v.entries.end());
}

TEST_CASE("map validation")
{
    auto j = interval_nerve(3);
    CHECK(validate_map(SimplicialMap::identity(j)).ok());

    auto d2 = standard_simplex(2, 3);
    auto prod = product(j, d2);
    CHECK(validate_map(projection_second(prod, d2)).ok());

    // Swap the endpoints of Δ[1] but keep the edge: faces disagree.
    auto d1 = standard_simplex(1, 2);
    auto swap = map_by_labels(d1, d1, [](int, const Label& l) {
        auto s = l.ints();
        bool constant = std::all_of(s.begin(), s.end(), [&](int v) { return v == s[0]; });
        if (!constant)
            return l;
        return Label::seq(std::vector<int>(s.size(), 1 - s[0]));
    });
    const auto r = validate_map(swap);
    CHECK_FALSE(r.ok());
    CHECK(r.violations.front().identity.rfind("f d", 0) == 0);
}

TEST_CASE("constructions validate")
{
    const int D = 4;
    std::vector<SSetPtr> objs{standard_simplex(3, D), boundary_inclusion(3, D).domain(), interval_nerve(D),
                              product(interval_nerve(D), standard_simplex(2, D)), terminal(D), empty_set(D),
                              nerve(inverted_poset_category(3, 1), D), horn_inclusion(3, 1, D).domain(),
                              coproduct({standard_simplex(1, D), interval_nerve(D)}, D).object};
    for (const auto& x : objs)
        CHECK(validate_sset(*x).ok());
}

TEST_CASE("nerves commute with full subcategories")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 4);
        // Random preorder: random relation, then reflexive-transitive closure.
        std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                leq[a][b] = a == b || rng() % 3 == 0;
        for (int c = 0; c < m; ++c)
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if (leq[a][c] && leq[c][b])
                        leq[a][b] = true;
        auto cat = preorder_category(m, leq);
        std::vector<std::string> keep;
        std::vector<Label> keep_labels;
        for (int a = 0; a < m; ++a)
            if (rng() % 2) {
                keep.push_back(std::to_string(a));
                keep_labels.push_back(Label::object(std::to_string(a)));
            }
        const int D = 3;
        auto whole = nerve(cat, D);
        auto sub = full_subcomplex(whole, keep_labels);
        CHECK(*nerve(cat.full_subcategory(keep), D) == *sub.domain());
    }
}

TEST_CASE("pushouts")
{
    const int D = 2;
    SUBCASE("along an identity")
    {
        auto c = interval_nerve(D);
        auto a = standard_simplex(0, D);
        auto g = constant_map(a, c, 1);
        auto p = pushout(Inclusion(SimplicialMap::identity(a)), g);
        CHECK(find_isomorphism(p.object, c).has_value());
        CHECK(p.from_c.map().bijective());
    }
    SUBCASE("along a point")
    {
        auto j = interval_nerve(D);
        auto pt = standard_simplex(0, D);
        auto f = Inclusion(constant_map(pt, j, 0));
        auto p = pushout(f, SimplicialMap::identity(pt));
        CHECK(find_isomorphism(p.object, j).has_value());
        CHECK(p.object->label(0, 0) == Label::tagged(0, Label::seq({0})));
        CHECK(p.object->label(0, 1) == Label::tagged(1, Label::bits({1})));
    }
    SUBCASE("universal property on small instances")
    {
        // Two edges glued end to start, cocones into Δ[2].
        auto pt = standard_simplex(0, D);
        auto d1 = standard_simplex(1, D);
        auto f = Inclusion(constant_map(pt, d1, 0));
        auto g = constant_map(pt, d1, 1);
        auto p = pushout(f, g);
        CHECK(p.object->total_size() <= 30);
        CHECK(p.object->nondegenerate_count(1) == 2);
        auto t = standard_simplex(2, D);
        int cocones = 0;
        MapSearch({d1, t, {}}).for_each([&](const SimplicialMap& u) {
            MapSearch({d1, t, {}}).for_each([&](const SimplicialMap& v) {
                if (compose(u, f.map()).components() != compose(v, g).components())
                    return true;
                ++cocones;
                int induced = 0;
                MapSearch({p.object, t, {}}).for_each([&](const SimplicialMap& w) {
                    if (compose(w, p.from_b).components() == u.components()
                        && compose(w, p.from_c.map()).components() == v.components())
                        ++induced;
                    return true;
                });
                CHECK(induced == 1);
                auto w = pushout_induced(p, f, g, u, v);
                CHECK(validate_map(w).ok());
                return true;
            });
            return true;
        });
        // Cocones: pairs of monotone maps [1]->[2] with u(0) = v(1).
        int expected = 0;
        for (const auto& u : monotone_sequences(1, 2))
            for (const auto& v : monotone_sequences(1, 2))
                expected += u[0] == v[1];
        CHECK(cocones == expected);
    }
    SUBCASE("non-injective legs are rejected")
    {
        CHECK_THROWS_AS(Inclusion(to_terminal(standard_simplex(1, D))), Error);
    }
}

TEST_CASE("map search follows the Yoneda count")
{
    const int D = 3;
    auto j = interval_nerve(D);
    for (int n = 0; n <= D; ++n) {
        MapSearch s(standard_simplex(n, D), j, {});
        CHECK(s.for_each([](const SimplicialMap&) { return true; }) == j->size(n));
    }
    MapSearch s(standard_simplex(1, 2), standard_simplex(1, 2), {});
    std::size_t count = 0;
    s.for_each([&](const SimplicialMap& f) {
        CHECK(validate_map(f).ok());
        ++count;
        return true;
    });
    CHECK(count == 3);
}

TEST_CASE("json round trip")
{
    auto x = product(interval_nerve(2), standard_simplex(1, 2));
    const auto text = dump(to_json(*x));
    auto back = sset_from_json(json::parse(text));
    CHECK(*back == *x);
    CHECK(dump(to_json(*back)) == text);

    auto f = projection_first(x, interval_nerve(2));
    auto g = map_from_json(to_json(f));
    CHECK(same_map(f, g));

    auto c = inverted_poset_category(2, 0);
    auto c2 = category_from_json(to_json(c));
    CHECK(*nerve(c, 2) == *nerve(c2, 2));
    CHECK_THROWS_AS(sset_from_json(json::parse(R"({"truncation_dim": 1})")), Error);
}
