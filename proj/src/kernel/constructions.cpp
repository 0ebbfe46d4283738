#include "sset/constructions.hpp"

#include "sset/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace sset {

namespace {

using Index = std::unordered_map<Label, int, LabelHash>;

void check_dim(int D)
{
    if (D < 0)
        throw Error("truncation dimension must be non-negative, got " + std::to_string(D));
}

SimplicialSet::Tables empty_tables(int D)
{
    SimplicialSet::Tables t;
    t.dim = D;
    t.labels.resize(D + 1);
    t.face.resize(D + 1);
    t.degeneracy.resize(D + 1);
    for (int n = 1; n <= D; ++n)
        t.face[n].resize(n + 1);
    for (int n = 0; n < D; ++n)
        t.degeneracy[n].resize(n + 1);
    return t;
}

std::vector<int> erase_at(std::span<const int> v, int i)
{
    std::vector<int> out(v.begin(), v.end());
    out.erase(out.begin() + i);
    return out;
}

std::vector<int> repeat_at(std::span<const int> v, int i)
{
    std::vector<int> out(v.begin(), v.end());
    out.insert(out.begin() + i, v[i]);
    return out;
}

void monotone_rec(int len, int lo, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= n; ++v) {
        cur.push_back(v);
        monotone_rec(len, v, n, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> monotone_sequences(int m, int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (m >= 0 && n >= 0)
        monotone_rec(m + 1, 0, n, cur, out);
    return out;
}

SimplicialSet from_label_ops(int D, std::vector<std::vector<Label>> labels, const LabelOp& face, const LabelOp& degeneracy)
{
    check_dim(D);
    auto t = empty_tables(D);
    t.labels = std::move(labels);
    if (static_cast<int>(t.labels.size()) != D + 1)
        throw Error("label table must have D+1 rows");
    std::vector<Index> idx(D + 1);
    for (int n = 0; n <= D; ++n)
        for (std::size_t k = 0; k < t.labels[n].size(); ++k)
            idx[n].emplace(t.labels[n][k], static_cast<int>(k));
    auto lookup = [&](int n, const Label& l) {
        auto it = idx[n].find(l);
        if (it == idx[n].end())
            throw Error("structure map leads to unknown simplex " + l.str() + " in dimension " + std::to_string(n));
        return it->second;
    };
    for (int n = 1; n <= D; ++n)
        for (int i = 0; i <= n; ++i) {
            auto& row = t.face[n][i];
            row.resize(t.labels[n].size());
            for (std::size_t k = 0; k < row.size(); ++k)
                row[k] = lookup(n - 1, face(n, i, t.labels[n][k]));
        }
    for (int n = 0; n < D; ++n)
        for (int i = 0; i <= n; ++i) {
            auto& row = t.degeneracy[n][i];
            row.resize(t.labels[n].size());
            for (std::size_t k = 0; k < row.size(); ++k)
                row[k] = lookup(n + 1, degeneracy(n, i, t.labels[n][k]));
        }
    return SimplicialSet::from_tables(std::move(t));
}

SimplicialMap map_by_labels(const SSetPtr& domain, const SSetPtr& codomain,
                            const std::function<Label(int n, const Label&)>& f)
{
    std::vector<std::vector<int>> comp(domain->dim() + 1);
    for (int n = 0; n <= domain->dim(); ++n) {
        comp[n].resize(domain->size(n));
        for (std::size_t k = 0; k < comp[n].size(); ++k)
            comp[n][k] = codomain->index_of(n, f(n, domain->label(n, static_cast<int>(k))));
    }
    return {domain, codomain, std::move(comp)};
}

SSetPtr standard_simplex(int n, int D)
{
    check_dim(D);
    if (n < 0)
        throw Error("standard simplex needs n >= 0");
    std::vector<std::vector<Label>> labels(D + 1);
    for (int m = 0; m <= D; ++m)
        for (auto& s : monotone_sequences(m, n))
            labels[m].push_back(Label::seq(std::move(s)));
    return share(from_label_ops(
        D, std::move(labels), [](int, int i, const Label& l) { return Label::seq(erase_at(l.ints(), i)); },
        [](int, int i, const Label& l) { return Label::seq(repeat_at(l.ints(), i)); }));
}

SSetPtr interval_nerve(int D)
{
    check_dim(D);
    std::vector<std::vector<Label>> labels(D + 1);
    for (int m = 0; m <= D; ++m) {
        const int len = m + 1;
        if (len >= 31)
            throw Error("truncation dimension too large for J");
        for (int code = 0; code < (1 << len); ++code) {
            std::vector<int> bits(len);
            for (int j = 0; j < len; ++j)
                bits[j] = (code >> (len - 1 - j)) & 1;
            labels[m].push_back(Label::bits(std::move(bits)));
        }
    }
    return share(from_label_ops(
        D, std::move(labels), [](int, int i, const Label& l) { return Label::bits(erase_at(l.ints(), i)); },
        [](int, int i, const Label& l) { return Label::bits(repeat_at(l.ints(), i)); }));
}

SSetPtr terminal(int D)
{
    check_dim(D);
    auto t = empty_tables(D);
    for (int n = 0; n <= D; ++n)
        t.labels[n] = {Label::point()};
    for (int n = 1; n <= D; ++n)
        for (auto& row : t.face[n])
            row = {0};
    for (int n = 0; n < D; ++n)
        for (auto& row : t.degeneracy[n])
            row = {0};
    return share(SimplicialSet::from_tables(std::move(t)));
}

SSetPtr empty_set(int D)
{
    check_dim(D);
    return share(SimplicialSet::from_tables(empty_tables(D)));
}

SSetPtr make_standard(StandardKind kind, int n, int D)
{
    check_dim(D);
    switch (kind) {
    case StandardKind::simplex:
        return standard_simplex(n, D);
    case StandardKind::boundary:
        return boundary_inclusion(n, D).domain();
    case StandardKind::interval_groupoid_nerve:
        return interval_nerve(D);
    }
    throw InternalError("unknown standard kind");
}

SSetPtr nerve(const FiniteCategory& c, int D)
{
    check_dim(D);
    std::vector<std::vector<Label>> labels(D + 1);
    for (const auto& x : c.objects())
        labels[0].push_back(Label::object(x));
    // Composable strings, extended one morphism at a time.
    std::vector<std::vector<std::string>> layer;
    for (const auto& m : c.morphisms())
        layer.push_back({m.name});
    for (int n = 1; n <= D; ++n) {
        for (const auto& w : layer)
            labels[n].push_back(Label::word(w));
        if (n == D)
            break;
        std::vector<std::vector<std::string>> next;
        for (const auto& w : layer)
            for (const auto& m : c.out_of(c.morphism(w.back()).target)) {
                auto ext = w;
                ext.push_back(m);
                next.push_back(std::move(ext));
            }
        layer = std::move(next);
    }
    auto face = [&c](int n, int i, const Label& l) {
        const auto& w = l.words();
        if (n == 1)
            return Label::object(i == 0 ? c.morphism(w[0]).target : c.morphism(w[0]).source);
        std::vector<std::string> out;
        if (i == 0) {
            out.assign(w.begin() + 1, w.end());
        } else if (i == n) {
            out.assign(w.begin(), w.end() - 1);
        } else {
            out.assign(w.begin(), w.begin() + (i - 1));
            out.push_back(*c.compose(w[i], w[i - 1]));
            out.insert(out.end(), w.begin() + (i + 1), w.end());
        }
        return Label::word(std::move(out));
    };
    auto degeneracy = [&c](int n, int i, const Label& l) {
        if (n == 0)
            return Label::word({c.identity(l.words()[0])});
        const auto& w = l.words();
        const std::string& obj = i < n ? c.morphism(w[i]).source : c.morphism(w[n - 1]).target;
        std::vector<std::string> out = w;
        out.insert(out.begin() + i, c.identity(obj));
        return Label::word(std::move(out));
    };
    return share(from_label_ops(D, std::move(labels), face, degeneracy));
}

SSetPtr product(const SSetPtr& x, const SSetPtr& y)
{
    if (x->dim() != y->dim())
        throw Error("product of simplicial sets with different truncation dimensions");
    const int D = x->dim();
    auto t = empty_tables(D);
    for (int n = 0; n <= D; ++n) {
        const int nx = static_cast<int>(x->size(n));
        const int ny = static_cast<int>(y->size(n));
        t.labels[n].reserve(static_cast<std::size_t>(nx) * ny);
        for (int a = 0; a < nx; ++a)
            for (int b = 0; b < ny; ++b)
                t.labels[n].push_back(Label::pair(x->label(n, a), y->label(n, b)));
    }
    for (int n = 1; n <= D; ++n) {
        const int nx = static_cast<int>(x->size(n));
        const int ny = static_cast<int>(y->size(n));
        const int ny1 = static_cast<int>(y->size(n - 1));
        for (int i = 0; i <= n; ++i) {
            auto& row = t.face[n][i];
            row.resize(static_cast<std::size_t>(nx) * ny);
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < ny; ++b)
                    row[a * ny + b] = x->face(n, i, a) * ny1 + y->face(n, i, b);
        }
    }
    for (int n = 0; n < D; ++n) {
        const int nx = static_cast<int>(x->size(n));
        const int ny = static_cast<int>(y->size(n));
        const int ny1 = static_cast<int>(y->size(n + 1));
        for (int i = 0; i <= n; ++i) {
            auto& row = t.degeneracy[n][i];
            row.resize(static_cast<std::size_t>(nx) * ny);
            for (int a = 0; a < nx; ++a)
                for (int b = 0; b < ny; ++b)
                    row[a * ny + b] = x->degeneracy(n, i, a) * ny1 + y->degeneracy(n, i, b);
        }
    }
    return share(SimplicialSet::from_tables(std::move(t)));
}

namespace {

void check_product_shape(const SimplicialSet& prod, const SimplicialSet& x, const SimplicialSet& y)
{
    if (prod.dim() != x.dim() || prod.dim() != y.dim())
        throw Error("product factors have different truncation dimensions");
    for (int n = 0; n <= prod.dim(); ++n)
        if (prod.size(n) != x.size(n) * y.size(n))
            throw Error("object is not the product of the given factors");
}

} // namespace

SimplicialMap projection_first(const SSetPtr& prod, const SSetPtr& x)
{
    std::vector<std::vector<int>> comp(prod->dim() + 1);
    for (int n = 0; n <= prod->dim(); ++n) {
        if (x->size(n) == 0 ? prod->size(n) != 0 : prod->size(n) % x->size(n) != 0)
            throw Error("object is not a product with the given first factor");
        const std::size_t ny = x->size(n) == 0 ? 0 : prod->size(n) / x->size(n);
        comp[n].resize(prod->size(n));
        for (std::size_t k = 0; k < comp[n].size(); ++k)
            comp[n][k] = static_cast<int>(k / ny);
    }
    return {prod, x, std::move(comp)};
}

SimplicialMap projection_second(const SSetPtr& prod, const SSetPtr& y)
{
    std::vector<std::vector<int>> comp(prod->dim() + 1);
    for (int n = 0; n <= prod->dim(); ++n) {
        if (y->size(n) == 0 ? prod->size(n) != 0 : prod->size(n) % y->size(n) != 0)
            throw Error("object is not a product with the given second factor");
        comp[n].resize(prod->size(n));
        for (std::size_t k = 0; k < comp[n].size(); ++k)
            comp[n][k] = static_cast<int>(k % y->size(n));
    }
    return {prod, y, std::move(comp)};
}

SimplicialMap pairing(const SimplicialMap& f, const SimplicialMap& g, const SSetPtr& prod)
{
    if (f.domain() != g.domain() && !(*f.domain() == *g.domain()))
        throw Error("pairing needs maps with a common domain");
    check_product_shape(*prod, *f.codomain(), *g.codomain());
    std::vector<std::vector<int>> comp(f.dim() + 1);
    for (int n = 0; n <= f.dim(); ++n) {
        const int ny = static_cast<int>(g.codomain()->size(n));
        comp[n].resize(f.component(n).size());
        for (std::size_t k = 0; k < comp[n].size(); ++k)
            comp[n][k] = f(n, static_cast<int>(k)) * ny + g(n, static_cast<int>(k));
    }
    return {f.domain(), prod, std::move(comp)};
}

SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, const SSetPtr& source, const SSetPtr& target)
{
    check_product_shape(*source, *f.domain(), *g.domain());
    check_product_shape(*target, *f.codomain(), *g.codomain());
    std::vector<std::vector<int>> comp(f.dim() + 1);
    for (int n = 0; n <= f.dim(); ++n) {
        const int nsrc = static_cast<int>(g.domain()->size(n));
        const int ntgt = static_cast<int>(g.codomain()->size(n));
        comp[n].resize(source->size(n));
        for (std::size_t k = 0; k < comp[n].size(); ++k) {
            const int a = static_cast<int>(k) / nsrc;
            const int b = static_cast<int>(k) % nsrc;
            comp[n][k] = f(n, a) * ntgt + g(n, b);
        }
    }
    return {source, target, std::move(comp)};
}

bool is_subcomplex(const SimplicialSet& x, const Mask& mask)
{
    for (int n = 0; n <= x.dim(); ++n)
        for (std::size_t k = 0; k < x.size(n); ++k) {
            if (!mask[n][k])
                continue;
            for (int i = 0; n > 0 && i <= n; ++i)
                if (!mask[n - 1][x.face(n, i, static_cast<int>(k))])
                    return false;
            for (int i = 0; n < x.dim() && i <= n; ++i)
                if (!mask[n + 1][x.degeneracy(n, i, static_cast<int>(k))])
                    return false;
        }
    return true;
}

Mask closure(const SimplicialSet& x, Mask marked)
{
    for (int n = x.dim(); n >= 1; --n)
        for (std::size_t k = 0; k < x.size(n); ++k)
            if (marked[n][k])
                for (int i = 0; i <= n; ++i)
                    marked[n - 1][x.face(n, i, static_cast<int>(k))] = 1;
    for (int n = 0; n < x.dim(); ++n)
        for (std::size_t k = 0; k < x.size(n); ++k)
            if (marked[n][k])
                for (int i = 0; i <= n; ++i)
                    marked[n + 1][x.degeneracy(n, i, static_cast<int>(k))] = 1;
    return marked;
}

Inclusion subcomplex(const SSetPtr& x, const Mask& mask)
{
    if (static_cast<int>(mask.size()) != x->dim() + 1)
        throw Error("mask has the wrong number of dimensions");
    for (int n = 0; n <= x->dim(); ++n)
        if (mask[n].size() != x->size(n))
            throw Error("mask has the wrong length in dimension " + std::to_string(n));
    if (!is_subcomplex(*x, mask))
        throw Error("marked simplices are not closed under faces and degeneracies");
    const int D = x->dim();
    std::vector<std::vector<int>> kept(D + 1);
    std::vector<std::vector<int>> where(D + 1);
    for (int n = 0; n <= D; ++n) {
        where[n].assign(x->size(n), -1);
        for (std::size_t k = 0; k < x->size(n); ++k)
            if (mask[n][k]) {
                where[n][k] = static_cast<int>(kept[n].size());
                kept[n].push_back(static_cast<int>(k));
            }
    }
    auto t = empty_tables(D);
    for (int n = 0; n <= D; ++n)
        for (int k : kept[n])
            t.labels[n].push_back(x->label(n, k));
    for (int n = 1; n <= D; ++n)
        for (int i = 0; i <= n; ++i)
            for (int k : kept[n])
                t.face[n][i].push_back(where[n - 1][x->face(n, i, k)]);
    for (int n = 0; n < D; ++n)
        for (int i = 0; i <= n; ++i)
            for (int k : kept[n])
                t.degeneracy[n][i].push_back(where[n + 1][x->degeneracy(n, i, k)]);
    auto sub = share(SimplicialSet::from_tables(std::move(t)));
    return Inclusion(SimplicialMap(sub, x, std::move(kept)));
}

Mask full_mask_on(const SimplicialSet& x, const std::vector<std::uint8_t>& vertex_marks)
{
    if (vertex_marks.size() != x.size(0))
        throw Error("vertex marks have the wrong length");
    Mask m = empty_mask(x);
    for (int n = 0; n <= x.dim(); ++n)
        for (std::size_t k = 0; k < x.size(n); ++k) {
            auto vs = x.vertices(n, static_cast<int>(k));
            m[n][k] = std::all_of(vs.begin(), vs.end(), [&](int v) { return vertex_marks[v] != 0; });
        }
    return m;
}

Inclusion full_subcomplex_by_index(const SSetPtr& x, const std::vector<int>& vertices)
{
    std::vector<std::uint8_t> marks(x->size(0), 0);
    for (int v : vertices) {
        if (v < 0 || static_cast<std::size_t>(v) >= marks.size())
            throw Error("vertex index out of range");
        marks[v] = 1;
    }
    return subcomplex(x, full_mask_on(*x, marks));
}

Inclusion full_subcomplex(const SSetPtr& x, const std::vector<Label>& vertices)
{
    std::vector<int> idx;
    for (const auto& v : vertices) {
        auto k = x->find(0, v);
        if (!k)
            throw Error("unknown vertex " + v.str());
        idx.push_back(*k);
    }
    return full_subcomplex_by_index(x, idx);
}

Inclusion skeleton(const SSetPtr& x, int k)
{
    if (k < 0 || k > x->dim())
        throw Error("skeleton degree must lie in 0..D");
    Mask m = empty_mask(*x);
    for (int n = 0; n <= k; ++n)
        for (int s : x->nondegenerate(n))
            m[n][s] = 1;
    return subcomplex(x, closure(*x, std::move(m)));
}

namespace {

// Subcomplex of Δ[n] on the sequences accepted by keep.
Inclusion simplex_subcomplex(int n, int D, const std::function<bool(std::span<const int>)>& keep)
{
    auto delta = standard_simplex(n, D);
    Mask m = empty_mask(*delta);
    for (int d = 0; d <= D; ++d)
        for (std::size_t k = 0; k < delta->size(d); ++k)
            m[d][k] = keep(delta->label(d, static_cast<int>(k)).ints());
    return subcomplex(delta, m);
}

std::vector<std::uint8_t> hit(std::span<const int> seq, int n)
{
    std::vector<std::uint8_t> h(n + 1, 0);
    for (int v : seq)
        h[v] = 1;
    return h;
}

} // namespace

Inclusion boundary_inclusion(int n, int D)
{
    if (n < 0)
        throw Error("boundary needs n >= 0");
    return simplex_subcomplex(n, D, [n](std::span<const int> s) {
        auto h = hit(s, n);
        return std::count(h.begin(), h.end(), 1) < n + 1;
    });
}

Inclusion horn_inclusion(int n, int k, int D)
{
    if (n < 1 || k < 0 || k > n)
        throw Error("horn needs n >= 1 and 0 <= k <= n");
    return simplex_subcomplex(n, D, [n, k](std::span<const int> s) {
        auto h = hit(s, n);
        h[k] = 1;
        return std::count(h.begin(), h.end(), 1) < n + 1;
    });
}

Inclusion union_of(const SSetPtr& ambient, const std::vector<Mask>& parts)
{
    Mask m = empty_mask(*ambient);
    for (const auto& p : parts)
        m = mask_union(m, p);
    return subcomplex(ambient, m);
}

Coproduct coproduct(const std::vector<SSetPtr>& summands, int D)
{
    check_dim(D);
    for (const auto& s : summands)
        if (s->dim() != D)
            throw Error("coproduct summands must share the truncation dimension");
    auto t = empty_tables(D);
    // offset[j][n]: where summand j starts in dimension n.
    std::vector<std::vector<int>> offset(summands.size(), std::vector<int>(D + 1, 0));
    for (int n = 0; n <= D; ++n) {
        int at = 0;
        for (std::size_t j = 0; j < summands.size(); ++j) {
            offset[j][n] = at;
            for (std::size_t k = 0; k < summands[j]->size(n); ++k)
                t.labels[n].push_back(Label::tagged(static_cast<int>(j), summands[j]->label(n, static_cast<int>(k))));
            at += static_cast<int>(summands[j]->size(n));
        }
    }
    for (std::size_t j = 0; j < summands.size(); ++j) {
        const auto& s = *summands[j];
        for (int n = 1; n <= D; ++n)
            for (int i = 0; i <= n; ++i)
                for (std::size_t k = 0; k < s.size(n); ++k)
                    t.face[n][i].push_back(offset[j][n - 1] + s.face(n, i, static_cast<int>(k)));
        for (int n = 0; n < D; ++n)
            for (int i = 0; i <= n; ++i)
                for (std::size_t k = 0; k < s.size(n); ++k)
                    t.degeneracy[n][i].push_back(offset[j][n + 1] + s.degeneracy(n, i, static_cast<int>(k)));
    }
    Coproduct c{share(SimplicialSet::from_tables(std::move(t))), {}};
    for (std::size_t j = 0; j < summands.size(); ++j) {
        std::vector<std::vector<int>> comp(D + 1);
        for (int n = 0; n <= D; ++n) {
            comp[n].resize(summands[j]->size(n));
            std::iota(comp[n].begin(), comp[n].end(), offset[j][n]);
        }
        c.injections.emplace_back(summands[j], c.object, std::move(comp));
    }
    return c;
}

SimplicialMap copairing(const Coproduct& c, const std::vector<SimplicialMap>& maps)
{
    if (maps.size() != c.injections.size())
        throw Error("copairing needs one map per summand");
    if (maps.empty())
        throw Error("copairing out of an empty coproduct needs an explicit target");
    const auto& target = maps[0].codomain();
    std::vector<std::vector<int>> comp(c.object->dim() + 1);
    for (int n = 0; n <= c.object->dim(); ++n)
        comp[n].assign(c.object->size(n), -1);
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (maps[j].codomain() != target && !(*maps[j].codomain() == *target))
            throw Error("copairing maps must share a codomain");
        const auto& inj = c.injections[j];
        for (int n = 0; n <= c.object->dim(); ++n)
            for (std::size_t k = 0; k < inj.component(n).size(); ++k)
                comp[n][inj(n, static_cast<int>(k))] = maps[j](n, static_cast<int>(k));
    }
    return {c.object, target, std::move(comp)};
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a)
    {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

Pushout pushout(const Inclusion& f, const SimplicialMap& g)
{
    if (f.domain() != g.domain() && !(*f.domain() == *g.domain()))
        throw Error("pushout legs must share their domain");
    const auto& b = *f.codomain();
    const auto& c = *g.codomain();
    if (b.dim() != c.dim())
        throw Error("pushout of objects with different truncation dimensions");
    const int D = b.dim();

    // Elements of C_n ⊔ B_n are numbered C first, then B. Tagging C with 0 and
    // B with 1 makes the union-find minimum the label-order minimum, so every
    // class touching C is represented by its C simplex.
    std::vector<std::vector<int>> cls(D + 1);
    std::vector<std::vector<int>> reps(D + 1);
    for (int n = 0; n <= D; ++n) {
        const int nc = static_cast<int>(c.size(n));
        UnionFind uf(c.size(n) + b.size(n));
        for (std::size_t a = 0; a < f.domain()->size(n); ++a)
            uf.unite(g(n, static_cast<int>(a)), nc + f(n, static_cast<int>(a)));
        cls[n].resize(c.size(n) + b.size(n));
        std::vector<int> slot(cls[n].size(), -1);
        for (std::size_t e = 0; e < cls[n].size(); ++e) {
            const int r = uf.find(static_cast<int>(e));
            if (slot[r] < 0) {
                slot[r] = static_cast<int>(reps[n].size());
                reps[n].push_back(r);
            }
            cls[n][e] = slot[r];
        }
    }

    auto t = empty_tables(D);
    for (int n = 0; n <= D; ++n) {
        const int nc = static_cast<int>(c.size(n));
        for (int r : reps[n])
            t.labels[n].push_back(r < nc ? Label::tagged(0, c.label(n, r)) : Label::tagged(1, b.label(n, r - nc)));
    }
    auto apply_face = [&](int n, int i, int e) {
        const int nc = static_cast<int>(c.size(n));
        const int img = e < nc ? c.face(n, i, e) : static_cast<int>(c.size(n - 1)) + b.face(n, i, e - nc);
        return cls[n - 1][img];
    };
    auto apply_deg = [&](int n, int i, int e) {
        const int nc = static_cast<int>(c.size(n));
        const int img = e < nc ? c.degeneracy(n, i, e) : static_cast<int>(c.size(n + 1)) + b.degeneracy(n, i, e - nc);
        return cls[n + 1][img];
    };
    for (int n = 1; n <= D; ++n)
        for (int i = 0; i <= n; ++i)
            for (int r : reps[n])
                t.face[n][i].push_back(apply_face(n, i, r));
    for (int n = 0; n < D; ++n)
        for (int i = 0; i <= n; ++i)
            for (int r : reps[n])
                t.degeneracy[n][i].push_back(apply_deg(n, i, r));
    // from_tables re-sorts by label; keep track of where each class lands.
    auto labels = t.labels;
    auto obj = share(SimplicialSet::from_tables(std::move(t)));

    std::vector<std::vector<int>> from_b(D + 1);
    std::vector<std::vector<int>> from_c(D + 1);
    for (int n = 0; n <= D; ++n) {
        std::vector<int> pos(labels[n].size());
        for (std::size_t s = 0; s < pos.size(); ++s)
            pos[s] = obj->index_of(n, labels[n][s]);
        const int nc = static_cast<int>(c.size(n));
        for (int k = 0; k < nc; ++k)
            from_c[n].push_back(pos[cls[n][k]]);
        for (std::size_t k = 0; k < b.size(n); ++k)
            from_b[n].push_back(pos[cls[n][nc + k]]);
    }
    return {obj, SimplicialMap(f.codomain(), obj, std::move(from_b)),
            Inclusion(SimplicialMap(g.codomain(), obj, std::move(from_c)))};
}

SimplicialMap pushout_induced(const Pushout& p, const Inclusion& f, const SimplicialMap& g,
                              const SimplicialMap& u, const SimplicialMap& v)
{
    const auto uf = compose(u, f.map());
    const auto vg = compose(v, g);
    if (uf.components() != vg.components())
        throw Error("cocone does not commute with the pushout span");
    const auto& target = u.codomain();
    std::vector<std::vector<int>> comp(p.object->dim() + 1);
    for (int n = 0; n <= p.object->dim(); ++n) {
        comp[n].assign(p.object->size(n), -1);
        for (std::size_t k = 0; k < p.from_c.domain()->size(n); ++k)
            comp[n][p.from_c(n, static_cast<int>(k))] = v(n, static_cast<int>(k));
        for (std::size_t k = 0; k < p.from_b.domain()->size(n); ++k)
            comp[n][p.from_b(n, static_cast<int>(k))] = u(n, static_cast<int>(k));
    }
    return {p.object, target, std::move(comp)};
}

SimplicialMap classifying_map(const SSetPtr& x, int n, int k)
{
    if (n < 0 || n > x->dim())
        throw Error("simplex dimension outside the truncation range");
    auto delta = standard_simplex(n, x->dim());
    std::vector<std::vector<int>> comp(x->dim() + 1);
    for (int m = 0; m <= x->dim(); ++m) {
        comp[m].resize(delta->size(m));
        for (std::size_t s = 0; s < comp[m].size(); ++s)
            comp[m][s] = x->apply(n, k, delta->label(m, static_cast<int>(s)).ints());
    }
    return {delta, x, std::move(comp)};
}

SimplicialMap to_terminal(const SSetPtr& x)
{
    auto pt = terminal(x->dim());
    std::vector<std::vector<int>> comp(x->dim() + 1);
    for (int n = 0; n <= x->dim(); ++n)
        comp[n].assign(x->size(n), 0);
    return {x, pt, std::move(comp)};
}

SimplicialMap from_empty(const SSetPtr& x)
{
    return {empty_set(x->dim()), x, std::vector<std::vector<int>>(x->dim() + 1)};
}

SimplicialMap constant_map(const SSetPtr& domain, const SSetPtr& codomain, int vertex)
{
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= codomain->size(0))
        throw Error("constant map at an unknown vertex");
    std::vector<std::vector<int>> comp(domain->dim() + 1);
    for (int n = 0; n <= domain->dim(); ++n) {
        const std::vector<int> zeros(n + 1, 0);
        comp[n].assign(domain->size(n), codomain->apply(0, vertex, zeros));
    }
    return {domain, codomain, std::move(comp)};
}

} // namespace sset
