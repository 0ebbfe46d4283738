#include "sset/search.hpp"

#include "sset/error.hpp"

namespace sset {

std::size_t FaceIndex::KeyHash::operator()(const std::vector<int>& v) const
{
    std::size_t h = v.size();
    for (int x : v)
        h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

FaceIndex::FaceIndex(SSetPtr x) : x_(std::move(x)), by_faces_(x_->dim() + 1)
{
    for (int n = 1; n <= x_->dim(); ++n) {
        std::vector<int> key(n + 1);
        for (int k = 0; k < static_cast<int>(x_->size(n)); ++k) {
            for (int i = 0; i <= n; ++i)
                key[i] = x_->face(n, i, k);
            by_faces_[n][key].push_back(k);
        }
    }
}

const std::vector<int>& FaceIndex::fillers(int n, const std::vector<int>& faces) const
{
    if (n < 1 || n > x_->dim())
        return none_;
    auto it = by_faces_[n].find(faces);
    return it == by_faces_[n].end() ? none_ : it->second;
}

MapSearch::MapSearch(SSetPtr domain, SSetPtr codomain, Options options, std::shared_ptr<const FaceIndex> index)
    : b_(std::move(domain)), x_(std::move(codomain)), opt_(std::move(options)), index_(std::move(index))
{
    if (b_->dim() != x_->dim())
        throw Error("map search between different truncation dimensions");
    if (!index_)
        index_ = std::make_shared<const FaceIndex>(x_);
    else if (index_->object() != x_ && !(*index_->object() == *x_))
        throw Error("face index was built for a different codomain");
    const int D = b_->dim();
    comp_.resize(D + 1);
    for (int n = 0; n <= D; ++n)
        comp_[n].assign(b_->size(n), -1);
    if (!opt_.fixed.empty()) {
        if (static_cast<int>(opt_.fixed.size()) != D + 1)
            throw Error("fixed assignment has the wrong number of dimensions");
        for (int n = 0; n <= D; ++n) {
            if (opt_.fixed[n].size() != b_->size(n))
                throw Error("fixed assignment has the wrong length in dimension " + std::to_string(n));
            for (std::size_t k = 0; k < b_->size(n); ++k) {
                const int v = opt_.fixed[n][k];
                if (v < -1 || v >= static_cast<int>(x_->size(n)))
                    throw Error("fixed assignment points outside the codomain");
                comp_[n][k] = v;
            }
        }
    }
    open_.resize(D + 1);
    for (int n = 0; n <= D; ++n)
        for (int k : b_->nondegenerate(n))
            if (comp_[n][k] < 0)
                open_[n].push_back(k);
    forced_.resize(D + 1);
    used_.resize(D + 1);
    for (int n = 0; n <= D; ++n)
        used_[n].assign(x_->size(n), 0);
    edges_at_.resize(b_->size(0));
    if (D >= 1)
        for (int e : b_->nondegenerate(1)) {
            const int s = b_->face(1, 1, e);
            const int t = b_->face(1, 0, e);
            edges_at_[s].emplace_back(e, t);
            if (t != s)
                edges_at_[t].emplace_back(e, s);
        }
}

bool MapSearch::accept(int n, int k, int image) const
{
    for (int i = 0; n > 0 && i <= n; ++i)
        if (x_->face(n, i, image) != comp_[n - 1][b_->face(n, i, k)])
            return false;
    if (opt_.preserve_degeneracy && b_->is_degenerate(n, k) != x_->is_degenerate(n, image))
        return false;
    return !opt_.allowed || opt_.allowed(n, k, image);
}

// Dimension n is entered with every lower dimension fully assigned. The cells
// assigned here (forced degeneracies) and the injectivity marks of all
// preassigned cells are recorded in forced_[n] for leave(n).
bool MapSearch::enter(int n)
{
    auto& forced = forced_[n];
    forced.clear();
    bool ok = true;
    if (n > 0) {
        for (int k = 0; ok && k < static_cast<int>(b_->size(n - 1)); ++k)
            for (int j = 0; j < n; ++j) {
                const int t = b_->degeneracy(n - 1, j, k);
                const int v = x_->degeneracy(n - 1, j, comp_[n - 1][k]);
                if (comp_[n][t] < 0) {
                    comp_[n][t] = v;
                    forced.push_back(t);
                } else if (comp_[n][t] != v) {
                    ok = false;
                    break;
                }
            }
    }
    // Marks are pushed as ~k so leave(n) can tell them from forced cells.
    for (int k = 0; ok && k < static_cast<int>(b_->size(n)); ++k) {
        const int v = comp_[n][k];
        if (v < 0)
            continue;
        if (!accept(n, k, v)) {
            ok = false;
            break;
        }
        if (opt_.injective) {
            if (used_[n][v]) {
                ok = false;
                break;
            }
            used_[n][v] = 1;
            forced.push_back(~k);
        }
    }
    if (!ok)
        leave(n);
    return ok;
}

void MapSearch::leave(int n)
{
    auto& forced = forced_[n];
    // Unmark first, while the images are still in place.
    for (int e : forced)
        if (e < 0)
            used_[n][comp_[n][~e]] = 0;
    for (int e : forced)
        if (e >= 0)
            comp_[n][e] = -1;
    forced.clear();
}

bool MapSearch::edge_lookahead(int v) const
{
    for (auto [e, other] : edges_at_[v]) {
        if (comp_[0][other] < 0)
            continue;
        const int t = comp_[0][b_->face(1, 0, e)];
        const int s = comp_[0][b_->face(1, 1, e)];
        const int fixed = comp_[1][e];
        if (fixed >= 0) {
            if (x_->face(1, 0, fixed) != t || x_->face(1, 1, fixed) != s)
                return false;
        } else if (index_->fillers(1, {t, s}).empty()) {
            return false;
        }
    }
    return true;
}

bool MapSearch::recurse(int n, std::size_t pos)
{
    ++nodes_;
    if (pos == open_[n].size()) {
        if (n == b_->dim()) {
            ++found_;
            return (*visit_)(SimplicialMap(b_, x_, comp_));
        }
        if (!enter(n + 1))
            return true;
        const bool cont = recurse(n + 1, 0);
        leave(n + 1);
        return cont;
    }
    const int k = open_[n][pos];
    auto attempt = [&](int cand) {
        if (opt_.injective && used_[n][cand])
            return true;
        if (opt_.preserve_degeneracy && x_->is_degenerate(n, cand))
            return true;
        if (opt_.allowed && !opt_.allowed(n, k, cand))
            return true;
        comp_[n][k] = cand;
        if (opt_.injective)
            used_[n][cand] = 1;
        bool cont = true;
        if (n > 0 || edge_lookahead(k))
            cont = recurse(n, pos + 1);
        if (opt_.injective)
            used_[n][cand] = 0;
        comp_[n][k] = -1;
        return cont;
    };
    if (n == 0) {
        for (int cand = 0; cand < static_cast<int>(x_->size(0)); ++cand)
            if (!attempt(cand))
                return false;
        return true;
    }
    std::vector<int> faces(n + 1);
    for (int i = 0; i <= n; ++i)
        faces[i] = comp_[n - 1][b_->face(n, i, k)];
    for (int cand : index_->fillers(n, faces))
        if (!attempt(cand))
            return false;
    return true;
}

std::size_t MapSearch::for_each(const std::function<bool(const SimplicialMap&)>& visit)
{
    visit_ = &visit;
    found_ = 0;
    nodes_ = 0;
    if (enter(0)) {
        recurse(0, 0);
        leave(0);
    }
    visit_ = nullptr;
    return found_;
}

std::optional<SimplicialMap> MapSearch::first()
{
    std::optional<SimplicialMap> out;
    for_each([&](const SimplicialMap& f) {
        out = f;
        return false;
    });
    return out;
}

std::optional<SimplicialMap> find_isomorphism(const SSetPtr& x, const SSetPtr& y,
                                              std::function<bool(int n, int k, int image)> allowed)
{
    if (x->dim() != y->dim())
        return std::nullopt;
    for (int n = 0; n <= x->dim(); ++n)
        if (x->size(n) != y->size(n) || x->nondegenerate_count(n) != y->nondegenerate_count(n))
            return std::nullopt;
    MapSearch::Options opt;
    opt.injective = true;
    opt.preserve_degeneracy = true;
    opt.allowed = std::move(allowed);
    return MapSearch(x, y, std::move(opt)).first();
}

} // namespace sset
