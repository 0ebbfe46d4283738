#include "sset/simplicial_set.hpp"

#include "sset/error.hpp"

#include <algorithm>
#include <numeric>

namespace sset {

SimplicialSet SimplicialSet::from_tables(Tables t)
{
    const int D = t.dim;
    if (D < 0)
        throw Error("truncation dimension must be non-negative");
    if (static_cast<int>(t.labels.size()) != D + 1)
        throw Error("simplex table must have D+1 rows");
    t.face.resize(D + 1);
    t.degeneracy.resize(D + 1);

    // Sort each dimension by label and remember where each old index went.
    std::vector<std::vector<int>> new_pos(D + 1);
    for (int n = 0; n <= D; ++n) {
        auto& row = t.labels[n];
        std::vector<int> order(row.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return row[a] < row[b]; });
        new_pos[n].assign(row.size(), 0);
        std::vector<Label> sorted;
        sorted.reserve(row.size());
        for (std::size_t j = 0; j < order.size(); ++j) {
            new_pos[n][order[j]] = static_cast<int>(j);
            sorted.push_back(row[order[j]]);
        }
        for (std::size_t j = 1; j < sorted.size(); ++j)
            if (sorted[j] == sorted[j - 1])
                throw Error("duplicate label " + sorted[j].str() + " in dimension " + std::to_string(n));
        row = std::move(sorted);
    }

    auto remap = [&](std::vector<std::vector<int>>& maps, int from, int to, int count, const char* what) {
        if (static_cast<int>(maps.size()) != count)
            throw Error(std::string("wrong number of ") + what + " maps in dimension " + std::to_string(from));
        const std::size_t src = t.labels[from].size();
        const std::size_t dst = t.labels[to].size();
        for (auto& m : maps) {
            if (m.size() != src)
                throw Error(std::string(what) + " table has wrong length in dimension " + std::to_string(from));
            std::vector<int> out(src);
            for (std::size_t k = 0; k < src; ++k) {
                if (m[k] < 0 || static_cast<std::size_t>(m[k]) >= dst)
                    throw Error(std::string(what) + " entry out of range in dimension " + std::to_string(from));
                out[new_pos[from][k]] = new_pos[to][m[k]];
            }
            m = std::move(out);
        }
    };
    if (!t.face[0].empty())
        throw Error("dimension 0 has no face maps");
    for (int n = 1; n <= D; ++n)
        remap(t.face[n], n, n - 1, n + 1, "face");
    if (!t.degeneracy[D].empty())
        throw Error("top dimension has no degeneracy maps");
    for (int n = 0; n < D; ++n)
        remap(t.degeneracy[n], n, n + 1, n + 1, "degeneracy");

    SimplicialSet s;
    s.dim_ = D;
    s.tables_ = std::move(t);
    s.index_.resize(D + 1);
    for (int n = 0; n <= D; ++n) {
        auto& idx = s.index_[n];
        idx.reserve(s.size(n));
        for (std::size_t k = 0; k < s.size(n); ++k)
            idx.emplace(s.tables_.labels[n][k], static_cast<int>(k));
    }

    s.vertices_.resize(D + 1);
    s.vertices_[0].resize(s.size(0));
    std::iota(s.vertices_[0].begin(), s.vertices_[0].end(), 0);
    for (int n = 1; n <= D; ++n) {
        auto& v = s.vertices_[n];
        v.resize(s.size(n) * (n + 1));
        for (std::size_t k = 0; k < s.size(n); ++k) {
            const int front = s.face(n, n, static_cast<int>(k));
            const int back = s.face(n, 0, static_cast<int>(k));
            auto fv = s.vertices(n - 1, front);
            std::copy(fv.begin(), fv.end(), v.begin() + k * (n + 1));
            v[k * (n + 1) + n] = s.vertices(n - 1, back)[n - 1];
        }
    }

    s.degenerate_.resize(D + 1);
    for (int n = 0; n <= D; ++n)
        s.degenerate_[n].assign(s.size(n), 0);
    for (int n = 0; n < D; ++n)
        for (const auto& m : s.tables_.degeneracy[n])
            for (int img : m)
                s.degenerate_[n + 1][img] = 1;
    return s;
}

std::size_t SimplicialSet::total_size() const
{
    std::size_t t = 0;
    for (int n = 0; n <= dim_; ++n)
        t += size(n);
    return t;
}

std::optional<int> SimplicialSet::find(int n, const Label& l) const
{
    if (n < 0 || n > dim_)
        return std::nullopt;
    auto it = index_[n].find(l);
    if (it == index_[n].end())
        return std::nullopt;
    return it->second;
}

int SimplicialSet::index_of(int n, const Label& l) const
{
    auto k = find(n, l);
    if (!k)
        throw Error("no simplex " + l.str() + " in dimension " + std::to_string(n));
    return *k;
}

std::vector<int> SimplicialSet::nondegenerate(int n) const
{
    if (n < 0 || n > dim_)
        throw Error("dimension " + std::to_string(n) + " outside truncation 0.." + std::to_string(dim_));
    std::vector<int> out;
    for (std::size_t k = 0; k < size(n); ++k)
        if (!degenerate_[n][k])
            out.push_back(static_cast<int>(k));
    return out;
}

std::size_t SimplicialSet::nondegenerate_count(int n) const
{
    return static_cast<std::size_t>(std::count(degenerate_[n].begin(), degenerate_[n].end(), 0));
}

int SimplicialSet::max_nondegenerate_dim() const
{
    for (int n = dim_; n >= 0; --n)
        if (nondegenerate_count(n) > 0)
            return n;
    return -1;
}

int SimplicialSet::apply(int n, int k, std::span<const int> op) const
{
    const int m = static_cast<int>(op.size()) - 1;
    if (m < 0 || m > dim_)
        throw Error("simplicial operator leaves the truncation range");
    for (int j = 0; j <= m; ++j) {
        if (op[j] < 0 || op[j] > n || (j > 0 && op[j] < op[j - 1]))
            throw Error("simplicial operator must be a monotone map into [n]");
    }
    // Face part: drop every index missing from the image, highest first.
    std::vector<int> image(op.begin(), op.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    int cur = k;
    int cur_dim = n;
    for (int idx = n; idx >= 0; --idx) {
        if (!std::binary_search(image.begin(), image.end(), idx)) {
            cur = face(cur_dim, idx, cur);
            --cur_dim;
        }
    }
    // Degeneracy part: repeat entries left to right.
    for (int j = 0; j < m; ++j) {
        if (op[j] == op[j + 1]) {
            cur = degeneracy(cur_dim, j, cur);
            ++cur_dim;
        }
    }
    return cur;
}

bool operator==(const SimplicialSet& a, const SimplicialSet& b)
{
    if (&a == &b)
        return true;
    return a.dim_ == b.dim_ && a.tables_.labels == b.tables_.labels && a.tables_.face == b.tables_.face
        && a.tables_.degeneracy == b.tables_.degeneracy;
}

Mask empty_mask(const SimplicialSet& x)
{
    Mask m(x.dim() + 1);
    for (int n = 0; n <= x.dim(); ++n)
        m[n].assign(x.size(n), 0);
    return m;
}

Mask full_mask(const SimplicialSet& x)
{
    Mask m(x.dim() + 1);
    for (int n = 0; n <= x.dim(); ++n)
        m[n].assign(x.size(n), 1);
    return m;
}

Mask mask_union(const Mask& a, const Mask& b)
{
    Mask m = a;
    for (std::size_t n = 0; n < m.size(); ++n)
        for (std::size_t k = 0; k < m[n].size(); ++k)
            m[n][k] = m[n][k] | b[n][k];
    return m;
}

Mask mask_intersection(const Mask& a, const Mask& b)
{
    Mask m = a;
    for (std::size_t n = 0; n < m.size(); ++n)
        for (std::size_t k = 0; k < m[n].size(); ++k)
            m[n][k] = m[n][k] & b[n][k];
    return m;
}

bool mask_subset(const Mask& a, const Mask& b)
{
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t k = 0; k < a[n].size(); ++k)
            if (a[n][k] && !b[n][k])
                return false;
    return true;
}

std::size_t mask_count(const Mask& m, int n)
{
    return static_cast<std::size_t>(std::count(m[n].begin(), m[n].end(), 1));
}

} // namespace sset
