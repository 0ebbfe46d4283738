#include "sset/validate.hpp"

#include <unordered_map>

namespace sset {

std::string face_entry(const SimplicialSet& x, int n, int i, int k)
{
    return "d" + std::to_string(i) + "[" + std::to_string(n) + "]" + x.label(n, k).str();
}

std::string degeneracy_entry(const SimplicialSet& x, int n, int i, int k)
{
    return "s" + std::to_string(i) + "[" + std::to_string(n) + "]" + x.label(n, k).str();
}

std::string ValidationReport::summary(std::size_t limit) const
{
    if (ok())
        return "no violations";
    std::string out = std::to_string(violations.size()) + " violation(s)";
    for (std::size_t j = 0; j < violations.size() && j < limit; ++j) {
        const auto& v = violations[j];
        out += "\n  " + v.identity + " at " + v.simplex + " (dim " + std::to_string(v.dim) + ")";
        if (!v.detail.empty())
            out += ": " + v.detail;
    }
    if (violations.size() > limit)
        out += "\n  ...";
    return out;
}

ValidationReport validate_sset(const SimplicialSet& x)
{
    ValidationReport r;
    const int D = x.dim();
    auto fail = [&](std::string identity, int n, int k, std::vector<std::string> entries, std::string detail) {
        r.violations.push_back({std::move(identity), n, x.label(n, k).str(), std::move(entries), std::move(detail)});
    };
    auto fe = [&](int n, int i, int k) { return face_entry(x, n, i, k); };
    auto se = [&](int n, int i, int k) { return degeneracy_entry(x, n, i, k); };
    auto is = [](const char* op, int a, const char* op2, int b) {
        return std::string(op) + std::to_string(a) + op2 + std::to_string(b);
    };

    // d_i d_j = d_{j-1} d_i for i < j.
    for (int n = 2; n <= D; ++n)
        for (int k = 0; k < static_cast<int>(x.size(n)); ++k)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    const int dj = x.face(n, j, k);
                    const int di = x.face(n, i, k);
                    const int lhs = x.face(n - 1, i, dj);
                    const int rhs = x.face(n - 1, j - 1, di);
                    if (lhs != rhs)
                        fail(is("d", i, " d", j) + " = " + is("d", j - 1, " d", i), n, k,
                             {fe(n, j, k), fe(n - 1, i, dj), fe(n, i, k), fe(n - 1, j - 1, di)},
                             x.label(n - 2, lhs).str() + " vs " + x.label(n - 2, rhs).str());
                }

    // s_i s_j = s_{j+1} s_i for i <= j.
    for (int n = 0; n + 2 <= D; ++n)
        for (int k = 0; k < static_cast<int>(x.size(n)); ++k)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i) {
                    const int sj = x.degeneracy(n, j, k);
                    const int si = x.degeneracy(n, i, k);
                    const int lhs = x.degeneracy(n + 1, i, sj);
                    const int rhs = x.degeneracy(n + 1, j + 1, si);
                    if (lhs != rhs)
                        fail(is("s", i, " s", j) + " = " + is("s", j + 1, " s", i), n, k,
                             {se(n, j, k), se(n + 1, i, sj), se(n, i, k), se(n + 1, j + 1, si)},
                             x.label(n + 2, lhs).str() + " vs " + x.label(n + 2, rhs).str());
                }

    // d_i s_j on n-simplices, n + 1 <= D.
    for (int n = 0; n + 1 <= D; ++n)
        for (int k = 0; k < static_cast<int>(x.size(n)); ++k)
            for (int j = 0; j <= n; ++j) {
                const int sj = x.degeneracy(n, j, k);
                for (int i = 0; i <= n + 1; ++i) {
                    const int lhs = x.face(n + 1, i, sj);
                    std::vector<std::string> entries{se(n, j, k), fe(n + 1, i, sj)};
                    int rhs = 0;
                    std::string identity;
                    if (i == j || i == j + 1) {
                        rhs = k;
                        identity = is("d", i, " s", j) + " = id";
                    } else if (i < j) {
                        const int di = x.face(n, i, k);
                        rhs = x.degeneracy(n - 1, j - 1, di);
                        entries.push_back(fe(n, i, k));
                        entries.push_back(se(n - 1, j - 1, di));
                        identity = is("d", i, " s", j) + " = " + is("s", j - 1, " d", i);
                    } else {
                        const int di = x.face(n, i - 1, k);
                        rhs = x.degeneracy(n - 1, j, di);
                        entries.push_back(fe(n, i - 1, k));
                        entries.push_back(se(n - 1, j, di));
                        identity = is("d", i, " s", j) + " = " + is("s", j, " d", i - 1);
                    }
                    if (lhs != rhs)
                        fail(identity, n, k, std::move(entries),
                             x.label(n, lhs).str() + " vs " + x.label(n, rhs).str());
                }
            }

    // Each s_i is injective.
    for (int n = 0; n < D; ++n)
        for (int i = 0; i <= n; ++i) {
            std::unordered_map<int, int> seen;
            for (int k = 0; k < static_cast<int>(x.size(n)); ++k) {
                auto [it, fresh] = seen.emplace(x.degeneracy(n, i, k), k);
                if (!fresh)
                    fail("s" + std::to_string(i) + " injective", n, k, {se(n, i, it->second), se(n, i, k)},
                         "collides with " + x.label(n, it->second).str());
            }
        }
    return r;
}

ValidationReport validate_map(const SimplicialMap& f)
{
    ValidationReport r;
    const auto& a = *f.domain();
    const auto& b = *f.codomain();
    auto ce = [&](int n, int k) { return "f[" + std::to_string(n) + "]" + a.label(n, k).str(); };
    for (int n = 1; n <= f.dim(); ++n)
        for (int k = 0; k < static_cast<int>(a.size(n)); ++k)
            for (int i = 0; i <= n; ++i) {
                const int lhs = f(n - 1, a.face(n, i, k));
                const int rhs = b.face(n, i, f(n, k));
                if (lhs != rhs)
                    r.violations.push_back({"f d" + std::to_string(i) + " = d" + std::to_string(i) + " f", n,
                                            a.label(n, k).str(),
                                            {face_entry(a, n, i, k), ce(n - 1, a.face(n, i, k)), ce(n, k),
                                             face_entry(b, n, i, f(n, k))},
                                            b.label(n - 1, lhs).str() + " vs " + b.label(n - 1, rhs).str()});
            }
    for (int n = 0; n < f.dim(); ++n)
        for (int k = 0; k < static_cast<int>(a.size(n)); ++k)
            for (int i = 0; i <= n; ++i) {
                const int lhs = f(n + 1, a.degeneracy(n, i, k));
                const int rhs = b.degeneracy(n, i, f(n, k));
                if (lhs != rhs)
                    r.violations.push_back({"f s" + std::to_string(i) + " = s" + std::to_string(i) + " f", n,
                                            a.label(n, k).str(),
                                            {degeneracy_entry(a, n, i, k), ce(n + 1, a.degeneracy(n, i, k)), ce(n, k),
                                             degeneracy_entry(b, n, i, f(n, k))},
                                            b.label(n + 1, lhs).str() + " vs " + b.label(n + 1, rhs).str()});
            }
    return r;
}

} // namespace sset
