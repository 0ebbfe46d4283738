#include "sset/lifting.hpp"

#include "sset/diagram.hpp"
#include "sset/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace sset {

namespace {

bool is_terminal(const SimplicialSet& y)
{
    for (int n = 0; n <= y.dim(); ++n)
        if (y.size(n) != 1)
            return false;
    return true;
}

SimplicialMap relabel(const SSetPtr& from, const SSetPtr& to)
{
    return map_by_labels(from, to, [](int, const Label& l) { return l; });
}

} // namespace

Inclusion pushout_product(const Inclusion& f, const Inclusion& g)
{
    if (f.codomain()->dim() != g.codomain()->dim())
        throw Error("pushout-product factors must share a truncation");
    auto bz = product(f.codomain(), g.codomain());
    const Mask fi = f.image();
    const Mask gi = g.image();
    Mask mask = empty_mask(*bz);
    for (int n = 0; n <= bz->dim(); ++n) {
        const std::size_t nz = g.codomain()->size(n);
        for (std::size_t k = 0; k < bz->size(n); ++k)
            mask[n][k] = fi[n][k / nz] || gi[n][k % nz];
    }
    return subcomplex(bz, mask);
}

SimplicialMap swap_factors(const SSetPtr& bz, const SSetPtr& zb)
{
    return map_by_labels(bz, zb, [](int, const Label& l) { return Label::pair(l.second(), l.first()); });
}

Inclusion zero_in_j(int D)
{
    return full_subcomplex(interval_nerve(D), {Label::bits({0})});
}

Inclusion class_a(int n, int D)
{
    return pushout_product(zero_in_j(D), boundary_inclusion(n, D));
}

LiftingProblem fibrancy_problem(const Inclusion& left, const SimplicialMap& top)
{
    return {left, to_terminal(top.codomain()), top, to_terminal(left.codomain())};
}

bool commutes(const LiftingProblem& p)
{
    if (p.top.domain() != p.left.domain() && !(*p.top.domain() == *p.left.domain()))
        return false;
    return same_map(compose(p.right, p.top), compose(p.bottom, p.left.map()));
}

std::optional<SimplicialMap> solve_lift(const LiftingProblem& p, std::shared_ptr<const FaceIndex> index)
{
    if (!commutes(p))
        throw Error("lifting problem: the square does not commute");
    const auto& b = p.left.codomain();
    const auto& x = p.top.codomain();
    MapSearch::Options opt;
    opt.fixed.resize(b->dim() + 1);
    for (int n = 0; n <= b->dim(); ++n) {
        opt.fixed[n].assign(b->size(n), -1);
        for (int a = 0; a < static_cast<int>(p.left.domain()->size(n)); ++a)
            opt.fixed[n][p.left(n, a)] = p.top(n, a);
    }
    if (!is_terminal(*p.right.codomain())) {
        const auto& right = p.right;
        const auto& bottom = p.bottom;
        opt.allowed = [&right, &bottom](int n, int k, int image) { return right(n, image) == bottom(n, k); };
    }
    return MapSearch(b, x, std::move(opt), std::move(index)).first();
}

std::string family_name(Family f)
{
    return f == Family::iso_horns ? "iso_horns" : "class_A";
}

Family parse_family(const std::string& name)
{
    if (name == "iso_horns")
        return Family::iso_horns;
    if (name == "class_A")
        return Family::class_a;
    throw Error("unknown family '" + name + "' (expected iso_horns or class_A)");
}

std::vector<MemberVerdict> family_members(Family family, int N, int D)
{
    std::vector<MemberVerdict> out;
    if (family == Family::iso_horns) {
        for (int n = 1; n <= N; ++n)
            for (int i = 0; i < n; ++i)
                out.push_back({"V_" + std::to_string(i) + "[" + std::to_string(n) + "]", n, i,
                               isohorn(n, i, D).inclusion(), 0, {}});
    } else {
        for (int n = 0; n <= N; ++n)
            out.push_back({"A(" + std::to_string(n) + ")", n, 0, class_a(n, D), 0, {}});
    }
    return out;
}

bool RlpReport::pass() const
{
    return std::all_of(members.begin(), members.end(), [](const MemberVerdict& m) { return m.pass(); });
}

std::size_t RlpReport::squares() const
{
    std::size_t total = 0;
    for (const auto& m : members)
        total += m.squares;
    return total;
}

std::size_t RlpReport::failures() const
{
    std::size_t total = 0;
    for (const auto& m : members)
        total += m.failures.size();
    return total;
}

json witness_json(const RlpReport& r, const MemberVerdict& m, const SimplicialMap& top)
{
    return {{"target", r.target},
            {"family", family_name(r.family)},
            {"member", m.member},
            {"truncation_dim", r.D},
            {"left", to_json(m.left.map())},
            {"top", to_json(top)}};
}

json RlpReport::to_json() const
{
    json ms = json::array();
    for (const auto& m : members) {
        json entry = {{"member", m.member},
                      {"n", m.n},
                      {"i", m.i},
                      {"squares", m.squares},
                      {"no_lift", m.failures.size()},
                      {"pass", m.pass()}};
        if (!m.pass())
            entry["witness"] = witness_json(*this, m, m.failures.front());
        ms.push_back(std::move(entry));
    }
    return {{"target", target},
            {"family", family_name(family)},
            {"max_horn", N},
            {"truncation_dim", D},
            {"pass", pass()},
            {"pass_is_truncated", pass_is_truncated},
            {"squares", squares()},
            {"members", std::move(ms)}};
}

RlpReport check_rlp(const SSetPtr& x, const std::string& name, Family family, int N, const RlpOptions& options)
{
    if (N < 0 || N > x->dim())
        throw Error("check needs 0 <= N <= D, got N=" + std::to_string(N) + " D=" + std::to_string(x->dim()));
    RlpReport r;
    r.target = name;
    r.object = x;
    r.family = family;
    r.N = N;
    r.D = x->dim();
    r.members = family_members(family, N, r.D);
    auto index = std::make_shared<const FaceIndex>(x);
    for (auto& m : r.members) {
        MapSearch tops(m.left.domain(), x, {}, index);
        tops.for_each([&](const SimplicialMap& top) {
            ++m.squares;
            auto p = fibrancy_problem(m.left, top);
            if (!solve_lift(p, index)) {
                m.failures.push_back(top);
                if (options.on_no_lift)
                    options.on_no_lift(p);
            }
            return true;
        });
    }
    return r;
}

bool EquivalenceReport::agree() const
{
    return std::all_of(rows.begin(), rows.end(), [](const EquivalenceRow& r) { return r.agree(); });
}

json EquivalenceReport::to_json() const
{
    json rs = json::array();
    for (const auto& row : rows)
        rs.push_back({{"target", row.iso_horns.target},
                      {"iso_horns", row.iso_horns.pass()},
                      {"class_A", row.class_a.pass()},
                      {"agree", row.agree()},
                      {"iso_horn_report", row.iso_horns.to_json()},
                      {"class_A_report", row.class_a.to_json()}});
    return {{"max_horn", N}, {"truncation_dim", D}, {"agree", agree()}, {"rows", std::move(rs)}};
}

EquivalenceReport equivalence_report(const std::vector<std::pair<std::string, SSetPtr>>& corpus, int N,
                                     const RlpOptions& options, unsigned jobs)
{
    EquivalenceReport out;
    out.N = N;
    out.D = corpus.empty() ? N : corpus.front().second->dim();
    std::vector<std::optional<EquivalenceRow>> rows(corpus.size());
    std::vector<std::exception_ptr> errors(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < corpus.size(); k = next++) {
            try {
                const auto& [name, x] = corpus[k];
                rows[k] = EquivalenceRow{check_rlp(x, name, Family::iso_horns, N, options),
                                         check_rlp(x, name, Family::class_a, N, options)};
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        if (errors[k])
            std::rethrow_exception(errors[k]);
        out.rows.push_back(std::move(*rows[k]));
    }
    return out;
}

std::optional<SimplicialMap> lift_via_retract(const RetractWitness& r, const SimplicialMap& top)
{
    auto lift = solve_lift(fibrancy_problem(r.middle, compose(top, r.top_retr)));
    if (!lift)
        return std::nullopt;
    return compose(*lift, r.bottom_incl.map());
}

std::optional<SimplicialMap> lift_via_cells(const CellDecomposition& d, const SimplicialMap& top)
{
    if (d.stages.empty())
        return compose(top, inverse(d.target.map.map()));
    auto index = std::make_shared<const FaceIndex>(top.codomain());
    SimplicialMap g = compose(top, relabel(d.stages.front().before.domain(), d.target.domain()));
    for (const auto& st : d.stages) {
        const auto h = compose(g, st.attaching);
        std::vector<SimplicialMap> lifts;
        for (std::size_t c = 0; c < st.cells.size(); ++c) {
            auto l = solve_lift(fibrancy_problem(st.horns[c].inclusion(), compose(h, st.horn_sum.injections[c])), index);
            if (!l)
                return std::nullopt;
            lifts.push_back(std::move(*l));
        }
        auto out_of_pushout =
            pushout_induced(st.square, st.horn_inclusion, st.attaching, copairing(st.plex_sum, lifts), g);
        g = compose(out_of_pushout, inverse(st.comparison));
    }
    return compose(g, relabel(d.target.codomain(), d.stages.back().after.domain()));
}

} // namespace sset
