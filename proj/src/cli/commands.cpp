#include "sset/cli.hpp"

#include "sset/corpus.hpp"
#include "sset/isohorn.hpp"
#include "sset/lifting.hpp"
#include "sset/validate.hpp"
#include "sset/widening.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace sset::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string workspace = ".";
    int dim = -1;
    int max_horn = 2;
    std::string out;
    std::string format = "text";
    std::string family = "iso_horns";
    unsigned jobs = 0;

    std::string name;
    std::string expression;
    std::string vertex;
    std::string suite;
};

// A file-name friendly form of a name such as "V0[2]".
std::string slug(const std::string& s)
{
    std::string out;
    for (char c : s)
        out += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_';
    return out;
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), ws_(o.workspace), out_(out), err_(err) {}

    int dim() const { return o_.dim >= 0 ? o_.dim : o_.max_horn + 2; }

    fs::path output(const std::string& fallback) const
    {
        return o_.out.empty() ? ws_.dir() / fallback : fs::path(o_.out);
    }

    void emit(const json& j, const std::string& text) const
    {
        if (o_.format == "json")
            out_ << dump(j);
        else
            out_ << text;
    }

    int build()
    {
        auto v = evaluate(o_.expression, dim(), &ws_);
        if (auto bad = validation_failure(v); !bad.empty())
            throw InvalidObject("'" + o_.expression + "' fails validation:\n" + bad);
        Stored s{o_.name, o_.expression, v};
        ws_.save(s);
        const auto& x = v.is_map() ? *v.map->codomain() : *v.object;
        std::string text = o_.name + ": " + (v.is_map() ? "map" : "simplicial set") + ", D=" +
                           std::to_string(x.dim()) + ", nondegenerate";
        if (v.is_map())
            text += " (codomain)";
        for (int n = 0; n <= x.dim(); ++n)
            text += " " + std::to_string(x.nondegenerate_count(n));
        text += "\nsaved " + ws_.file(o_.name).string() + "\n";
        emit(to_json(s), text);
        return 0;
    }

    int check()
    {
        auto s = ws_.load(o_.name);
        if (s.value.is_map())
            throw UsageError("'" + o_.name + "' is a map; check takes a simplicial set");
        auto report = check_rlp(s.value.object, o_.name, parse_family(o_.family), o_.max_horn);
        const auto fam = family_name(report.family);
        const auto path = output(slug(o_.name) + ".rlp." + fam + ".json");
        write_atomic(path, dump(report.to_json()));

        std::string text = o_.name + " against " + fam + " up to " + std::to_string(o_.max_horn) + " at D=" +
                           std::to_string(report.D) + ": " + std::to_string(report.squares()) + " squares, " +
                           std::to_string(report.failures()) + " without a lift\n";
        for (const auto& m : report.members)
            text += "  " + m.member + ": " + std::to_string(m.squares) + " squares, " +
                    std::to_string(m.failures.size()) + " without a lift\n";
        text += "report " + path.string() + "\n";
        if (report.pass()) {
            text += "PASS (up to dimension " + std::to_string(report.D) + ")\n";
            emit(report.to_json(), text);
            return 0;
        }
        const auto& m = *std::find_if(report.members.begin(), report.members.end(),
                                      [](const MemberVerdict& v) { return !v.pass(); });
        const auto wpath = path.parent_path() / (slug(o_.name) + ".witness." + fam + ".json");
        write_atomic(wpath, dump(witness_json(report, m, m.failures.front())));
        text += "FAIL\nwitness " + wpath.string() + "\n";
        emit(report.to_json(), text);
        if (o_.format == "json")
            err_ << "witness " << wpath.string() << "\n";
        return 1;
    }

    int decompose()
    {
        auto s = ws_.load(o_.name);
        if (!s.value.is_map() || !s.value.map->injective())
            throw UsageError("'" + o_.name + "' is not an inclusion");
        Inclusion inner(*s.value.map);
        const auto& y = *inner.codomain();
        int v = -1;
        if (!o_.vertex.empty() && std::all_of(o_.vertex.begin(), o_.vertex.end(), ::isdigit))
            v = std::stoi(o_.vertex);
        else if (auto k = y.find(0, Label::parse(o_.vertex)))
            v = *k;
        if (v < 0 || v >= static_cast<int>(y.size(0)))
            throw UsageError("no vertex '" + o_.vertex + "' in the codomain of '" + o_.name + "'");

        std::optional<CellDecomposition> found;
        try {
            found = decompose_single_narrow(inner, v);
        } catch (const NotNarrow& e) {
            err_ << "vertex " << e.vertex.str() << " is not narrow: " << e.witness.str() << " repeats it\n";
            return 1;
        }
        const auto& d = *found;
        auto checks = verify_decomposition(d);
        auto j = to_json(d, checks);
        const auto path = output(slug(o_.name) + ".decomposition." + slug(y.label(0, v).str()) + ".json");
        write_atomic(path, dump(j));

        std::string text = "decomposition of " + o_.name + " widened at " + y.label(0, v).str() + ", D=" +
                           std::to_string(y.dim()) + "\n";
        for (const auto& st : d.stages)
            text += "  k=" + std::to_string(st.k) + ": " + std::to_string(st.cells.size()) + " cell(s)" +
                    (st.truncated ? ", truncated at D" : "") + "\n";
        text += "  total " + std::to_string(d.cell_count()) + " cell(s)\n";
        if (d.truncated)
            text += "cells of dimension D+1 are kept only up to D\n";
        for (const auto& f : checks.failures())
            text += "check failed: " + f + "\n";
        text += "report " + path.string() + "\n";
        emit(j, text);
        return checks.ok() ? 0 : 1;
    }

    int verify()
    {
        json report;
        std::string text;
        bool ok = false;
        if (o_.suite == "theorem")
            ok = theorem(report, text);
        else if (o_.suite == "sec4")
            ok = retracts(report, text);
        else if (o_.suite == "sec5")
            ok = cells(report, text);
        else
            throw UsageError("unknown suite '" + o_.suite + "'");
        const auto path = output("verify." + o_.suite + ".json");
        write_atomic(path, dump(report));
        text += (ok ? "PASS" : "FAIL") + std::string("\nreport ") + path.string() + "\n";
        emit(report, text);
        return ok ? 0 : 1;
    }

    int export_dot()
    {
        auto s = ws_.load(o_.name);
        const auto g = one_skeleton(s.value.is_map() ? *s.value.map->codomain() : *s.value.object);
        const auto body = o_.format == "json" ? dump(to_json(g)) : to_dot(g, o_.name);
        if (o_.out.empty()) {
            out_ << body;
        } else {
            write_atomic(o_.out, body);
            out_ << "wrote " << o_.out << "\n";
        }
        return 0;
    }

private:
    bool theorem(json& report, std::string& text)
    {
        const int D = dim();
        auto rep = equivalence_report(builtin_corpus(D), o_.max_horn, {}, o_.jobs);
        report = rep.to_json();
        report["suite"] = "theorem";
        json files = json::array();
        for (const auto& row : rep.rows) {
            text += row.iso_horns.target + ": iso_horns " + (row.iso_horns.pass() ? "pass" : "fail") +
                    ", class_A " + (row.class_a.pass() ? "pass" : "fail") + (row.agree() ? "" : "  DISAGREE") +
                    "\n";
            for (const auto* r : {&row.iso_horns, &row.class_a}) {
                for (const auto& m : r->members) {
                    if (m.pass())
                        continue;
                    const auto p = ws_.dir() / ("witness." + slug(r->target) + "." + family_name(r->family) + ".json");
                    write_atomic(p, dump(witness_json(*r, m, m.failures.front())));
                    files.push_back(p.string());
                    break;
                }
            }
        }
        report["witness_files"] = files;
        return rep.agree();
    }

    static json row(const std::string& name, const Diagram& d)
    {
        return {{"name", name}, {"checks", d.checks.size()}, {"failed", d.failures()}, {"pass", d.ok()}};
    }

    bool retracts(json& report, std::string& text)
    {
        const int D = dim();
        json rows = json::array();
        bool ok = true;
        auto add = [&](const std::string& name, const Diagram& d) {
            rows.push_back(row(name, d));
            ok = ok && d.ok();
            text += name + ": " + std::to_string(d.checks.size()) + " checks" + (d.ok() ? "" : ", FAILED") + "\n";
        };
        for (const auto& [name, w] : widened_corpus(D)) {
            add(name + " retract", retract_witness(w).diagram);
            const auto& mu = w.marked;
            for (unsigned bits = 0; bits < (1u << mu.size()); ++bits) {
                std::vector<int> nu;
                for (std::size_t k = 0; k < mu.size(); ++k)
                    if (bits >> k & 1)
                        nu.push_back(mu[k]);
                std::string label = "{";
                for (std::size_t k = 0; k < nu.size(); ++k)
                    label += (k ? "," : "") + w.inner.codomain()->label(0, nu[k]).str();
                add(name + " factor through " + label + "}", factor_widened(w, nu).diagram);
            }
            add(name + " single-vertex chain", decompose_to_single(w).diagram);
        }
        for (const auto& [name, x] : builtin_corpus(D)) {
            if (name != "delta1" && name != "delta2" && name != "boundary2")
                continue;
            const int v = static_cast<int>(x->size(0));
            for (unsigned m = 0; m < (1u << v); ++m)
                for (unsigned n = m;; n = (n - 1) & m) {
                    std::vector<int> mu, nu;
                    for (int k = 0; k < v; ++k) {
                        if (m >> k & 1)
                            mu.push_back(k);
                        if (n >> k & 1)
                            nu.push_back(k);
                    }
                    auto iso = widening_iso(x, nu, mu);
                    Diagram d;
                    d.check_simplicial("phi' is simplicial", iso.phi);
                    d.check("phi' is bijective", iso.phi.bijective());
                    add(name + " phi' " + std::to_string(n) + "/" + std::to_string(m), d);
                    if (n == 0)
                        break;
                }
        }
        report = {{"suite", "sec4"}, {"truncation_dim", D}, {"pass", ok}, {"rows", rows}};
        return ok;
    }

    bool cells(json& report, std::string& text)
    {
        const int D = dim();
        json rows = json::array();
        bool ok = true;
        for (const auto& [name, w] : widened_corpus(D)) {
            if (w.marked.empty())
                continue;
            auto chain = decompose_to_single(w);
            for (const auto& step : chain.steps) {
                const auto& s1 = step.factor.stage1;
                json r = {{"name", name}, {"vertex", step.vertex.str()}, {"narrow", step.narrow}};
                if (!step.narrow) {
                    r["pass"] = true;
                    r["skipped"] = "vertex not narrow";
                    text += name + " at " + step.vertex.str() + ": not narrow, skipped\n";
                    rows.push_back(r);
                    continue;
                }
                auto d = decompose_single_narrow(s1.inner, s1.marked.front());
                auto checks = verify_decomposition(d);
                json counts = json::array();
                for (const auto& st : d.stages)
                    counts.push_back({{"k", st.k}, {"cells", st.cells.size()}});
                r["stages"] = counts;
                r["cells"] = d.cell_count();
                r["failed"] = checks.failures();
                r["pass"] = checks.ok();
                ok = ok && checks.ok();
                text += name + " at " + step.vertex.str() + ": " + std::to_string(d.cell_count()) + " cell(s), " +
                        std::to_string(checks.checks.size()) + " checks" + (checks.ok() ? "" : ", FAILED") + "\n";
                rows.push_back(r);
            }
        }
        report = {{"suite", "sec5"}, {"truncation_dim", D}, {"pass", ok}, {"rows", rows}};
        return ok;
    }

    const Options& o_;
    Workspace ws_;
    std::ostream& out_;
    std::ostream& err_;
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Truncated simplicial sets: build, check fibrancy, decompose, export."};
    app.name("ssetctl");
    app.require_subcommand(1, 1);
    app.add_option("--workspace,-w", o.workspace, "Directory of stored objects")->capture_default_str();
    app.add_option("--dim,-D", o.dim, "Truncation dimension (default max-horn + 2)")->check(CLI::NonNegativeNumber);
    app.add_option("--max-horn,-N", o.max_horn, "Largest horn dimension checked")->capture_default_str()->check(CLI::NonNegativeNumber);
    app.add_option("--out,-o", o.out, "Output file");
    app.add_option("--format", o.format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--family", o.family, "Lifting family")->capture_default_str()->check(CLI::IsMember({"iso_horns", "class_A"}));
    app.add_option("--jobs,-j", o.jobs, "Worker threads for verify (0 = hardware)")->capture_default_str();

    auto* build = app.add_subcommand("build", "Evaluate an expression and store it");
    build->add_option("name", o.name)->required();
    build->add_option("expression", o.expression)->required();
    auto* check = app.add_subcommand("check", "Check the right lifting property of a stored object");
    check->add_option("name", o.name)->required();
    auto* decompose = app.add_subcommand("decompose", "Cell decomposition of a stored inclusion widened at a vertex");
    decompose->add_option("inner", o.name)->required();
    decompose->add_option("vertex", o.vertex)->required();
    auto* verify = app.add_subcommand("verify", "Run a suite over the built-in corpus");
    verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"sec4", "sec5", "theorem"}));
    auto* dot = app.add_subcommand("export-dot", "Export the 1-skeleton as a graph");
    dot->add_option("name", o.name)->required();
    for (auto* sub : {build, check, decompose, verify, dot})
        sub->fallthrough();

    try {
        std::vector<std::string> args;
        for (int k = argc - 1; k > 0; --k)
            args.emplace_back(argv[k]);
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    Runner r(o, out, err);
    try {
        if (*build)
            return r.build();
        if (*check)
            return r.check();
        if (*decompose)
            return r.decompose();
        if (*verify)
            return r.verify();
        return r.export_dot();
    } catch (const InvalidObject& e) {
        err << "invalid: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace sset::cli
