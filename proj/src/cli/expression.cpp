#include "sset/cli.hpp"

#include "sset/category.hpp"
#include "sset/constructions.hpp"
#include "sset/isohorn.hpp"
#include "sset/lifting.hpp"
#include "sset/widening.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sset::cli {

namespace {

std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

// Splits on commas outside brackets of any kind.
std::vector<std::string> split_top(std::string_view s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const char c = s[k];
        if (c == '(' || c == '[' || c == '{' || c == '<')
            ++depth;
        else if (c == ')' || c == ']' || c == '}' || c == '>')
            --depth;
        else if (c == ',' && depth == 0) {
            out.push_back(trim(s.substr(start, k - start)));
            start = k + 1;
        }
        if (depth < 0)
            throw UsageError("unbalanced brackets in '" + std::string(s) + "'");
    }
    if (depth != 0)
        throw UsageError("unbalanced brackets in '" + std::string(s) + "'");
    auto last = trim(s.substr(start));
    if (!last.empty() || !out.empty())
        out.push_back(last);
    return out;
}

int to_int(const std::string& s)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw UsageError("expected an integer, got '" + s + "'");
    return v;
}

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

class Evaluator {
public:
    Evaluator(int D, const Workspace* ws) : D_(D), ws_(ws) {}

    Value eval(const std::string& text)
    {
        const auto s = trim(text);
        const auto open = s.find('(');
        if (open == std::string::npos)
            return atom(s);
        if (s.back() != ')')
            throw UsageError("expected ')' at the end of '" + s + "'");
        const auto head = trim(s.substr(0, open));
        const auto inner = s.substr(open + 1, s.size() - open - 2);
        return call(head, inner);
    }

private:
    Value atom(const std::string& s)
    {
        if (s == "J")
            return object(interval_nerve(D_));
        if (!ws_)
            throw UsageError("unknown name '" + s + "'");
        auto stored = ws_->load(s);
        const auto& v = stored.value;
        const int d = v.is_map() ? v.map->dim() : v.object->dim();
        if (d != D_)
            throw UsageError("'" + s + "' is truncated at " + std::to_string(d) + ", not " + std::to_string(D_));
        return v;
    }

    static Value object(SSetPtr x) { return {std::move(x), std::nullopt}; }
    static Value map(const SimplicialMap& f) { return {f.codomain(), f}; }
    static Value map(const Inclusion& f) { return map(f.map()); }

    SSetPtr as_object(const std::string& arg)
    {
        auto v = eval(arg);
        if (v.is_map())
            throw UsageError("'" + arg + "' is a map; use dom(...) or cod(...) for an object");
        return v.object;
    }

    Inclusion as_inclusion(const std::string& arg)
    {
        auto v = eval(arg);
        if (!v.is_map())
            throw UsageError("'" + arg + "' is an object, expected an inclusion");
        if (!v.map->injective())
            throw UsageError("'" + arg + "' is not injective");
        return Inclusion(*v.map);
    }

    std::vector<int> vertices(const SimplicialSet& x, const std::string& arg)
    {
        const auto s = trim(arg);
        if (s.size() < 2 || s.front() != '{' || s.back() != '}')
            throw UsageError("expected a vertex set like {0,2}, got '" + s + "'");
        std::vector<int> out;
        for (const auto& item : split_top(s.substr(1, s.size() - 2))) {
            if (all_digits(item)) {
                const int v = to_int(item);
                if (v >= static_cast<int>(x.size(0)))
                    throw UsageError("vertex index " + item + " out of range");
                out.push_back(v);
            } else {
                auto k = x.find(0, Label::parse(item));
                if (!k)
                    throw UsageError("unknown vertex " + item);
                out.push_back(*k);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    void arity(const std::string& head, const std::vector<std::string>& args, std::size_t n)
    {
        if (args.size() != n)
            throw UsageError(head + " takes " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()));
    }

    Value call(const std::string& head, const std::string& inner)
    {
        if (head == "nerve")
            return object(nerve(read_category(trim(inner)), D_));
        const auto args = split_top(inner);
        if (head == "delta") {
            arity(head, args, 1);
            return object(standard_simplex(to_int(args[0]), D_));
        }
        if (head == "boundary") {
            arity(head, args, 1);
            return object(make_standard(StandardKind::boundary, to_int(args[0]), D_));
        }
        if (head == "boundary_inclusion") {
            arity(head, args, 1);
            return map(boundary_inclusion(to_int(args[0]), D_));
        }
        if (head == "horn") {
            arity(head, args, 2);
            return map(horn_inclusion(to_int(args[0]), to_int(args[1]), D_));
        }
        if (head == "product") {
            arity(head, args, 2);
            return object(product(as_object(args[0]), as_object(args[1])));
        }
        if (head == "fullsub") {
            arity(head, args, 2);
            auto x = as_object(args[0]);
            return map(full_subcomplex_by_index(x, vertices(*x, args[1])));
        }
        if (head == "skeleton") {
            arity(head, args, 2);
            return map(skeleton(as_object(args[0]), to_int(args[1])));
        }
        if (head == "widen") {
            arity(head, args, 2);
            auto v = eval(args[0]);
            if (!v.is_map())
                return object(widen(v.object, vertices(*v.object, args[1])).object());
            auto inner_incl = as_inclusion(args[0]);
            return map(widened_inclusion(inner_incl, vertices(*inner_incl.codomain(), args[1])).map);
        }
        if (head == "isoplex") {
            arity(head, args, 2);
            return object(isoplex(to_int(args[0]), to_int(args[1]), D_).body());
        }
        if (head == "isohorn") {
            arity(head, args, 2);
            return map(isohorn(to_int(args[0]), to_int(args[1]), D_).inclusion());
        }
        if (head == "pushout_product") {
            arity(head, args, 2);
            return map(pushout_product(as_inclusion(args[0]), as_inclusion(args[1])));
        }
        if (head == "class_A") {
            arity(head, args, 1);
            return map(class_a(to_int(args[0]), D_));
        }
        if (head == "dom" || head == "cod") {
            arity(head, args, 1);
            auto v = eval(args[0]);
            if (!v.is_map())
                throw UsageError(head + " needs a map");
            return object(head == "dom" ? v.map->domain() : v.map->codomain());
        }
        throw UsageError("unknown constructor '" + head + "'");
    }

    static FiniteCategory read_category(const std::string& path)
    {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot read category file '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            return category_from_json(json::parse(buf.str()));
        } catch (const json::exception& e) {
            throw UsageError(path + ": " + e.what());
        }
    }

    int D_;
    const Workspace* ws_;
};

} // namespace

Value evaluate(const std::string& expression, int D, const Workspace* ws)
{
    if (D < 0)
        throw UsageError("truncation dimension must be >= 0");
    return Evaluator(D, ws).eval(expression);
}

} // namespace sset::cli
