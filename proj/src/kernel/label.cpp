#include "sset/label.hpp"

#include "sset/error.hpp"

#include <algorithm>
#include <cctype>

namespace sset {

struct Label::Node {
    Kind kind = Kind::point;
    std::vector<int> ints;
    std::vector<std::string> words;
    std::vector<Label> children;
    std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v)
{
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.' || c == '-' || c == '/';
}

void check_name(const std::string& name)
{
    if (name.empty() || !std::all_of(name.begin(), name.end(), is_name_char))
        throw Error("invalid name in label: '" + name + "'");
}

} // namespace

Label::Label() : Label(point()) {}

Label::Label(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Label Label::point()
{
    static const Label p = [] {
        auto n = std::make_shared<Node>();
        n->hash = mix(0, static_cast<std::size_t>(Kind::point));
        return Label(std::move(n));
    }();
    return p;
}

Label Label::seq(std::vector<int> entries)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::seq;
    n->ints = std::move(entries);
    std::size_t h = mix(0, static_cast<std::size_t>(n->kind));
    for (int v : n->ints)
        h = mix(h, std::hash<int>{}(v));
    n->hash = h;
    return Label(std::move(n));
}

Label Label::bits(std::vector<int> entries)
{
    for (int v : entries)
        if (v != 0 && v != 1)
            throw Error("bit-vector label entries must be 0 or 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::bits;
    n->ints = std::move(entries);
    std::size_t h = mix(0, static_cast<std::size_t>(n->kind));
    for (int v : n->ints)
        h = mix(h, std::hash<int>{}(v));
    n->hash = h;
    return Label(std::move(n));
}

Label Label::object(std::string name)
{
    check_name(name);
    auto n = std::make_shared<Node>();
    n->kind = Kind::object;
    n->words.push_back(std::move(name));
    n->hash = mix(mix(0, static_cast<std::size_t>(n->kind)), std::hash<std::string>{}(n->words[0]));
    return Label(std::move(n));
}

Label Label::word(std::vector<std::string> morphisms)
{
    for (const auto& m : morphisms)
        check_name(m);
    auto n = std::make_shared<Node>();
    n->kind = Kind::word;
    n->words = std::move(morphisms);
    std::size_t h = mix(0, static_cast<std::size_t>(n->kind));
    for (const auto& w : n->words)
        h = mix(h, std::hash<std::string>{}(w));
    n->hash = h;
    return Label(std::move(n));
}

Label Label::pair(Label first, Label second)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::pair;
    n->hash = mix(mix(mix(0, static_cast<std::size_t>(Kind::pair)), first.hash()), second.hash());
    n->children.push_back(std::move(first));
    n->children.push_back(std::move(second));
    return Label(std::move(n));
}

Label Label::tagged(int tag, Label inner)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::tagged;
    n->ints.push_back(tag);
    n->hash = mix(mix(mix(0, static_cast<std::size_t>(Kind::tagged)), std::hash<int>{}(tag)), inner.hash());
    n->children.push_back(std::move(inner));
    return Label(std::move(n));
}

Label::Kind Label::kind() const { return node_->kind; }
std::span<const int> Label::ints() const { return node_->ints; }
const std::vector<std::string>& Label::words() const { return node_->words; }

const Label& Label::first() const
{
    if (node_->kind != Kind::pair)
        throw Error("label " + str() + " is not a pair");
    return node_->children[0];
}

const Label& Label::second() const
{
    if (node_->kind != Kind::pair)
        throw Error("label " + str() + " is not a pair");
    return node_->children[1];
}

const Label& Label::inner() const
{
    if (node_->kind != Kind::tagged)
        throw Error("label " + str() + " is not tagged");
    return node_->children[0];
}

int Label::tag() const
{
    if (node_->kind != Kind::tagged)
        throw Error("label " + str() + " is not tagged");
    return node_->ints[0];
}

std::size_t Label::hash() const { return node_->hash; }

bool operator==(const Label& a, const Label& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.node_->hash != b.node_->hash)
        return false;
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Label& a, const Label& b)
{
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (auto c = x.kind <=> y.kind; c != 0)
        return c;
    if (auto c = x.ints <=> y.ints; c != 0)
        return c;
    if (auto c = x.words <=> y.words; c != 0)
        return c;
    const std::size_t n = std::min(x.children.size(), y.children.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = x.children[i] <=> y.children[i]; c != 0)
            return c;
    return x.children.size() <=> y.children.size();
}

void Label::write(std::string& out) const
{
    const auto& n = *node_;
    auto ints = [&] {
        out += '(';
        for (std::size_t i = 0; i < n.ints.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(n.ints[i]);
        }
        out += ')';
    };
    switch (n.kind) {
    case Kind::point:
        out += '*';
        break;
    case Kind::seq:
        ints();
        break;
    case Kind::bits:
        out += 'b';
        ints();
        break;
    case Kind::object:
        out += "o[" + n.words[0] + "]";
        break;
    case Kind::word:
        out += "m[";
        for (std::size_t i = 0; i < n.words.size(); ++i) {
            if (i)
                out += ',';
            out += n.words[i];
        }
        out += ']';
        break;
    case Kind::pair:
        out += '<';
        n.children[0].write(out);
        out += ',';
        n.children[1].write(out);
        out += '>';
        break;
    case Kind::tagged:
        out += 't' + std::to_string(n.ints[0]) + '{';
        n.children[0].write(out);
        out += '}';
        break;
    }
}

std::string Label::str() const
{
    std::string out;
    write(out);
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Label parse_all()
    {
        Label l = parse();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing characters");
        return l;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error("cannot parse label '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer()
    {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-')
            ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_ || (pos_ == start + 1 && s_[start] == '-'))
            fail("expected integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    std::string name()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_name_char(s_[pos_]))
            ++pos_;
        if (start == pos_)
            fail("expected name");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::vector<int> int_list()
    {
        expect('(');
        std::vector<int> v;
        if (peek() == ')') {
            ++pos_;
            return v;
        }
        for (;;) {
            v.push_back(integer());
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(')');
            return v;
        }
    }

    Label parse()
    {
        switch (peek()) {
        case '*':
            ++pos_;
            return Label::point();
        case '(':
            return Label::seq(int_list());
        case 'b':
            ++pos_;
            return Label::bits(int_list());
        case 'o': {
            ++pos_;
            expect('[');
            std::string n = name();
            expect(']');
            return Label::object(n);
        }
        case 'm': {
            ++pos_;
            expect('[');
            std::vector<std::string> w{name()};
            while (peek() == ',') {
                ++pos_;
                w.push_back(name());
            }
            expect(']');
            return Label::word(std::move(w));
        }
        case '<': {
            ++pos_;
            Label a = parse();
            expect(',');
            Label b = parse();
            expect('>');
            return Label::pair(std::move(a), std::move(b));
        }
        case 't': {
            ++pos_;
            int tag = integer();
            expect('{');
            Label inner = parse();
            expect('}');
            return Label::tagged(tag, std::move(inner));
        }
        default:
            fail("unexpected character");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Label Label::parse(std::string_view text) { return Parser(text).parse_all(); }

} // namespace sset
