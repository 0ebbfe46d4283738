#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sset {

// Structural, immutable identifier of a simplex. Copies share the underlying
// node, so labels are cheap to pass around by value.
//
// Text syntax (used by str() and parse()):
//   *            point (terminal object)
//   (0,1,2)      monotone sequence, a simplex of a standard simplex
//   b(0,1,0)     bit-vector, a simplex of J
//   o[x]         object of a category, a vertex of a nerve
//   m[f,g]       composable morphism string, a simplex of a nerve
//   <A,B>        pair, a simplex of a product
//   t3{A}        tagged label, a simplex of a coproduct or pushout
class Label {
public:
    enum class Kind : std::uint8_t { point, seq, bits, object, word, pair, tagged };

    Label();

    static Label point();
    static Label seq(std::vector<int> entries);
    static Label bits(std::vector<int> entries);
    static Label object(std::string name);
    static Label word(std::vector<std::string> morphisms);
    static Label pair(Label first, Label second);
    static Label tagged(int tag, Label inner);

    static Label parse(std::string_view text);

    [[nodiscard]] Kind kind() const;
    [[nodiscard]] std::span<const int> ints() const;
    [[nodiscard]] const std::vector<std::string>& words() const;
    [[nodiscard]] const Label& first() const;
    [[nodiscard]] const Label& second() const;
    [[nodiscard]] const Label& inner() const;
    [[nodiscard]] int tag() const;

    [[nodiscard]] std::size_t hash() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Label& a, const Label& b);
    friend std::strong_ordering operator<=>(const Label& a, const Label& b);

private:
    struct Node;
    explicit Label(std::shared_ptr<const Node> node);
    void write(std::string& out) const;

    std::shared_ptr<const Node> node_;
};

struct LabelHash {
    std::size_t operator()(const Label& l) const { return l.hash(); }
};

} // namespace sset

template <>
struct std::hash<sset::Label> {
    std::size_t operator()(const sset::Label& l) const { return l.hash(); }
};
