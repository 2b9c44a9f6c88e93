#ifndef CANFORM_TREEDIAG_HPP
#define CANFORM_TREEDIAG_HPP

// Text notation for rooted vertex-labeled diagrams encoding products of
// 1/(a - b).
//
//   diagram := ["(" rational ")"] [("sym" | "asym") ["[" weight "]"]] tree (";" tree)*
//   tree    := label ["#" name] ["(" child ("," child)* ")"]
//   child   := ["="] (tree | "&" name)
//   label   := "*" | "0" | "z:m" | "t:i:j" | i
//
// Every edge stands for the difference child - parent: in the denominator for
// a single edge, in the numerator for a double edge ("="). "&name" adds an
// edge to a vertex tagged earlier with "#name", so a vertex may have several
// parents. A bare color i names t^(i)_j with j the next index of that color in
// pre-order that is not written out explicitly. sym and asym both sum over
// G_k (k = the stated weight, or the content of the diagram); asym is the
// log-form presentation, whose coefficient is the symmetric sum.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canform/polyrat.hpp"

namespace canform {

struct DiagramNode {
    Var label;
    bool bare = false; // written as a color and indexed automatically
    std::string tag;
    int parent = -1; // -1 for a root
    bool double_edge = false;
    friend bool operator==(const DiagramNode &, const DiagramNode &) = default;
};

struct DiagramEdge {
    int parent;
    int child;
    bool double_edge = false;
    bool reference = false;
    friend bool operator==(const DiagramEdge &, const DiagramEdge &) = default;
};

struct Diagram {
    enum class Wrapper { None, Sym, Asym };

    Rational coeff = 1;
    Wrapper wrapper = Wrapper::None;
    std::optional<Weight> weight;
    std::vector<DiagramNode> nodes; // pre-order
    std::vector<DiagramEdge> edges; // in text order

    // Colors of the t-labels.
    Weight content(int rank) const;
    int max_color() const;
    friend bool operator==(const Diagram &, const Diagram &) = default;
};

// Throws ParseError (with offset) on syntax errors, a repeated variable, an
// unknown reference or a cycle.
Diagram parse_diagram(std::string_view text);
std::string render(const Diagram &d);

RatFun diagram_to_ratfun(const Diagram &d);

// A "+"-separated sum of diagrams.
std::vector<Diagram> parse_diagram_sum(std::string_view text);
RatFun diagram_sum_to_ratfun(const std::vector<Diagram> &terms);

} // namespace canform

#endif
