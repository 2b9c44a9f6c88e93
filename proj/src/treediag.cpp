#include "canform/treediag.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "canform/errors.hpp"
#include "canform/symmetric.hpp"

namespace canform {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Diagram run()
    {
        skip();
        if (peek() == '(') {
            const std::size_t start = ++pos_;
            const std::size_t close = text_.find(')', start);
            if (close == std::string_view::npos)
                throw ParseError("unterminated coefficient", start);
            try {
                d_.coeff = parse_rational(trimmed(text_.substr(start, close - start)));
            } catch (const Error &) {
                throw ParseError("bad coefficient", start);
            }
            pos_ = close + 1;
            skip();
        }
        if (keyword("asym"))
            d_.wrapper = Diagram::Wrapper::Asym;
        else if (keyword("sym"))
            d_.wrapper = Diagram::Wrapper::Sym;
        if (d_.wrapper != Diagram::Wrapper::None) {
            skip();
            if (peek() == '[') {
                const std::size_t start = ++pos_;
                const std::size_t close = text_.find(']', start);
                if (close == std::string_view::npos)
                    throw ParseError("unterminated weight", start);
                try {
                    d_.weight = Weight::parse(trimmed(text_.substr(start, close - start)));
                } catch (const Error &) {
                    throw ParseError("bad weight", start);
                }
                pos_ = close + 1;
            }
        }
        tree(-1, false);
        skip();
        while (peek() == ';') {
            ++pos_;
            tree(-1, false);
            skip();
        }
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        assign_indices();
        check_cycles();
        return std::move(d_);
    }

private:
    static std::string_view trimmed(std::string_view s)
    {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool keyword(std::string_view word)
    {
        if (text_.substr(pos_, word.size()) != word)
            return false;
        pos_ += word.size();
        return true;
    }

    void expect(char c)
    {
        skip();
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    int number()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            throw ParseError("expected a number", pos_);
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6)
            throw ParseError("number too large", start);
        return std::stoi(digits);
    }

    std::string name()
    {
        const std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            ++pos_;
        if (start == pos_)
            throw ParseError("expected a name", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    int tree(int parent, bool double_edge)
    {
        skip();
        const std::size_t start = pos_;
        DiagramNode node;
        node.parent = parent;
        node.double_edge = double_edge;
        const char c = peek();
        if (c == '*') {
            ++pos_;
        } else if (c == 'z' || c == 't') {
            ++pos_;
            if (peek() != ':')
                throw ParseError("expected ':'", pos_);
            ++pos_;
            const int first = number();
            if (c == 'z') {
                if (first < 1)
                    throw ParseError("anchor index starts at 1", start);
                node.label = Var::z(first);
            } else {
                if (peek() != ':')
                    throw ParseError("expected ':'", pos_);
                ++pos_;
                const int second = number();
                if (first < 1 || second < 1)
                    throw ParseError("color and index start at 1", start);
                node.label = Var::t(first, second);
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const int color = number();
            if (color == 0) {
                node.label = Var::origin();
            } else {
                node.bare = true;
                node.label = Var::t(color, 1); // index fixed in assign_indices
            }
        } else {
            throw ParseError(c ? "expected a vertex label" : "unexpected end of diagram", pos_);
        }
        if (parent >= 0 && !node.label.is_t())
            throw ParseError("only the root may be 0 or an anchor", start);
        if (peek() == '#') {
            ++pos_;
            node.tag = name();
            if (tags_.count(node.tag))
                throw ParseError("tag '" + node.tag + "' defined twice", start);
        }
        const int id = static_cast<int>(d_.nodes.size());
        d_.nodes.push_back(node);
        offsets_.push_back(start);
        if (!node.tag.empty())
            tags_[node.tag] = id;
        if (parent >= 0)
            d_.edges.push_back({parent, id, double_edge, false});
        skip();
        if (peek() == '(') {
            ++pos_;
            child(id);
            skip();
            while (peek() == ',') {
                ++pos_;
                child(id);
                skip();
            }
            expect(')');
        }
        return id;
    }

    void child(int parent)
    {
        skip();
        bool double_edge = false;
        if (peek() == '=') {
            double_edge = true;
            ++pos_;
            skip();
        }
        if (peek() == '&') {
            const std::size_t start = pos_++;
            const std::string tag = name();
            auto it = tags_.find(tag);
            if (it == tags_.end())
                throw ParseError("unknown reference '&" + tag + "'", start);
            d_.edges.push_back({parent, it->second, double_edge, true});
            ref_offsets_[d_.edges.size() - 1] = start;
            return;
        }
        tree(parent, double_edge);
    }

    void assign_indices()
    {
        std::set<Var> explicit_vars;
        for (std::size_t n = 0; n < d_.nodes.size(); ++n) {
            const DiagramNode &node = d_.nodes[n];
            if (node.bare || !node.label.is_t())
                continue;
            if (!explicit_vars.insert(node.label).second)
                throw ParseError("variable " + node.label.str() + " used twice", offsets_[n]);
        }
        std::map<int, int> next;
        for (DiagramNode &node : d_.nodes) {
            if (!node.bare)
                continue;
            const int color = node.label.color();
            int &j = next[color];
            do
                ++j;
            while (explicit_vars.count(Var::t(color, j)));
            node.label = Var::t(color, j);
        }
    }

    void check_cycles() const
    {
        std::vector<std::vector<int>> out(d_.nodes.size());
        for (const DiagramEdge &e : d_.edges)
            out[static_cast<std::size_t>(e.parent)].push_back(e.child);
        for (const auto &[index, offset] : ref_offsets_) {
            const DiagramEdge &e = d_.edges[index];
            // The reference closes a cycle when its parent is reachable from its target.
            std::vector<int> stack{e.child};
            std::vector<bool> seen(d_.nodes.size(), false);
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                if (v == e.parent)
                    throw ParseError("reference closes a cycle", offset);
                if (seen[static_cast<std::size_t>(v)])
                    continue;
                seen[static_cast<std::size_t>(v)] = true;
                for (int w : out[static_cast<std::size_t>(v)])
                    stack.push_back(w);
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Diagram d_;
    std::vector<std::size_t> offsets_;
    std::map<std::string, int> tags_;
    std::map<std::size_t, std::size_t> ref_offsets_;
};

std::string render_label(const DiagramNode &node)
{
    if (node.bare)
        return std::to_string(node.label.color());
    if (node.label.is_origin())
        return "*";
    return node.label.str();
}

void render_tree(const Diagram &d, int id, std::string &out)
{
    const DiagramNode &node = d.nodes[static_cast<std::size_t>(id)];
    out += render_label(node);
    if (!node.tag.empty())
        out += "#" + node.tag;
    bool first = true;
    for (const DiagramEdge &e : d.edges) {
        if (e.parent != id)
            continue;
        out += first ? "(" : ", ";
        first = false;
        if (e.double_edge)
            out += "=";
        if (e.reference)
            out += "&" + d.nodes[static_cast<std::size_t>(e.child)].tag;
        else
            render_tree(d, e.child, out);
    }
    if (!first)
        out += ")";
}

} // namespace

Weight Diagram::content(int rank) const
{
    std::vector<int> k(static_cast<std::size_t>(rank), 0);
    for (const DiagramNode &node : nodes)
        if (node.label.is_t()) {
            if (node.label.color() > rank)
                throw DomainError("color " + std::to_string(node.label.color()) + " exceeds rank " +
                                  std::to_string(rank));
            ++k[static_cast<std::size_t>(node.label.color() - 1)];
        }
    return Weight(std::move(k));
}

int Diagram::max_color() const
{
    int r = 0;
    for (const DiagramNode &node : nodes)
        if (node.label.is_t())
            r = std::max(r, node.label.color());
    return r;
}

Diagram parse_diagram(std::string_view text) { return Parser(text).run(); }

std::string render(const Diagram &d)
{
    std::string out;
    if (d.coeff != 1)
        out += "(" + to_string(d.coeff) + ") ";
    if (d.wrapper != Diagram::Wrapper::None) {
        out += d.wrapper == Diagram::Wrapper::Sym ? "sym" : "asym";
        if (d.weight)
            out += "[" + d.weight->str() + "]";
        out += " ";
    }
    bool first = true;
    for (std::size_t n = 0; n < d.nodes.size(); ++n) {
        if (d.nodes[n].parent >= 0)
            continue;
        if (!first)
            out += "; ";
        first = false;
        render_tree(d, static_cast<int>(n), out);
    }
    return out;
}

RatFun diagram_to_ratfun(const Diagram &d)
{
    RatFun f(d.coeff);
    for (const DiagramEdge &e : d.edges) {
        const Var child = d.nodes[static_cast<std::size_t>(e.child)].label;
        const Var parent = d.nodes[static_cast<std::size_t>(e.parent)].label;
        f *= e.double_edge ? RatFun::difference(child, parent) : RatFun::inverse_difference(child, parent);
    }
    if (d.wrapper == Diagram::Wrapper::None)
        return f;
    const Weight k = d.weight ? *d.weight : d.content(d.max_color());
    if (d.content(k.rank()) != k)
        throw DomainError("symmetrizer weight " + k.str() + " differs from the diagram content " +
                          d.content(k.rank()).str());
    return symmetrize(f, k, false);
}

std::vector<Diagram> parse_diagram_sum(std::string_view text)
{
    std::vector<Diagram> terms;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t p = 0; p <= text.size(); ++p) {
        const char c = p < text.size() ? text[p] : '+';
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        else if (c == '+' && (depth == 0 || p == text.size())) {
            try {
                terms.push_back(parse_diagram(text.substr(start, p - start)));
            } catch (const ParseError &e) {
                throw ParseError(e.message(), start + e.offset());
            }
            start = p + 1;
        }
    }
    return terms;
}

RatFun diagram_sum_to_ratfun(const std::vector<Diagram> &terms)
{
    std::vector<RatFun> parts;
    for (const Diagram &d : terms)
        parts.push_back(diagram_to_ratfun(d));
    return sum(parts);
}

} // namespace canform
