#include "canform/roots.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "canform/errors.hpp"
#include "canform/symmetric.hpp"

namespace canform {

void LieType::validate() const
{
    const int minimum = family == Family::A ? 1 : family == Family::D ? 3 : 2;
    if (rank < minimum)
        throw DomainError("rank " + std::to_string(rank) + " is below the minimum " + std::to_string(minimum) +
                          " for type " + str().substr(0, 1));
}

std::string LieType::str() const
{
    static const char letters[] = {'A', 'B', 'C', 'D'};
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

LieType LieType::parse(const std::string &text)
{
    if (text.size() < 2)
        throw ParseError("expected a type such as B3", 0);
    LieType t;
    switch (text[0]) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    default: throw ParseError("unknown family '" + text.substr(0, 1) + "'", 0);
    }
    try {
        std::size_t used = 0;
        t.rank = std::stoi(text.substr(1), &used);
        if (used != text.size() - 1)
            throw ParseError("trailing characters in type", 1 + used);
    } catch (const std::logic_error &) {
        throw ParseError("bad rank in type '" + text + "'", 1);
    }
    return t;
}

std::string PositiveRoot::str() const
{
    switch (kind) {
    case Kind::Minus: return "e" + std::to_string(a) + "-e" + std::to_string(b);
    case Kind::Plus: return "e" + std::to_string(a) + "+e" + std::to_string(b);
    case Kind::Short: return "e" + std::to_string(a);
    case Kind::Double: return "2e" + std::to_string(a);
    }
    return {};
}

PositiveRoot PositiveRoot::parse(const std::string &text)
{
    std::size_t pos = 0;
    auto number = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected an index in root '" + text + "'", start);
        return std::stoi(text.substr(start, pos - start));
    };
    auto expect_e = [&]() {
        if (pos >= text.size() || text[pos] != 'e')
            throw ParseError("expected 'e' in root '" + text + "'", pos);
        ++pos;
    };
    PositiveRoot beta{Kind::Short, 0, 0};
    if (!text.empty() && text[0] == '2') {
        pos = 1;
        expect_e();
        beta = {Kind::Double, number(), 0};
    } else {
        expect_e();
        beta.a = number();
        if (pos < text.size()) {
            beta.kind = text[pos] == '-' ? Kind::Minus : text[pos] == '+' ? Kind::Plus : throw ParseError("expected + or -", pos);
            ++pos;
            expect_e();
            beta.b = number();
        }
    }
    if (pos != text.size())
        throw ParseError("trailing characters in root '" + text + "'", pos);
    return beta;
}

std::optional<std::size_t> RootSystemData::index_of(const PositiveRoot &beta) const
{
    for (std::size_t l = 0; l < roots.size(); ++l)
        if (roots[l] == beta)
            return l;
    return std::nullopt;
}

std::optional<std::size_t> RootSystemData::index_of_content(const Weight &k) const
{
    for (std::size_t l = 0; l < contents.size(); ++l)
        if (contents[l] == k)
            return l;
    return std::nullopt;
}

namespace {

using Kind = PositiveRoot::Kind;

// Sequence lo, lo+1, ..., hi or hi, hi-1, ..., lo.
std::vector<int> up(int lo, int hi)
{
    std::vector<int> s;
    for (int u = lo; u <= hi; ++u)
        s.push_back(u);
    return s;
}

std::vector<int> down(int hi, int lo)
{
    std::vector<int> s;
    for (int u = hi; u >= lo; --u)
        s.push_back(u);
    return s;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int> &b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// [[[f_{s1}, f_{s2}], f_{s3}], ..., f_{sn}].
BracketTree left_normed(const std::vector<int> &seq)
{
    BracketTree t = BracketTree::leaf(seq.front());
    for (std::size_t u = 1; u < seq.size(); ++u)
        t = BracketTree::bracket(t, BracketTree::leaf(seq[u]));
    return t;
}

// Content with the given per-color multiplicities on [lo, hi].
void add_range(std::vector<int> &k, int lo, int hi, int mult)
{
    for (int u = lo; u <= hi; ++u)
        k[static_cast<std::size_t>(u - 1)] += mult;
}

Weight content_of_root(const LieType &type, const PositiveRoot &beta)
{
    const int r = type.rank;
    std::vector<int> k(static_cast<std::size_t>(r), 0);
    const int a = beta.a, b = beta.b;
    switch (type.family) {
    case Family::A:
        add_range(k, a, b - 1, 1);
        break;
    case Family::B:
        if (beta.kind == Kind::Short)
            add_range(k, a, r, 1);
        else if (beta.kind == Kind::Minus)
            add_range(k, a, b - 1, 1);
        else {
            add_range(k, a, b - 1, 1);
            add_range(k, b, r, 2);
        }
        break;
    case Family::C:
        if (beta.kind == Kind::Minus)
            add_range(k, a, b - 1, 1);
        else if (beta.kind == Kind::Plus) {
            add_range(k, a, b - 1, 1);
            add_range(k, b, r - 1, 2);
            add_range(k, r, r, 1);
        } else {
            add_range(k, a, r - 1, 2);
            add_range(k, r, r, 1);
        }
        break;
    case Family::D:
        // e_a - e_b and e_a + e_b with a > b.
        if (beta.kind == Kind::Minus)
            add_range(k, b + 1, a, 1);
        else if (b == 1) {
            add_range(k, 1, 1, 1);
            add_range(k, 3, a, 1);
        } else {
            add_range(k, 1, 2, 1);
            add_range(k, 3, b, 2);
            add_range(k, b + 1, a, 1);
        }
        break;
    }
    return Weight(k);
}

BracketTree fbeta_of_root(const LieType &type, const PositiveRoot &beta)
{
    const int r = type.rank;
    const int a = beta.a, b = beta.b;
    switch (type.family) {
    case Family::A:
        return nested_bracket(down(b - 1, a));
    case Family::B:
        // The displayed [f_(j-1, ..., i)] pairs with the displayed eta only up to
        // (-1)^(j-i-1); the increasing order used for type C matches it.
        if (beta.kind == Kind::Short)
            return nested_bracket(up(a, r));
        if (beta.kind == Kind::Minus)
            return nested_bracket(up(a, b - 1));
        return BracketTree::bracket(nested_bracket(up(a, r)), nested_bracket(down(r, b)));
    case Family::C:
        if (beta.kind == Kind::Minus)
            return nested_bracket(up(a, b - 1));
        if (beta.kind == Kind::Plus)
            return nested_bracket(concat(up(a, r), down(r - 1, b)));
        // The displayed bracket has an empty left part at i = r; F_{2e_r} is f_r.
        if (a == r)
            return BracketTree::leaf(r);
        return BracketTree::bracket(nested_bracket(up(a, r - 1)), nested_bracket(up(a, r)));
    case Family::D:
        if (beta.kind == Kind::Minus)
            return nested_bracket(down(a, b + 1));
        if (b == 1)
            return nested_bracket(concat(down(a, 3), {1}));
        // The displayed sequence (j, ..., 2, 1, 3, ..., i) is a root string only
        // when bracketed left-normed, [[[f_j, f_{j-1}], ...], f_i]; nested to the
        // right it reaches 2e_i and vanishes for i >= 3.
        return left_normed(concat(concat(down(a, 2), {1}), up(3, b)));
    }
    throw DomainError("unknown family");
}

// F_beta is scale * [bracket]. Type C roots whose content repeats a color
// carry 1/2; with the bare bracket the displayed eta comes out doubled.
Rational fscale_of_root(const LieType &type, const PositiveRoot &beta)
{
    const int r = type.rank;
    if (type.family != Family::C)
        return 1;
    if ((beta.kind == Kind::Plus && beta.b < r) || (beta.kind == Kind::Double && beta.a < r))
        return Rational(1, 2);
    return 1;
}

std::vector<PositiveRoot> ordered_roots(const LieType &type)
{
    const int r = type.rank;
    std::vector<PositiveRoot> out;
    switch (type.family) {
    case Family::A:
        for (int i = 1; i <= r + 1; ++i)
            for (int j = i + 1; j <= r + 1; ++j)
                out.push_back({Kind::Minus, i, j});
        break;
    case Family::B:
    case Family::C:
        for (int i = r; i >= 1; --i) {
            for (int j = i + 1; j <= r; ++j)
                out.push_back({Kind::Plus, i, j});
            out.push_back({type.family == Family::B ? Kind::Short : Kind::Double, i, 0});
            for (int j = r; j > i; --j)
                out.push_back({Kind::Minus, i, j});
        }
        break;
    case Family::D:
        for (int j = 2; j <= r; ++j) {
            for (int i = j - 1; i >= 1; --i)
                out.push_back({Kind::Plus, j, i});
            for (int i = 1; i < j; ++i)
                out.push_back({Kind::Minus, j, i});
        }
        break;
    }
    return out;
}

} // namespace

std::vector<int> simple_root_eps(const LieType &type, int i)
{
    const int n = type.family == Family::A ? type.rank + 1 : type.rank;
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    auto e = [&](int u) -> int & { return v[static_cast<std::size_t>(u - 1)]; };
    const int r = type.rank;
    switch (type.family) {
    case Family::A:
        e(i) = 1, e(i + 1) = -1;
        break;
    case Family::B:
    case Family::C:
        if (i < r)
            e(i) = 1, e(i + 1) = -1;
        else
            e(r) = type.family == Family::B ? 1 : 2;
        break;
    case Family::D:
        if (i == 1)
            e(1) = 1, e(2) = 1;
        else
            e(i) = 1, e(i - 1) = -1;
        break;
    }
    return v;
}

std::vector<int> eps_vector(const LieType &type, const PositiveRoot &beta)
{
    const int n = type.family == Family::A ? type.rank + 1 : type.rank;
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    auto e = [&](int u) -> int & { return v.at(static_cast<std::size_t>(u - 1)); };
    switch (beta.kind) {
    case Kind::Minus: e(beta.a) += 1, e(beta.b) -= 1; break;
    case Kind::Plus: e(beta.a) += 1, e(beta.b) += 1; break;
    case Kind::Short: e(beta.a) += 1; break;
    case Kind::Double: e(beta.a) += 2; break;
    }
    return v;
}

RootSystemData build_root_system(LieType type)
{
    type.validate();
    RootSystemData data;
    data.type = type;
    const int r = type.rank;
    std::vector<std::vector<int>> eps;
    for (int i = 1; i <= r; ++i)
        eps.push_back(simple_root_eps(type, i));
    auto dot = [](const std::vector<int> &x, const std::vector<int> &y) {
        int s = 0;
        for (std::size_t u = 0; u < x.size(); ++u)
            s += x[u] * y[u];
        return s;
    };
    std::vector<std::vector<int>> a(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                2 * dot(eps[static_cast<std::size_t>(i)], eps[static_cast<std::size_t>(j)]) /
                dot(eps[static_cast<std::size_t>(i)], eps[static_cast<std::size_t>(i)]);
    data.cartan = CartanMatrix(std::move(a));

    data.roots = ordered_roots(type);
    for (const PositiveRoot &beta : data.roots) {
        data.contents.push_back(content_of_root(type, beta));
        data.fbeta.push_back(fbeta_of_root(type, beta));
        data.fscale.push_back(fscale_of_root(type, beta));
    }
    return data;
}

RootSystemData reorder_roots(const RootSystemData &data, const std::vector<std::size_t> &order)
{
    if (order.size() != data.size())
        throw DomainError("ordering has " + std::to_string(order.size()) + " entries for " +
                          std::to_string(data.size()) + " roots");
    RootSystemData out;
    out.type = data.type;
    out.cartan = data.cartan;
    for (std::size_t l : order) {
        out.roots.push_back(data.roots.at(l));
        out.contents.push_back(data.contents.at(l));
        out.fbeta.push_back(data.fbeta.at(l));
        out.fscale.push_back(data.fscale.at(l));
    }
    return out;
}

namespace {

// Builds the closed forms over the variables of one content.
struct Atom {
    Weight k;
    Var anchor;

    Var t1(int c) const { return Var::t(c, 1); }
    // The second copy of a doubled color, otherwise the only copy.
    Var t2(int c) const { return Var::t(c, c >= 1 && c <= k.rank() && k[c] >= 2 ? 2 : 1); }
    RatFun inv(Var a, Var b) const { return RatFun::inverse_difference(a, b); }
    RatFun root(Var x) const { return inv(x, anchor); }
    RatFun sym(const RatFun &f) const { return symmetrize(f, k, false); }
};

void require_inside(const RatFun &f, const Weight &k, Var anchor, const PositiveRoot &beta)
{
    auto vars = standard_vars(k);
    for (Var v : f.variables())
        if (v != anchor && std::find(vars.begin(), vars.end(), v) == vars.end())
            throw DomainError("literal formula for " + beta.str() + " uses " + v.str() + " outside the content " +
                              k.str());
}

// 1/(x(c_0) prod (x(c_u) - x(c_{u-1}))) along a path of single-copy colors.
RatFun chain(const Atom &at, const std::vector<int> &colors)
{
    RatFun f = at.root(at.t1(colors.front()));
    for (std::size_t u = 1; u < colors.size(); ++u)
        f *= at.inv(at.t1(colors[u]), at.t1(colors[u - 1]));
    return f;
}

RatFun eta_a(const Atom &at, const PositiveRoot &beta) { return chain(at, up(beta.a, beta.b - 1)); }

RatFun eta_b(const Atom &at, const PositiveRoot &beta, int r, EtaReading reading)
{
    const int i = beta.a, j = beta.b;
    if (beta.kind != Kind::Plus)
        return chain(at, down(beta.kind == Kind::Short ? r : j - 1, i));
    // At j = r the chain j..r-1 is empty and the root takes the place of
    // t_1^(r-1) in the double edge; the literal reading vanishes there.
    const bool rooted = j == r && reading == EtaReading::Verified;
    const Var left = rooted ? at.anchor : at.t1(r - 1);
    RatFun f = RatFun::difference(left, at.t2(r - 1));
    if (!rooted)
        f *= at.root(at.t1(j));
    f *= at.inv(at.t1(r), left);
    f *= at.inv(at.t2(r), left);
    f *= at.inv(at.t2(r - 1), at.t1(r));
    f *= at.inv(at.t2(r - 1), at.t2(r));
    for (int u = j + 1; u <= r - 1; ++u)
        f *= at.inv(at.t1(u), at.t1(u - 1));
    for (int u = i; u <= r - 2; ++u)
        f *= at.inv(at.t2(u), at.t2(u + 1));
    // Against the displayed [[f_(i..r)], [f_(r..j)]] the displayed form has the
    // wrong sign for every i < j <= r.
    return at.sym(f) * Rational(reading == EtaReading::Verified ? -1 : 1, 2);
}

RatFun eta_c(const Atom &at, const PositiveRoot &beta, int r, EtaReading reading)
{
    const int i = beta.a, j = beta.b;
    if (beta.kind == Kind::Minus)
        return chain(at, down(j - 1, i));
    if (beta.kind == Kind::Plus) {
        // Literal root edge t^(j-1); the diagram attaches the root to t^(j).
        RatFun f = at.root(at.t1(reading == EtaReading::Literal ? j - 1 : j));
        for (int u = j + 1; u <= r; ++u)
            f *= at.inv(at.t1(u), at.t1(u - 1));
        for (int u = i; u <= r - 1; ++u)
            f *= at.inv(at.t2(u), at.t2(u + 1));
        return at.sym(f);
    }
    if (i == r && reading == EtaReading::Verified)
        return at.root(at.t1(r));
    RatFun f = at.root(at.t1(r));
    f *= at.inv(at.t1(r - 1), at.t1(r));
    f *= at.inv(at.t2(r - 1), at.t1(r));
    for (int u = i; u <= r - 2; ++u) {
        f *= at.inv(at.t1(u), at.t1(u + 1));
        f *= at.inv(at.t2(u), at.t2(u + 1));
    }
    return at.sym(f);
}

RatFun eta_d(const Atom &at, const PositiveRoot &beta, EtaReading reading)
{
    const int j = beta.a, i = beta.b;
    if (beta.kind == Kind::Minus)
        return chain(at, up(i + 1, j));
    if (i == 1) {
        if (reading == EtaReading::Literal) {
            RatFun f = at.root(at.t1(1));
            for (int u = 3; u <= j; ++u)
                f *= at.inv(at.t1(u), at.t1(u - 1));
            return f;
        }
        return chain(at, concat({1}, up(3, j)));
    }
    // At i = 2 the chain i..3 is empty and the root takes the place of
    // t_2^(3) in the double edge; the literal reading vanishes there.
    const bool rooted = i == 2 && reading == EtaReading::Verified;
    const Var left = rooted ? at.anchor : at.t2(3);
    RatFun f = RatFun::difference(at.t1(3), left);
    if (!rooted)
        f *= at.root(at.t2(i));
    f *= at.inv(at.t1(1), left);
    f *= at.inv(at.t1(2), left);
    f *= at.inv(at.t1(3), at.t1(1));
    f *= at.inv(at.t1(3), at.t1(2));
    const int top = reading == EtaReading::Literal ? i + 1 : i - 1;
    for (int u = 3; u <= top; ++u)
        f *= at.inv(at.t2(u), at.t2(u + 1));
    for (int u = 4; u <= j; ++u)
        f *= at.inv(at.t1(u), at.t1(u - 1));
    return at.sym(f);
}

} // namespace

RatFun eta_beta(const RootSystemData &data, std::size_t index, Var anchor, EtaReading reading)
{
    if (index >= data.size())
        throw DomainError("root index " + std::to_string(index) + " out of range");
    const PositiveRoot &beta = data.roots[index];
    const Atom at{data.contents[index], anchor};
    const int r = data.type.rank;
    RatFun f;
    switch (data.type.family) {
    case Family::A: f = eta_a(at, beta); break;
    case Family::B: f = eta_b(at, beta, r, reading); break;
    case Family::C: f = eta_c(at, beta, r, reading); break;
    case Family::D: f = eta_d(at, beta, reading); break;
    }
    require_inside(f, at.k, anchor, beta);
    return f;
}

std::vector<std::vector<int>> pbw_monomials(const RootSystemData &data, const Weight &k)
{
    std::vector<std::vector<int>> out;
    const std::size_t m = data.size();
    std::vector<int> p(m, 0);
    std::function<void(std::size_t, const Weight &)> go = [&](std::size_t l, const Weight &rest) {
        if (l == m) {
            if (rest.total() == 0)
                out.push_back(p);
            return;
        }
        Weight left = rest;
        int n = 0;
        std::vector<std::pair<int, Weight>> options{{0, rest}};
        while (data.contents[l].fits_in(left)) {
            left = left - data.contents[l];
            options.push_back({++n, left});
        }
        // Lexicographic order: larger exponents first in position l.
        for (auto it = options.rbegin(); it != options.rend(); ++it) {
            p[l] = it->first;
            go(l + 1, it->second);
        }
        p[l] = 0;
    };
    if (k.rank() != data.type.rank)
        throw DomainError("weight " + k.str() + " has the wrong rank for " + data.type.str());
    go(0, k);
    return out;
}

FreeElement pbw_element(const RootSystemData &data, const std::vector<int> &p)
{
    FreeElement e = FreeElement::word({});
    for (std::size_t l = 0; l < p.size(); ++l)
        if (p[l] > 0)
            e = e * power(bracket_expand(data.fbeta[l]) * data.fscale[l], p[l]);
    return e;
}

} // namespace canform
