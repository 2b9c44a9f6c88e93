#include "canform/polyrat.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <random>
#include <sstream>

#include "canform/errors.hpp"

namespace canform {

std::string to_string(const Rational &q) { return q.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw DomainError("empty rational");
    if (s.front() == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw DomainError("malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

namespace {

int parse_int(std::string_view text, std::string_view what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw DomainError("malformed " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

} // namespace

// ---------------------------------------------------------------- Var

Var Var::t(int color, int index)
{
    if (color < 1 || color >= 4096 || index < 1 || index >= 4096)
        throw DomainError("t variable out of range");
    return Var(kTBase + (static_cast<std::uint32_t>(color) << 12) + static_cast<std::uint32_t>(index));
}

Var Var::z(int anchor)
{
    if (anchor < 1 || static_cast<std::uint32_t>(anchor) >= kTBase)
        throw DomainError("anchor index out of range");
    return Var(static_cast<std::uint32_t>(anchor));
}

std::string Var::str() const
{
    if (is_origin())
        return "0";
    if (is_z())
        return "z:" + std::to_string(anchor());
    return "t:" + std::to_string(color()) + ":" + std::to_string(index());
}

std::string Var::latex() const
{
    if (is_origin())
        return "0";
    if (is_z())
        return "z_{" + std::to_string(anchor()) + "}";
    return "t^{(" + std::to_string(color()) + ")}_{" + std::to_string(index()) + "}";
}

Var Var::parse(std::string_view text)
{
    if (text == "0")
        return origin();
    if (text.starts_with("z:"))
        return z(parse_int(text.substr(2), "anchor"));
    if (text.starts_with("t:")) {
        auto rest = text.substr(2);
        auto colon = rest.find(':');
        if (colon == std::string_view::npos)
            throw DomainError("malformed variable '" + std::string(text) + "'");
        return t(parse_int(rest.substr(0, colon), "color"), parse_int(rest.substr(colon + 1), "index"));
    }
    throw DomainError("malformed variable '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- Weight

Weight::Weight(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw DomainError("weight needs at least one color");
    for (int p : parts_)
        if (p < 0)
            throw DomainError("weight entries must be nonnegative");
}

Weight Weight::unit(int rank, int color)
{
    Weight w = zero(rank);
    w.parts_.at(static_cast<std::size_t>(color - 1)) = 1;
    return w;
}

int Weight::total() const
{
    int s = 0;
    for (int p : parts_)
        s += p;
    return s;
}

Weight Weight::minus_unit(int color) const
{
    if (color < 1 || color > rank() || (*this)[color] == 0)
        throw DomainError("k - 1_" + std::to_string(color) + " is not a weight for k = " + str());
    Weight w = *this;
    --w.parts_[static_cast<std::size_t>(color - 1)];
    return w;
}

Weight Weight::operator+(const Weight &other) const
{
    if (rank() != other.rank())
        throw DomainError("weight rank mismatch");
    Weight w = *this;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        w.parts_[i] += other.parts_[i];
    return w;
}

Weight Weight::operator-(const Weight &other) const
{
    if (rank() != other.rank() || !other.fits_in(*this))
        throw DomainError("weight difference is negative");
    Weight w = *this;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        w.parts_[i] -= other.parts_[i];
    return w;
}

bool Weight::fits_in(const Weight &other) const
{
    if (rank() != other.rank())
        return false;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i] > other.parts_[i])
            return false;
    return true;
}

std::string Weight::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Weight Weight::parse(std::string_view text)
{
    if (text.starts_with("(") && text.ends_with(")"))
        text = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        parts.push_back(parse_int(text.substr(0, comma), "weight entry"));
        if (comma == std::string_view::npos)
            break;
        text = text.substr(comma + 1);
    }
    return Weight(std::move(parts));
}

// ---------------------------------------------------------------- LinearForm

std::optional<std::pair<LinearForm, int>> LinearForm::of_difference(Var a, Var b)
{
    if (a == b)
        return std::nullopt;
    if (a > b)
        return std::make_pair(LinearForm{a, b}, 1);
    return std::make_pair(LinearForm{b, a}, -1);
}

std::string LinearForm::str() const { return lo.is_origin() ? hi.str() : hi.str() + "-" + lo.str(); }

std::string LinearForm::latex() const
{
    return lo.is_origin() ? hi.latex() : hi.latex() + "-" + lo.latex();
}

LinearForm LinearForm::parse(std::string_view text)
{
    auto minus = text.find('-');
    if (minus == std::string_view::npos) {
        Var v = Var::parse(text);
        if (v.is_origin())
            throw DomainError("linear form '0'");
        return LinearForm{v, Var::origin()};
    }
    Var a = Var::parse(text.substr(0, minus));
    Var b = Var::parse(text.substr(minus + 1));
    if (!(a > b))
        throw DomainError("linear form '" + std::string(text) + "' is not in canonical orientation");
    return LinearForm{a, b};
}

// ---------------------------------------------------------------- Monomial

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const
{
    std::size_t p = 0;
    for (; p < a.size() && p < b.size(); ++p) {
        if (a[p].first != b[p].first)
            return a[p].first < b[p].first;
        if (a[p].second != b[p].second)
            return a[p].second > b[p].second;
    }
    return p < a.size() && p == b.size();
}

namespace {

Monomial mono_mul(const Monomial &a, const Monomial &b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t p = 0, q = 0;
    while (p < a.size() || q < b.size()) {
        if (q == b.size() || (p < a.size() && a[p].first < b[q].first))
            out.push_back(a[p++]);
        else if (p == a.size() || b[q].first < a[p].first)
            out.push_back(b[q++]);
        else {
            out.emplace_back(a[p].first, a[p].second + b[q].second);
            ++p;
            ++q;
        }
    }
    return out;
}

Monomial mono_mul_var(const Monomial &a, Var v, int e)
{
    Monomial out;
    out.reserve(a.size() + 1);
    bool placed = false;
    for (const auto &f : a) {
        if (!placed && v <= f.first) {
            if (v == f.first) {
                out.emplace_back(v, f.second + e);
                placed = true;
                continue;
            }
            out.emplace_back(v, e);
            placed = true;
        }
        out.push_back(f);
    }
    if (!placed)
        out.emplace_back(v, e);
    return out;
}

int mono_degree(const Monomial &m, Var v)
{
    for (const auto &f : m)
        if (f.first == v)
            return f.second;
    return 0;
}

Monomial mono_without(const Monomial &m, Var v)
{
    Monomial out;
    out.reserve(m.size());
    for (const auto &f : m)
        if (f.first != v)
            out.push_back(f);
    return out;
}

} // namespace

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational &c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(Var v)
{
    Polynomial p;
    if (v.is_origin())
        return p;
    p.terms_.emplace(Monomial{{v, 1}}, Rational(1));
    return p;
}

Polynomial Polynomial::of(const LinearForm &form)
{
    Polynomial p = variable(form.hi);
    if (!form.lo.is_origin())
        p.add_term(Monomial{{form.lo, 1}}, Rational(-1));
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial &m, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    for (const auto &[m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    for (const auto &[m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, coef] : terms_)
        coef *= c;
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    Polynomial out;
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_)
            out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

Polynomial &Polynomial::operator*=(const Polynomial &other) { return *this = *this * other; }

Polynomial &Polynomial::mul_linear(const LinearForm &form)
{
    Polynomial out;
    for (const auto &[m, c] : terms_) {
        out.add_term(mono_mul_var(m, form.hi, 1), c);
        if (!form.lo.is_origin())
            out.add_term(mono_mul_var(m, form.lo, 1), -c);
    }
    terms_ = std::move(out.terms_);
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto &[m, c] : p.terms_)
        c = -c;
    return p;
}

Polynomial Polynomial::substitute(Var v, Var target) const
{
    Polynomial out;
    for (const auto &[m, c] : terms_) {
        int e = mono_degree(m, v);
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        if (target.is_origin())
            continue;
        out.add_term(mono_mul_var(mono_without(m, v), target, e), c);
    }
    return out;
}

Polynomial Polynomial::relabel(const std::function<Var(Var)> &map) const
{
    Polynomial out;
    Monomial scratch;
    for (const auto &[m, c] : terms_) {
        scratch.clear();
        bool vanishes = false;
        for (const auto &[v, e] : m) {
            Var w = map(v);
            if (w.is_origin()) {
                vanishes = true;
                break;
            }
            scratch.emplace_back(w, e);
        }
        if (vanishes)
            continue;
        std::sort(scratch.begin(), scratch.end());
        Monomial merged;
        for (const auto &f : scratch) {
            if (!merged.empty() && merged.back().first == f.first)
                merged.back().second += f.second;
            else
                merged.push_back(f);
        }
        out.add_term(merged, c);
    }
    return out;
}

Rational Polynomial::eval(const Point &point) const
{
    Rational total = 0;
    std::map<Var, std::vector<Rational>> powers;
    for (const auto &[m, c] : terms_) {
        Rational term = c;
        for (const auto &[v, e] : m) {
            auto it = point.find(v);
            if (it == point.end())
                throw DomainError("variable " + v.str() + " is not assigned");
            auto &cache = powers[v];
            if (cache.empty())
                cache.push_back(1);
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(cache.back() * it->second);
            term *= cache[static_cast<std::size_t>(e)];
        }
        total += term;
    }
    return total;
}

std::optional<Polynomial> Polynomial::divide_exact(const LinearForm &form) const
{
    if (terms_.empty())
        return Polynomial();
    // Coefficients c_d of hi^d, each free of hi.
    std::vector<Polynomial> coeff;
    for (const auto &[m, c] : terms_) {
        int d = mono_degree(m, form.hi);
        if (static_cast<int>(coeff.size()) <= d)
            coeff.resize(static_cast<std::size_t>(d) + 1);
        coeff[static_cast<std::size_t>(d)].add_term(d ? mono_without(m, form.hi) : m, c);
    }
    if (coeff.size() == 1)
        return std::nullopt;
    // Synthetic division by (hi - lo): q_{d-1} = c_d + lo * q_d.
    const std::size_t top = coeff.size() - 1;
    std::vector<Polynomial> quot(top);
    auto times_lo = [&](const Polynomial &p) {
        Polynomial out;
        if (form.lo.is_origin())
            return out;
        for (const auto &[m, c] : p.terms_)
            out.add_term(mono_mul_var(m, form.lo, 1), c);
        return out;
    };
    quot[top - 1] = coeff[top];
    for (std::size_t d = top - 1; d >= 1; --d)
        quot[d - 1] = coeff[d] + times_lo(quot[d]);
    Polynomial remainder = coeff[0] + times_lo(quot[0]);
    if (!remainder.is_zero())
        return std::nullopt;
    Polynomial out;
    for (std::size_t d = 0; d < top; ++d)
        for (const auto &[m, c] : quot[d].terms_)
            out.add_term(d ? mono_mul_var(m, form.hi, static_cast<int>(d)) : m, c);
    return out;
}

std::set<Var> Polynomial::variables() const
{
    std::set<Var> vars;
    for (const auto &[m, c] : terms_)
        for (const auto &f : m)
            vars.insert(f.first);
    return vars;
}

bool Polynomial::involves(Var v) const
{
    for (const auto &[m, c] : terms_)
        if (mono_degree(m, v))
            return true;
    return false;
}

namespace {

std::string render_poly(const Polynomial &p, bool latex)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        Rational mag = abs(c);
        if (c < 0)
            out += first ? "-" : "-";
        else if (!first)
            out += "+";
        first = false;
        bool unit = (mag == 1) && !m.empty();
        if (!unit) {
            if (latex && mag.get_den() != 1)
                out += "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
            else
                out += mag.get_str();
        }
        bool need_sep = !unit;
        for (const auto &[v, e] : m) {
            if (!latex && need_sep)
                out += "*";
            need_sep = true;
            out += latex ? v.latex() : v.str();
            if (e > 1)
                out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace

std::string Polynomial::str() const { return render_poly(*this, false); }
std::string Polynomial::latex() const { return render_poly(*this, true); }

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(Polynomial num, Denominator den) : num_(std::move(num)), den_(std::move(den))
{
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->second < 0)
            throw DomainError("negative denominator multiplicity");
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
    normalize();
}

RatFun RatFun::inverse_difference(Var a, Var b, int power)
{
    auto oriented = LinearForm::of_difference(a, b);
    if (!oriented)
        throw DivisionByZero("1/(" + a.str() + "-" + b.str() + ") is a division by zero");
    RatFun f;
    f.num_ = Polynomial(Rational((power % 2 && oriented->second < 0) ? -1 : 1));
    f.den_.emplace(oriented->first, power);
    return f;
}

RatFun RatFun::difference(Var a, Var b)
{
    return RatFun(Polynomial::variable(a) - Polynomial::variable(b));
}

int RatFun::multiplicity(const LinearForm &form) const
{
    auto it = den_.find(form);
    return it == den_.end() ? 0 : it->second;
}

void RatFun::normalize()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = num_.divide_exact(it->first);
            if (!q)
                break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

void RatFun::normalize_only(const std::vector<LinearForm> &candidates)
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (const auto &form : candidates) {
        auto it = den_.find(form);
        if (it == den_.end())
            continue;
        while (it->second > 0) {
            auto q = num_.divide_exact(form);
            if (!q)
                break;
            num_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0)
            den_.erase(it);
    }
}

RatFun &RatFun::operator+=(const RatFun &other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        return *this = other;
    if (den_ == other.den_) {
        num_ += other.num_;
        std::vector<LinearForm> candidates;
        for (const auto &[form, m] : den_)
            candidates.push_back(form);
        normalize_only(candidates);
        return *this;
    }
    RatFun terms[2] = {*this, other};
    return *this = sum(terms);
}

RatFun &RatFun::operator-=(const RatFun &other) { return *this += -other; }

RatFun &RatFun::operator*=(const RatFun &other)
{
    if (is_zero() || other.is_zero()) {
        num_ = Polynomial();
        den_.clear();
        return *this;
    }
    // Only forms of one side can divide the other side's numerator.
    std::vector<LinearForm> candidates;
    for (const auto &[form, m] : den_)
        if (other.num_.involves(form.hi))
            candidates.push_back(form);
    for (const auto &[form, m] : other.den_)
        if (num_.involves(form.hi))
            candidates.push_back(form);
    num_ *= other.num_;
    for (const auto &[form, m] : other.den_)
        den_[form] += m;
    normalize_only(candidates);
    return *this;
}

RatFun &RatFun::operator*=(const Rational &c)
{
    num_ *= c;
    if (num_.is_zero())
        den_.clear();
    return *this;
}

RatFun RatFun::operator-() const
{
    RatFun f = *this;
    f.num_ = -f.num_;
    return f;
}

RatFun operator/(const RatFun &a, const RatFun &b)
{
    if (b.is_zero())
        throw DivisionByZero("division by the zero rational function");
    // Split b's numerator into c * prod(forms) by trial division over candidate forms.
    Polynomial rest = b.num_;
    RatFun::Denominator extra;
    std::set<Var> vars = rest.variables();
    vars.insert(Var::origin());
    bool progress = true;
    while (!rest.is_constant() && progress) {
        progress = false;
        for (auto hi = vars.rbegin(); hi != vars.rend() && !progress; ++hi) {
            for (auto lo = vars.begin(); lo != vars.end() && *lo < *hi; ++lo) {
                LinearForm form{*hi, *lo};
                if (auto q = rest.divide_exact(form)) {
                    rest = std::move(*q);
                    ++extra[form];
                    progress = true;
                    break;
                }
            }
        }
    }
    if (!rest.is_constant())
        throw DomainError("divisor numerator " + b.num_.str() + " does not split into arrangement forms");
    RatFun inv;
    inv.num_ = Polynomial(Rational(1) / rest.constant_term());
    inv.den_ = extra;
    for (const auto &[form, m] : b.den_) {
        // multiply inv by form^m
        auto it = inv.den_.find(form);
        int cancel = it == inv.den_.end() ? 0 : std::min(it->second, m);
        if (cancel) {
            it->second -= cancel;
            if (it->second == 0)
                inv.den_.erase(it);
        }
        for (int i = cancel; i < m; ++i)
            inv.num_.mul_linear(form);
    }
    return a * inv;
}

RatFun RatFun::substitute(Var v, Var target) const
{
    if (v == target)
        return *this;
    if (v.is_origin())
        throw DomainError("cannot substitute for the origin");
    RatFun out;
    out.num_ = num_.substitute(v, target);
    bool flip = false;
    for (const auto &[form, m] : den_) {
        if (!form.involves(v)) {
            out.den_[form] += m;
            continue;
        }
        Var a = form.hi == v ? target : form.hi;
        Var b = form.lo == v ? target : form.lo;
        auto oriented = LinearForm::of_difference(a, b);
        if (!oriented)
            throw PoleError("pole hit: " + form.str() + " vanishes under " + v.str() + " -> " + target.str());
        out.den_[oriented->first] += m;
        if (oriented->second < 0 && (m % 2))
            flip = !flip;
    }
    if (flip)
        out.num_ = -out.num_;
    out.normalize();
    return out;
}

RatFun RatFun::relabel(const std::function<Var(Var)> &map, bool bijective) const
{
    RatFun out;
    out.num_ = num_.relabel(map);
    bool flip = false;
    for (const auto &[form, m] : den_) {
        auto oriented = LinearForm::of_difference(map(form.hi), map(form.lo));
        if (!oriented)
            throw PoleError("pole hit: " + form.str() + " vanishes under relabeling");
        out.den_[oriented->first] += m;
        if (oriented->second < 0 && (m % 2))
            flip = !flip;
    }
    if (flip)
        out.num_ = -out.num_;
    if (!bijective)
        out.normalize();
    else if (out.num_.is_zero())
        out.den_.clear();
    return out;
}

RatFun RatFun::times_form(const LinearForm &form, int power) const
{
    RatFun out = *this;
    if (power < 0) {
        out.den_[form] += -power;
        out.normalize_only({form});
        return out;
    }
    auto it = out.den_.find(form);
    int cancel = it == out.den_.end() ? 0 : std::min(it->second, power);
    if (cancel) {
        it->second -= cancel;
        if (it->second == 0)
            out.den_.erase(it);
    }
    for (int i = cancel; i < power; ++i)
        out.num_.mul_linear(form);
    return out;
}

Rational RatFun::eval(const Point &point) const
{
    Rational den = 1;
    for (const auto &[form, m] : den_) {
        auto value = [&](Var v) -> Rational {
            if (v.is_origin())
                return 0;
            auto it = point.find(v);
            if (it == point.end())
                throw DomainError("variable " + v.str() + " is not assigned");
            return it->second;
        };
        Rational f = value(form.hi) - value(form.lo);
        if (f == 0)
            throw PoleError("pole at the evaluation point along " + form.str());
        for (int i = 0; i < m; ++i)
            den *= f;
    }
    return num_.eval(point) / den;
}

std::set<Var> RatFun::variables() const
{
    std::set<Var> vars = num_.variables();
    for (const auto &[form, m] : den_) {
        vars.insert(form.hi);
        if (!form.lo.is_origin())
            vars.insert(form.lo);
    }
    return vars;
}

std::string RatFun::str() const
{
    if (den_.empty())
        return num_.str();
    std::string out = "(" + num_.str() + ")/(";
    bool first = true;
    for (const auto &[form, m] : den_) {
        if (!first)
            out += "*";
        first = false;
        out += form.lo.is_origin() ? form.str() : "(" + form.str() + ")";
        if (m > 1)
            out += "^" + std::to_string(m);
    }
    return out + ")";
}

RatFun sum(std::span<const RatFun> terms)
{
    std::map<RatFun::Denominator, Polynomial> groups;
    for (const auto &t : terms) {
        if (t.is_zero())
            continue;
        groups[t.denominator()] += t.numerator();
    }
    RatFun::Denominator lcm;
    for (const auto &[den, num] : groups) {
        if (num.is_zero())
            continue;
        for (const auto &[form, m] : den)
            lcm[form] = std::max(lcm[form], m);
    }
    Polynomial total;
    for (const auto &[den, num] : groups) {
        if (num.is_zero())
            continue;
        Polynomial p = num;
        for (const auto &[form, m] : lcm) {
            auto it = den.find(form);
            int have = it == den.end() ? 0 : it->second;
            for (int i = have; i < m; ++i)
                p.mul_linear(form);
        }
        total += p;
    }
    return RatFun(std::move(total), std::move(lcm));
}

// ---------------------------------------------------------------- checked equality

namespace {
std::atomic<std::uint64_t> g_seed{1729};

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}
} // namespace

void set_check_seed(std::uint64_t seed) { g_seed = seed; }
std::uint64_t check_seed() { return g_seed; }

Point random_point(const std::set<Var> &vars, std::uint64_t attempt)
{
    Point point;
    for (Var v : vars) {
        if (v.is_origin())
            continue;
        std::mt19937_64 rng(splitmix(g_seed ^ splitmix(v.key() + (attempt << 32))));
        std::uniform_int_distribution<long> dist(1000, 1000000);
        point.emplace(v, Rational(dist(rng)));
    }
    return point;
}

bool equals(const RatFun &a, const RatFun &b, int points)
{
    const bool canonical = (a == b);
    std::set<Var> vars = a.variables();
    vars.merge(b.variables());
    int used = 0;
    bool any_difference = false;
    for (std::uint64_t attempt = 0; used < points && attempt < 64 + static_cast<std::uint64_t>(points); ++attempt) {
        Point p = random_point(vars, attempt);
        Rational va, vb;
        try {
            va = a.eval(p);
            vb = b.eval(p);
        } catch (const PoleError &) {
            continue;
        }
        ++used;
        if (va != vb) {
            if (canonical)
                throw NormalizationError("identical normal forms evaluate differently: " + a.str());
            any_difference = true;
            break;
        }
    }
    if (!canonical && !any_difference && used > 0)
        throw NormalizationError("distinct normal forms agree at every check point: " + a.str() + " vs " +
                                 b.str());
    return canonical;
}

} // namespace canform
