#include "canform/serialize.hpp"

#include <sstream>

#include "canform/errors.hpp"

namespace canform {

namespace {

std::string join_ints(const std::vector<int> &v, const char *sep = ",")
{
    std::string out;
    for (std::size_t u = 0; u < v.size(); ++u) {
        if (u)
            out += sep;
        out += std::to_string(v[u]);
    }
    return out;
}

std::vector<int> split_ints(const std::string &text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ','))
        out.push_back(std::stoi(part));
    return out;
}

std::string latex_rational(const Rational &c)
{
    if (c.get_den() == 1)
        return c.get_str();
    std::string sign = c < 0 ? "-" : "";
    Rational mag = abs(c);
    return sign + "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

std::string weight_text(const Weight &k) { return "(" + join_ints(k.parts()) + ")"; }

} // namespace

json to_json(const RatFun &f)
{
    json num = json::array();
    for (const auto &[m, c] : f.numerator().terms()) {
        json powers = json::object();
        for (const auto &[v, e] : m)
            powers[v.str()] = e;
        num.push_back({powers, to_string(c)});
    }
    json den = json::array();
    for (const auto &[form, mult] : f.denominator())
        den.push_back({form.str(), mult});
    return {{"num", num}, {"den", den}};
}

RatFun ratfun_from_json(const json &j)
{
    Polynomial num;
    for (const auto &term : j.at("num")) {
        Monomial m;
        for (const auto &[name, e] : term.at(0).items())
            m.emplace_back(Var::parse(name), e.get<int>());
        std::sort(m.begin(), m.end());
        num.add_term(m, parse_rational(term.at(1).get<std::string>()));
    }
    RatFun::Denominator den;
    for (const auto &factor : j.at("den"))
        den[LinearForm::parse(factor.at(0).get<std::string>())] += factor.at(1).get<int>();
    return RatFun(std::move(num), std::move(den));
}

json to_json(const FreeElement &e)
{
    json terms = json::array();
    for (const auto &[w, c] : e.terms())
        terms.push_back({join_ints(w), to_string(c)});
    return {{"terms", terms}};
}

FreeElement free_element_from_json(const json &j)
{
    FreeElement e;
    for (const auto &term : j.at("terms"))
        e.add(split_ints(term.at(0).get<std::string>()), parse_rational(term.at(1).get<std::string>()));
    return e;
}

json to_json(const FlagChain &chain)
{
    json out = json::array();
    for (const Equation &eq : chain)
        out.push_back({{"lhs", eq.lhs.str()}, {"rhs", eq.rhs.str()}});
    return out;
}

FlagChain flag_chain_from_json(const json &j)
{
    FlagChain chain;
    for (const auto &eq : j)
        chain.push_back({Var::parse(eq.at("lhs").get<std::string>()), Var::parse(eq.at("rhs").get<std::string>())});
    return chain;
}

json to_json(const CanonicalForm &form)
{
    json coeffs = json::array();
    for (const auto &[J, f] : form.coeffs)
        coeffs.push_back({{"J", J}, {"monomial", join_ints(monomial_of(J))}, {"coefficient", to_json(f)}});
    return {{"basis", "free"}, {"weight", form.weight.parts()}, {"anchor", form.anchor.str()}, {"coefficients", coeffs}};
}

json to_json(const PBWExpansion &expansion, const RootSystemData &data)
{
    json coeffs = json::array();
    for (const auto &[p, f] : expansion.coeffs)
        coeffs.push_back({{"p", p}, {"monomial", pbw_monomial_text(p, data, false)}, {"coefficient", to_json(f)}});
    return {{"basis", "pbw"},
            {"type", expansion.type.str()},
            {"weight", expansion.weight.parts()},
            {"anchor", expansion.anchor.str()},
            {"coefficients", coeffs}};
}

json to_json(const RepForm &form, const RootSystemData &data)
{
    json anchors = json::array();
    for (Var z : form.anchors)
        anchors.push_back(z.str());
    json coeffs = json::array();
    for (const auto &[ps, f] : form.coeffs) {
        json factors = json::array();
        for (const Exponents &p : ps)
            factors.push_back(pbw_monomial_text(p, data, false));
        coeffs.push_back({{"p", ps}, {"factors", factors}, {"coefficient", to_json(f)}});
    }
    return {{"basis", "rep"},
            {"type", form.type.str()},
            {"weight", form.weight.parts()},
            {"anchors", anchors},
            {"coefficients", coeffs}};
}

json to_json(const RootSystemData &data)
{
    json roots = json::array();
    for (std::size_t l = 0; l < data.size(); ++l)
        roots.push_back({{"root", data.roots[l].str()},
                         {"content", data.contents[l].parts()},
                         {"f_beta", data.fbeta[l].str()},
                         {"f_scale", to_string(data.fscale[l])},
                         {"eta", to_json(eta_beta(data, l))}});
    return {{"type", data.type.str()}, {"cartan", data.cartan.entries()}, {"roots", roots}};
}

std::string latex(const RatFun &f)
{
    if (f.denominator().empty())
        return f.numerator().latex();
    std::string den;
    for (const auto &[form, m] : f.denominator()) {
        std::string factor = form.lo.is_origin() ? form.latex() : "(" + form.latex() + ")";
        den += m > 1 ? factor + "^{" + std::to_string(m) + "}" : factor;
    }
    return "\\frac{" + f.numerator().latex() + "}{" + den + "}";
}

std::string latex(const CanonicalForm &form)
{
    std::string out = "\\Omega_{" + weight_text(form.weight) + "} =";
    bool first = true;
    for (const auto &[J, f] : form.coeffs) {
        if (f.is_zero())
            continue;
        out += first ? "\n  " : "\n  + ";
        first = false;
        out += "\\Big(" + latex(f) + "\\Big) dV_k \\otimes " + FreeElement::word(monomial_of(J)).latex();
    }
    return out + (first ? " 0\n" : "\n");
}

std::string latex(const PositiveRoot &beta)
{
    const std::string a = std::to_string(beta.a), b = std::to_string(beta.b);
    switch (beta.kind) {
    case PositiveRoot::Kind::Minus: return "\\epsilon_{" + a + "}-\\epsilon_{" + b + "}";
    case PositiveRoot::Kind::Plus: return "\\epsilon_{" + a + "}+\\epsilon_{" + b + "}";
    case PositiveRoot::Kind::Short: return "\\epsilon_{" + a + "}";
    case PositiveRoot::Kind::Double: return "2\\epsilon_{" + a + "}";
    }
    return "";
}

std::string pbw_monomial_text(const Exponents &p, const RootSystemData &data, bool tex)
{
    std::string out;
    for (std::size_t l = 0; l < p.size(); ++l) {
        if (p[l] == 0)
            continue;
        if (!out.empty())
            out += " ";
        out += tex ? "F_{" + latex(data.roots[l]) + "}" : "F_{" + data.roots[l].str() + "}";
        if (p[l] > 1)
            out += tex ? "^{" + std::to_string(p[l]) + "}" : "^" + std::to_string(p[l]);
    }
    return out.empty() ? "1" : out;
}

std::string latex(const PBWExpansion &expansion, const RootSystemData &data)
{
    std::string out = "\\Omega^{" + expansion.type.str() + "}_{" + weight_text(expansion.weight) + "} =";
    bool first = true;
    for (const auto &[p, f] : expansion.coeffs) {
        if (f.is_zero())
            continue;
        out += first ? "\n  " : "\n  + ";
        first = false;
        out += "\\Big(" + latex(f) + "\\Big) dV_k \\otimes " + pbw_monomial_text(p, data, true);
    }
    return out + (first ? " 0\n" : "\n");
}

std::string latex(const RepForm &form, const RootSystemData &data)
{
    std::string out = "\\Omega^V_{" + weight_text(form.weight) + "} =";
    bool first = true;
    for (const auto &[ps, f] : form.coeffs) {
        out += first ? "\n  " : "\n  + ";
        first = false;
        out += "\\Big(" + latex(f) + "\\Big) dV_k";
        for (std::size_t m = 0; m < ps.size(); ++m) {
            std::string mono = pbw_monomial_text(ps[m], data, true);
            out += " \\otimes " + (mono == "1" ? "" : mono + " ") + "v_{\\Lambda_{" + std::to_string(m + 1) + "}}";
        }
    }
    return out + (first ? " 0\n" : "\n");
}

std::string latex_root_table(const RootSystemData &data)
{
    std::string out = "\\begin{tabular}{llll}\n$\\beta$ & content & $F_\\beta$ & $\\eta_\\beta$ \\\\\n\\hline\n";
    for (std::size_t l = 0; l < data.size(); ++l) {
        std::string f = data.fbeta[l].str();
        if (data.fscale[l] != 1)
            f = latex_rational(data.fscale[l]) + f;
        out += "$" + latex(data.roots[l]) + "$ & $" + weight_text(data.contents[l]) + "$ & $" + f + "$ & $" +
               latex(eta_beta(data, l)) + "$ \\\\\n";
    }
    return out + "\\end{tabular}\n";
}

} // namespace canform
