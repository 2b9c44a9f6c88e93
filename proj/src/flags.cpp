#include "canform/flags.hpp"

#include <algorithm>

#include "canform/errors.hpp"

namespace canform {

void add_to(FlagCombination &into, const FlagChain &chain, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = into.try_emplace(chain, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            into.erase(it);
    }
}

TopForm TopForm::standard(RatFun coeff, const Weight &k) { return TopForm{std::move(coeff), standard_vars(k)}; }

Rational TopForm::scalar() const
{
    if (!vars.empty())
        throw DomainError("form still has degree " + std::to_string(vars.size()));
    if (!coeff.is_constant())
        throw DomainError("degree-zero form with a non-constant coefficient " + coeff.str());
    return coeff.numerator().constant_term();
}

namespace {

// (eliminated variable, its value) for an equation whose sides are already resolved.
std::pair<Var, Var> orient(const Equation &eq)
{
    Var a = eq.lhs, b = eq.rhs;
    if (a == b)
        throw DomainError("dependent equation " + eq.str());
    if (!a.is_t() && !b.is_t())
        throw DomainError("equation " + eq.str() + " has no coordinate to eliminate");
    if (a < b)
        std::swap(a, b);
    return {a, b};
}

} // namespace

TopForm residue_step(const TopForm &f, const Equation &eq)
{
    auto [v, w] = orient(eq);
    auto pos = std::find(f.vars.begin(), f.vars.end(), v);
    if (pos == f.vars.end())
        throw DomainError("variable " + v.str() + " is not a coordinate of the form");
    TopForm out;
    out.vars = f.vars;
    const auto index = pos - f.vars.begin();
    out.vars.erase(out.vars.begin() + index);

    const LinearForm form{v, w};
    const int mult = f.coeff.multiplicity(form);
    if (mult >= 2)
        throw DomainError("pole of order " + std::to_string(mult) + " along " + form.str());
    if (mult == 0)
        return out;
    out.coeff = f.coeff.times_form(form, 1).substitute(v, w);
    if (index % 2)
        out.coeff = -out.coeff;
    return out;
}

TopForm iterated_residue(const TopForm &f, const FlagChain &chain)
{
    std::map<Var, Var> eliminated;
    auto resolve = [&](Var x) {
        for (auto it = eliminated.find(x); it != eliminated.end(); it = eliminated.find(x))
            x = it->second;
        return x;
    };
    TopForm current = f;
    for (const Equation &eq : chain) {
        Equation resolved{resolve(eq.lhs), resolve(eq.rhs)};
        auto [v, w] = orient(resolved);
        current = residue_step(current, resolved);
        eliminated[v] = w;
    }
    return current;
}

Rational residue_pairing(const FlagCombination &flags, const TopForm &f)
{
    Rational total = 0;
    for (const auto &[chain, c] : flags) {
        TopForm r = iterated_residue(f, chain);
        if (r.coeff.is_zero())
            continue;
        total += c * r.scalar();
    }
    return total;
}

FlagCombination flag_of_word(const MultiIndex &J, const Weight &k, Var anchor)
{
    if (content_of(J, k.rank()) != k)
        throw DomainError("multi-index content does not match the weight " + k.str());
    const std::vector<Var> x = identify(J);
    const Rational scale = Rational(sgn_multiindex(J)) / factorial_product(k);
    FlagCombination out;
    for_each_permutation(k, [&](const ColorPermutation &pi) {
        FlagChain chain;
        chain.reserve(x.size());
        for (Var v : x)
            chain.push_back({pi.apply(v), anchor});
        add_to(out, chain, scale * pi.sign());
    });
    return out;
}

FlagCombination flag_of_free_element(const FreeElement &e, const Weight &k, Var anchor)
{
    FlagCombination out;
    if (e.is_zero())
        return out;
    if (e.content(k.rank()) != k)
        throw DomainError("element content does not match the weight " + k.str());
    for (const auto &[w, c] : e.terms())
        for (const auto &[chain, d] : flag_of_word(multi_index_of(w), k, anchor))
            add_to(out, chain, c * d);
    return out;
}

std::string to_string(const FlagChain &chain)
{
    std::string out = "[";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i)
            out += ", ";
        out += chain[i].str();
    }
    return out + "]";
}

} // namespace canform
