#ifndef CANFORM_FLAGS_HPP
#define CANFORM_FLAGS_HPP

// Flags of the discriminantal arrangement, iterated residues of top-degree
// forms, and the flag attached to a free-algebra monomial.

#include <map>
#include <string>
#include <vector>

#include "canform/freealg.hpp"
#include "canform/polyrat.hpp"
#include "canform/symmetric.hpp"

namespace canform {

// lhs = rhs with lhs a t variable and rhs a t variable, an anchor or the origin.
struct Equation {
    Var lhs;
    Var rhs;

    friend auto operator<=>(const Equation &, const Equation &) = default;
    std::string str() const { return lhs.str() + "=" + rhs.str(); }
};

// The equation chain L^1, L^2, ...: equation u cuts L^u out of L^{u-1}.
using FlagChain = std::vector<Equation>;
using FlagCombination = std::map<FlagChain, Rational>;

void add_to(FlagCombination &into, const FlagChain &chain, const Rational &c);

// coeff * dv_1 ^ ... ^ dv_n in the order given by vars.
struct TopForm {
    RatFun coeff;
    std::vector<Var> vars;

    // coeff * dV_k.
    static TopForm standard(RatFun coeff, const Weight &k);
    bool is_scalar() const { return vars.empty(); }
    // The value of a fully reduced form.
    Rational scalar() const;
};

// Residue along a single hyperplane. For v = w between two t variables the
// larger one is eliminated; for v = 0 or v = z it is v. The result is
// (-1)^(pos(v)-1) ((v - w) coeff)|_{v = w} with dv removed from the wedge.
// Throws DomainError when v is absent or the pole has order >= 2.
TopForm residue_step(const TopForm &f, const Equation &eq);

// res_{L^p}(... res_{L^1}(f)). Equations are resolved through the variables
// eliminated by earlier steps; a dependent equation is a DomainError.
TopForm iterated_residue(const TopForm &f, const FlagChain &chain);

// Sum of c * res_F f over a combination of full flags.
Rational residue_pairing(const FlagCombination &flags, const TopForm &f);

// sgn(J)/prod(k_i!) asym_k^J of the standard flag (x_1 = a) > (x_1 = x_2 = a) > ...
// where x_u are the J-identified variables and a is the anchor.
FlagCombination flag_of_word(const MultiIndex &J, const Weight &k, Var anchor = Var::origin());

// Linear extension over the words of a homogeneous element (words are
// monomials, converted to multi-indices by reversal).
FlagCombination flag_of_free_element(const FreeElement &e, const Weight &k, Var anchor = Var::origin());

std::string to_string(const FlagChain &chain);

} // namespace canform

#endif
