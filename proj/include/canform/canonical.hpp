#ifndef CANFORM_CANONICAL_HPP
#define CANFORM_CANONICAL_HPP

// The canonical form Omega_k over the free algebra, its projection to a PBW
// basis of U(n), the product formula, the representation-valued form and
// the verification checks built on them.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "canform/flags.hpp"
#include "canform/freealg.hpp"
#include "canform/polyrat.hpp"
#include "canform/roots.hpp"
#include "canform/symmetric.hpp"

namespace canform {

// Omega_k = sum_J omega_J dV_k (x) f_J with omega_J keyed by J.
struct CanonicalForm {
    Weight weight;
    Var anchor;
    std::map<MultiIndex, RatFun> coeffs;
};

// sym_k of prod 1/(x_u - x_{u-1}) over the J-identified variables, x_0 = anchor.
RatFun omega_word(const MultiIndex &J, const Weight &k, Var anchor = Var::origin());
CanonicalForm omega_free(const Weight &k, Var anchor = Var::origin());

using Exponents = std::vector<int>;

// Omega^g_k = sum_p omega_p dV_k (x) F^p.
struct PBWExpansion {
    LieType type;
    Weight weight;
    Var anchor;
    std::map<Exponents, RatFun> coeffs;
};

// Product formula: omega_p = 1/prod(p_l!) eta_{beta_1}^{*p_1} * ... * eta_{beta_m}^{*p_m}.
PBWExpansion omega_pbw(const RootSystemData &data, const Weight &k, Var anchor = Var::origin(),
                       EtaReading reading = EtaReading::Verified);

// Coordinates c_{J,p} of every monomial f_J in the PBW basis modulo the Serre
// ideal. Throws DomainError when the PBW elements fail to form a basis.
struct PBWCoordinates {
    std::vector<Exponents> monomials;
    std::map<MultiIndex, std::vector<Rational>> coords;
};
PBWCoordinates pbw_coordinates(const RootSystemData &data, const Weight &k);

// Omega^g_k computed directly as the image of Omega_k: omega_p = sum_J c_{J,p} omega_J.
PBWExpansion project_pbw(const RootSystemData &data, const Weight &k, Var anchor = Var::origin());

// The atom eta_beta obtained as the projected coefficient of F_beta.
RatFun projected_atom(const RootSystemData &data, std::size_t index, Var anchor = Var::origin());

// A factor of the representation-valued form: exponent vector applied to v_Lambda.
struct RepForm {
    LieType type;
    std::vector<Var> anchors;
    Weight weight;
    // Per-factor exponent vectors -> coefficient.
    std::map<std::vector<Exponents>, RatFun> coeffs;
};

// Omega^V_k = sum over splits k = k^(1) + ... + k^(n) of
// Omega^g_{k^(1)}(z_1) v_1 * ... * Omega^g_{k^(n)}(z_n) v_n.
RepForm omega_rep(const RootSystemData &data, const std::vector<Var> &anchors, const Weight &k);

// Denominator support of a normalized function.
std::set<LinearForm> pole_support(const RatFun &f);

struct Report {
    Report() = default;
    Report(std::string name, nlohmann::json parameters) : check(std::move(name)), params(std::move(parameters)) {}

    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool passed = true;
    std::vector<nlohmann::json> counterexamples;
    // Number of individual equalities examined.
    std::size_t checked = 0;

    void fail(nlohmann::json detail);
    void merge(const Report &other);
    nlohmann::json to_json() const;
};

// residue_pairing(flag_of_word(J), omega_{J'}) = delta_{J,J'} for all J, J' of content k.
Report verify_duality(const Weight &k, Var anchor = Var::origin());

// res_{t^(i)_{k_i} = 0} omega_J dV_k = (-1)^{k_1 + ... + k_i - 1} omega_{J'} dV_{k - 1_i}
// when J(1) = i and J' drops the first entry, and 0 when J(1) != i.
Report verify_residue_recursion(const Weight &k, int i);

// omega_{J1} * omega_{J2} = sum over shuffles J of omega_J, with multiplicity.
Report verify_shuffle_duality(const MultiIndex &J1, const MultiIndex &J2, int rank);

// omega_pbw (product formula) equals project_pbw (linear algebra) for every p.
Report verify_pbw_equivalence(const RootSystemData &data, const Weight &k);

// For every root: the residue recursion of eta_beta along t^(i)_{k_i} = 0,
// vanishing against the flags of the Serre ideal, and the pairings with
// Flag_beta (1) and every other Flag^p (0).
Report verify_atoms(const RootSystemData &data);

// No t^(i) - t^(j) factor in any omega_p of content k when a_ij = 0.
Report verify_pole_support(const RootSystemData &data, const Weight &k);

// sym_(n) of the string 1/(t_1 (t_2 - t_1) ... (t_n - t_{n-1})) equals
// 1/(t_1 ... t_n), and so does the sl2 product-formula coefficient of f^n.
Report verify_matsuo(int n);

// Every weight of the given rank with 0 < |k| <= max_total.
std::vector<Weight> weights_up_to(int rank, int max_total);

} // namespace canform

#endif
