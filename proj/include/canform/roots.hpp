#ifndef CANFORM_ROOTS_HPP
#define CANFORM_ROOTS_HPP

// Positive roots of A_r, B_r, C_r, D_r with contents, the PBW ordering,
// root vectors F_beta as bracket words and the closed-form atoms eta_beta.
//
// rank is always the number of simple roots. Type A of rank r lives on
// eps_1..eps_{r+1}.

#include <optional>
#include <string>
#include <vector>

#include "canform/freealg.hpp"
#include "canform/polyrat.hpp"

namespace canform {

enum class Family { A, B, C, D };

struct LieType {
    Family family = Family::A;
    int rank = 1;

    // Throws DomainError below the family minimum (A 1, B and C 2, D 3).
    void validate() const;
    std::string str() const; // "B3"
    static LieType parse(const std::string &text);
    friend bool operator==(const LieType &, const LieType &) = default;
};

struct PositiveRoot {
    enum class Kind { Minus, Plus, Short, Double };
    // Minus: e_a - e_b, Plus: e_a + e_b, Short: e_a, Double: 2 e_a.
    Kind kind;
    int a;
    int b = 0;

    std::string str() const; // "e1-e3", "e2+e1", "e2", "2e1"
    static PositiveRoot parse(const std::string &text);
    friend bool operator==(const PositiveRoot &, const PositiveRoot &) = default;
};

// Which transcription of the closed forms to use. Literal instantiates the
// displayed formulas as written; Verified replaces the readings that fail the
// duality checks (see the notes at each case in roots.cpp).
enum class EtaReading { Literal, Verified };

struct RootSystemData {
    LieType type;
    CartanMatrix cartan;
    std::vector<PositiveRoot> roots; // in PBW order beta_1 < ... < beta_m
    std::vector<Weight> contents;
    std::vector<BracketTree> fbeta;
    std::vector<Rational> fscale; // F_beta = fscale * fbeta

    std::size_t size() const { return roots.size(); }
    // Position of a root in the PBW order; nullopt when not a positive root.
    std::optional<std::size_t> index_of(const PositiveRoot &beta) const;
    // Position of the positive root with the given content.
    std::optional<std::size_t> index_of_content(const Weight &k) const;
};

RootSystemData build_root_system(LieType type);

// The same roots listed in a different order; order[l] is the old position of
// the new l-th root.
RootSystemData reorder_roots(const RootSystemData &data, const std::vector<std::size_t> &order);

// Coordinates of the root in the eps basis (length rank + 1 for A, rank otherwise).
std::vector<int> eps_vector(const LieType &type, const PositiveRoot &beta);
std::vector<int> simple_root_eps(const LieType &type, int i);

// eta_beta with t_0 = anchor. Throws DomainError for an unknown root, and for a
// Literal case whose formula names a variable outside the content.
RatFun eta_beta(const RootSystemData &data, std::size_t index, Var anchor = Var::origin(),
                EtaReading reading = EtaReading::Verified);

// All exponent vectors p with sum p_l content(beta_l) = k, lexicographically
// decreasing.
std::vector<std::vector<int>> pbw_monomials(const RootSystemData &data, const Weight &k);

// F_{beta_1}^{p_1} ... F_{beta_m}^{p_m} expanded into words.
FreeElement pbw_element(const RootSystemData &data, const std::vector<int> &p);

} // namespace canform

#endif
