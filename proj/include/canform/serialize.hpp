#ifndef CANFORM_SERIALIZE_HPP
#define CANFORM_SERIALIZE_HPP

// JSON and LaTeX for the library types. The CLI writes everything through
// these functions.

#include <string>

#include "json.hpp"

#include "canform/canonical.hpp"
#include "canform/flags.hpp"
#include "canform/freealg.hpp"
#include "canform/polyrat.hpp"
#include "canform/roots.hpp"

namespace canform {

using nlohmann::json;

// {"num": [[{"t:1:1": 2}, "p/q"], ...], "den": [["t:2:1-t:1:1", 1], ...]}
json to_json(const RatFun &f);
RatFun ratfun_from_json(const json &j);

// {"terms": [["2,1", "p/q"], ...]}
json to_json(const FreeElement &e);
FreeElement free_element_from_json(const json &j);

// [{"lhs": "t:1:1", "rhs": "0"}, ...]
json to_json(const FlagChain &chain);
FlagChain flag_chain_from_json(const json &j);

json to_json(const CanonicalForm &form);
json to_json(const PBWExpansion &expansion, const RootSystemData &data);
json to_json(const RepForm &form, const RootSystemData &data);
json to_json(const RootSystemData &data);

std::string latex(const RatFun &f);
// One summand per line, "coefficient dV_k \otimes monomial".
std::string latex(const CanonicalForm &form);
std::string latex(const PBWExpansion &expansion, const RootSystemData &data);
std::string latex(const RepForm &form, const RootSystemData &data);
// Rows: root, content, F_beta, eta_beta.
std::string latex_root_table(const RootSystemData &data);

std::string latex(const PositiveRoot &beta);
// "F_{e1-e2}^2 F_{e2}" for an exponent vector; "1" when p = 0.
std::string pbw_monomial_text(const Exponents &p, const RootSystemData &data, bool latex);

} // namespace canform

#endif
