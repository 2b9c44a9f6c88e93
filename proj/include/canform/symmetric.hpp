#ifndef CANFORM_SYMMETRIC_HPP
#define CANFORM_SYMMETRIC_HPP

// G_k = prod_i S_{k_i} acting on the colored variables, symmetrizers, sgn(J)
// and the star product.

#include <functional>
#include <map>
#include <vector>

#include "canform/polyrat.hpp"

namespace canform {

// J : {1..|k|} -> {1..r}, stored as J(1), ..., J(|k|).
using MultiIndex = std::vector<int>;

Weight content_of(const MultiIndex &J, int rank);

// Variables t^(J(u))_{c(u)} identified with t_u, u = 1..|k|.
std::vector<Var> identify(const MultiIndex &J);

// sgn(J): sign of the permutation relating the identification of J to that of
// the increasing multi-index with the same content.
int sgn_multiindex(const MultiIndex &J);

// All J with content k, in lexicographic order.
std::vector<MultiIndex> multi_indices(const Weight &k);

// The standard dV_k order t^(1)_1 < ... < t^(1)_{k_1} < t^(2)_1 < ...
std::vector<Var> standard_vars(const Weight &k);

Rational factorial(int n);
// prod_i k_i!
Rational factorial_product(const Weight &k);

// An element of G_k: images[c-1][j-1] = pi_c(j).
class ColorPermutation {
public:
    static ColorPermutation identity(const Weight &k);
    // Rejects maps that change a color or are not bijective on each color block.
    static ColorPermutation from_map(const Weight &k, const std::map<Var, Var> &map);
    static ColorPermutation transposition(const Weight &k, int color, int a, int b);

    Var apply(Var v) const;
    ColorPermutation compose(const ColorPermutation &inner) const;
    ColorPermutation inverse() const;
    int sign() const;
    const std::vector<std::vector<int>> &images() const { return images_; }

    friend bool operator==(const ColorPermutation &, const ColorPermutation &) = default;
    friend void for_each_permutation(const Weight &k,
                                     const std::function<void(const ColorPermutation &)> &visit);

private:
    std::vector<std::vector<int>> images_;
};

RatFun act_perm(const RatFun &f, const ColorPermutation &pi);

// Calls visit(pi) for every pi in G_k in a fixed order.
void for_each_permutation(const Weight &k, const std::function<void(const ColorPermutation &)> &visit);

RatFun symmetrize(const RatFun &f, const Weight &k, bool signed_sum);

// Invariance (or skew-invariance) under the adjacent transpositions generating G_k.
bool is_symmetric(const RatFun &f, const Weight &k);
bool is_skew_symmetric(const RatFun &f, const Weight &k);

// f * g for G_k-symmetric f and G_l-symmetric g: g's indices are shifted past
// f's and the result is summed over the coset representatives of G_k x G_l in
// G_{k+l}, which equals 1/prod(k_i! l_i!) sym_{k+l}(f g).
RatFun star(const RatFun &f, const Weight &k, const RatFun &g, const Weight &l);

// Star product after relabeling with an explicit per-color index offset; used
// when a factor is already known to be symmetric.
RatFun shift_indices(const RatFun &f, const Weight &offset);

} // namespace canform

#endif
