#include "canform/symmetric.hpp"

#include <algorithm>
#include <numeric>

#include "canform/errors.hpp"

namespace canform {

Weight content_of(const MultiIndex &J, int rank)
{
    std::vector<int> parts(static_cast<std::size_t>(rank), 0);
    for (int c : J) {
        if (c < 1 || c > rank)
            throw DomainError("multi-index color " + std::to_string(c) + " out of range");
        ++parts[static_cast<std::size_t>(c - 1)];
    }
    return Weight(std::move(parts));
}

std::vector<Var> identify(const MultiIndex &J)
{
    std::map<int, int> seen;
    std::vector<Var> out;
    out.reserve(J.size());
    for (int c : J)
        out.push_back(Var::t(c, ++seen[c]));
    return out;
}

namespace {

int permutation_sign(const std::vector<int> &perm)
{
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b])
                ++inversions;
    return inversions % 2 ? -1 : 1;
}

} // namespace

int sgn_multiindex(const MultiIndex &J)
{
    // Position of t_u's variable in the standard order is its rank among all
    // identified variables; the variables are distinct.
    std::vector<Var> vars = identify(J);
    std::vector<Var> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> perm;
    perm.reserve(vars.size());
    for (Var v : vars)
        perm.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
    return permutation_sign(perm);
}

std::vector<MultiIndex> multi_indices(const Weight &k)
{
    MultiIndex J;
    for (int c = 1; c <= k.rank(); ++c)
        J.insert(J.end(), static_cast<std::size_t>(k[c]), c);
    std::vector<MultiIndex> out;
    do
        out.push_back(J);
    while (std::next_permutation(J.begin(), J.end()));
    return out;
}

std::vector<Var> standard_vars(const Weight &k)
{
    std::vector<Var> out;
    for (int c = 1; c <= k.rank(); ++c)
        for (int j = 1; j <= k[c]; ++j)
            out.push_back(Var::t(c, j));
    return out;
}

Rational factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational factorial_product(const Weight &k)
{
    Rational out = 1;
    for (int p : k.parts())
        out *= factorial(p);
    return out;
}

// ---------------------------------------------------------------- ColorPermutation

ColorPermutation ColorPermutation::identity(const Weight &k)
{
    ColorPermutation pi;
    for (int c = 1; c <= k.rank(); ++c) {
        std::vector<int> block(static_cast<std::size_t>(k[c]));
        std::iota(block.begin(), block.end(), 1);
        pi.images_.push_back(std::move(block));
    }
    return pi;
}

ColorPermutation ColorPermutation::from_map(const Weight &k, const std::map<Var, Var> &map)
{
    ColorPermutation pi = identity(k);
    for (const auto &[from, to] : map) {
        if (!from.is_t() || !to.is_t() || from.color() != to.color())
            throw DomainError("permutation maps " + from.str() + " to " + to.str() + " across colors");
        int c = from.color();
        if (c > k.rank() || from.index() > k[c] || to.index() > k[c])
            throw DomainError("permutation moves " + from.str() + " outside the weight");
        pi.images_[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(from.index() - 1)] = to.index();
    }
    for (const auto &block : pi.images_) {
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j < sorted.size(); ++j)
            if (sorted[j] != static_cast<int>(j) + 1)
                throw DomainError("map is not a permutation of each color block");
    }
    return pi;
}

ColorPermutation ColorPermutation::transposition(const Weight &k, int color, int a, int b)
{
    ColorPermutation pi = identity(k);
    auto &block = pi.images_.at(static_cast<std::size_t>(color - 1));
    std::swap(block.at(static_cast<std::size_t>(a - 1)), block.at(static_cast<std::size_t>(b - 1)));
    return pi;
}

Var ColorPermutation::apply(Var v) const
{
    if (!v.is_t())
        return v;
    auto c = static_cast<std::size_t>(v.color() - 1);
    auto j = static_cast<std::size_t>(v.index() - 1);
    if (c >= images_.size() || j >= images_[c].size())
        return v;
    return Var::t(v.color(), images_[c][j]);
}

ColorPermutation ColorPermutation::compose(const ColorPermutation &inner) const
{
    if (images_.size() != inner.images_.size())
        throw DomainError("composing permutations of different weights");
    ColorPermutation out = inner;
    for (std::size_t c = 0; c < images_.size(); ++c) {
        if (images_[c].size() != inner.images_[c].size())
            throw DomainError("composing permutations of different weights");
        for (auto &image : out.images_[c])
            image = images_[c][static_cast<std::size_t>(image - 1)];
    }
    return out;
}

ColorPermutation ColorPermutation::inverse() const
{
    ColorPermutation out = *this;
    for (std::size_t c = 0; c < images_.size(); ++c)
        for (std::size_t j = 0; j < images_[c].size(); ++j)
            out.images_[c][static_cast<std::size_t>(images_[c][j] - 1)] = static_cast<int>(j) + 1;
    return out;
}

int ColorPermutation::sign() const
{
    int s = 1;
    for (const auto &block : images_)
        s *= permutation_sign(block);
    return s;
}

RatFun act_perm(const RatFun &f, const ColorPermutation &pi)
{
    return f.relabel([&](Var v) { return pi.apply(v); }, true);
}

void for_each_permutation(const Weight &k, const std::function<void(const ColorPermutation &)> &visit)
{
    ColorPermutation pi = ColorPermutation::identity(k);
    // Odometer over the colors, each advancing by next_permutation.
    auto &blocks = pi.images_;
    while (true) {
        visit(pi);
        std::size_t c = 0;
        for (; c < blocks.size(); ++c) {
            if (std::next_permutation(blocks[c].begin(), blocks[c].end()))
                break;
        }
        if (c == blocks.size())
            return;
    }
}

RatFun symmetrize(const RatFun &f, const Weight &k, bool signed_sum)
{
    std::vector<RatFun> terms;
    for_each_permutation(k, [&](const ColorPermutation &pi) {
        RatFun term = act_perm(f, pi);
        if (signed_sum && pi.sign() < 0)
            term = -term;
        terms.push_back(std::move(term));
    });
    return sum(terms);
}

namespace {

bool check_generators(const RatFun &f, const Weight &k, int expected_sign)
{
    for (int c = 1; c <= k.rank(); ++c)
        for (int j = 1; j < k[c]; ++j) {
            RatFun moved = act_perm(f, ColorPermutation::transposition(k, c, j, j + 1));
            // Normal forms are unique, so structural comparison decides.
            if (moved != (expected_sign > 0 ? f : -f))
                return false;
        }
    return true;
}

} // namespace

bool is_symmetric(const RatFun &f, const Weight &k) { return check_generators(f, k, 1); }
bool is_skew_symmetric(const RatFun &f, const Weight &k) { return check_generators(f, k, -1); }

RatFun shift_indices(const RatFun &f, const Weight &offset)
{
    return f.relabel(
        [&](Var v) {
            if (!v.is_t() || v.color() > offset.rank())
                return v;
            return Var::t(v.color(), v.index() + offset[v.color()]);
        },
        true);
}

RatFun star(const RatFun &f, const Weight &k, const RatFun &g, const Weight &l)
{
    if (k.rank() != l.rank())
        throw DomainError("star of weights with different ranks");
    if (!is_symmetric(f, k))
        throw DomainError("left star factor is not G_k-symmetric");
    if (!is_symmetric(g, l))
        throw DomainError("right star factor is not G_l-symmetric");
    if (f.is_zero() || g.is_zero())
        return RatFun();

    const int r = k.rank();
    // Per color, a choice of which k_c of the k_c + l_c slots receive f's variables.
    std::vector<std::vector<std::vector<bool>>> choices(static_cast<std::size_t>(r));
    for (int c = 1; c <= r; ++c) {
        std::vector<bool> mask(static_cast<std::size_t>(k[c] + l[c]), false);
        std::fill(mask.begin(), mask.begin() + k[c], true);
        // prev_permutation from the lexicographically largest arrangement.
        do
            choices[static_cast<std::size_t>(c - 1)].push_back(mask);
        while (std::prev_permutation(mask.begin(), mask.end()));
    }

    std::vector<RatFun> terms;
    std::vector<std::size_t> pick(static_cast<std::size_t>(r), 0);
    std::vector<std::vector<int>> f_target(static_cast<std::size_t>(r)), g_target(static_cast<std::size_t>(r));
    while (true) {
        for (int c = 0; c < r; ++c) {
            const auto &mask = choices[static_cast<std::size_t>(c)][pick[static_cast<std::size_t>(c)]];
            auto &ft = f_target[static_cast<std::size_t>(c)];
            auto &gt = g_target[static_cast<std::size_t>(c)];
            ft.clear();
            gt.clear();
            for (std::size_t s = 0; s < mask.size(); ++s)
                (mask[s] ? ft : gt).push_back(static_cast<int>(s) + 1);
        }
        auto map_with = [&](const std::vector<std::vector<int>> &targets) {
            return [&targets](Var v) {
                if (!v.is_t() || v.color() > static_cast<int>(targets.size()))
                    return v;
                const auto &t = targets[static_cast<std::size_t>(v.color() - 1)];
                if (v.index() > static_cast<int>(t.size()))
                    throw DomainError("star factor uses " + v.str() + " outside its weight");
                return Var::t(v.color(), t[static_cast<std::size_t>(v.index() - 1)]);
            };
        };
        terms.push_back(f.relabel(map_with(f_target), true) * g.relabel(map_with(g_target), true));

        int c = 0;
        for (; c < r; ++c) {
            auto &p = pick[static_cast<std::size_t>(c)];
            if (++p < choices[static_cast<std::size_t>(c)].size())
                break;
            p = 0;
        }
        if (c == r)
            break;
    }
    return sum(terms);
}

} // namespace canform
