#include "doctest.h"

#include <random>

#include "canform/errors.hpp"
#include "canform/freealg.hpp"

using namespace canform;

namespace {

FreeElement w(Word word, long c = 1) { return FreeElement::word(std::move(word), Rational(c)); }

BracketTree random_tree(std::mt19937 &rng, int leaves, int rank)
{
    if (leaves == 1)
        return BracketTree::leaf(std::uniform_int_distribution<int>(1, rank)(rng));
    int left = std::uniform_int_distribution<int>(1, leaves - 1)(rng);
    return BracketTree::bracket(random_tree(rng, left, rank), random_tree(rng, leaves - left, rank));
}

long binomial(long n, long k)
{
    long b = 1;
    for (long i = 1; i <= k; ++i)
        b = b * (n - k + i) / i;
    return b;
}

} // namespace

TEST_CASE("monomial and multi-index are reverses")
{
    CHECK(monomial_of({1, 2}) == Word{2, 1});
    CHECK(multi_index_of({1, 1, 2}) == MultiIndex{2, 1, 1});
}

TEST_CASE("nested_bracket")
{
    CHECK(nested_bracket({2, 1}).str() == "[f2,f1]");
    CHECK(nested_bracket({3, 2, 1}).str() == "[f3,[f2,f1]]");
    CHECK(nested_bracket({4}) == BracketTree::leaf(4));
    CHECK_THROWS_AS(nested_bracket({}), DomainError);
}

TEST_CASE("bracket_expand")
{
    CHECK(bracket_expand(nested_bracket({2, 1})) == w({2, 1}) - w({1, 2}));
    CHECK(bracket_expand(BracketTree::leaf(3)) == w({3}));
    CHECK(bracket_expand(nested_bracket({1, 1, 2})) == w({1, 1, 2}) - w({1, 2, 1}, 2) + w({2, 1, 1}));
    CHECK(bracket_expand(nested_bracket({2, 2, 1})).content(2) == Weight{1, 2});
}

TEST_CASE("bracket antisymmetry and Jacobi on random trees")
{
    std::mt19937 rng(1729);
    for (int trial = 0; trial < 40; ++trial) {
        int la = std::uniform_int_distribution<int>(1, 2)(rng);
        int lb = std::uniform_int_distribution<int>(1, 2)(rng);
        BracketTree a = random_tree(rng, la, 3), b = random_tree(rng, lb, 3);
        FreeElement ab = bracket_expand(BracketTree::bracket(a, b));
        FreeElement ba = bracket_expand(BracketTree::bracket(b, a));
        CHECK((ab + ba).is_zero());

        BracketTree x = random_tree(rng, 1, 3), y = random_tree(rng, std::uniform_int_distribution<int>(1, 2)(rng), 3),
                    z = random_tree(rng, 1, 3);
        FreeElement jacobi = bracket_expand(BracketTree::bracket(x, BracketTree::bracket(y, z))) +
                             bracket_expand(BracketTree::bracket(y, BracketTree::bracket(z, x))) +
                             bracket_expand(BracketTree::bracket(z, BracketTree::bracket(x, y)));
        CHECK(jacobi.is_zero());
    }
}

TEST_CASE("coproduct")
{
    TensorElement d1 = coproduct({1});
    CHECK(d1.size() == 2);
    CHECK(d1.at({{}, {1}}) == 1);
    CHECK(d1.at({{1}, {}}) == 1);

    TensorElement d12 = coproduct({1, 2});
    TensorElement expected{{{{}, {1, 2}}, 1}, {{{1}, {2}}, 1}, {{{2}, {1}}, 1}, {{{1, 2}, {}}, 1}};
    CHECK(d12 == expected);

    TensorElement d0 = coproduct({});
    CHECK(d0 == TensorElement{{{{}, {}}, 1}});
}

TEST_CASE("coproduct is coassociative on words of length <= 4")
{
    using Triple = std::map<std::tuple<Word, Word, Word>, Rational>;
    for (int len = 0; len <= 4; ++len)
        for (const Word &word : words_of_content(Weight{len / 2 + len % 2, len / 2})) {
            Triple left, right;
            for (const auto &[legs, c] : coproduct(word)) {
                for (const auto &[inner, c2] : coproduct(legs.first))
                    left[{inner.first, inner.second, legs.second}] += c * c2;
                for (const auto &[inner, c2] : coproduct(legs.second))
                    right[{legs.first, inner.first, inner.second}] += c * c2;
            }
            CHECK(left == right);
        }
}

TEST_CASE("shuffles")
{
    auto s12 = shuffles({1}, {2});
    std::sort(s12.begin(), s12.end());
    CHECK(s12 == std::vector<MultiIndex>{{1, 2}, {2, 1}});
    CHECK(shuffles({1}, {1}) == std::vector<MultiIndex>{{1, 1}, {1, 1}});
    CHECK(shuffles({}, {2, 1}) == std::vector<MultiIndex>{{2, 1}});
}

TEST_CASE("shuffle counts and coproduct duality for |J1| + |J2| <= 4")
{
    for (int a = 0; a <= 4; ++a)
        for (const auto &k1 : {Weight{a, 0}, Weight{a - a / 2, a / 2}})
            for (const auto &J1 : multi_indices(k1))
                for (int b = 0; a + b <= 4; ++b)
                    for (const auto &k2 : {Weight{b, 0}, Weight{0, b}, Weight{b / 2, b - b / 2}})
                        for (const auto &J2 : multi_indices(k2)) {
                            auto list = shuffles(J1, J2);
                            CHECK(static_cast<long>(list.size()) ==
                                  binomial(static_cast<long>(J1.size() + J2.size()), static_cast<long>(J1.size())));
                            std::map<MultiIndex, int> mult;
                            for (const auto &J : list)
                                ++mult[J];
                            for (const auto &[J, m] : mult) {
                                TensorElement d = coproduct(monomial_of(J));
                                auto it = d.find({monomial_of(J1), monomial_of(J2)});
                                CHECK(it != d.end());
                                CHECK(it->second == m);
                            }
                        }
}

TEST_CASE("serre_relations")
{
    CartanMatrix a2({{2, -1}, {-1, 2}});
    auto rels = serre_relations(a2);
    REQUIRE(rels.size() == 2);
    CHECK(rels[0].i == 1);
    CHECK(rels[0].element == bracket_expand(nested_bracket({1, 1, 2})));

    CartanMatrix a3({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    bool found = false;
    for (const auto &r : serre_relations(a3))
        if (r.i == 1 && r.j == 3) {
            CHECK(r.element == bracket_expand(nested_bracket({1, 3})));
            found = true;
        }
    CHECK(found);

    CartanMatrix b2({{2, -2}, {-1, 2}});
    auto b2rels = serre_relations(b2);
    CHECK(b2rels[0].element == bracket_expand(nested_bracket({1, 1, 1, 2})));
    CHECK(b2rels[0].element.terms().size() == 4);

    CHECK_THROWS_AS(CartanMatrix({{2, 1}, {-1, 2}}), DomainError);
    CHECK_THROWS_AS(CartanMatrix({{2, 0}, {-1, 2}}), DomainError);
}

TEST_CASE("serre_ideal_span")
{
    CartanMatrix a2({{2, -1}, {-1, 2}});
    CHECK(serre_ideal_span(a2, Weight{1, 1}).empty());
    CHECK(serre_ideal_span(a2, Weight{1, 0}).empty());
    CartanMatrix a3({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    auto span = serre_ideal_span(a3, Weight{1, 0, 1});
    REQUIRE(span.size() == 2);
    // [f1,f3] and [f3,f1] are both relations; both appear once.
    CHECK((span[0] + span[1]).is_zero());
    CHECK(span[0] == bracket_expand(nested_bracket({1, 3})));
}

TEST_CASE("express_in_basis")
{
    FreeElement e101 = w({1, 2});
    FreeElement e010 = w({2, 1}) - w({1, 2});
    auto x = express_in_basis(w({2, 1}), {e101, e010});
    REQUIRE(x);
    CHECK(*x == std::vector<Rational>{1, 1});

    auto unit = express_in_basis(e010, {e101, e010});
    REQUIRE(unit);
    CHECK(*unit == std::vector<Rational>{0, 1});

    CHECK_FALSE(express_in_basis(w({2, 1}), {e101}));
}

TEST_CASE("QuotientSolver dimension checks")
{
    CartanMatrix a2({{2, -1}, {-1, 2}});
    // f1^2 f2 content: PBW monomials f1^2 f2, f1 [f2,f1]; plus the ideal.
    FreeElement f1 = w({1}), f2 = w({2});
    FreeElement f21 = bracket_expand(nested_bracket({2, 1}));
    QuotientSolver solver({f1 * f1 * f2, f1 * f21}, serre_ideal_span(a2, Weight{2, 1}));
    CHECK(solver.spans());
    CHECK(solver.independent());
    CHECK(solver.ideal_rank() == 1);

    QuotientSolver bad({f1 * f1 * f2}, serre_ideal_span(a2, Weight{2, 1}));
    CHECK_FALSE(bad.spans());
}
