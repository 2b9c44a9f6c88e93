#include "doctest.h"

#include "canform/errors.hpp"
#include "canform/roots.hpp"
#include "canform/symmetric.hpp"

using namespace canform;

namespace {

// Simple roots in eps coordinates, written out per family independently of the
// library tables.
std::vector<std::vector<int>> simple_roots(Family f, int r)
{
    const int n = f == Family::A ? r + 1 : r;
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= r; ++i) {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        auto e = [&](int u) -> int & { return v[static_cast<std::size_t>(u - 1)]; };
        switch (f) {
        case Family::A: e(i) = 1, e(i + 1) = -1; break;
        case Family::B:
            if (i < r)
                e(i) = 1, e(i + 1) = -1;
            else
                e(r) = 1;
            break;
        case Family::C:
            if (i < r)
                e(i) = 1, e(i + 1) = -1;
            else
                e(r) = 2;
            break;
        case Family::D:
            if (i == 1)
                e(1) = 1, e(2) = 1;
            else
                e(i) = 1, e(i - 1) = -1;
            break;
        }
        out.push_back(v);
    }
    return out;
}

// Decompose an eps vector over the simple roots by brute force over small
// coefficients (every entry of a positive root's content is at most 2).
std::optional<std::vector<int>> decompose(const std::vector<int> &eps, const std::vector<std::vector<int>> &simple)
{
    const std::size_t r = simple.size();
    std::vector<int> k(r, 0);
    while (true) {
        std::vector<int> sum(eps.size(), 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t u = 0; u < eps.size(); ++u)
                sum[u] += k[i] * simple[i][u];
        if (sum == eps)
            return k;
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (++k[i] <= 2)
                break;
            k[i] = 0;
        }
        if (i == r)
            return std::nullopt;
    }
}

std::size_t expected_count(Family f, int r)
{
    switch (f) {
    case Family::A: return static_cast<std::size_t>(r * (r + 1) / 2);
    case Family::B:
    case Family::C: return static_cast<std::size_t>(r * r);
    case Family::D: return static_cast<std::size_t>(r * (r - 1));
    }
    return 0;
}

const std::vector<LieType> &small_types()
{
    static const std::vector<LieType> types = [] {
        std::vector<LieType> out;
        for (int r = 1; r <= 5; ++r)
            out.push_back({Family::A, r});
        for (int r = 2; r <= 5; ++r) {
            out.push_back({Family::B, r});
            out.push_back({Family::C, r});
        }
        for (int r = 3; r <= 5; ++r)
            out.push_back({Family::D, r});
        return out;
    }();
    return types;
}

std::size_t index(const RootSystemData &data, const std::string &root)
{
    auto l = data.index_of(PositiveRoot::parse(root));
    REQUIRE(l.has_value());
    return *l;
}

} // namespace

TEST_CASE("root counts up to rank 5")
{
    for (const LieType &type : small_types()) {
        CAPTURE(type.str());
        CHECK(build_root_system(type).size() == expected_count(type.family, type.rank));
    }
}

TEST_CASE("contents match the simple-root expansion of the eps vector")
{
    for (const LieType &type : small_types()) {
        RootSystemData data = build_root_system(type);
        auto simple = simple_roots(type.family, type.rank);
        for (std::size_t l = 0; l < data.size(); ++l) {
            CAPTURE(type.str());
            CAPTURE(data.roots[l].str());
            auto k = decompose(eps_vector(type, data.roots[l]), simple);
            REQUIRE(k.has_value());
            CHECK(data.contents[l] == Weight(*k));
            CHECK(data.index_of_content(data.contents[l]) == l);
        }
    }
}

TEST_CASE("F_beta has the content of beta")
{
    for (const LieType &type : small_types()) {
        RootSystemData data = build_root_system(type);
        for (std::size_t l = 0; l < data.size(); ++l) {
            CAPTURE(data.roots[l].str());
            CHECK(data.fbeta[l].content(type.rank) == data.contents[l]);
            FreeElement e = bracket_expand(data.fbeta[l]) * data.fscale[l];
            REQUIRE(!e.is_zero());
            CHECK(e.content(type.rank) == data.contents[l]);
        }
    }
}

TEST_CASE("A2 ordering and contents")
{
    RootSystemData data = build_root_system({Family::A, 2});
    REQUIRE(data.size() == 3);
    CHECK(data.roots[0].str() == "e1-e2");
    CHECK(data.roots[1].str() == "e1-e3");
    CHECK(data.roots[2].str() == "e2-e3");
    CHECK(data.contents[0] == Weight({1, 0}));
    CHECK(data.contents[1] == Weight({1, 1}));
    CHECK(data.contents[2] == Weight({0, 1}));
}

TEST_CASE("B2 and C2 contents")
{
    RootSystemData b2 = build_root_system({Family::B, 2});
    CHECK(b2.size() == 4);
    CHECK(b2.contents[index(b2, "e1+e2")] == Weight({1, 2}));
    RootSystemData c2 = build_root_system({Family::C, 2});
    CHECK(c2.contents[index(c2, "2e1")] == Weight({2, 1}));
}

TEST_CASE("B ordering inside a family")
{
    // e_i + e_j < e_i + e_j' < e_i < e_i - e_j' < e_i - e_j for j < j'.
    RootSystemData b3 = build_root_system({Family::B, 3});
    CHECK(index(b3, "e1+e2") < index(b3, "e1+e3"));
    CHECK(index(b3, "e1+e3") < index(b3, "e1"));
    CHECK(index(b3, "e1") < index(b3, "e1-e3"));
    CHECK(index(b3, "e1-e3") < index(b3, "e1-e2"));
}

TEST_CASE("bracket words of A and D roots")
{
    RootSystemData a2 = build_root_system({Family::A, 2});
    CHECK(a2.fbeta[index(a2, "e1-e3")] == BracketTree::bracket(BracketTree::leaf(2), BracketTree::leaf(1)));
    RootSystemData d5 = build_root_system({Family::D, 5});
    for (int j = 3; j <= 5; ++j) {
        std::vector<int> seq;
        for (int u = j; u >= 3; --u)
            seq.push_back(u);
        seq.push_back(1);
        CHECK(d5.fbeta[index(d5, "e" + std::to_string(j) + "+e1")] == nested_bracket(seq));
    }
}

TEST_CASE("unknown roots")
{
    RootSystemData b2 = build_root_system({Family::B, 2});
    CHECK_FALSE(b2.index_of(PositiveRoot::parse("e2+e1")).has_value());
    CHECK_FALSE(b2.index_of(PositiveRoot::parse("2e1")).has_value());
    CHECK_THROWS_AS(eta_beta(b2, 99), DomainError);
    CHECK_THROWS_AS((LieType{Family::D, 2}.validate()), DomainError);
    CHECK_THROWS_AS((LieType{Family::B, 1}.validate()), DomainError);
}

TEST_CASE("eta_beta is symmetric in its content")
{
    for (const LieType &type : small_types()) {
        if (type.rank > 4)
            continue;
        RootSystemData data = build_root_system(type);
        for (std::size_t l = 0; l < data.size(); ++l) {
            CAPTURE(data.roots[l].str());
            CHECK(is_symmetric(eta_beta(data, l), data.contents[l]));
        }
    }
}

TEST_CASE("A atoms are strings")
{
    RootSystemData a3 = build_root_system({Family::A, 3});
    const Var a = Var::t(1, 1), b = Var::t(2, 1), c = Var::t(3, 1);
    RatFun want = RatFun::inverse_difference(a, Var::origin()) * RatFun::inverse_difference(b, a) *
                  RatFun::inverse_difference(c, b);
    CHECK(equals(eta_beta(a3, index(a3, "e1-e4")), want));
    CHECK(equals(eta_beta(a3, index(a3, "e2-e3")), RatFun::inverse_difference(b, Var::origin())));
    // Anchored at z the string starts from z.
    CHECK(equals(eta_beta(a3, index(a3, "e3-e4"), Var::z(1)), RatFun::inverse_difference(c, Var::z(1))));
}

TEST_CASE("C long simple root is 1/t")
{
    RootSystemData c3 = build_root_system({Family::C, 3});
    CHECK(equals(eta_beta(c3, index(c3, "2e3")), RatFun::inverse_difference(Var::t(3, 1), Var::origin())));
}

TEST_CASE("Literal and Verified readings")
{
    // Agree wherever the display is used as written.
    RootSystemData a3 = build_root_system({Family::A, 3});
    for (std::size_t l = 0; l < a3.size(); ++l)
        CHECK(equals(eta_beta(a3, l, Var::origin(), EtaReading::Literal), eta_beta(a3, l)));
    RootSystemData c3 = build_root_system({Family::C, 3});
    CHECK(equals(eta_beta(c3, index(c3, "e1-e3"), Var::origin(), EtaReading::Literal),
                 eta_beta(c3, index(c3, "e1-e3"))));

    // B plus roots: the displayed form has the opposite sign, and at j = r the
    // root vertex replaces t^(r-1)_1 instead.
    RootSystemData b4 = build_root_system({Family::B, 4});
    for (const std::string root : {"e1+e2", "e1+e3", "e2+e3", "e1+e4", "e3+e4"}) {
        CAPTURE(root);
        const std::size_t l = index(b4, root);
        const RatFun literal = eta_beta(b4, l, Var::origin(), EtaReading::Literal);
        if (root.back() == '4')
            CHECK_FALSE(equals(literal, -eta_beta(b4, l)));
        else
            CHECK(equals(literal, -eta_beta(b4, l)));
    }

    // D e_j + e_1: the display names t^(2), which is not in the content.
    RootSystemData d4 = build_root_system({Family::D, 4});
    CHECK_THROWS_AS(eta_beta(d4, index(d4, "e4+e1"), Var::origin(), EtaReading::Literal), DomainError);
}

TEST_CASE("pbw_monomials")
{
    RootSystemData a2 = build_root_system({Family::A, 2});
    CHECK(pbw_monomials(a2, Weight({1, 1})) == std::vector<std::vector<int>>{{1, 0, 1}, {0, 1, 0}});
    CHECK(pbw_monomials(a2, Weight({0, 0})) == std::vector<std::vector<int>>{{0, 0, 0}});
    RootSystemData a1 = build_root_system({Family::A, 1});
    CHECK(pbw_monomials(a1, Weight({3})) == std::vector<std::vector<int>>{{3}});
    // Each exponent vector reproduces the weight.
    RootSystemData b3 = build_root_system({Family::B, 3});
    const Weight k({2, 1, 2});
    auto ps = pbw_monomials(b3, k);
    CHECK(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
    for (const auto &p : ps) {
        std::vector<int> sum(3, 0);
        for (std::size_t l = 0; l < p.size(); ++l)
            for (int i = 1; i <= 3; ++i)
                sum[static_cast<std::size_t>(i - 1)] += p[l] * b3.contents[l][i];
        CHECK(Weight(sum) == k);
    }
}

TEST_CASE("pbw_element of a single root")
{
    RootSystemData a2 = build_root_system({Family::A, 2});
    FreeElement e = pbw_element(a2, {0, 1, 0});
    CHECK(e == FreeElement::word({2, 1}) - FreeElement::word({1, 2}));
    CHECK(pbw_element(a2, {1, 0, 1}) == FreeElement::word({1, 2}));
    CHECK(pbw_element(a2, {0, 0, 0}) == FreeElement::word({}));
}

TEST_CASE("reorder_roots")
{
    RootSystemData a2 = build_root_system({Family::A, 2});
    RootSystemData r = reorder_roots(a2, {2, 1, 0});
    CHECK(r.roots[0] == a2.roots[2]);
    CHECK(r.contents[2] == a2.contents[0]);
    CHECK(r.fbeta[1] == a2.fbeta[1]);
    CHECK_THROWS_AS(reorder_roots(a2, {0, 1}), DomainError);
}
