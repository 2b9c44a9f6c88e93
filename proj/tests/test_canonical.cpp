#include "doctest.h"

#include "canform/canonical.hpp"
#include "canform/errors.hpp"
#include "oracle.hpp"

using namespace canform;

namespace {

const Var O = Var::origin();
Var t(int j) { return Var::t(1, j); }
Var s(int j = 1) { return Var::t(2, j); }
RatFun inv(Var a, Var b) { return RatFun::inverse_difference(a, b); }
Polynomial var(Var v) { return Polynomial::variable(v); }

RatFun coefficient(const CanonicalForm &form, const MultiIndex &J)
{
    auto it = form.coeffs.find(J);
    REQUIRE(it != form.coeffs.end());
    return it->second;
}

RatFun coefficient(const PBWExpansion &e, const Exponents &p)
{
    auto it = e.coeffs.find(p);
    return it == e.coeffs.end() ? RatFun() : it->second;
}

} // namespace

TEST_CASE("Omega_(2,1) against the displayed coefficients")
{
    CanonicalForm form = omega_free(Weight({2, 1}));
    CHECK(form.coeffs.size() == 3);
    // J is the word read backwards: f2 f1^2 <-> J = (1,1,2).
    CHECK(equals(coefficient(form, {1, 1, 2}),
                 inv(t(1), O) * inv(t(2), t(1)) * inv(s(), t(2)) + inv(t(2), O) * inv(t(1), t(2)) * inv(s(), t(1))));
    CHECK(equals(coefficient(form, {1, 2, 1}),
                 inv(t(1), O) * inv(s(), t(1)) * inv(t(2), s()) + inv(t(2), O) * inv(s(), t(2)) * inv(t(1), s())));
    CHECK(equals(coefficient(form, {2, 1, 1}),
                 inv(s(), O) * inv(t(1), s()) * inv(t(2), t(1)) + inv(s(), O) * inv(t(2), s()) * inv(t(1), t(2))));
}

TEST_CASE("omega_word against the pointwise oracle")
{
    for (const Weight &k : weights_up_to(3, 4)) {
        for (const MultiIndex &J : multi_indices(k)) {
            RatFun f = omega_word(J, k);
            for (long seed = 0; seed < 2; ++seed) {
                Point p = oracle::spread_point(k.parts(), seed);
                CAPTURE(k.str());
                CHECK(f.eval(p) == oracle::omega(k.parts(), J, p));
            }
        }
    }
    // Anchored at z.
    const Weight k({2, 1});
    Point p = oracle::spread_point(k.parts(), 3);
    p[Var::z(1)] = 17;
    for (const MultiIndex &J : multi_indices(k))
        CHECK(omega_word(J, k, Var::z(1)).eval(p) == oracle::omega(k.parts(), J, p, Var::z(1)));
}

TEST_CASE("Omega_(1,1) and the empty weight")
{
    CanonicalForm form = omega_free(Weight({1, 1}));
    CHECK(equals(coefficient(form, {1, 2}), inv(t(1), O) * inv(s(), t(1))));
    CHECK(equals(coefficient(form, {2, 1}), inv(s(), O) * inv(t(1), s())));
    CanonicalForm empty = omega_free(Weight({0, 0}));
    REQUIRE(empty.coeffs.size() == 1);
    CHECK(coefficient(empty, {}) == RatFun(1));
}

TEST_CASE("residue of Omega_(1,1) at s = 0")
{
    CanonicalForm form = omega_free(Weight({1, 1}));
    const Equation s0{s(), O};
    // f2 f1: no pole at s = 0.
    CHECK(residue_step(TopForm::standard(coefficient(form, {1, 2}), Weight({1, 1})), s0).coeff.is_zero());
    // f1 f2: minus the coefficient of Omega_(1,0).
    TopForm r = residue_step(TopForm::standard(coefficient(form, {2, 1}), Weight({1, 1})), s0);
    CHECK(r.vars == std::vector<Var>{t(1)});
    CHECK(equals(r.coeff, -coefficient(omega_free(Weight({1, 0})), {1})));
}

TEST_CASE("residue recursion")
{
    CHECK(verify_residue_recursion(Weight({1, 1}), 2).passed);
    CHECK(verify_residue_recursion(Weight({2, 0}), 1).passed);
    CHECK(verify_residue_recursion(Weight({2, 1, 1}), 3).passed);
    CHECK_THROWS_AS(verify_residue_recursion(Weight({0, 1}), 1), DomainError);
}

TEST_CASE("duality")
{
    for (const Weight &k : {Weight({1}), Weight({1, 1}), Weight({2, 1}), Weight({1, 1, 1})}) {
        Report r = verify_duality(k);
        CAPTURE(k.str());
        CHECK(r.passed);
        const std::size_t n = multi_indices(k).size();
        CHECK(r.checked == n * n);
    }
    CHECK(verify_duality(Weight({2, 1}), Var::z(1)).passed);
}

TEST_CASE("shuffle duality")
{
    CHECK(verify_shuffle_duality({1}, {2}, 2).passed);
    CHECK(verify_shuffle_duality({1}, {1}, 1).passed);
    CHECK(verify_shuffle_duality({1, 2}, {}, 2).passed);
    CHECK(verify_shuffle_duality({2, 1}, {1, 2}, 2).passed);
    // 1/t * 1/s = 1/(t(s-t)) + 1/(s(t-s)).
    CHECK(equals(star(inv(t(1), O), Weight({1, 0}), inv(s(), O), Weight({0, 1})),
                 inv(t(1), O) * inv(s(), t(1)) + inv(s(), O) * inv(t(1), s())));
    // 1/t * 1/t = 2 omega_(1,1) of weight (2).
    CHECK(equals(star(inv(t(1), O), Weight({1}), inv(t(1), O), Weight({1})),
                 Rational(2) * coefficient(omega_free(Weight({2})), {1, 1})));
}

TEST_CASE("sl3 product formula at p = (2,1,0)")
{
    RootSystemData a2 = build_root_system({Family::A, 2});
    PBWExpansion e = omega_pbw(a2, Weight({3, 1}));
    Polynomial e1 = var(t(1)) + var(t(2)) + var(t(3));
    Polynomial e2 = var(t(1)) * var(t(2)) + var(t(1)) * var(t(3)) + var(t(2)) * var(t(3));
    Polynomial num = Polynomial(3) * var(s()) * var(s()) - Polynomial(2) * var(s()) * e1 + e2;
    RatFun want = RatFun(num) * inv(t(1), O) * inv(t(2), O) * inv(t(3), O) * inv(s(), t(1)) * inv(s(), t(2)) *
                  inv(s(), t(3));
    CHECK(equals(coefficient(e, {2, 1, 0}), want));

    // The symmetrized form it came from, evaluated straight from the definition.
    const std::vector<int> k{3, 1};
    oracle::Fn term = [](const Point &q) -> Rational {
        return oracle::inv(q, t(1), O) * oracle::inv(q, t(2), O) * oracle::inv(q, t(3), O) *
               oracle::inv(q, s(), t(3));
    };
    for (long seed = 0; seed < 3; ++seed) {
        Point p = oracle::spread_point(k, seed);
        CHECK(want.eval(p) == oracle::sym(k, term, p) / 2);
    }
}

TEST_CASE("sl2 coefficients are 1/(t_1 ... t_n)")
{
    RootSystemData a1 = build_root_system({Family::A, 1});
    for (int n = 0; n <= 4; ++n) {
        RatFun want = 1;
        for (int j = 1; j <= n; ++j)
            want *= inv(t(j), O);
        CHECK(equals(coefficient(omega_pbw(a1, Weight({n})), {n}), want));
        CHECK(equals(coefficient(project_pbw(a1, Weight({n})), {n}), want));
    }
    for (int n = 1; n <= 4; ++n)
        CHECK(verify_matsuo(n).passed);
}

TEST_CASE("PBW projection of weight (1,1) in A2")
{
    RootSystemData a2 = build_root_system({Family::A, 2});
    PBWExpansion projected = project_pbw(a2, Weight({1, 1}));
    CHECK(equals(coefficient(projected, {1, 0, 1}), inv(t(1), O) * inv(s(), O)));
    CHECK(equals(coefficient(projected, {0, 1, 0}), inv(t(1), O) * inv(s(), t(1))));
    PBWExpansion product = omega_pbw(a2, Weight({1, 1}));
    CHECK(equals(coefficient(product, {1, 0, 1}), coefficient(projected, {1, 0, 1})));
    CHECK(equals(coefficient(product, {0, 1, 0}), coefficient(projected, {0, 1, 0})));
    CHECK(coefficient(omega_pbw(a2, Weight({0, 0})), {0, 0, 0}) == RatFun(1));
}

TEST_CASE("PBW equivalence on small weights")
{
    for (const LieType &type : {LieType{Family::A, 2}, LieType{Family::B, 2}, LieType{Family::C, 2}}) {
        RootSystemData data = build_root_system(type);
        for (const Weight &k : weights_up_to(2, 3)) {
            CAPTURE(type.str());
            CAPTURE(k.str());
            CHECK(verify_pbw_equivalence(data, k).passed);
        }
    }
    CHECK(verify_pbw_equivalence(build_root_system({Family::B, 2}), Weight({1, 2})).passed);
    CHECK(verify_pbw_equivalence(build_root_system({Family::D, 3}), Weight({1, 1, 1})).passed);
}

TEST_CASE("anchored PBW forms project like the unanchored ones")
{
    RootSystemData b2 = build_root_system({Family::B, 2});
    const Var z = Var::z(1);
    for (const Weight &k : {Weight({1, 2}), Weight({2, 2})}) {
        PBWExpansion product = omega_pbw(b2, k, z);
        PBWExpansion projected = project_pbw(b2, k, z);
        for (const auto &p : pbw_monomials(b2, k))
            CHECK(equals(coefficient(product, p), coefficient(projected, p)));
    }
}

TEST_CASE("reversed root order breaks the PBW identity")
{
    RootSystemData a2 = build_root_system({Family::A, 2});
    RootSystemData reversed = reorder_roots(a2, {2, 1, 0});
    bool any_failed = false;
    for (const Weight &k : weights_up_to(2, 3))
        any_failed = any_failed || !verify_pbw_equivalence(reversed, k).passed;
    CHECK(any_failed);
}

TEST_CASE("atoms")
{
    for (const LieType &type : {LieType{Family::A, 2}, LieType{Family::B, 2}, LieType{Family::C, 2},
                                LieType{Family::D, 3}}) {
        CAPTURE(type.str());
        RootSystemData data = build_root_system(type);
        CHECK(verify_atoms(data).passed);
        for (std::size_t l = 0; l < data.size(); ++l)
            CHECK(equals(projected_atom(data, l), eta_beta(data, l)));
    }
}

TEST_CASE("pole support")
{
    RootSystemData a2 = build_root_system({Family::A, 2});
    CHECK(pole_support(eta_beta(a2, 1)) ==
          std::set<LinearForm>{LinearForm::parse("t:1:1"), LinearForm::parse("t:2:1-t:1:1")});
    CHECK(pole_support(RatFun(5)).empty());
    RootSystemData b3 = build_root_system({Family::B, 3});
    CHECK(verify_pole_support(b3, Weight({1, 1, 2})).passed);
    CHECK(verify_pole_support(build_root_system({Family::A, 3}), Weight({1, 1, 1})).passed);
}

TEST_CASE("representation-valued form for sl2 and two points")
{
    RootSystemData a1 = build_root_system({Family::A, 1});
    const Var z1 = Var::z(1), z2 = Var::z(2);
    RepForm form = omega_rep(a1, {z1, z2}, Weight({2}));
    REQUIRE(form.coeffs.size() == 3);
    const Weight k({2});
    CHECK(equals(form.coeffs.at({{2}, {0}}), symmetrize(inv(t(1), z1) * inv(t(2), t(1)), k, false)));
    CHECK(equals(form.coeffs.at({{1}, {1}}), symmetrize(inv(t(1), z1) * inv(t(2), z2), k, false)));
    CHECK(equals(form.coeffs.at({{0}, {2}}), symmetrize(inv(t(1), z2) * inv(t(2), t(1)), k, false)));

    // One point at the origin is the PBW expansion.
    RootSystemData b2 = build_root_system({Family::B, 2});
    RepForm single = omega_rep(b2, {O}, Weight({1, 2}));
    PBWExpansion e = omega_pbw(b2, Weight({1, 2}));
    for (const auto &[p, f] : e.coeffs)
        CHECK(equals(single.coeffs.at({p}), f));
    RepForm trivial = omega_rep(a1, {z1, z2}, Weight({0}));
    REQUIRE(trivial.coeffs.size() == 1);
    CHECK(trivial.coeffs.begin()->second == RatFun(1));
}

TEST_CASE("anchored forms at z = 0")
{
    const Var z = Var::z(1);
    for (const Weight &k : weights_up_to(2, 3)) {
        CanonicalForm anchored = omega_free(k, z), plain = omega_free(k);
        for (const auto &[J, f] : plain.coeffs)
            CHECK(equals(coefficient(anchored, J).substitute(z, O), f));
    }
}

TEST_CASE("weights_up_to")
{
    CHECK(weights_up_to(2, 2) ==
          std::vector<Weight>{Weight({0, 1}), Weight({1, 0}), Weight({0, 2}), Weight({1, 1}), Weight({2, 0})});
    CHECK(weights_up_to(3, 4).size() == 34);
}
