#include <bihom/checks.hpp>
#include <bihom/constructions.hpp>
#include <bihom/errors.hpp>
#include <bihom/modules.hpp>

#include <doctest.h>

#include "fixtures.hpp"

using namespace bihom;

namespace {

LeftModuleRep zero_left_module(const BiHomPoissonAlgebra& a, std::size_t vd) {
    LeftModuleRep m;
    m.alg = a;
    m.vdim = vd;
    m.phi = RatMatrix::identity(vd);
    m.psi = RatMatrix::identity(vd);
    m.lambda_t = RatTensor3(a.dim, vd, vd);
    m.rho_t = RatTensor3(a.dim, vd, vd);
    return m;
}

} // namespace

TEST_CASE("zero structure maps form a module") {
    CHECK(check_left_module(zero_left_module(fixtures::example_e1_23(), 2)).passed);
}

TEST_CASE("regular modules") {
    CHECK(check_left_module(regular_module(fixtures::example_e1_23())).passed);
    CHECK(check_left_module(regular_module(fixtures::sl2_trunc(1))).passed);

    BiHomPoissonAlgebra sing = fixtures::example_e1_23();
    sing.alpha = RatMatrix(2, 2);
    CHECK_THROWS_AS(regular_module(sing), NotRegular);
}

TEST_CASE("swapping rho for lambda breaks the Lie part on a nonzero bracket") {
    LeftModuleRep m = regular_module(fixtures::sl2_trunc(1));
    m.rho_t = m.lambda_t;
    const CheckReport rep = check_left_module(m);
    CHECK(!rep.passed);
    bool lie_failed = false;
    for (const auto& v : rep.violations)
        if (v.id == IdentityId::LeftModuleLie) lie_failed = true;
    CHECK(lie_failed);
}

TEST_CASE("module via morphism") {
    const auto a = fixtures::example_e1_23();

    SUBCASE("identity map gives the regular module") {
        const LeftModuleRep m = left_module_via_morphism(RatMatrix::identity(2), a, a);
        const LeftModuleRep reg = regular_module(a);
        CHECK(m.lambda_t == reg.lambda_t);
        CHECK(m.rho_t == reg.rho_t);
        CHECK(m.phi == reg.phi);
    }

    SUBCASE("inclusion into a direct sum") {
        const auto s = direct_sum(a, a);
        RatMatrix incl(4, 2);
        incl(0, 0) = 1;
        incl(1, 1) = 1;
        const LeftModuleRep m = left_module_via_morphism(incl, a, s);
        CHECK(m.vdim == 4);
        CHECK(check_left_module(m).passed);
    }

    SUBCASE("the zero map acts trivially") {
        const LeftModuleRep m = left_module_via_morphism(RatMatrix(2, 2), a, a);
        CHECK(m.lambda_t.is_zero());
        CHECK(m.rho_t.is_zero());
        CHECK(check_left_module(m).passed);
    }

    SUBCASE("non-morphisms are rejected") {
        RatMatrix notMorph(2, 2);
        notMorph(0, 0) = 1;
        notMorph(1, 1) = 5;
        CHECK_THROWS_AS(left_module_via_morphism(notMorph, a, a), NotAMorphism);
    }
}

TEST_CASE("shift modules") {
    const auto a = fixtures::example_e1_23();
    const LeftModuleRep reg = regular_module(a);

    SUBCASE("(0,0) is the identity") {
        const LeftModuleRep s = shift_module(reg, 0, 0);
        CHECK(s.lambda_t == reg.lambda_t);
        CHECK(s.rho_t == reg.rho_t);
    }

    SUBCASE("all shifts up to 2 remain modules") {
        for (unsigned n = 0; n <= 2; ++n)
            for (unsigned m = 0; m <= 2; ++m)
                CHECK(check_left_module(shift_module(reg, n, m)).passed);
    }

    SUBCASE("shift composition adds exponents") {
        const LeftModuleRep s1 = shift_module(shift_module(reg, 1, 0), 1, 2);
        const LeftModuleRep s2 = shift_module(reg, 2, 2);
        CHECK(s1.lambda_t == s2.lambda_t);
        CHECK(s1.rho_t == s2.rho_t);
    }

    SUBCASE("alpha = id makes pure-alpha shifts trivial") {
        const LeftModuleRep reg1 = regular_module(fixtures::sl2_trunc(1));
        const LeftModuleRep s = shift_module(reg1, 2, 0);
        CHECK(s.lambda_t == reg1.lambda_t);
        CHECK(s.rho_t == reg1.rho_t);
    }
}

TEST_CASE("left module axiom (Li1) is the Lie clause") {
    // the rho of every passing left module satisfies the left BiHom-Lie module law
    const auto a = fixtures::sl2_trunc(1);
    const LeftModuleRep m = regular_module(a);
    REQUIRE(check_left_module(m).passed);
    const RatMatrix ab = a.alpha * a.beta;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t t = 0; t < m.vdim; ++t) {
                const RatVec lhs = m.rho_t.eval(a.bracket.eval(a.beta.col(i), unit_vec(a.dim, j)),
                                                m.psi.col(t));
                RatVec rhs = m.rho_t.eval(ab.col(i), m.rho_t.fiber(j, t));
                rhs = vec_sub(rhs, m.rho_t.eval(a.beta.col(j),
                                                m.rho_t.eval(a.alpha.col(i), unit_vec(m.vdim, t))));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("twisted modules") {
    const auto p = fixtures::sl2_trunc(3);
    const auto pair = fixtures::sl2_diag_pair(3, Rat(2), Rat(5));

    LeftModuleRep m = regular_module(p); // phi = psi = id on the untwisted algebra
    m.phi = pair.alpha_prime;
    m.psi = pair.beta_prime;

    const LeftModuleRep t = twist_module(m, pair);
    CHECK(t.alg.alpha == pair.alpha_prime);
    CHECK(check_left_module(t).passed);

    SUBCASE("the shifted twist stays a module") {
        CHECK(check_left_module(shift_module(t, 1, 1)).passed);
    }

    SUBCASE("identity pair over an untwisted module is the module itself") {
        const LeftModuleRep reg = regular_module(fixtures::sl2_trunc(1));
        const TwistingPair idp{RatMatrix::identity(4), RatMatrix::identity(4)};
        const LeftModuleRep u = twist_module(reg, idp);
        CHECK(u.lambda_t == reg.lambda_t);
        CHECK(u.rho_t == reg.rho_t);
        CHECK(u.alg.product == reg.alg.product);
    }

    SUBCASE("violated compatibility hypotheses are reported") {
        LeftModuleRep bad = regular_module(p);
        bad.phi = pair.alpha_prime;
        bad.psi = pair.beta_prime;
        bad.phi(0, 1) = 7; // breaks phi lambda = lambda (alpha x phi)
        CHECK_THROWS_AS(twist_module(bad, pair), HypothesisViolated);
    }

    SUBCASE("twisted algebras are rejected as base") {
        LeftModuleRep overTwisted = m;
        overTwisted.alg = yau_twist(p, pair);
        CHECK_THROWS_AS(twist_module(overTwisted, pair), HypothesisViolated);
    }
}

TEST_CASE("right modules") {
    const auto a = fixtures::example_e1_23();

    SUBCASE("via the identity morphism") {
        const RightModuleRep m = right_module_via_morphism(RatMatrix::identity(2), a, a);
        CHECK(check_right_module(m).passed);
    }

    SUBCASE("zero maps pass") {
        RightModuleRep m;
        m.alg = a;
        m.vdim = 2;
        m.phi = RatMatrix::identity(2);
        m.psi = RatMatrix::identity(2);
        m.wedge_t = RatTensor3(2, 2, 2);
        m.delta_t = RatTensor3(2, 2, 2);
        CHECK(check_right_module(m).passed);
    }

    SUBCASE("delta := wedge breaks the right module laws") {
        RightModuleRep m = right_module_via_morphism(RatMatrix::identity(2), a, a);
        m.delta_t = m.wedge_t;
        CHECK(!check_right_module(m).passed);
    }

    SUBCASE("right shifts remain modules") {
        const RightModuleRep m = right_module_via_morphism(RatMatrix::identity(2), a, a);
        for (unsigned n = 0; n <= 2; ++n)
            for (unsigned mm = 0; mm <= 2; ++mm)
                CHECK(check_right_module(shift_module(m, n, mm)).passed);
    }
}

TEST_CASE("semidirect products") {
    const auto a = fixtures::example_e1_23();
    const LeftModuleRep reg = regular_module(a);

    SUBCASE("with a zero-dimensional module the algebra is unchanged") {
        const LeftModuleRep none = zero_left_module(a, 0);
        const auto s = semidirect_product(a, none);
        CHECK(s.dim == a.dim);
        CHECK(s.product == a.product);
        CHECK(s.bracket == a.bracket);
    }

    SUBCASE("example with its regular module") {
        const auto s = semidirect_product(a, reg);
        CHECK(s.dim == 4);
        CHECK(check_bihom_poisson(s).passed);
    }

    SUBCASE("truncated symmetric algebra with its regular module") {
        const auto b = fixtures::sl2_trunc(1);
        const auto s = semidirect_product(b, regular_module(b));
        CHECK(s.dim == 8);
        CHECK(check_bihom_poisson(s).passed);
    }

    SUBCASE("split null extension") {
        const auto s = semidirect_product(a, reg);
        const std::size_t n = a.dim, vd = reg.vdim;

        SubspaceBasis iv;
        iv.ambient_dim = s.dim;
        for (std::size_t t = 0; t < vd; ++t) iv.vectors.push_back(unit_vec(s.dim, n + t));
        CHECK(is_ideal(s, iv, IdealSide::TwoSided));

        RatMatrix pi(n, s.dim), sigma(s.dim, n);
        for (std::size_t i = 0; i < n; ++i) {
            pi(i, i) = 1;
            sigma(i, i) = 1;
        }
        CHECK(is_morphism(pi, s, a));
        CHECK(is_morphism(sigma, a, s));
        CHECK(pi * sigma == RatMatrix::identity(n));

        const auto q = quotient(s, iv);
        CHECK(q.dim == a.dim);
        CHECK(q.product == a.product);
        CHECK(q.bracket == a.bracket);
        CHECK(q.alpha == a.alpha);
        CHECK(q.beta == a.beta);
    }

    SUBCASE("module failures are rejected") {
        LeftModuleRep broken = reg;
        broken.lambda_t(0, 0, 0) += 1;
        CHECK_THROWS_AS(semidirect_product(a, broken), ModuleCheckFailed);

        LeftModuleRep singular = reg;
        singular.phi = RatMatrix(2, 2);
        CHECK_THROWS_AS(semidirect_product(a, singular), SingularMatrix);
    }
}
