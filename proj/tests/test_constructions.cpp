#include <bihom/checks.hpp>
#include <bihom/constructions.hpp>
#include <bihom/errors.hpp>

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <random>

using namespace bihom;

TEST_CASE("yau_twist with the identity pair changes nothing") {
    const auto a = fixtures::example_e1_23();
    const TwistingPair tp{RatMatrix::identity(2), RatMatrix::identity(2)};
    const auto t = yau_twist(a, tp);
    CHECK(t.product == a.product);
    CHECK(t.bracket == a.bracket);
    CHECK(t.alpha == a.alpha);
    CHECK(t.beta == a.beta);
}

TEST_CASE("yau_twist by powers realizes the (k,l) family") {
    const auto a = fixtures::example_e1_23();
    for (unsigned k = 0; k <= 2; ++k)
        for (unsigned l = 0; l <= 2; ++l) {
            const TwistingPair tp{a.alpha.pow(k), a.beta.pow(l)};
            const auto t = yau_twist(a, tp);
            CHECK(t.alpha == a.alpha.pow(k + 1));
            CHECK(t.beta == a.beta.pow(l + 1));
            CHECK(check_bihom_poisson(t).passed);
        }
}

TEST_CASE("yau_twist of the truncated symmetric algebra by diagonal maps") {
    const auto a = fixtures::sl2_trunc(3);
    const auto tp = fixtures::sl2_diag_pair(3, Rat(2), Rat(5));
    const auto t = yau_twist(a, tp);
    CHECK(t.dim == 20);
    CHECK(check_bihom_poisson(t).passed);
}

TEST_CASE("yau_twist validates its pair") {
    const auto a = fixtures::example_e1_23();
    RatMatrix bad(2, 2);
    bad(0, 1) = 1; // does not commute with alpha
    CHECK_THROWS_AS(yau_twist(a, TwistingPair{bad, RatMatrix::identity(2)}), NonCommutingTwists);

    const auto s = fixtures::sl2_trunc(1);
    RatMatrix notMorph = RatMatrix::identity(4);
    notMorph(0, 0) = 2; // scales the unit: f(mu(1,1)) != mu(f 1, f 1)
    CHECK_THROWS_AS(yau_twist(s, TwistingPair{notMorph, RatMatrix::identity(4)}), NotAMorphism);
}

TEST_CASE("twist functoriality via the inclusion into a direct sum") {
    const auto a = fixtures::example_e1_23();
    const auto b = direct_sum(a, a);
    RatMatrix incl(b.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) incl(i, i) = 1;
    REQUIRE(is_morphism(incl, a, b));

    const TwistingPair tpa{a.alpha, a.beta};
    const auto block = [&](const RatMatrix& m) {
        RatMatrix r(b.dim, b.dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                r(i, j) = m(i, j);
                r(a.dim + i, a.dim + j) = m(i, j);
            }
        return r;
    };
    const TwistingPair tpb{block(a.alpha), block(a.beta)};

    const auto ta = yau_twist(a, tpa);
    const auto tb = yau_twist(b, tpb);
    CHECK(is_morphism(incl, ta, tb));
}

TEST_CASE("flexible algebras stay flexible after twisting") {
    const auto a = fixtures::sl2_trunc(2);
    REQUIRE(check_flexible(a).passed);
    const auto t = yau_twist(a, fixtures::sl2_diag_pair(2, Rat(3), Rat(7)));
    CHECK(check_flexible(t).passed);
}

TEST_CASE("polarize_minus") {
    SUBCASE("the example family has identically zero polarized bracket") {
        const auto a = fixtures::example_e1_23();
        CHECK(a.bracket.is_zero()); // build_example_e1 already polarizes
        const auto again = polarize_minus(a);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(vec_is_zero(again.bracket.fiber(i, j)));
    }

    SUBCASE("upper-triangular matrices polarize to the commutator") {
        const auto ut = fixtures::upper_triangular_algebra();
        const auto p = polarize_minus(ut);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const RatVec comm =
                    vec_sub(ut.product.fiber(i, j), ut.product.fiber(j, i));
                CHECK(p.bracket.fiber(i, j) == comm);
            }
        CheckOptions opt;
        opt.skip_commutativity = true;
        CHECK(check_bihom_poisson(p, opt).passed);
        CHECK(!check_bihom_commutative(p).passed);
    }

    SUBCASE("commutative associative untwisted input gives the zero bracket") {
        BiHomPoissonAlgebra diag = BiHomPoissonAlgebra::make(2);
        diag.product(0, 0, 0) = 1;
        diag.product(1, 1, 1) = 1;
        CHECK(polarize_minus(diag).bracket.is_zero());
    }

    SUBCASE("random parameters: BiHom-commutative regular inputs give zero bracket") {
        const std::vector<std::pair<Rat, Rat>> params = {
            {Rat(3, 2), Rat(-5, 7)}, {Rat(-1), Rat(4)}, {Rat(7, 3), Rat(0)}};
        for (const auto& [a, b] : params) {
            const auto alg = build_example_e1(a, b);
            CHECK(alg.bracket.is_zero());
            CHECK(check_bihom_poisson(alg).passed);
        }
    }

    SUBCASE("errors") {
        BiHomPoissonAlgebra sing = fixtures::upper_triangular_algebra();
        sing.alpha(0, 0) = 0; // kills invertibility
        CHECK_THROWS_AS(polarize_minus(sing), SingularMatrix);

        BiHomPoissonAlgebra nonassoc = BiHomPoissonAlgebra::make(2);
        nonassoc.product(0, 0, 1) = 1;
        nonassoc.product(1, 0, 0) = 1;
        CHECK_THROWS_AS(polarize_minus(nonassoc), NotAssociative);
    }
}

TEST_CASE("direct_sum") {
    const auto a = fixtures::example_e1_23();
    SUBCASE("summing with the zero-dimensional algebra is the identity") {
        const auto z = BiHomPoissonAlgebra::make(0);
        const auto s = direct_sum(a, z);
        CHECK(s.dim == a.dim);
        CHECK(s.product == a.product);
        CHECK(s.bracket == a.bracket);
        CHECK(s.alpha == a.alpha);
    }
    SUBCASE("example plus example") {
        const auto s = direct_sum(a, a);
        CHECK(s.dim == 4);
        CHECK(check_bihom_poisson(s).passed);
    }
    SUBCASE("example plus truncated symmetric algebra") {
        const auto s = direct_sum(a, fixtures::sl2_trunc(1));
        CHECK(s.dim == 6);
        CHECK(check_bihom_poisson(s).passed);
        // cross-block products and brackets vanish
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 2; j < 6; ++j) {
                CHECK(vec_is_zero(s.product.fiber(i, j)));
                CHECK(vec_is_zero(s.product.fiber(j, i)));
                CHECK(vec_is_zero(s.bracket.fiber(i, j)));
                CHECK(vec_is_zero(s.bracket.fiber(j, i)));
            }
    }
}

TEST_CASE("subalgebras and ideals") {
    const auto a = fixtures::example_e1_23();
    SubspaceBasis whole;
    whole.ambient_dim = 2;
    whole.vectors = {unit_vec(2, 0), unit_vec(2, 1)};
    CHECK(is_ideal(a, whole, IdealSide::TwoSided));

    SubspaceBasis e1span;
    e1span.ambient_dim = 2;
    e1span.vectors = {unit_vec(2, 0)};
    // mu(e2,e1) = -3/2 e1 + 2 e2 leaves the span
    CHECK(!is_ideal(a, e1span, IdealSide::Left));
    CHECK_THROWS_AS(quotient(a, e1span), NotAnIdeal);

    const auto s3 = fixtures::sl2_trunc(3);
    SubspaceBasis deg3;
    deg3.ambient_dim = 20;
    for (std::size_t i = 10; i < 20; ++i) deg3.vectors.push_back(unit_vec(20, i));
    CHECK(is_ideal(s3, deg3, IdealSide::TwoSided));
    CHECK(is_subalgebra(s3, deg3));
}

TEST_CASE("quotients") {
    const auto a = fixtures::example_e1_23();
    SUBCASE("by the whole space") {
        SubspaceBasis whole;
        whole.ambient_dim = 2;
        whole.vectors = {unit_vec(2, 0), unit_vec(2, 1)};
        CHECK(quotient(a, whole).dim == 0);
    }
    SUBCASE("by zero") {
        SubspaceBasis none;
        none.ambient_dim = 2;
        const auto q = quotient(a, none);
        CHECK(q.dim == 2);
        CHECK(q.product == a.product);
        CHECK(q.bracket == a.bracket);
        CHECK(q.alpha == a.alpha);
        CHECK(q.beta == a.beta);
    }
    SUBCASE("degree truncation is the quotient by the top-degree span") {
        const auto s3 = fixtures::sl2_trunc(3);
        SubspaceBasis deg3;
        deg3.ambient_dim = 20;
        for (std::size_t i = 10; i < 20; ++i) deg3.vectors.push_back(unit_vec(20, i));
        const auto q = quotient(s3, deg3);
        const auto s2 = fixtures::sl2_trunc(2);
        CHECK(q.dim == s2.dim);
        CHECK(q.product == s2.product);
        CHECK(q.bracket == s2.bracket);
        CHECK(q.basis_names == s2.basis_names);

        // the canonical projection is a morphism
        const RatMatrix pi = quotient_projection(s3, deg3);
        CHECK(is_morphism(pi, s3, q));
    }
}

TEST_CASE("centralizer") {
    CHECK(centralizer(fixtures::zero_algebra(3)).dim() == 3);
    CHECK(centralizer(fixtures::example_e1_23()).dim() == 0);
    CHECK(centralizer(fixtures::sl2_trunc(3)).dim() == 0); // unit action forces x = 0

    // cross-check against the independently assembled joint system
    const auto a = fixtures::example_e1_23();
    std::vector<RatVec> rows;
    for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t r = 0; r < a.dim; ++r) {
            RatVec rp(a.dim, Rat(0)), rb(a.dim, Rat(0));
            for (std::size_t i = 0; i < a.dim; ++i) {
                rp[i] = a.product(i, j, r);
                rb[i] = a.bracket(i, j, r);
            }
            rows.push_back(rp);
            rows.push_back(rb);
        }
    const auto kernel = oracle::kernel_basis(rows, a.dim);
    CHECK(centralizer(a).vectors == kernel);
}

TEST_CASE("nonrigidity witness") {
    const auto p = fixtures::sl2_trunc(3);

    SUBCASE("identity pair yields no witness") {
        const auto rep =
            nonrigidity_witness(p, TwistingPair{RatMatrix::identity(20), RatMatrix::identity(20)});
        CHECK(rep.associator_vanishes);
        CHECK(rep.jacobi_holds);
        CHECK(!rep.trivial);
        CHECK(!rep.witness_found);
    }

    SUBCASE("lambda=2, gamma=5 certifies non-rigidity") {
        const auto rep = nonrigidity_witness(p, fixtures::sl2_diag_pair(3, Rat(2), Rat(5)));
        CHECK(!rep.associator_vanishes);
        CHECK(rep.witness_found);
        CHECK(!rep.trivial);
    }

    SUBCASE("lambda=1, gamma=1 gives the vanishing associator") {
        const auto rep = nonrigidity_witness(p, fixtures::sl2_diag_pair(3, Rat(1), Rat(1)));
        CHECK(rep.associator_vanishes);
        CHECK(rep.jacobi_holds);
    }

    SUBCASE("twisted algebras are rejected") {
        const auto t = yau_twist(p, fixtures::sl2_diag_pair(3, Rat(2), Rat(5)));
        CHECK_THROWS_AS(
            nonrigidity_witness(t, TwistingPair{RatMatrix::identity(20), RatMatrix::identity(20)}),
            HypothesisViolated);
    }

    SUBCASE("non-endomorphisms are rejected") {
        const auto s1 = fixtures::sl2_trunc(1);
        RatMatrix notMorph = RatMatrix::identity(4);
        notMorph(0, 0) = 3;
        CHECK_THROWS_AS(nonrigidity_witness(s1, TwistingPair{notMorph, RatMatrix::identity(4)}),
                        TwistNotEndomorphism);
    }
}

TEST_CASE("build_example_e1") {
    SUBCASE("frozen structure constants at (2,3)") {
        const auto a = build_example_e1(Rat(2), Rat(3));
        CHECK(a.product.fiber(0, 1) == RatVec{Rat(3), Rat(-1)});
        CHECK(a.product.fiber(1, 0) == RatVec{Rat(-3, 2), Rat(2)});
        CHECK(a.product.fiber(1, 1) == RatVec{Rat(0), Rat(3, 2)});
        CHECK(check_bihom_poisson(a).passed);
    }
    SUBCASE("b = 0 degenerates to diagonal maps") {
        const auto a = build_example_e1(Rat(2), Rat(0));
        CHECK(a.alpha.col(1) == RatVec{Rat(0), Rat(2)});
        CHECK(a.beta.col(1) == RatVec{Rat(0), Rat(-1)});
        CHECK(check_bihom_poisson(a).passed);
    }
    SUBCASE("excluded parameters") {
        CHECK_THROWS_AS(build_example_e1(Rat(1), Rat(1)), ParameterOutOfDomain);
        CHECK_THROWS_AS(build_example_e1(Rat(0), Rat(5)), ParameterOutOfDomain);
    }
}

TEST_CASE("truncated symmetric Poisson algebra") {
    SUBCASE("degree 1 recovers the Lie bracket") {
        const auto s = fixtures::sl2_trunc(1);
        CHECK(s.dim == 4);
        const LieStructure l = sl2_structure();
        // generator indices in graded-lex order: 1, e, f, h
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const RatVec br = s.bracket.fiber(i + 1, j + 1);
                CHECK(br[0] == 0); // no constant term
                for (std::size_t k = 0; k < 3; ++k) CHECK(br[k + 1] == l.bracket(i, j, k));
            }
    }

    SUBCASE("brackets of commuting generators vanish") {
        LieStructure ab;
        ab.dim = 2;
        ab.basis_names = {"x", "y"};
        ab.bracket = RatTensor3(2, 2, 2);
        const auto s = build_truncated_sym_poisson(ab, 1);
        CHECK(s.bracket.is_zero());
        CHECK(check_bihom_poisson(s).passed);
    }

    SUBCASE("degree 3: {e, f h} = h^2 - 2 e f, cross-checked symbolically") {
        const auto s = fixtures::sl2_trunc(3);
        CHECK(s.dim == 20);
        const auto monos = sym_monomials(3, 3);
        const std::size_t ie = sym_monomial_index(3, 3, {1, 0, 0});
        const std::size_t ifh = sym_monomial_index(3, 3, {0, 1, 1});
        const RatVec br = s.bracket.fiber(ie, ifh);

        const oracle::Poly expected =
            oracle::fg_bracket(sl2_structure(), {1, 0, 0}, {0, 1, 1}, 3);
        RatVec expVec(20, Rat(0));
        for (const auto& [m, c] : expected) expVec[sym_monomial_index(3, 3, m)] = c;
        CHECK(br == expVec);

        // and the closed form: h^2 - 2 e f
        RatVec closed(20, Rat(0));
        closed[sym_monomial_index(3, 3, {0, 0, 2})] = 1;
        closed[sym_monomial_index(3, 3, {1, 1, 0})] = -2;
        CHECK(br == closed);
    }

    SUBCASE("every bracket fiber at degree 3 matches the symbolic oracle") {
        const auto s = fixtures::sl2_trunc(3);
        const auto monos = sym_monomials(3, 3);
        const LieStructure l = sl2_structure();
        for (std::size_t i = 0; i < s.dim; ++i)
            for (std::size_t j = 0; j < s.dim; ++j) {
                const oracle::Poly p = oracle::fg_bracket(l, monos[i], monos[j], 3);
                RatVec exp(20, Rat(0));
                for (const auto& [m, c] : p) exp[sym_monomial_index(3, 3, m)] = c;
                CHECK(s.bracket.fiber(i, j) == exp);
            }
    }

    SUBCASE("invalid Lie structures are rejected") {
        LieStructure notSkew;
        notSkew.dim = 2;
        notSkew.bracket = RatTensor3(2, 2, 2);
        notSkew.bracket(0, 1, 0) = 1; // [y,x] missing
        CHECK_THROWS_AS(build_truncated_sym_poisson(notSkew, 1), NotALieAlgebra);

        LieStructure noJacobi;
        noJacobi.dim = 3;
        noJacobi.bracket = RatTensor3(3, 3, 3);
        noJacobi.bracket(0, 1, 2) = 1;
        noJacobi.bracket(1, 0, 2) = -1;
        noJacobi.bracket(0, 2, 0) = 1;
        noJacobi.bracket(2, 0, 0) = -1;
        noJacobi.bracket(1, 2, 1) = 1;
        noJacobi.bracket(2, 1, 1) = -1;
        CHECK_THROWS_AS(build_truncated_sym_poisson(noJacobi, 2), NotALieAlgebra);

        CHECK_THROWS_AS(build_truncated_sym_poisson(sl2_structure(), 0), ParameterOutOfDomain);
    }

    SUBCASE("the monomial order is graded-lex with the given generator order") {
        const auto monos = sym_monomials(3, 2);
        const std::vector<std::vector<int>> expected = {
            {0, 0, 0},                                              // 1
            {1, 0, 0}, {0, 1, 0}, {0, 0, 1},                        // e, f, h
            {2, 0, 0}, {1, 1, 0}, {1, 0, 1},                        // e^2, ef, eh
            {0, 2, 0}, {0, 1, 1}, {0, 0, 2},                        // f^2, fh, h^2
        };
        CHECK(monos == expected);
        CHECK(sym_monomial_name({1, 0, 2}, {"e", "f", "h"}) == "e*h^2");
    }
}
