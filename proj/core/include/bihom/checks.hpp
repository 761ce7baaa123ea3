#pragma once

#include <bihom/algebra.hpp>
#include <bihom/linalg.hpp>

namespace bihom {

/// Composite twist maps shared by the identity evaluators. Computing them once per
/// check keeps the per-tuple work down to sparse tensor contractions.
struct CheckContext {
    const BiHomPoissonAlgebra* a;
    RatMatrix ab;   // alpha beta
    RatMatrix a2;   // alpha^2
    RatMatrix b2;   // beta^2
    RatMatrix a2b;  // alpha^2 beta
    RatMatrix ab2;  // alpha beta^2

    explicit CheckContext(const BiHomPoissonAlgebra& alg);
};

/// Extra maps for the polarized-flexibility identity; requires invertible twists.
struct PolarizedContext : CheckContext {
    RatMatrix ainv_b;  // alpha^{-1} beta
    RatMatrix a_binv;  // alpha beta^{-1}

    explicit PolarizedContext(const BiHomPoissonAlgebra& alg); // throws SingularMatrix
};

// -- pointwise evaluators ------------------------------------------------------
//
// Every identity below is multilinear in its arguments, so vanishing on all basis
// tuples is equivalent to vanishing identically; the checkers run the same
// evaluators over basis tuples, and the test suite replays them on random vectors.

/// mu(mu(x,y),beta(z)) - mu(alpha(x),mu(y,z))
RatVec associator(const BiHomPoissonAlgebra& a, const RatVec& x, const RatVec& y, const RatVec& z);

/// as(b^2 x, ab y, a^2 z) + as(b^2 y, ab z, a^2 x) + as(b^2 z, ab x, a^2 y)
RatVec cyclic_associator_sum(const BiHomPoissonAlgebra& a, const RatVec& x, const RatVec& y,
                             const RatVec& z);

RatVec res_mult_alpha_product(const CheckContext& c, const RatVec& x, const RatVec& y);
RatVec res_mult_beta_product(const CheckContext& c, const RatVec& x, const RatVec& y);
RatVec res_mult_alpha_bracket(const CheckContext& c, const RatVec& x, const RatVec& y);
RatVec res_mult_beta_bracket(const CheckContext& c, const RatVec& x, const RatVec& y);
RatVec res_commutativity(const CheckContext& c, const RatVec& x, const RatVec& y);
RatVec res_skew_symmetry(const CheckContext& c, const RatVec& x, const RatVec& y);
RatVec res_associativity(const CheckContext& c, const RatVec& x, const RatVec& y, const RatVec& z);
RatVec res_jacobi(const CheckContext& c, const RatVec& x, const RatVec& y, const RatVec& z);
RatVec res_leibniz(const CheckContext& c, const RatVec& x, const RatVec& y, const RatVec& z);

/// Linearized flexibility: as(b^2 x, ab y, a^2 z) + as(b^2 z, ab y, a^2 x).
/// The quadratic two-variable identity is equivalent to this trilinear form, which
/// is what makes basis-exhaustive verification valid.
RatVec res_flexibility(const CheckContext& c, const RatVec& x, const RatVec& y, const RatVec& z);

RatVec res_admissibility(const CheckContext& c, const RatVec& x, const RatVec& y, const RatVec& z);
RatVec res_cyclic_associator(const CheckContext& c, const RatVec& x, const RatVec& y,
                             const RatVec& z);
RatVec res_polarized_flexibility(const PolarizedContext& c, const RatVec& x, const RatVec& y,
                                 const RatVec& z);

// -- basis-exhaustive checkers -------------------------------------------------

CheckReport check_multiplicativity(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});
CheckReport check_bihom_commutative(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});
CheckReport check_bihom_associative(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});
CheckReport check_skew_symmetry(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});
CheckReport check_bihom_jacobi(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});
CheckReport check_bihom_leibniz(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});

/// Aggregate: alpha beta = beta alpha, multiplicativity (4 equations), BiHom-
/// commutativity (skippable), BiHom-associativity, skew-symmetry, BiHom-Jacobi and
/// BiHom-Leibniz. Violations appear in that order, so violations.front() names the
/// first failing identity.
CheckReport check_bihom_poisson(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});

CheckReport check_flexible(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});

/// Forms the half-difference bracket and half-sum product from the algebra product
/// and verifies the bracket/diamond Leibniz-type identity; equivalent to
/// check_flexible on regular algebras. Throws SingularMatrix.
CheckReport check_polarized_flexibility(const BiHomPoissonAlgebra& a,
                                        const CheckOptions& opt = {});

CheckReport check_admissible(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});

/// S_A = 0 on all basis triples (holds for every admissible algebra).
CheckReport check_cyclic_associator(const BiHomPoissonAlgebra& a, const CheckOptions& opt = {});

// -- morphisms and regularity ----------------------------------------------------

/// f intertwines both operations: f{.,.}_A = {.,.}_B f(x)f and f mu_A = mu_B f(x)f.
bool is_weak_morphism(const RatMatrix& f, const BiHomPoissonAlgebra& a,
                      const BiHomPoissonAlgebra& b);

/// Weak morphism that also satisfies f alpha_A = alpha_B f and f beta_A = beta_B f.
bool is_morphism(const RatMatrix& f, const BiHomPoissonAlgebra& a, const BiHomPoissonAlgebra& b);

/// alpha and beta are algebra automorphisms.
bool check_regular(const BiHomPoissonAlgebra& a);

/// alpha^2 = beta^2 = id.
bool check_involutive(const BiHomPoissonAlgebra& a);

} // namespace bihom
