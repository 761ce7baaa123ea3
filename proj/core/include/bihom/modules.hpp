#pragma once

#include <bihom/algebra.hpp>
#include <bihom/constructions.hpp>

namespace bihom {

/// Left module over a BiHom-Poisson algebra: (V, phi, psi) with structure maps
/// lambda, rho : A (x) V -> V stored as tensors with axes (algebra, module, module),
/// so lambda(i,j,k) is the k-th coordinate of lambda(e_i, v_j).
struct LeftModuleRep {
    BiHomPoissonAlgebra alg;
    std::size_t vdim = 0;
    RatMatrix phi, psi;
    RatTensor3 lambda_t; // product-type action
    RatTensor3 rho_t;    // bracket-type action

    void validate_shape() const;
};

/// Right module: wedge, delta : V (x) A -> V with axes (module, algebra, module).
struct RightModuleRep {
    BiHomPoissonAlgebra alg;
    std::size_t vdim = 0;
    RatMatrix phi, psi;
    RatTensor3 wedge_t;
    RatTensor3 delta_t;

    void validate_shape() const;
};

/// Verifies the four left-module identities on all basis triples together with
/// phi psi = psi phi and the BiHom-module morphism conditions on lambda and rho.
CheckReport check_left_module(const LeftModuleRep& m, const CheckOptions& opt = {});

CheckReport check_right_module(const RightModuleRep& m, const CheckOptions& opt = {});

/// (A, alpha, beta) acting on itself: lambda = mu, rho = {.,.}. Throws NotRegular.
LeftModuleRep regular_module(const BiHomPoissonAlgebra& a);

/// B as a left A-module through a morphism f : A -> B with invertible twists:
/// lambda(a,b) = mu_B(f(a), b), rho(a,b) = {f(a), b}_B.
/// Throws NotAMorphism, SingularMatrix.
LeftModuleRep left_module_via_morphism(const RatMatrix& f, const BiHomPoissonAlgebra& a,
                                       const BiHomPoissonAlgebra& b);

/// Right-sided version: wedge(b,a) = mu_B(b, f(a)), delta(b,a) = {b, f(a)}_B.
RightModuleRep right_module_via_morphism(const RatMatrix& f, const BiHomPoissonAlgebra& a,
                                         const BiHomPoissonAlgebra& b);

/// lambda^(n,m) = lambda (alpha^n beta^m (x) id), same for rho.
LeftModuleRep shift_module(const LeftModuleRep& m, unsigned n, unsigned mm);

/// wedge^(n,m) = wedge (id (x) alpha^n beta^m), same for delta.
RightModuleRep shift_module(const RightModuleRep& m, unsigned n, unsigned mm);

/// Twists a module over an untwisted algebra along a commuting endomorphism pair:
/// the result is the module (V, phi, psi) over yau_twist(m.alg, ab) with structure
/// maps lambda (alpha beta (x) psi) and rho (alpha beta (x) psi). The hypotheses
/// phi lambda = lambda (alpha (x) phi), ..., psi rho = rho (beta (x) psi) are
/// validated. Throws HypothesisViolated naming the failed commutation.
LeftModuleRep twist_module(const LeftModuleRep& m, const TwistingPair& ab);

/// Right version with wedge (phi (x) alpha beta) and delta (phi (x) alpha beta).
RightModuleRep twist_module(const RightModuleRep& m, const TwistingPair& ab);

/// A (+) V with
///   (a+u)*(b+v)  = mu(a,b) + lambda(a,v) + lambda(a^{-1}b(b), psi^{-1}phi(u)),
///   [a+u, b+v]   = {a,b} + rho(a,v) - rho(a^{-1}b(b), psi^{-1}phi(u)),
/// twists alpha (+) phi and beta (+) psi.
/// Throws NotRegular, SingularMatrix, ModuleCheckFailed.
BiHomPoissonAlgebra semidirect_product(const BiHomPoissonAlgebra& a, const LeftModuleRep& m);

} // namespace bihom
