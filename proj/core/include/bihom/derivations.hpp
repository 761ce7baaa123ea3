#pragma once

#include <bihom/algebra.hpp>
#include <bihom/linalg.hpp>

#include <utility>
#include <vector>

namespace bihom {

/// The operator families of the theory, each cut out by exact linear constraints on
/// an endomorphism D (and, for the generalized/quasi variants, companions D', D'').
enum class OperatorSpaceKind {
    Derivation,            // D{x,y} = {Mx,Dy} + {Dx,My}, same for mu
    GeneralizedDerivation, // {Dx,My} + {Mx,D'y} = D''{x,y}, same (D',D'') for mu
    QuasiDerivation,       // {Dx,My} + {Mx,Dy} = D'{x,y}, one companion shared with mu
    Centroid,              // {Dx,My} = {Mx,Dy} = D{x,y}, same for mu
    QuasiCentroid,         // {Dx,My} = {Mx,Dy}, same for mu
    CentralDerivation,     // {Dx,My} = D{x,y} = 0, same for mu
    Commutant,             // w alpha = alpha w, w beta = beta w only
};

const char* operator_space_label(OperatorSpaceKind kind);

/// Solution space of one (kind, k, l) system, with M = alpha^k beta^l. The basis
/// holds the D components as dim^2 coordinate vectors in reduced echelon form; for
/// the generalized/quasi kinds each basis element carries the companion pair that
/// witnesses its membership, plus the leftover (D = 0) companion solutions.
struct OperatorSpace {
    OperatorSpaceKind kind = OperatorSpaceKind::Commutant;
    unsigned k = 0, l = 0;
    std::size_t alg_dim = 0;

    SubspaceBasis basis; // ambient dim^2, rows in RREF

    std::vector<RatMatrix> companion_prime;  // aligned with basis.vectors
    std::vector<RatMatrix> companion_second; // aligned with basis.vectors
    std::size_t companion_only_dim = 0;      // joint solutions with zero D part

    std::size_t dim() const { return basis.dim(); }
    RatMatrix matrix_at(std::size_t idx) const;
};

RatMatrix matrix_from_flat(const RatVec& v, std::size_t n);
RatVec flat_from_matrix(const RatMatrix& m);

/// W = { w : w alpha = alpha w, w beta = beta w }.
OperatorSpace solve_commutant(const BiHomPoissonAlgebra& a);

/// Assembles the defining linear system of the requested family (both the bracket
/// and the product clauses, plus the alpha/beta commutation rows) and returns its
/// reduced-echelon solution basis. Generalized/quasi derivations are solved jointly
/// in (D, D', D'') and reported as the projection onto D with companions retained.
OperatorSpace solve_space(const BiHomPoissonAlgebra& a, OperatorSpaceKind kind, unsigned k,
                          unsigned l);

/// (alpha o w, beta o w); both stay in the commutant when w is in it.
std::pair<RatMatrix, RatMatrix> sigma_maps(const BiHomPoissonAlgebra& a, const RatMatrix& w);

/// Membership tests by direct residual evaluation on all basis pairs. These are the
/// verification route for the closure and inclusion properties; they do not reuse
/// the solver.
bool in_commutant(const BiHomPoissonAlgebra& a, const RatMatrix& d);
bool satisfies_derivation(const BiHomPoissonAlgebra& a, const RatMatrix& d, unsigned k, unsigned l);
bool satisfies_centroid(const BiHomPoissonAlgebra& a, const RatMatrix& d, unsigned k, unsigned l);
bool satisfies_quasicentroid(const BiHomPoissonAlgebra& a, const RatMatrix& d, unsigned k,
                             unsigned l);
bool satisfies_central_derivation(const BiHomPoissonAlgebra& a, const RatMatrix& d, unsigned k,
                                  unsigned l);
bool satisfies_quasiderivation_with(const BiHomPoissonAlgebra& a, const RatMatrix& d,
                                    const RatMatrix& companion, unsigned k, unsigned l);
bool satisfies_generalized_derivation_with(const BiHomPoissonAlgebra& a, const RatMatrix& d,
                                           const RatMatrix& d_prime, const RatMatrix& d_second,
                                           unsigned k, unsigned l);

/// True iff vec(D) lies in the span of the space's basis.
bool space_contains(const OperatorSpace& space, const RatMatrix& d);

} // namespace bihom
