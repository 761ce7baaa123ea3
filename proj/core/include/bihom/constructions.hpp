#pragma once

#include <bihom/algebra.hpp>
#include <bihom/checks.hpp>
#include <bihom/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bihom {

/// A pair of algebra endomorphisms used to twist both operations. Valid pairs
/// commute with each other and with the target algebra's twist maps, and each is a
/// morphism of both the product and the bracket; yau_twist validates all of that.
struct TwistingPair {
    RatMatrix alpha_prime;
    RatMatrix beta_prime;
};

/// Structure constants of a Lie algebra: bracket(i,j,k) with [e_i,e_j] = sum c e_k.
struct LieStructure {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    RatTensor3 bracket;
};

/// (A, {.,.}(a' (x) b'), mu(a' (x) b'), alpha a', beta b').
/// Throws NonCommutingTwists / NotAMorphism with the offending pair or map named.
BiHomPoissonAlgebra yau_twist(const BiHomPoissonAlgebra& a, const TwistingPair& tp);

/// A^- : bracket = mu - mu ((alpha^{-1}beta) (x) (alpha beta^{-1})) tau on a regular
/// BiHom-associative algebra (the input bracket is ignored). Throws SingularMatrix
/// when a twist map is not invertible and NotAssociative when the product fails
/// BiHom-associativity or multiplicativity.
BiHomPoissonAlgebra polarize_minus(const BiHomPoissonAlgebra& a);

/// Block-diagonal sum of operations and twist maps.
BiHomPoissonAlgebra direct_sum(const BiHomPoissonAlgebra& a, const BiHomPoissonAlgebra& b);

enum class IdealSide { Left, Right, TwoSided };

bool is_subalgebra(const BiHomPoissonAlgebra& a, const SubspaceBasis& basis);
bool is_ideal(const BiHomPoissonAlgebra& a, const SubspaceBasis& basis, IdealSide side);

/// A/I on the complement basis obtained by greedy pivoting in the ambient echelon
/// form, so quotient bases and tensors are deterministic. Throws NotAnIdeal naming
/// the violated closure.
BiHomPoissonAlgebra quotient(const BiHomPoissonAlgebra& a, const SubspaceBasis& ideal_basis);

/// The canonical projection A -> A/I as a matrix in the same complement basis.
RatMatrix quotient_projection(const BiHomPoissonAlgebra& a, const SubspaceBasis& ideal_basis);

/// Z(A) = { x : {x,y} = mu(x,y) = 0 for all y }.
SubspaceBasis centralizer(const BiHomPoissonAlgebra& a);

/// Embeds the graph of f in A (+) B and tests closure; equivalent to is_morphism.
bool graph_subalgebra_check(const RatMatrix& f, const BiHomPoissonAlgebra& a,
                            const BiHomPoissonAlgebra& b);

/// What nonrigidity_witness finds for an untwisted Poisson algebra and a commuting
/// endomorphism pair. A twisting whose product has nonvanishing plain associator or
/// whose bracket breaks the plain Jacobi identity certifies non-rigidity.
struct NonrigidityReport {
    bool associator_vanishes = true; // plain associator of the twisted product
    bool jacobi_holds = true;        // plain Jacobi identity of the twisted bracket
    bool trivial = false;            // both twisted operations identically zero
    bool witness_found = false;      // !associator_vanishes || !jacobi_holds

    std::vector<std::size_t> assoc_witness; // first failing triple, if any
    RatVec assoc_residual;
    std::vector<std::size_t> jacobi_witness;
    RatVec jacobi_residual;
};

/// Requires an untwisted input (alpha = beta = id). Throws TwistNotEndomorphism if a
/// twisting map is not a morphism of both operations, NonCommutingTwists if the two
/// maps do not commute.
NonrigidityReport nonrigidity_witness(const BiHomPoissonAlgebra& p, const TwistingPair& tp);

/// The 2-dimensional regular BiHom-associative family with parameters a, b (a != 0,1),
/// completed with its polarized bracket (which is identically zero here).
/// Throws ParameterOutOfDomain.
BiHomPoissonAlgebra build_example_e1(const Rat& a, const Rat& b);

/// Truncated symmetric algebra of a Lie algebra with the linear Poisson bracket:
/// basis are the monomials of degree <= max_deg in graded-lex order, the product is
/// truncated polynomial multiplication, the bracket extends [.,.] by the Leibniz
/// rule (partial-derivative formula), alpha = beta = id. Truncation is the quotient
/// by the ideal of higher-degree monomials, so all Poisson identities hold exactly.
/// Throws NotALieAlgebra, ParameterOutOfDomain (max_deg = 0).
BiHomPoissonAlgebra build_truncated_sym_poisson(const LieStructure& l, std::size_t max_deg);

/// sl(2) structure constants over generators (e, f, h): [h,e]=2e, [h,f]=-2f, [e,f]=h.
LieStructure sl2_structure();

/// Monomial exponent vectors of degree <= max_deg in the basis order used by
/// build_truncated_sym_poisson (degree ascending, descending-lex inside a degree).
std::vector<std::vector<int>> sym_monomials(std::size_t nvars, std::size_t max_deg);

/// Position of an exponent vector in that order.
std::size_t sym_monomial_index(std::size_t nvars, std::size_t max_deg,
                               const std::vector<int>& exps);

std::string sym_monomial_name(const std::vector<int>& exps,
                              const std::vector<std::string>& gen_names);

/// Diagonal map on the monomial basis sending each generator g to scalars[g] * g and
/// extended multiplicatively; the matrix of an algebra endomorphism of the truncated
/// symmetric algebra whenever the scalars come from a Lie algebra endomorphism.
RatMatrix diagonal_monomial_map(std::size_t nvars, std::size_t max_deg,
                                const std::vector<Rat>& scalars);

} // namespace bihom
