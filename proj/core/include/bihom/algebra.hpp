#pragma once

#include <bihom/matrix.hpp>
#include <bihom/tensor.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace bihom {

/// A finite-dimensional BiHom-Poisson algebra candidate given by structure constants:
/// bracket(i,j,k) and product(i,j,k) are the k-th coordinates of {e_i,e_j} and
/// mu(e_i,e_j), alpha/beta the two twist maps in the same basis.
///
/// Validity of the axioms is deliberately NOT an invariant: the checkers are the
/// product, and negative fixtures must be representable. Only shape consistency is
/// enforced by validate_shape(); files additionally reject alpha*beta != beta*alpha
/// at parse time.
struct BiHomPoissonAlgebra {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    RatTensor3 bracket;
    RatTensor3 product;
    RatMatrix alpha;
    RatMatrix beta;

    /// Throws DimensionMismatch if any field disagrees with dim.
    void validate_shape() const;

    /// All dims equal, with generated names when none are given.
    static BiHomPoissonAlgebra make(std::size_t dim);
};

/// Stable labels for every identity this library can check. The JSON reports use
/// exactly these strings.
enum class IdentityId {
    AlphaBetaCommute,
    MultAlphaProduct,
    MultBetaProduct,
    MultAlphaBracket,
    MultBetaBracket,
    BihomCommutativity,
    BihomAssociativity,
    BihomSkewSymmetry,
    BihomJacobi,
    BihomLeibniz,
    BihomFlexibility,
    PolarizedFlexibility,
    Admissibility,
    CyclicAssociator,
    PhiPsiCommute,
    LambdaPhiMorphism,
    LambdaPsiMorphism,
    RhoPhiMorphism,
    RhoPsiMorphism,
    LeftModuleAssoc,
    LeftModuleLie,
    LeftModuleLeibniz1,
    LeftModuleLeibniz2,
    WedgePhiMorphism,
    WedgePsiMorphism,
    DeltaPhiMorphism,
    DeltaPsiMorphism,
    RightModuleAssoc,
    RightModuleLie,
    RightModuleLeibniz1,
    RightModuleLeibniz2,
};

const char* identity_label(IdentityId id);

/// One failing basis tuple: which identity, at which indices, with what residual.
struct IdentityViolation {
    IdentityId id;
    std::vector<std::size_t> witness;
    RatVec residual; // nonzero
};

/// Outcome of a checker run. Violations are collected up to a configurable cap
/// (all of them, not just the first) so fixtures can be debugged in one pass.
struct CheckReport {
    std::vector<IdentityId> checked;
    std::vector<IdentityViolation> violations;
    std::size_t violations_total = 0; // includes those dropped past the cap
    bool truncated = false;
    bool passed = true; // passed <=> violations empty

    void merge(const CheckReport& other, std::size_t cap);
};

struct CheckOptions {
    std::size_t violation_cap = 16;
    bool skip_commutativity = false; // the non-BiHom-commutative variant
};

} // namespace bihom
