#pragma once

#include <bihom/algebra.hpp>
#include <bihom/linalg.hpp>

namespace bihom {

/// Value container for degree-3 cochains: three inputs, one output, all of the
/// algebra dimension.
struct RatTensor4 {
    std::size_t n = 0;
    RatVec e;

    RatTensor4() = default;
    explicit RatTensor4(std::size_t dim) : n(dim), e(dim * dim * dim * dim, Rat(0)) {}

    Rat& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t r) {
        return e[((i * n + j) * n + k) * n + r];
    }
    const Rat& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t r) const {
        return e[((i * n + j) * n + k) * n + r];
    }

    bool is_zero() const {
        for (const Rat& x : e)
            if (x != 0) return false;
        return true;
    }
};

struct CohomologyReport {
    std::size_t dim_C1 = 0;
    std::size_t dim_C2 = 0;
    std::size_t dim_Z1 = 0; // also reported as H^1 (no degree-0 coboundary exists)
    std::size_t dim_Z2 = 0;
    std::size_t dim_B2 = 0;
    std::size_t dim_H2 = 0; // dim_Z2 - dim_B2 when the quotient is defined

    bool strict = false;
    bool strict_uses_product = true;    // the "derivation in each argument" clause is taken w.r.t. mu
    bool delta1_outputs_skew = true;    // plain skewness of the delta1 images (guaranteed for alpha=beta)
    bool delta1_outputs_in_C2 = true;   // delta1 images lie in the degree-2 cochain space
    bool b2_subset_z2 = true;           // delta2 o delta1 = 0 held on every basis element
};

/// Degree-1 cochains are maps commuting with alpha and beta (the commutant); degree-2
/// cochains are plain-skew bilinear maps with the same equivariance. strict=true adds
/// the Leibniz rule in each argument with respect to the product. Coordinates are the
/// flat matrix (degree 1) / tensor (degree 2) entries.
SubspaceBasis cochain_space(const BiHomPoissonAlgebra& a, int degree, bool strict);

/// delta1 f (x,y) = {alpha(x), f(y)} - {alpha(y), f(x)} - f({alpha^{-1}beta(x), y}),
/// the alternating degree-1 coboundary (delta2 o delta1 = 0 pins this slot order).
/// Requires regular twist maps; throws SingularMatrix.
RatTensor3 delta1(const BiHomPoissonAlgebra& a, const RatMatrix& f);

/// Alternating degree-2 coboundary:
///   delta2 f (x,y,z) = {ab(x), f(y,z)} - {ab(y), f(x,z)} + {ab(z), f(x,y)}
///                      - f({a^{-1}b(x), y}, b(z)) + f({a^{-1}b(x), z}, b(y))
///                      - f({a^{-1}b(y), z}, b(x)).
/// Satisfies delta2 o delta1 = 0.
RatTensor4 delta2(const BiHomPoissonAlgebra& a, const RatTensor3& f);

/// Non-alternating variant whose first group degenerates to the single term
/// {ab(x), f(y,z)} (the two middle bracket terms cancel verbatim). It does NOT
/// satisfy delta2 o delta1 = 0 in general; kept for diagnostics and tests.
RatTensor4 delta2_cancelling(const BiHomPoissonAlgebra& a, const RatTensor3& f);

/// Materializes delta1 and delta2 between the constrained cochain spaces and reports
/// dim C^1, C^2, Z^1 = ker delta1, Z^2 = ker delta2, B^2 = im delta1 and H^2.
CohomologyReport cohomology_dims(const BiHomPoissonAlgebra& a, bool strict);

} // namespace bihom
