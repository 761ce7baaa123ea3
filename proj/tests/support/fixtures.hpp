#pragma once

#include <bihom/algebra.hpp>
#include <bihom/constructions.hpp>

#include <random>

namespace fixtures {

using bihom::BiHomPoissonAlgebra;
using bihom::Rat;
using bihom::RatMatrix;
using bihom::RatVec;
using bihom::TwistingPair;

/// Upper-triangular 2x2 matrices over the basis (E11, E12, E22); associative but not
/// commutative. Twist maps identity, bracket zero.
BiHomPoissonAlgebra upper_triangular_algebra();

/// All-zero operations, identity twists.
BiHomPoissonAlgebra zero_algebra(std::size_t n);

/// One-dimensional unital algebra mu(e1,e1)=e1, zero bracket.
BiHomPoissonAlgebra point_algebra();

BiHomPoissonAlgebra example_e1_23(); // build_example_e1(2, 3)
BiHomPoissonAlgebra sl2_trunc(std::size_t deg);

/// Diagonal endomorphism pair of the truncated S(sl2): e -> s e, f -> s^{-1} f,
/// h -> h extended multiplicatively, for s = lam resp. gam.
TwistingPair sl2_diag_pair(std::size_t deg, const Rat& lam, const Rat& gam);

Rat random_rational(std::mt19937& rng, int num_bound = 9, int den_bound = 9);
RatVec random_vector(std::mt19937& rng, std::size_t n);
RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols);

} // namespace fixtures
