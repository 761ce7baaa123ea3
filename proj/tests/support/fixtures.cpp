#include "fixtures.hpp"

namespace fixtures {

BiHomPoissonAlgebra upper_triangular_algebra() {
    BiHomPoissonAlgebra a = BiHomPoissonAlgebra::make(3);
    a.basis_names = {"E11", "E12", "E22"};
    // matrix-unit products: E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
    a.product(0, 0, 0) = 1;
    a.product(0, 1, 1) = 1;
    a.product(1, 2, 1) = 1;
    a.product(2, 2, 2) = 1;
    return a;
}

BiHomPoissonAlgebra zero_algebra(std::size_t n) {
    return BiHomPoissonAlgebra::make(n);
}

BiHomPoissonAlgebra point_algebra() {
    BiHomPoissonAlgebra a = BiHomPoissonAlgebra::make(1);
    a.product(0, 0, 0) = 1;
    return a;
}

BiHomPoissonAlgebra example_e1_23() {
    return bihom::build_example_e1(Rat(2), Rat(3));
}

BiHomPoissonAlgebra sl2_trunc(std::size_t deg) {
    return bihom::build_truncated_sym_poisson(bihom::sl2_structure(), deg);
}

TwistingPair sl2_diag_pair(std::size_t deg, const Rat& lam, const Rat& gam) {
    return TwistingPair{
        bihom::diagonal_monomial_map(3, deg, {lam, 1 / lam, Rat(1)}),
        bihom::diagonal_monomial_map(3, deg, {gam, 1 / gam, Rat(1)}),
    };
}

Rat random_rational(std::mt19937& rng, int num_bound, int den_bound) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

RatVec random_vector(std::mt19937& rng, std::size_t n) {
    RatVec v(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) v[i] = random_rational(rng);
    return v;
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
    return m;
}

} // namespace fixtures
