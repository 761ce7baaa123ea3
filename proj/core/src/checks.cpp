#include <bihom/checks.hpp>
#include <bihom/errors.hpp>

#include <utility>

namespace bihom {

void BiHomPoissonAlgebra::validate_shape() const {
    const std::size_t n = dim;
    if (basis_names.size() != n)
        throw DimensionMismatch("algebra: basis name count != dim");
    if (bracket.d1() != n || bracket.d2() != n || bracket.d3() != n)
        throw DimensionMismatch("algebra: bracket tensor shape != dim^3");
    if (product.d1() != n || product.d2() != n || product.d3() != n)
        throw DimensionMismatch("algebra: product tensor shape != dim^3");
    if (alpha.rows() != n || alpha.cols() != n)
        throw DimensionMismatch("algebra: alpha shape != dim^2");
    if (beta.rows() != n || beta.cols() != n)
        throw DimensionMismatch("algebra: beta shape != dim^2");
}

BiHomPoissonAlgebra BiHomPoissonAlgebra::make(std::size_t n) {
    BiHomPoissonAlgebra a;
    a.dim = n;
    a.basis_names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) a.basis_names.push_back("e" + std::to_string(i + 1));
    a.bracket = RatTensor3(n, n, n);
    a.product = RatTensor3(n, n, n);
    a.alpha = RatMatrix::identity(n);
    a.beta = RatMatrix::identity(n);
    return a;
}

const char* identity_label(IdentityId id) {
    switch (id) {
        case IdentityId::AlphaBetaCommute: return "alpha_beta_commute";
        case IdentityId::MultAlphaProduct: return "mult_alpha_product";
        case IdentityId::MultBetaProduct: return "mult_beta_product";
        case IdentityId::MultAlphaBracket: return "mult_alpha_bracket";
        case IdentityId::MultBetaBracket: return "mult_beta_bracket";
        case IdentityId::BihomCommutativity: return "bihom_commutativity";
        case IdentityId::BihomAssociativity: return "bihom_associativity";
        case IdentityId::BihomSkewSymmetry: return "bihom_skew_symmetry";
        case IdentityId::BihomJacobi: return "bihom_jacobi";
        case IdentityId::BihomLeibniz: return "bihom_leibniz";
        case IdentityId::BihomFlexibility: return "bihom_flexibility";
        case IdentityId::PolarizedFlexibility: return "polarized_flexibility";
        case IdentityId::Admissibility: return "admissibility";
        case IdentityId::CyclicAssociator: return "cyclic_associator";
        case IdentityId::PhiPsiCommute: return "phi_psi_commute";
        case IdentityId::LambdaPhiMorphism: return "lambda_phi_morphism";
        case IdentityId::LambdaPsiMorphism: return "lambda_psi_morphism";
        case IdentityId::RhoPhiMorphism: return "rho_phi_morphism";
        case IdentityId::RhoPsiMorphism: return "rho_psi_morphism";
        case IdentityId::LeftModuleAssoc: return "left_module_assoc";
        case IdentityId::LeftModuleLie: return "left_module_lie";
        case IdentityId::LeftModuleLeibniz1: return "left_module_leibniz1";
        case IdentityId::LeftModuleLeibniz2: return "left_module_leibniz2";
        case IdentityId::WedgePhiMorphism: return "wedge_phi_morphism";
        case IdentityId::WedgePsiMorphism: return "wedge_psi_morphism";
        case IdentityId::DeltaPhiMorphism: return "delta_phi_morphism";
        case IdentityId::DeltaPsiMorphism: return "delta_psi_morphism";
        case IdentityId::RightModuleAssoc: return "right_module_assoc";
        case IdentityId::RightModuleLie: return "right_module_lie";
        case IdentityId::RightModuleLeibniz1: return "right_module_leibniz1";
        case IdentityId::RightModuleLeibniz2: return "right_module_leibniz2";
    }
    return "unknown";
}

void CheckReport::merge(const CheckReport& other, std::size_t cap) {
    checked.insert(checked.end(), other.checked.begin(), other.checked.end());
    for (const IdentityViolation& v : other.violations) {
        if (violations.size() < cap)
            violations.push_back(v);
        else
            truncated = true;
    }
    violations_total += other.violations_total;
    truncated = truncated || other.truncated;
    passed = passed && other.passed;
}

CheckContext::CheckContext(const BiHomPoissonAlgebra& alg) : a(&alg) {
    alg.validate_shape();
    ab = alg.alpha * alg.beta;
    a2 = alg.alpha * alg.alpha;
    b2 = alg.beta * alg.beta;
    a2b = a2 * alg.beta;
    ab2 = alg.alpha * b2;
}

PolarizedContext::PolarizedContext(const BiHomPoissonAlgebra& alg) : CheckContext(alg) {
    const RatMatrix ai = invert(alg.alpha);
    const RatMatrix bi = invert(alg.beta);
    ainv_b = ai * alg.beta;
    a_binv = alg.alpha * bi;
}

namespace {

// Violation collector honoring the cap; the total count keeps increasing so callers
// can tell how many were dropped.
struct Builder {
    CheckReport rep;
    std::size_t cap;

    explicit Builder(const CheckOptions& opt) : cap(opt.violation_cap ? opt.violation_cap : 1) {}

    void mark(IdentityId id) { rep.checked.push_back(id); }

    void violation(IdentityId id, std::vector<std::size_t> w, RatVec r) {
        ++rep.violations_total;
        rep.passed = false;
        if (rep.violations.size() < cap)
            rep.violations.push_back({id, std::move(w), std::move(r)});
        else
            rep.truncated = true;
    }
};

std::vector<RatVec> basis_units(std::size_t n) {
    std::vector<RatVec> u;
    u.reserve(n);
    for (std::size_t i = 0; i < n; ++i) u.push_back(unit_vec(n, i));
    return u;
}

template <typename F>
void scan_pairs(Builder& b, IdentityId id, std::size_t n, F&& f) {
    b.mark(id);
    const auto u = basis_units(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatVec r = f(u[i], u[j]);
            if (!vec_is_zero(r)) b.violation(id, {i, j}, std::move(r));
        }
}

template <typename F>
void scan_triples(Builder& b, IdentityId id, std::size_t n, F&& f) {
    b.mark(id);
    const auto u = basis_units(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RatVec r = f(u[i], u[j], u[k]);
                if (!vec_is_zero(r)) b.violation(id, {i, j, k}, std::move(r));
            }
}

} // namespace

RatVec associator(const BiHomPoissonAlgebra& a, const RatVec& x, const RatVec& y,
                  const RatVec& z) {
    const RatTensor3& mu = a.product;
    return vec_sub(mu.eval(mu.eval(x, y), a.beta.apply(z)),
                   mu.eval(a.alpha.apply(x), mu.eval(y, z)));
}

RatVec res_mult_alpha_product(const CheckContext& c, const RatVec& x, const RatVec& y) {
    const auto& a = *c.a;
    return vec_sub(a.alpha.apply(a.product.eval(x, y)),
                   a.product.eval(a.alpha.apply(x), a.alpha.apply(y)));
}

RatVec res_mult_beta_product(const CheckContext& c, const RatVec& x, const RatVec& y) {
    const auto& a = *c.a;
    return vec_sub(a.beta.apply(a.product.eval(x, y)),
                   a.product.eval(a.beta.apply(x), a.beta.apply(y)));
}

RatVec res_mult_alpha_bracket(const CheckContext& c, const RatVec& x, const RatVec& y) {
    const auto& a = *c.a;
    return vec_sub(a.alpha.apply(a.bracket.eval(x, y)),
                   a.bracket.eval(a.alpha.apply(x), a.alpha.apply(y)));
}

RatVec res_mult_beta_bracket(const CheckContext& c, const RatVec& x, const RatVec& y) {
    const auto& a = *c.a;
    return vec_sub(a.beta.apply(a.bracket.eval(x, y)),
                   a.bracket.eval(a.beta.apply(x), a.beta.apply(y)));
}

RatVec res_commutativity(const CheckContext& c, const RatVec& x, const RatVec& y) {
    const auto& a = *c.a;
    const RatVec bx = a.beta.apply(x), by = a.beta.apply(y);
    const RatVec ax = a.alpha.apply(x), ay = a.alpha.apply(y);
    return vec_sub(a.product.eval(bx, ay), a.product.eval(by, ax));
}

RatVec res_skew_symmetry(const CheckContext& c, const RatVec& x, const RatVec& y) {
    const auto& a = *c.a;
    const RatVec bx = a.beta.apply(x), by = a.beta.apply(y);
    const RatVec ax = a.alpha.apply(x), ay = a.alpha.apply(y);
    return vec_add(a.bracket.eval(bx, ay), a.bracket.eval(by, ax));
}

RatVec res_associativity(const CheckContext& c, const RatVec& x, const RatVec& y,
                         const RatVec& z) {
    return associator(*c.a, x, y, z);
}

RatVec res_jacobi(const CheckContext& c, const RatVec& x, const RatVec& y, const RatVec& z) {
    const auto& a = *c.a;
    const RatTensor3& br = a.bracket;
    RatVec r = br.eval(c.b2.apply(x), br.eval(a.beta.apply(y), a.alpha.apply(z)));
    r = vec_add(r, br.eval(c.b2.apply(y), br.eval(a.beta.apply(z), a.alpha.apply(x))));
    r = vec_add(r, br.eval(c.b2.apply(z), br.eval(a.beta.apply(x), a.alpha.apply(y))));
    return r;
}

RatVec res_leibniz(const CheckContext& c, const RatVec& x, const RatVec& y, const RatVec& z) {
    const auto& a = *c.a;
    RatVec r = a.bracket.eval(c.ab.apply(x), a.product.eval(y, z));
    r = vec_sub(r, a.product.eval(a.bracket.eval(a.beta.apply(x), y), a.beta.apply(z)));
    r = vec_sub(r, a.product.eval(a.beta.apply(y), a.bracket.eval(a.alpha.apply(x), z)));
    return r;
}

RatVec res_flexibility(const CheckContext& c, const RatVec& x, const RatVec& y, const RatVec& z) {
    const auto& a = *c.a;
    return vec_add(associator(a, c.b2.apply(x), c.ab.apply(y), c.a2.apply(z)),
                   associator(a, c.b2.apply(z), c.ab.apply(y), c.a2.apply(x)));
}

RatVec res_admissibility(const CheckContext& c, const RatVec& x, const RatVec& y,
                         const RatVec& z) {
    const auto& a = *c.a;
    const RatTensor3& mu = a.product;
    RatVec lhs = associator(a, a.beta.apply(x), a.alpha.apply(y), c.a2.apply(z));

    RatVec rhs = mu.eval(mu.eval(a.beta.apply(x), c.ab.apply(z)), c.a2.apply(y));
    rhs = vec_sub(rhs, mu.eval(mu.eval(c.b2.apply(z), a.alpha.apply(x)), c.a2.apply(y)));
    rhs = vec_add(rhs, mu.eval(mu.eval(a.beta.apply(y), c.ab.apply(z)), c.a2.apply(x)));
    rhs = vec_sub(rhs, mu.eval(mu.eval(a.beta.apply(y), a.alpha.apply(x)), c.a2b.apply(z)));
    const Rat third(1, 3);
    vec_scale(rhs, third);
    return vec_sub(lhs, rhs);
}

RatVec cyclic_associator_sum(const BiHomPoissonAlgebra& a, const RatVec& x, const RatVec& y,
                             const RatVec& z) {
    const CheckContext c(a);
    return res_cyclic_associator(c, x, y, z);
}

RatVec res_cyclic_associator(const CheckContext& c, const RatVec& x, const RatVec& y,
                             const RatVec& z) {
    const auto& a = *c.a;
    RatVec r = associator(a, c.b2.apply(x), c.ab.apply(y), c.a2.apply(z));
    r = vec_add(r, associator(a, c.b2.apply(y), c.ab.apply(z), c.a2.apply(x)));
    r = vec_add(r, associator(a, c.b2.apply(z), c.ab.apply(x), c.a2.apply(y)));
    return r;
}

RatVec res_polarized_flexibility(const PolarizedContext& c, const RatVec& x, const RatVec& y,
                                 const RatVec& z) {
    const auto& a = *c.a;
    const RatTensor3& mu = a.product;
    const Rat half(1, 2);

    // {u,v} = 1/2 (mu(u,v) - mu(a^{-1}b v, a b^{-1} u)), diamond the matching half-sum
    const auto half_bracket = [&](const RatVec& u, const RatVec& v) {
        RatVec r = vec_sub(mu.eval(u, v), mu.eval(c.ainv_b.apply(v), c.a_binv.apply(u)));
        vec_scale(r, half);
        return r;
    };
    const auto diamond = [&](const RatVec& u, const RatVec& v) {
        RatVec r = vec_add(mu.eval(u, v), mu.eval(c.ainv_b.apply(v), c.a_binv.apply(u)));
        vec_scale(r, half);
        return r;
    };

    RatVec r = half_bracket(c.ab.apply(x), diamond(c.ab.apply(y), c.a2.apply(z)));
    r = vec_sub(r, diamond(half_bracket(c.b2.apply(x), c.ab.apply(y)), c.a2b.apply(z)));
    r = vec_sub(r, diamond(c.ab2.apply(y), half_bracket(c.ab.apply(x), c.a2.apply(z))));
    return r;
}

CheckReport check_multiplicativity(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);
    scan_pairs(b, IdentityId::MultAlphaProduct, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_mult_alpha_product(c, x, y); });
    scan_pairs(b, IdentityId::MultBetaProduct, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_mult_beta_product(c, x, y); });
    scan_pairs(b, IdentityId::MultAlphaBracket, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_mult_alpha_bracket(c, x, y); });
    scan_pairs(b, IdentityId::MultBetaBracket, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_mult_beta_bracket(c, x, y); });
    return std::move(b.rep);
}

CheckReport check_bihom_commutative(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);
    scan_pairs(b, IdentityId::BihomCommutativity, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_commutativity(c, x, y); });
    return std::move(b.rep);
}

CheckReport check_bihom_associative(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);
    scan_triples(b, IdentityId::BihomAssociativity, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_associativity(c, x, y, z);
                 });
    return std::move(b.rep);
}

CheckReport check_skew_symmetry(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);
    scan_pairs(b, IdentityId::BihomSkewSymmetry, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_skew_symmetry(c, x, y); });
    return std::move(b.rep);
}

CheckReport check_bihom_jacobi(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);
    scan_triples(b, IdentityId::BihomJacobi, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_jacobi(c, x, y, z);
                 });
    return std::move(b.rep);
}

CheckReport check_bihom_leibniz(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);
    scan_triples(b, IdentityId::BihomLeibniz, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_leibniz(c, x, y, z);
                 });
    return std::move(b.rep);
}

CheckReport check_bihom_poisson(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);

    b.mark(IdentityId::AlphaBetaCommute);
    const RatMatrix diff = a.alpha * a.beta - a.beta * a.alpha;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            if (diff(i, j) != 0) b.violation(IdentityId::AlphaBetaCommute, {i, j}, {diff(i, j)});

    scan_pairs(b, IdentityId::MultAlphaProduct, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_mult_alpha_product(c, x, y); });
    scan_pairs(b, IdentityId::MultBetaProduct, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_mult_beta_product(c, x, y); });
    scan_pairs(b, IdentityId::MultAlphaBracket, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_mult_alpha_bracket(c, x, y); });
    scan_pairs(b, IdentityId::MultBetaBracket, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_mult_beta_bracket(c, x, y); });
    if (!opt.skip_commutativity)
        scan_pairs(b, IdentityId::BihomCommutativity, a.dim,
                   [&](const RatVec& x, const RatVec& y) { return res_commutativity(c, x, y); });
    scan_triples(b, IdentityId::BihomAssociativity, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_associativity(c, x, y, z);
                 });
    scan_pairs(b, IdentityId::BihomSkewSymmetry, a.dim,
               [&](const RatVec& x, const RatVec& y) { return res_skew_symmetry(c, x, y); });
    scan_triples(b, IdentityId::BihomJacobi, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_jacobi(c, x, y, z);
                 });
    scan_triples(b, IdentityId::BihomLeibniz, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_leibniz(c, x, y, z);
                 });
    return std::move(b.rep);
}

CheckReport check_flexible(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);
    scan_triples(b, IdentityId::BihomFlexibility, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_flexibility(c, x, y, z);
                 });
    return std::move(b.rep);
}

CheckReport check_polarized_flexibility(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const PolarizedContext c(a);
    Builder b(opt);
    scan_triples(b, IdentityId::PolarizedFlexibility, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_polarized_flexibility(c, x, y, z);
                 });
    return std::move(b.rep);
}

CheckReport check_admissible(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);
    scan_triples(b, IdentityId::Admissibility, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_admissibility(c, x, y, z);
                 });
    return std::move(b.rep);
}

CheckReport check_cyclic_associator(const BiHomPoissonAlgebra& a, const CheckOptions& opt) {
    const CheckContext c(a);
    Builder b(opt);
    scan_triples(b, IdentityId::CyclicAssociator, a.dim,
                 [&](const RatVec& x, const RatVec& y, const RatVec& z) {
                     return res_cyclic_associator(c, x, y, z);
                 });
    return std::move(b.rep);
}

bool is_weak_morphism(const RatMatrix& f, const BiHomPoissonAlgebra& a,
                      const BiHomPoissonAlgebra& b) {
    if (f.rows() != b.dim || f.cols() != a.dim)
        throw DimensionMismatch("is_weak_morphism: map shape must be dim(B) x dim(A)");
    for (std::size_t i = 0; i < a.dim; ++i) {
        const RatVec fi = f.col(i);
        for (std::size_t j = 0; j < a.dim; ++j) {
            const RatVec fj = f.col(j);
            if (f.apply(a.product.fiber(i, j)) != b.product.eval(fi, fj)) return false;
            if (f.apply(a.bracket.fiber(i, j)) != b.bracket.eval(fi, fj)) return false;
        }
    }
    return true;
}

bool is_morphism(const RatMatrix& f, const BiHomPoissonAlgebra& a, const BiHomPoissonAlgebra& b) {
    if (f.rows() != b.dim || f.cols() != a.dim)
        throw DimensionMismatch("is_morphism: map shape must be dim(B) x dim(A)");
    if (!(f * a.alpha == b.alpha * f)) return false;
    if (!(f * a.beta == b.beta * f)) return false;
    return is_weak_morphism(f, a, b);
}

bool check_regular(const BiHomPoissonAlgebra& a) {
    return is_invertible(a.alpha) && is_invertible(a.beta) && is_morphism(a.alpha, a, a) &&
           is_morphism(a.beta, a, a);
}

bool check_involutive(const BiHomPoissonAlgebra& a) {
    return (a.alpha * a.alpha).is_identity() && (a.beta * a.beta).is_identity();
}

} // namespace bihom
