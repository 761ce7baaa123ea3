#include <bihom/errors.hpp>
#include <bihom/modules.hpp>

#include <utility>

namespace bihom {

void LeftModuleRep::validate_shape() const {
    alg.validate_shape();
    if (phi.rows() != vdim || phi.cols() != vdim || psi.rows() != vdim || psi.cols() != vdim)
        throw DimensionMismatch("left module: phi/psi shape != vdim^2");
    if (lambda_t.d1() != alg.dim || lambda_t.d2() != vdim || lambda_t.d3() != vdim)
        throw DimensionMismatch("left module: lambda tensor must be (dim, vdim, vdim)");
    if (rho_t.d1() != alg.dim || rho_t.d2() != vdim || rho_t.d3() != vdim)
        throw DimensionMismatch("left module: rho tensor must be (dim, vdim, vdim)");
}

void RightModuleRep::validate_shape() const {
    alg.validate_shape();
    if (phi.rows() != vdim || phi.cols() != vdim || psi.rows() != vdim || psi.cols() != vdim)
        throw DimensionMismatch("right module: phi/psi shape != vdim^2");
    if (wedge_t.d1() != vdim || wedge_t.d2() != alg.dim || wedge_t.d3() != vdim)
        throw DimensionMismatch("right module: wedge tensor must be (vdim, dim, vdim)");
    if (delta_t.d1() != vdim || delta_t.d2() != alg.dim || delta_t.d3() != vdim)
        throw DimensionMismatch("right module: delta tensor must be (vdim, dim, vdim)");
}

namespace {

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

void matrix_equality(Builder& b, IdentityId id, const RatMatrix& lhs, const RatMatrix& rhs) {
    b.mark(id);
    const RatMatrix diff = lhs - rhs;
    for (std::size_t i = 0; i < diff.rows(); ++i)
        for (std::size_t j = 0; j < diff.cols(); ++j)
            if (diff(i, j) != 0) b.violation(id, {i, j}, {diff(i, j)});
}

} // namespace

CheckReport check_left_module(const LeftModuleRep& m, const CheckOptions& opt) {
    m.validate_shape();
    Builder b(opt);
    const auto& a = m.alg;
    const std::size_t n = a.dim, vd = m.vdim;
    const RatMatrix ab = a.alpha * a.beta;

    matrix_equality(b, IdentityId::PhiPsiCommute, m.phi * m.psi, m.psi * m.phi);

    // structure maps are BiHom-module morphisms
    b.mark(IdentityId::LambdaPhiMorphism);
    b.mark(IdentityId::LambdaPsiMorphism);
    b.mark(IdentityId::RhoPhiMorphism);
    b.mark(IdentityId::RhoPsiMorphism);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < vd; ++t) {
            const RatVec vt = unit_vec(vd, t);
            RatVec r = vec_sub(m.phi.apply(m.lambda_t.fiber(i, t)),
                               m.lambda_t.eval(a.alpha.col(i), m.phi.col(t)));
            if (!vec_is_zero(r)) b.violation(IdentityId::LambdaPhiMorphism, {i, t}, std::move(r));
            r = vec_sub(m.psi.apply(m.lambda_t.fiber(i, t)),
                        m.lambda_t.eval(a.beta.col(i), m.psi.col(t)));
            if (!vec_is_zero(r)) b.violation(IdentityId::LambdaPsiMorphism, {i, t}, std::move(r));
            r = vec_sub(m.phi.apply(m.rho_t.fiber(i, t)),
                        m.rho_t.eval(a.alpha.col(i), m.phi.col(t)));
            if (!vec_is_zero(r)) b.violation(IdentityId::RhoPhiMorphism, {i, t}, std::move(r));
            r = vec_sub(m.psi.apply(m.rho_t.fiber(i, t)),
                        m.rho_t.eval(a.beta.col(i), m.psi.col(t)));
            if (!vec_is_zero(r)) b.violation(IdentityId::RhoPsiMorphism, {i, t}, std::move(r));
        }

    b.mark(IdentityId::LeftModuleAssoc);
    b.mark(IdentityId::LeftModuleLie);
    b.mark(IdentityId::LeftModuleLeibniz1);
    b.mark(IdentityId::LeftModuleLeibniz2);
    for (std::size_t i = 0; i < n; ++i) {
        const RatVec ei = unit_vec(n, i);
        const RatVec a_i = a.alpha.col(i);
        const RatVec b_i = a.beta.col(i);
        const RatVec ab_i = ab.col(i);
        for (std::size_t j = 0; j < n; ++j) {
            const RatVec ej = unit_vec(n, j);
            const RatVec b_j = a.beta.col(j);
            const RatVec mu_ij = a.product.fiber(i, j);
            const RatVec br_bi_j = a.bracket.eval(b_i, ej);
            const RatVec mu_bi_j = a.product.eval(b_i, ej);
            for (std::size_t t = 0; t < vd; ++t) {
                const RatVec vt = unit_vec(vd, t);
                const RatVec psi_v = m.psi.col(t);

                // lambda(alpha(x), lambda(y,v)) = lambda(mu(x,y), psi(v))
                RatVec r = vec_sub(m.lambda_t.eval(a_i, m.lambda_t.fiber(j, t)),
                                   m.lambda_t.eval(mu_ij, psi_v));
                if (!vec_is_zero(r)) b.violation(IdentityId::LeftModuleAssoc, {i, j, t}, std::move(r));

                // rho({beta(x),y}, psi(v)) = rho(alphabeta(x), rho(y,v)) - rho(beta(y), rho(alpha(x),v))
                r = m.rho_t.eval(br_bi_j, psi_v);
                r = vec_sub(r, m.rho_t.eval(ab_i, m.rho_t.fiber(j, t)));
                r = vec_add(r, m.rho_t.eval(b_j, m.rho_t.eval(a_i, vt)));
                if (!vec_is_zero(r)) b.violation(IdentityId::LeftModuleLie, {i, j, t}, std::move(r));

                // rho(alphabeta(x), lambda(y,v)) = lambda({beta(x),y}, psi(v)) + lambda(beta(y), rho(alpha(x),v))
                r = m.rho_t.eval(ab_i, m.lambda_t.fiber(j, t));
                r = vec_sub(r, m.lambda_t.eval(br_bi_j, psi_v));
                r = vec_sub(r, m.lambda_t.eval(b_j, m.rho_t.eval(a_i, vt)));
                if (!vec_is_zero(r))
                    b.violation(IdentityId::LeftModuleLeibniz1, {i, j, t}, std::move(r));

                // rho(mu(beta(x),y), psi(v)) = lambda(alphabeta(x), rho(y,v)) + lambda(beta(y), rho(alpha(x),v))
                r = m.rho_t.eval(mu_bi_j, psi_v);
                r = vec_sub(r, m.lambda_t.eval(ab_i, m.rho_t.fiber(j, t)));
                r = vec_sub(r, m.lambda_t.eval(b_j, m.rho_t.eval(a_i, vt)));
                if (!vec_is_zero(r))
                    b.violation(IdentityId::LeftModuleLeibniz2, {i, j, t}, std::move(r));
            }
        }
    }
    return std::move(b.rep);
}

CheckReport check_right_module(const RightModuleRep& m, const CheckOptions& opt) {
    m.validate_shape();
    Builder b(opt);
    const auto& a = m.alg;
    const std::size_t n = a.dim, vd = m.vdim;
    const RatMatrix ab = a.alpha * a.beta;

    matrix_equality(b, IdentityId::PhiPsiCommute, m.phi * m.psi, m.psi * m.phi);

    b.mark(IdentityId::WedgePhiMorphism);
    b.mark(IdentityId::WedgePsiMorphism);
    b.mark(IdentityId::DeltaPhiMorphism);
    b.mark(IdentityId::DeltaPsiMorphism);
    for (std::size_t t = 0; t < vd; ++t)
        for (std::size_t i = 0; i < n; ++i) {
            RatVec r = vec_sub(m.phi.apply(m.wedge_t.fiber(t, i)),
                               m.wedge_t.eval(m.phi.col(t), a.alpha.col(i)));
            if (!vec_is_zero(r)) b.violation(IdentityId::WedgePhiMorphism, {t, i}, std::move(r));
            r = vec_sub(m.psi.apply(m.wedge_t.fiber(t, i)),
                        m.wedge_t.eval(m.psi.col(t), a.beta.col(i)));
            if (!vec_is_zero(r)) b.violation(IdentityId::WedgePsiMorphism, {t, i}, std::move(r));
            r = vec_sub(m.phi.apply(m.delta_t.fiber(t, i)),
                        m.delta_t.eval(m.phi.col(t), a.alpha.col(i)));
            if (!vec_is_zero(r)) b.violation(IdentityId::DeltaPhiMorphism, {t, i}, std::move(r));
            r = vec_sub(m.psi.apply(m.delta_t.fiber(t, i)),
                        m.delta_t.eval(m.psi.col(t), a.beta.col(i)));
            if (!vec_is_zero(r)) b.violation(IdentityId::DeltaPsiMorphism, {t, i}, std::move(r));
        }

    b.mark(IdentityId::RightModuleAssoc);
    b.mark(IdentityId::RightModuleLie);
    b.mark(IdentityId::RightModuleLeibniz1);
    b.mark(IdentityId::RightModuleLeibniz2);
    for (std::size_t t = 0; t < vd; ++t) {
        const RatVec vt = unit_vec(vd, t);
        const RatVec phi_v = m.phi.col(t);
        for (std::size_t i = 0; i < n; ++i) {
            const RatVec ei = unit_vec(n, i);
            const RatVec b_i = a.beta.col(i);
            for (std::size_t j = 0; j < n; ++j) {
                const RatVec a_j = a.alpha.col(j);
                const RatVec ab_j = ab.col(j);
                const RatVec br_i_aj = a.bracket.eval(ei, a_j);
                const RatVec mu_i_aj = a.product.eval(ei, a_j);

                // wedge(wedge(v,x), beta(y)) = wedge(phi(v), mu(x,y))
                RatVec r = vec_sub(m.wedge_t.eval(m.wedge_t.fiber(t, i), a.beta.col(j)),
                                   m.wedge_t.eval(phi_v, a.product.fiber(i, j)));
                if (!vec_is_zero(r))
                    b.violation(IdentityId::RightModuleAssoc, {t, i, j}, std::move(r));

                // delta(phi(v), {x,alpha(y)}) = delta(delta(v,x), alphabeta(y)) - delta(delta(v,beta(x)), alpha(y))
                r = m.delta_t.eval(phi_v, br_i_aj);
                r = vec_sub(r, m.delta_t.eval(m.delta_t.fiber(t, i), ab_j));
                r = vec_add(r, m.delta_t.eval(m.delta_t.eval(vt, b_i), a_j));
                if (!vec_is_zero(r)) b.violation(IdentityId::RightModuleLie, {t, i, j}, std::move(r));

                // delta(wedge(v,x), alphabeta(y)) = delta(phi(v), {x,alpha(y)}) + wedge(delta(v,beta(x)), alpha(y))
                r = m.delta_t.eval(m.wedge_t.fiber(t, i), ab_j);
                r = vec_sub(r, m.delta_t.eval(phi_v, br_i_aj));
                r = vec_sub(r, m.wedge_t.eval(m.delta_t.eval(vt, b_i), a_j));
                if (!vec_is_zero(r))
                    b.violation(IdentityId::RightModuleLeibniz1, {t, i, j}, std::move(r));

                // delta(phi(v), mu(x,alpha(y))) = wedge(delta(v,x), alphabeta(y)) + wedge(delta(v,beta(x)), alpha(y))
                r = m.delta_t.eval(phi_v, mu_i_aj);
                r = vec_sub(r, m.wedge_t.eval(m.delta_t.fiber(t, i), ab_j));
                r = vec_sub(r, m.wedge_t.eval(m.delta_t.eval(vt, b_i), a_j));
                if (!vec_is_zero(r))
                    b.violation(IdentityId::RightModuleLeibniz2, {t, i, j}, std::move(r));
            }
        }
    }
    return std::move(b.rep);
}

LeftModuleRep regular_module(const BiHomPoissonAlgebra& a) {
    a.validate_shape();
    if (!check_regular(a)) throw NotRegular("regular_module: alpha and beta must be automorphisms");
    LeftModuleRep m;
    m.alg = a;
    m.vdim = a.dim;
    m.phi = a.alpha;
    m.psi = a.beta;
    m.lambda_t = a.product;
    m.rho_t = a.bracket;
    return m;
}

LeftModuleRep left_module_via_morphism(const RatMatrix& f, const BiHomPoissonAlgebra& a,
                                       const BiHomPoissonAlgebra& b) {
    if (!is_morphism(f, a, b))
        throw NotAMorphism("module_via_morphism: f is not a morphism of BiHom-Poisson algebras");
    if (!is_invertible(b.alpha) || !is_invertible(b.beta))
        throw SingularMatrix("module_via_morphism: target twist maps must be invertible");

    LeftModuleRep m;
    m.alg = a;
    m.vdim = b.dim;
    m.phi = b.alpha;
    m.psi = b.beta;
    m.lambda_t = RatTensor3(a.dim, b.dim, b.dim);
    m.rho_t = RatTensor3(a.dim, b.dim, b.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        const RatVec fi = f.col(i);
        for (std::size_t t = 0; t < b.dim; ++t) {
            const RatVec vt = unit_vec(b.dim, t);
            const RatVec lp = b.product.eval(fi, vt);
            const RatVec lr = b.bracket.eval(fi, vt);
            for (std::size_t r = 0; r < b.dim; ++r) {
                m.lambda_t(i, t, r) = lp[r];
                m.rho_t(i, t, r) = lr[r];
            }
        }
    }
    return m;
}

RightModuleRep right_module_via_morphism(const RatMatrix& f, const BiHomPoissonAlgebra& a,
                                         const BiHomPoissonAlgebra& b) {
    if (!is_morphism(f, a, b))
        throw NotAMorphism("module_via_morphism: f is not a morphism of BiHom-Poisson algebras");
    if (!is_invertible(b.alpha) || !is_invertible(b.beta))
        throw SingularMatrix("module_via_morphism: target twist maps must be invertible");

    RightModuleRep m;
    m.alg = a;
    m.vdim = b.dim;
    m.phi = b.alpha;
    m.psi = b.beta;
    m.wedge_t = RatTensor3(b.dim, a.dim, b.dim);
    m.delta_t = RatTensor3(b.dim, a.dim, b.dim);
    for (std::size_t t = 0; t < b.dim; ++t) {
        const RatVec vt = unit_vec(b.dim, t);
        for (std::size_t i = 0; i < a.dim; ++i) {
            const RatVec fi = f.col(i);
            const RatVec wp = b.product.eval(vt, fi);
            const RatVec wd = b.bracket.eval(vt, fi);
            for (std::size_t r = 0; r < b.dim; ++r) {
                m.wedge_t(t, i, r) = wp[r];
                m.delta_t(t, i, r) = wd[r];
            }
        }
    }
    return m;
}

LeftModuleRep shift_module(const LeftModuleRep& m, unsigned n, unsigned mm) {
    m.validate_shape();
    const RatMatrix p = m.alg.alpha.pow(n) * m.alg.beta.pow(mm);
    LeftModuleRep out = m;
    out.lambda_t = RatTensor3(m.alg.dim, m.vdim, m.vdim);
    out.rho_t = RatTensor3(m.alg.dim, m.vdim, m.vdim);
    for (std::size_t i = 0; i < m.alg.dim; ++i) {
        const RatVec pi = p.col(i);
        for (std::size_t t = 0; t < m.vdim; ++t) {
            const RatVec vt = unit_vec(m.vdim, t);
            const RatVec lp = m.lambda_t.eval(pi, vt);
            const RatVec lr = m.rho_t.eval(pi, vt);
            for (std::size_t r = 0; r < m.vdim; ++r) {
                out.lambda_t(i, t, r) = lp[r];
                out.rho_t(i, t, r) = lr[r];
            }
        }
    }
    return out;
}

RightModuleRep shift_module(const RightModuleRep& m, unsigned n, unsigned mm) {
    m.validate_shape();
    const RatMatrix p = m.alg.alpha.pow(n) * m.alg.beta.pow(mm);
    RightModuleRep out = m;
    out.wedge_t = RatTensor3(m.vdim, m.alg.dim, m.vdim);
    out.delta_t = RatTensor3(m.vdim, m.alg.dim, m.vdim);
    for (std::size_t t = 0; t < m.vdim; ++t) {
        const RatVec vt = unit_vec(m.vdim, t);
        for (std::size_t i = 0; i < m.alg.dim; ++i) {
            const RatVec pi = p.col(i);
            const RatVec wp = m.wedge_t.eval(vt, pi);
            const RatVec wd = m.delta_t.eval(vt, pi);
            for (std::size_t r = 0; r < m.vdim; ++r) {
                out.wedge_t(t, i, r) = wp[r];
                out.delta_t(t, i, r) = wd[r];
            }
        }
    }
    return out;
}

namespace {

void require_untwisted(const BiHomPoissonAlgebra& a, const char* what) {
    if (!a.alpha.is_identity() || !a.beta.is_identity())
        throw HypothesisViolated(std::string(what) + ": algebra must be untwisted (alpha=beta=id)");
}

void check_action_compat(const RatTensor3& act, const RatMatrix& self_map,
                         const RatMatrix& alg_map, std::size_t n, std::size_t vd,
                         const char* what) {
    // self_map(act(x,v)) = act(alg_map(x), self_map(v))
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < vd; ++t)
            if (self_map.apply(act.fiber(i, t)) != act.eval(alg_map.col(i), self_map.col(t)))
                throw HypothesisViolated(std::string("twist_module: ") + what);
}

} // namespace

LeftModuleRep twist_module(const LeftModuleRep& m, const TwistingPair& ab) {
    m.validate_shape();
    require_untwisted(m.alg, "twist_module");
    if (!commute_check(ab.alpha_prime, ab.beta_prime))
        throw HypothesisViolated("twist_module: alpha and beta do not commute");
    if (!commute_check(m.phi, m.psi))
        throw HypothesisViolated("twist_module: phi and psi do not commute");

    check_action_compat(m.lambda_t, m.phi, ab.alpha_prime, m.alg.dim, m.vdim,
                        "phi lambda = lambda (alpha x phi) fails");
    check_action_compat(m.rho_t, m.phi, ab.alpha_prime, m.alg.dim, m.vdim,
                        "phi rho = rho (alpha x phi) fails");
    check_action_compat(m.lambda_t, m.psi, ab.beta_prime, m.alg.dim, m.vdim,
                        "psi lambda = lambda (beta x psi) fails");
    check_action_compat(m.rho_t, m.psi, ab.beta_prime, m.alg.dim, m.vdim,
                        "psi rho = rho (beta x psi) fails");

    LeftModuleRep out;
    out.alg = yau_twist(m.alg, ab); // also validates the endomorphism conditions
    out.vdim = m.vdim;
    out.phi = m.phi;
    out.psi = m.psi;
    out.lambda_t = RatTensor3(m.alg.dim, m.vdim, m.vdim);
    out.rho_t = RatTensor3(m.alg.dim, m.vdim, m.vdim);
    const RatMatrix abm = ab.alpha_prime * ab.beta_prime;
    for (std::size_t i = 0; i < m.alg.dim; ++i) {
        const RatVec ci = abm.col(i);
        for (std::size_t t = 0; t < m.vdim; ++t) {
            const RatVec lp = m.lambda_t.eval(ci, m.psi.col(t));
            const RatVec lr = m.rho_t.eval(ci, m.psi.col(t));
            for (std::size_t r = 0; r < m.vdim; ++r) {
                out.lambda_t(i, t, r) = lp[r];
                out.rho_t(i, t, r) = lr[r];
            }
        }
    }
    return out;
}

RightModuleRep twist_module(const RightModuleRep& m, const TwistingPair& ab) {
    m.validate_shape();
    require_untwisted(m.alg, "twist_module");
    if (!commute_check(ab.alpha_prime, ab.beta_prime))
        throw HypothesisViolated("twist_module: alpha and beta do not commute");
    if (!commute_check(m.phi, m.psi))
        throw HypothesisViolated("twist_module: phi and psi do not commute");

    const std::size_t n = m.alg.dim, vd = m.vdim;
    // right actions: self_map(act(v,x)) = act(self_map(v), alg_map(x))
    const auto compat = [&](const RatTensor3& act, const RatMatrix& self_map,
                            const RatMatrix& alg_map, const char* what) {
        for (std::size_t t = 0; t < vd; ++t)
            for (std::size_t i = 0; i < n; ++i)
                if (self_map.apply(act.fiber(t, i)) != act.eval(self_map.col(t), alg_map.col(i)))
                    throw HypothesisViolated(std::string("twist_module: ") + what);
    };
    compat(m.wedge_t, m.phi, ab.alpha_prime, "phi wedge = wedge (phi x alpha) fails");
    compat(m.delta_t, m.phi, ab.alpha_prime, "phi delta = delta (phi x alpha) fails");
    compat(m.wedge_t, m.psi, ab.beta_prime, "psi wedge = wedge (psi x beta) fails");
    compat(m.delta_t, m.psi, ab.beta_prime, "psi delta = delta (psi x beta) fails");

    RightModuleRep out;
    out.alg = yau_twist(m.alg, ab);
    out.vdim = vd;
    out.phi = m.phi;
    out.psi = m.psi;
    out.wedge_t = RatTensor3(vd, n, vd);
    out.delta_t = RatTensor3(vd, n, vd);
    const RatMatrix abm = ab.alpha_prime * ab.beta_prime;
    for (std::size_t t = 0; t < vd; ++t) {
        const RatVec pt = m.phi.col(t);
        for (std::size_t i = 0; i < n; ++i) {
            const RatVec wp = m.wedge_t.eval(pt, abm.col(i));
            const RatVec wd = m.delta_t.eval(pt, abm.col(i));
            for (std::size_t r = 0; r < vd; ++r) {
                out.wedge_t(t, i, r) = wp[r];
                out.delta_t(t, i, r) = wd[r];
            }
        }
    }
    return out;
}

BiHomPoissonAlgebra semidirect_product(const BiHomPoissonAlgebra& a, const LeftModuleRep& m) {
    a.validate_shape();
    m.validate_shape();
    if (m.alg.dim != a.dim)
        throw DimensionMismatch("semidirect_product: module is not over the given algebra");
    if (!check_regular(a))
        throw NotRegular("semidirect_product: algebra twist maps must be automorphisms");
    if (!is_invertible(m.phi) || !is_invertible(m.psi))
        throw SingularMatrix("semidirect_product: phi and psi must be invertible");
    if (!check_left_module(m).passed)
        throw ModuleCheckFailed("semidirect_product: module identities fail");

    const std::size_t n = a.dim, vd = m.vdim, total = n + vd;
    const RatMatrix ainv_b = invert(a.alpha) * a.beta;
    const RatMatrix psinv_phi = invert(m.psi) * m.phi;

    BiHomPoissonAlgebra s = BiHomPoissonAlgebra::make(total);
    for (std::size_t i = 0; i < n; ++i) s.basis_names[i] = a.basis_names[i];
    for (std::size_t t = 0; t < vd; ++t) s.basis_names[n + t] = "v" + std::to_string(t + 1);

    s.alpha = RatMatrix(total, total);
    s.beta = RatMatrix(total, total);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s.alpha(i, j) = a.alpha(i, j);
            s.beta(i, j) = a.beta(i, j);
        }
    for (std::size_t i = 0; i < vd; ++i)
        for (std::size_t j = 0; j < vd; ++j) {
            s.alpha(n + i, n + j) = m.phi(i, j);
            s.beta(n + i, n + j) = m.psi(i, j);
        }

    // algebra-algebra block
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r) {
                s.product(i, j, r) = a.product(i, j, r);
                s.bracket(i, j, r) = a.bracket(i, j, r);
            }
    // algebra-module block: lambda(a, v) and rho(a, v)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < vd; ++t)
            for (std::size_t r = 0; r < vd; ++r) {
                s.product(i, n + t, n + r) = m.lambda_t(i, t, r);
                s.bracket(i, n + t, n + r) = m.rho_t(i, t, r);
            }
    // module-algebra block: lambda(ainv_b(b), psinv_phi(u)) and -rho(...)
    for (std::size_t t = 0; t < vd; ++t) {
        const RatVec u = psinv_phi.col(t);
        for (std::size_t j = 0; j < n; ++j) {
            const RatVec lb = m.lambda_t.eval(ainv_b.col(j), u);
            const RatVec rb = m.rho_t.eval(ainv_b.col(j), u);
            for (std::size_t r = 0; r < vd; ++r) {
                s.product(n + t, j, n + r) = lb[r];
                s.bracket(n + t, j, n + r) = -rb[r];
            }
        }
    }
    // module-module block is zero

    return s;
}

} // namespace bihom
