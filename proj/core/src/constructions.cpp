#include <bihom/constructions.hpp>
#include <bihom/errors.hpp>

#include <algorithm>
#include <map>

namespace bihom {

namespace {

void require_same_dim(const RatMatrix& m, std::size_t n, const char* what) {
    if (m.rows() != n || m.cols() != n)
        throw DimensionMismatch(std::string(what) + ": wrong shape");
}

// endomorphism of both operations (no twist-map compatibility implied)
bool is_operation_endo(const RatMatrix& f, const BiHomPoissonAlgebra& a) {
    for (std::size_t i = 0; i < a.dim; ++i) {
        const RatVec fi = f.col(i);
        for (std::size_t j = 0; j < a.dim; ++j) {
            const RatVec fj = f.col(j);
            if (f.apply(a.product.fiber(i, j)) != a.product.eval(fi, fj)) return false;
            if (f.apply(a.bracket.fiber(i, j)) != a.bracket.eval(fi, fj)) return false;
        }
    }
    return true;
}

} // namespace

BiHomPoissonAlgebra yau_twist(const BiHomPoissonAlgebra& a, const TwistingPair& tp) {
    a.validate_shape();
    require_same_dim(tp.alpha_prime, a.dim, "yau_twist alpha'");
    require_same_dim(tp.beta_prime, a.dim, "yau_twist beta'");

    const RatMatrix* maps[4] = {&a.alpha, &a.beta, &tp.alpha_prime, &tp.beta_prime};
    const char* names[4] = {"alpha", "beta", "alpha'", "beta'"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!commute_check(*maps[i], *maps[j]))
                throw NonCommutingTwists(std::string("yau_twist: ") + names[i] + " and " +
                                         names[j] + " do not commute");
    if (!is_operation_endo(tp.alpha_prime, a))
        throw NotAMorphism("yau_twist: alpha' is not a morphism of the operations");
    if (!is_operation_endo(tp.beta_prime, a))
        throw NotAMorphism("yau_twist: beta' is not a morphism of the operations");

    BiHomPoissonAlgebra out = a;
    out.alpha = a.alpha * tp.alpha_prime;
    out.beta = a.beta * tp.beta_prime;
    out.product = RatTensor3(a.dim, a.dim, a.dim);
    out.bracket = RatTensor3(a.dim, a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        const RatVec ai = tp.alpha_prime.col(i);
        for (std::size_t j = 0; j < a.dim; ++j) {
            const RatVec bj = tp.beta_prime.col(j);
            const RatVec p = a.product.eval(ai, bj);
            const RatVec q = a.bracket.eval(ai, bj);
            for (std::size_t k = 0; k < a.dim; ++k) {
                out.product(i, j, k) = p[k];
                out.bracket(i, j, k) = q[k];
            }
        }
    }
    return out;
}

BiHomPoissonAlgebra polarize_minus(const BiHomPoissonAlgebra& a) {
    a.validate_shape();
    const RatMatrix k = invert(a.alpha) * a.beta;  // alpha^{-1} beta
    const RatMatrix l = a.alpha * invert(a.beta);  // alpha beta^{-1}

    CheckOptions opt;
    opt.violation_cap = 1;
    if (!check_bihom_associative(a, opt).passed)
        throw NotAssociative("polarize_minus: product is not BiHom-associative");
    {
        const CheckContext c(a);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                const RatVec x = unit_vec(a.dim, i), y = unit_vec(a.dim, j);
                if (!vec_is_zero(res_mult_alpha_product(c, x, y)) ||
                    !vec_is_zero(res_mult_beta_product(c, x, y)))
                    throw NotAssociative("polarize_minus: product is not multiplicative");
            }
    }

    BiHomPoissonAlgebra out = a;
    out.bracket = RatTensor3(a.dim, a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        const RatVec li = l.col(i);
        for (std::size_t j = 0; j < a.dim; ++j) {
            const RatVec fiber = a.product.fiber(i, j);
            const RatVec swapped = a.product.eval(k.col(j), li);
            for (std::size_t r = 0; r < a.dim; ++r)
                out.bracket(i, j, r) = fiber[r] - swapped[r];
        }
    }
    return out;
}

BiHomPoissonAlgebra direct_sum(const BiHomPoissonAlgebra& a, const BiHomPoissonAlgebra& b) {
    a.validate_shape();
    b.validate_shape();
    const std::size_t n = a.dim, m = b.dim;
    BiHomPoissonAlgebra s = BiHomPoissonAlgebra::make(n + m);
    for (std::size_t i = 0; i < n; ++i) s.basis_names[i] = a.basis_names[i] + ".A";
    for (std::size_t i = 0; i < m; ++i) s.basis_names[n + i] = b.basis_names[i] + ".B";

    s.alpha = RatMatrix(n + m, n + m);
    s.beta = RatMatrix(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s.alpha(i, j) = a.alpha(i, j);
            s.beta(i, j) = a.beta(i, j);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            s.alpha(n + i, n + j) = b.alpha(i, j);
            s.beta(n + i, n + j) = b.beta(i, j);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r) {
                s.product(i, j, r) = a.product(i, j, r);
                s.bracket(i, j, r) = a.bracket(i, j, r);
            }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t r = 0; r < m; ++r) {
                s.product(n + i, n + j, n + r) = b.product(i, j, r);
                s.bracket(n + i, n + j, n + r) = b.bracket(i, j, r);
            }
    return s;
}

namespace {

EchelonSpan subspace_span(const BiHomPoissonAlgebra& a, const SubspaceBasis& basis) {
    if (basis.ambient_dim != a.dim)
        throw DimensionMismatch("subspace basis: ambient dimension != algebra dimension");
    EchelonSpan s(a.dim);
    for (const RatVec& v : basis.vectors) {
        if (v.size() != a.dim) throw DimensionMismatch("subspace basis: wrong vector length");
        s.insert(v);
    }
    return s;
}

// first violated closure condition, or nullopt
std::optional<std::string> ideal_violation(const BiHomPoissonAlgebra& a, const EchelonSpan& h,
                                           IdealSide side) {
    for (const RatVec& v : h.rows()) {
        if (!h.contains(a.alpha.apply(v))) return "alpha(H) not contained in H";
        if (!h.contains(a.beta.apply(v))) return "beta(H) not contained in H";
    }
    const bool left = side != IdealSide::Right;
    const bool right = side != IdealSide::Left;
    for (std::size_t i = 0; i < a.dim; ++i) {
        const RatVec ei = unit_vec(a.dim, i);
        for (const RatVec& v : h.rows()) {
            if (left) {
                if (!h.contains(a.product.eval(ei, v))) return "mu(A,H) not contained in H";
                if (!h.contains(a.bracket.eval(ei, v))) return "{A,H} not contained in H";
            }
            if (right) {
                if (!h.contains(a.product.eval(v, ei))) return "mu(H,A) not contained in H";
                if (!h.contains(a.bracket.eval(v, ei))) return "{H,A} not contained in H";
            }
        }
    }
    return std::nullopt;
}

} // namespace

bool is_subalgebra(const BiHomPoissonAlgebra& a, const SubspaceBasis& basis) {
    const EchelonSpan h = subspace_span(a, basis);
    for (const RatVec& v : h.rows()) {
        if (!h.contains(a.alpha.apply(v))) return false;
        if (!h.contains(a.beta.apply(v))) return false;
    }
    for (const RatVec& u : h.rows())
        for (const RatVec& v : h.rows()) {
            if (!h.contains(a.product.eval(u, v))) return false;
            if (!h.contains(a.bracket.eval(u, v))) return false;
        }
    return true;
}

bool is_ideal(const BiHomPoissonAlgebra& a, const SubspaceBasis& basis, IdealSide side) {
    return !ideal_violation(a, subspace_span(a, basis), side).has_value();
}

namespace {

// non-pivot coordinates of the ideal's echelon span, ascending
std::vector<std::size_t> complement_columns(const EchelonSpan& h) {
    std::vector<bool> is_pivot(h.ambient(), false);
    for (std::size_t p : h.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> q;
    for (std::size_t j = 0; j < h.ambient(); ++j)
        if (!is_pivot[j]) q.push_back(j);
    return q;
}

RatVec project_to_complement(const EchelonSpan& h, const std::vector<std::size_t>& comp,
                             RatVec v) {
    h.reduce(v); // remainder has zeros at all pivot coordinates
    RatVec out(comp.size(), Rat(0));
    for (std::size_t t = 0; t < comp.size(); ++t) out[t] = v[comp[t]];
    return out;
}

} // namespace

BiHomPoissonAlgebra quotient(const BiHomPoissonAlgebra& a, const SubspaceBasis& ideal_basis) {
    a.validate_shape();
    const EchelonSpan h = subspace_span(a, ideal_basis);
    if (const auto why = ideal_violation(a, h, IdealSide::TwoSided))
        throw NotAnIdeal("quotient: " + *why);

    const std::vector<std::size_t> comp = complement_columns(h);
    const std::size_t q = comp.size();
    BiHomPoissonAlgebra out = BiHomPoissonAlgebra::make(q);
    for (std::size_t t = 0; t < q; ++t) out.basis_names[t] = a.basis_names[comp[t]];

    for (std::size_t t = 0; t < q; ++t) {
        out.alpha.set_col(t, project_to_complement(h, comp, a.alpha.col(comp[t])));
        out.beta.set_col(t, project_to_complement(h, comp, a.beta.col(comp[t])));
        for (std::size_t s = 0; s < q; ++s) {
            const RatVec p = project_to_complement(h, comp, a.product.fiber(comp[t], comp[s]));
            const RatVec b = project_to_complement(h, comp, a.bracket.fiber(comp[t], comp[s]));
            for (std::size_t r = 0; r < q; ++r) {
                out.product(t, s, r) = p[r];
                out.bracket(t, s, r) = b[r];
            }
        }
    }
    return out;
}

RatMatrix quotient_projection(const BiHomPoissonAlgebra& a, const SubspaceBasis& ideal_basis) {
    const EchelonSpan h = subspace_span(a, ideal_basis);
    const std::vector<std::size_t> comp = complement_columns(h);
    RatMatrix pi(comp.size(), a.dim);
    for (std::size_t j = 0; j < a.dim; ++j)
        pi.set_col(j, project_to_complement(h, comp, unit_vec(a.dim, j)));
    return pi;
}

SubspaceBasis centralizer(const BiHomPoissonAlgebra& a) {
    a.validate_shape();
    EchelonSpan rows(a.dim);
    for (std::size_t j = 0; j < a.dim; ++j)
        for (std::size_t r = 0; r < a.dim; ++r) {
            RatVec row_b(a.dim, Rat(0)), row_p(a.dim, Rat(0));
            for (std::size_t i = 0; i < a.dim; ++i) {
                row_b[i] = a.bracket(i, j, r);
                row_p[i] = a.product(i, j, r);
            }
            rows.insert(std::move(row_b));
            rows.insert(std::move(row_p));
        }
    return nullspace_of_span(rows);
}

bool graph_subalgebra_check(const RatMatrix& f, const BiHomPoissonAlgebra& a,
                            const BiHomPoissonAlgebra& b) {
    if (f.rows() != b.dim || f.cols() != a.dim)
        throw DimensionMismatch("graph_subalgebra_check: map shape must be dim(B) x dim(A)");
    const BiHomPoissonAlgebra s = direct_sum(a, b);
    SubspaceBasis graph;
    graph.ambient_dim = s.dim;
    for (std::size_t i = 0; i < a.dim; ++i) {
        RatVec v(s.dim, Rat(0));
        v[i] = 1;
        const RatVec fi = f.col(i);
        for (std::size_t r = 0; r < b.dim; ++r) v[a.dim + r] = fi[r];
        graph.vectors.push_back(std::move(v));
    }
    return is_subalgebra(s, graph);
}

NonrigidityReport nonrigidity_witness(const BiHomPoissonAlgebra& p, const TwistingPair& tp) {
    p.validate_shape();
    if (!p.alpha.is_identity() || !p.beta.is_identity())
        throw HypothesisViolated("nonrigidity_witness: input must be untwisted (alpha=beta=id)");
    require_same_dim(tp.alpha_prime, p.dim, "nonrigidity alpha");
    require_same_dim(tp.beta_prime, p.dim, "nonrigidity beta");
    if (!commute_check(tp.alpha_prime, tp.beta_prime))
        throw NonCommutingTwists("nonrigidity_witness: the two maps do not commute");
    if (!is_operation_endo(tp.alpha_prime, p))
        throw TwistNotEndomorphism("nonrigidity_witness: alpha is not a morphism");
    if (!is_operation_endo(tp.beta_prime, p))
        throw TwistNotEndomorphism("nonrigidity_witness: beta is not a morphism");

    const std::size_t n = p.dim;
    RatTensor3 mu_t(n, n, n), br_t(n, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const RatVec ai = tp.alpha_prime.col(i);
        for (std::size_t j = 0; j < n; ++j) {
            const RatVec bj = tp.beta_prime.col(j);
            const RatVec m = p.product.eval(ai, bj);
            const RatVec q = p.bracket.eval(ai, bj);
            for (std::size_t k = 0; k < n; ++k) {
                mu_t(i, j, k) = m[k];
                br_t(i, j, k) = q[k];
            }
        }
    }

    NonrigidityReport rep;
    rep.trivial = mu_t.is_zero() && br_t.is_zero();

    for (std::size_t i = 0; i < n && rep.associator_vanishes; ++i)
        for (std::size_t j = 0; j < n && rep.associator_vanishes; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // plain associator of the twisted product, no twist maps applied
                RatVec r = vec_sub(mu_t.eval(mu_t.fiber(i, j), unit_vec(n, k)),
                                   mu_t.eval(unit_vec(n, i), mu_t.fiber(j, k)));
                if (!vec_is_zero(r)) {
                    rep.associator_vanishes = false;
                    rep.assoc_witness = {i, j, k};
                    rep.assoc_residual = std::move(r);
                    break;
                }
            }

    for (std::size_t i = 0; i < n && rep.jacobi_holds; ++i)
        for (std::size_t j = 0; j < n && rep.jacobi_holds; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RatVec r = br_t.eval(br_t.fiber(i, j), unit_vec(n, k));
                r = vec_add(r, br_t.eval(br_t.fiber(j, k), unit_vec(n, i)));
                r = vec_add(r, br_t.eval(br_t.fiber(k, i), unit_vec(n, j)));
                if (!vec_is_zero(r)) {
                    rep.jacobi_holds = false;
                    rep.jacobi_witness = {i, j, k};
                    rep.jacobi_residual = std::move(r);
                    break;
                }
            }

    rep.witness_found = !rep.associator_vanishes || !rep.jacobi_holds;
    return rep;
}

BiHomPoissonAlgebra build_example_e1(const Rat& a, const Rat& b) {
    if (a == 0 || a == 1)
        throw ParameterOutOfDomain("example e1: parameter a must differ from 0 and 1");

    BiHomPoissonAlgebra alg = BiHomPoissonAlgebra::make(2);
    const Rat one_minus_a = 1 - a;

    // alpha(e1)=e1, alpha(e2)=b(1-a)/a e1 + a e2
    alg.alpha(0, 1) = b * one_minus_a / a;
    alg.alpha(1, 1) = a;
    // beta(e1)=e1, beta(e2)=b e1 + (1-a) e2
    alg.beta(0, 1) = b;
    alg.beta(1, 1) = one_minus_a;

    alg.product(0, 0, 0) = 1;                    // mu(e1,e1)=e1
    alg.product(0, 1, 0) = b;                    // mu(e1,e2)=b e1+(1-a) e2
    alg.product(0, 1, 1) = one_minus_a;
    alg.product(1, 0, 0) = b * one_minus_a / a;  // mu(e2,e1)=b(1-a)/a e1 + a e2
    alg.product(1, 0, 1) = a;
    alg.product(1, 1, 1) = b / a;                // mu(e2,e2)=b/a e2

    return polarize_minus(alg);
}

std::vector<std::vector<int>> sym_monomials(std::size_t nvars, std::size_t max_deg) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur(nvars, 0);
    // enumerate all exponent vectors with total degree <= max_deg
    const auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var + 1 == nvars) {
            for (int d = 0; d <= remaining; ++d) {
                cur[var] = d;
                all.push_back(cur);
            }
            cur[var] = 0;
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            cur[var] = d;
            self(self, var + 1, remaining - d);
        }
        cur[var] = 0;
    };
    if (nvars == 0) return {std::vector<int>{}};
    rec(rec, 0, static_cast<int>(max_deg));

    std::sort(all.begin(), all.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
        int dx = 0, dy = 0;
        for (int e : x) dx += e;
        for (int e : y) dy += e;
        if (dx != dy) return dx < dy;
        return x > y; // descending lex inside a degree: e before f before h
    });
    return all;
}

std::size_t sym_monomial_index(std::size_t nvars, std::size_t max_deg,
                               const std::vector<int>& exps) {
    const auto all = sym_monomials(nvars, max_deg);
    const auto it = std::find(all.begin(), all.end(), exps);
    if (it == all.end()) throw DimensionMismatch("sym_monomial_index: exponent vector not in basis");
    return static_cast<std::size_t>(it - all.begin());
}

std::string sym_monomial_name(const std::vector<int>& exps,
                              const std::vector<std::string>& gen_names) {
    std::string name;
    for (std::size_t g = 0; g < exps.size(); ++g) {
        if (exps[g] == 0) continue;
        if (!name.empty()) name += "*";
        name += gen_names[g];
        if (exps[g] > 1) name += "^" + std::to_string(exps[g]);
    }
    return name.empty() ? "1" : name;
}

BiHomPoissonAlgebra build_truncated_sym_poisson(const LieStructure& l, std::size_t max_deg) {
    if (max_deg == 0) throw ParameterOutOfDomain("truncated symmetric algebra: max_deg must be >= 1");
    const std::size_t g = l.dim;
    if (l.bracket.d1() != g || l.bracket.d2() != g || l.bracket.d3() != g)
        throw DimensionMismatch("LieStructure: bracket tensor shape != dim^3");

    // antisymmetry and classical Jacobi of the input structure constants
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t k = 0; k < g; ++k)
                if (l.bracket(i, j, k) != -l.bracket(j, i, k))
                    throw NotALieAlgebra("LieStructure: bracket is not antisymmetric");
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t k = 0; k < g; ++k) {
                RatVec r = l.bracket.eval(unit_vec(g, i), l.bracket.fiber(j, k));
                r = vec_add(r, l.bracket.eval(unit_vec(g, j), l.bracket.fiber(k, i)));
                r = vec_add(r, l.bracket.eval(unit_vec(g, k), l.bracket.fiber(i, j)));
                if (!vec_is_zero(r)) throw NotALieAlgebra("LieStructure: Jacobi identity fails");
            }

    std::vector<std::string> gen_names = l.basis_names;
    if (gen_names.size() != g) {
        gen_names.clear();
        for (std::size_t i = 0; i < g; ++i) gen_names.push_back("x" + std::to_string(i + 1));
    }

    const auto monos = sym_monomials(g, max_deg);
    const std::size_t n = monos.size();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[monos[i]] = i;

    BiHomPoissonAlgebra alg = BiHomPoissonAlgebra::make(n);
    for (std::size_t i = 0; i < n; ++i) alg.basis_names[i] = sym_monomial_name(monos[i], gen_names);

    const auto total = [](const std::vector<int>& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    };

    // truncated polynomial multiplication: monomial * monomial, degree > max_deg -> 0
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<int> e(monos[i]);
            for (std::size_t v = 0; v < g; ++v) e[v] += monos[j][v];
            if (total(e) <= static_cast<int>(max_deg)) alg.product(i, j, index.at(e)) = 1;
        }

    // {F,G} = sum_{u<v} c_{uv}^k e_k (dF/de_u dG/de_v - dF/de_v dG/de_u), truncated
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::vector<int>& mi = monos[i];
            const std::vector<int>& mj = monos[j];
            for (std::size_t u = 0; u < g; ++u)
                for (std::size_t v = u + 1; v < g; ++v)
                    for (std::size_t k = 0; k < g; ++k) {
                        const Rat& c = l.bracket(u, v, k);
                        if (c == 0) continue;
                        // (d_u mi)(d_v mj) e_k
                        if (mi[u] > 0 && mj[v] > 0) {
                            std::vector<int> e(mi);
                            for (std::size_t w = 0; w < g; ++w) e[w] += mj[w];
                            e[u] -= 1;
                            e[v] -= 1;
                            e[k] += 1;
                            if (total(e) <= static_cast<int>(max_deg))
                                alg.bracket(i, j, index.at(e)) += c * mi[u] * mj[v];
                        }
                        // -(d_v mi)(d_u mj) e_k
                        if (mi[v] > 0 && mj[u] > 0) {
                            std::vector<int> e(mi);
                            for (std::size_t w = 0; w < g; ++w) e[w] += mj[w];
                            e[u] -= 1;
                            e[v] -= 1;
                            e[k] += 1;
                            if (total(e) <= static_cast<int>(max_deg))
                                alg.bracket(i, j, index.at(e)) -= c * mi[v] * mj[u];
                        }
                    }
        }

    return alg;
}

LieStructure sl2_structure() {
    LieStructure l;
    l.dim = 3;
    l.basis_names = {"e", "f", "h"};
    l.bracket = RatTensor3(3, 3, 3);
    // [h,e] = 2e, [h,f] = -2f, [e,f] = h  over (e,f,h) = (0,1,2)
    l.bracket(2, 0, 0) = 2;
    l.bracket(0, 2, 0) = -2;
    l.bracket(2, 1, 1) = -2;
    l.bracket(1, 2, 1) = 2;
    l.bracket(0, 1, 2) = 1;
    l.bracket(1, 0, 2) = -1;
    return l;
}

RatMatrix diagonal_monomial_map(std::size_t nvars, std::size_t max_deg,
                                const std::vector<Rat>& scalars) {
    if (scalars.size() != nvars)
        throw DimensionMismatch("diagonal_monomial_map: one scalar per generator required");
    const auto monos = sym_monomials(nvars, max_deg);
    RatMatrix m(monos.size(), monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
        Rat c(1);
        for (std::size_t g = 0; g < nvars; ++g)
            for (int t = 0; t < monos[i][g]; ++t) c *= scalars[g];
        m(i, i) = c;
    }
    return m;
}

} // namespace bihom
