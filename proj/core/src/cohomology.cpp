#include <bihom/cohomology.hpp>
#include <bihom/errors.hpp>

namespace bihom {

namespace {

void degree1_rows(const BiHomPoissonAlgebra& a, bool strict, EchelonSpan& rows) {
    const std::size_t n = a.dim;
    // f alpha = alpha f and f beta = beta f
    for (const RatMatrix* m : {&a.alpha, &a.beta}) {
        if (m->is_identity()) continue;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                RatVec row(n * n, Rat(0));
                for (std::size_t p = 0; p < n; ++p) {
                    row[r * n + p] += (*m)(p, c);
                    row[p * n + c] -= (*m)(r, p);
                }
                rows.insert(std::move(row));
            }
    }
    if (strict) {
        // f(mu(x,y)) = mu(f(x),y) + mu(x,f(y)) on all basis pairs
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const RatVec fib = a.product.fiber(i, j);
                for (std::size_t r = 0; r < n; ++r) {
                    RatVec row(n * n, Rat(0));
                    for (std::size_t p = 0; p < n; ++p) {
                        row[r * n + p] += fib[p];
                        row[p * n + i] -= a.product(p, j, r);
                        row[p * n + j] -= a.product(i, p, r);
                    }
                    rows.insert(std::move(row));
                }
            }
    }
}

void degree2_rows(const BiHomPoissonAlgebra& a, bool strict, EchelonSpan& rows) {
    const std::size_t n = a.dim;
    const auto idx = [n](std::size_t i, std::size_t j, std::size_t k) {
        return (i * n + j) * n + k;
    };

    // plain skew-symmetry f(x,y) = -f(y,x)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                RatVec row(n * n * n, Rat(0));
                row[idx(i, j, k)] += 1;
                row[idx(j, i, k)] += 1;
                rows.insert(std::move(row));
            }

    // equivariance f(m(x), m(y)) = m(f(x,y)) for m in {alpha, beta}
    for (const RatMatrix* m : {&a.alpha, &a.beta}) {
        if (m->is_identity()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t r = 0; r < n; ++r) {
                    RatVec row(n * n * n, Rat(0));
                    for (std::size_t p = 0; p < n; ++p) {
                        const Rat& mpi = (*m)(p, i);
                        if (mpi == 0) continue;
                        for (std::size_t q = 0; q < n; ++q) {
                            const Rat& mqj = (*m)(q, j);
                            if (mqj != 0) row[idx(p, q, r)] += mpi * mqj;
                        }
                    }
                    for (std::size_t s = 0; s < n; ++s) row[idx(i, j, s)] -= (*m)(r, s);
                    rows.insert(std::move(row));
                }
    }

    if (strict) {
        // Leibniz rule in the first argument, the second frozen at basis elements:
        // f(mu(u,v), y) = mu(f(u,y), v) + mu(u, f(v,y))
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const RatVec fib = a.product.fiber(u, v);
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t r = 0; r < n; ++r) {
                        RatVec row(n * n * n, Rat(0));
                        for (std::size_t p = 0; p < n; ++p) {
                            row[idx(p, j, r)] += fib[p];
                            row[idx(u, j, p)] -= a.product(p, v, r);
                            row[idx(v, j, p)] -= a.product(u, p, r);
                        }
                        rows.insert(std::move(row));
                    }
            }
        // ... and in the second argument
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const RatVec fib = a.product.fiber(u, v);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t r = 0; r < n; ++r) {
                        RatVec row(n * n * n, Rat(0));
                        for (std::size_t p = 0; p < n; ++p) {
                            row[idx(i, p, r)] += fib[p];
                            row[idx(i, u, p)] -= a.product(p, v, r);
                            row[idx(i, v, p)] -= a.product(u, p, r);
                        }
                        rows.insert(std::move(row));
                    }
            }
    }
}

} // namespace

SubspaceBasis cochain_space(const BiHomPoissonAlgebra& a, int degree, bool strict) {
    a.validate_shape();
    if (degree != 1 && degree != 2)
        throw ParameterOutOfDomain("cochain_space: degree must be 1 or 2");
    const std::size_t n = a.dim;
    const std::size_t width = degree == 1 ? n * n : n * n * n;
    EchelonSpan rows(width);
    if (degree == 1)
        degree1_rows(a, strict, rows);
    else
        degree2_rows(a, strict, rows);
    return nullspace_of_span(rows);
}

RatTensor3 delta1(const BiHomPoissonAlgebra& a, const RatMatrix& f) {
    a.validate_shape();
    if (f.rows() != a.dim || f.cols() != a.dim)
        throw DimensionMismatch("delta1: cochain shape != dim^2");
    const std::size_t n = a.dim;
    const RatMatrix ainv_b = invert(a.alpha) * a.beta;

    RatTensor3 out(n, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const RatVec ai = a.alpha.col(i);
        const RatVec fi = f.col(i);
        const RatVec ki = ainv_b.col(i);
        for (std::size_t j = 0; j < n; ++j) {
            RatVec r = a.bracket.eval(ai, f.col(j));
            r = vec_sub(r, a.bracket.eval(a.alpha.col(j), fi));
            r = vec_sub(r, f.apply(a.bracket.eval(ki, unit_vec(n, j))));
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = r[k];
        }
    }
    return out;
}

namespace {

RatTensor4 delta2_impl(const BiHomPoissonAlgebra& a, const RatTensor3& f, bool alternating) {
    a.validate_shape();
    if (f.d1() != a.dim || f.d2() != a.dim || f.d3() != a.dim)
        throw DimensionMismatch("delta2: cochain shape != dim^3");
    const std::size_t n = a.dim;
    const RatMatrix ab = a.alpha * a.beta;
    const RatMatrix ainv_b = invert(a.alpha) * a.beta;

    const auto f_eval = [&](const RatVec& x, const RatVec& y) { return f.eval(x, y); };

    RatTensor4 out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const RatVec ei = unit_vec(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const RatVec ej = unit_vec(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                const RatVec ek = unit_vec(n, k);
                RatVec r = a.bracket.eval(ab.col(i), f.fiber(j, k));
                if (alternating) {
                    r = vec_sub(r, a.bracket.eval(ab.col(j), f.fiber(i, k)));
                    r = vec_add(r, a.bracket.eval(ab.col(k), f.fiber(i, j)));
                }
                r = vec_sub(r, f_eval(a.bracket.eval(ainv_b.col(i), ej), a.beta.col(k)));
                r = vec_add(r, f_eval(a.bracket.eval(ainv_b.col(i), ek), a.beta.col(j)));
                r = vec_sub(r, f_eval(a.bracket.eval(ainv_b.col(j), ek), a.beta.col(i)));
                for (std::size_t s = 0; s < n; ++s) out(i, j, k, s) = r[s];
            }
        }
    }
    return out;
}

} // namespace

RatTensor4 delta2(const BiHomPoissonAlgebra& a, const RatTensor3& f) {
    return delta2_impl(a, f, true);
}

RatTensor4 delta2_cancelling(const BiHomPoissonAlgebra& a, const RatTensor3& f) {
    return delta2_impl(a, f, false);
}

CohomologyReport cohomology_dims(const BiHomPoissonAlgebra& a, bool strict) {
    const std::size_t n = a.dim;
    const SubspaceBasis c1 = cochain_space(a, 1, strict);
    const SubspaceBasis c2 = cochain_space(a, 2, strict);

    EchelonSpan c2_span(n * n * n);
    for (const RatVec& v : c2.vectors) c2_span.insert(v);

    CohomologyReport rep;
    rep.strict = strict;
    rep.dim_C1 = c1.dim();
    rep.dim_C2 = c2.dim();

    // delta1 images: rank gives B^2, rank-nullity gives Z^1
    EchelonSpan b2_span(n * n * n);
    std::vector<RatTensor3> images;
    images.reserve(c1.dim());
    for (const RatVec& v : c1.vectors) {
        RatMatrix f(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) f(r, c) = v[r * n + c];
        RatTensor3 t = delta1(a, f);

        for (std::size_t i = 0; i < n && rep.delta1_outputs_skew; ++i)
            for (std::size_t j = 0; j < n && rep.delta1_outputs_skew; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (t(i, j, k) != -t(j, i, k)) {
                        rep.delta1_outputs_skew = false;
                        break;
                    }
        if (!c2_span.contains(t.entries())) rep.delta1_outputs_in_C2 = false;
        if (!delta2(a, t).is_zero()) rep.b2_subset_z2 = false;

        b2_span.insert(t.entries());
        images.push_back(std::move(t));
    }
    rep.dim_B2 = b2_span.dim();
    rep.dim_Z1 = rep.dim_C1 - rep.dim_B2;

    // delta2 on the degree-2 space: Z^2 = ker
    EchelonSpan d2_image(n * n * n * n);
    for (const RatVec& v : c2.vectors) {
        RatTensor3 g(n, n, n);
        g.entries() = v;
        d2_image.insert(delta2(a, g).e);
    }
    rep.dim_Z2 = rep.dim_C2 - d2_image.dim();

    rep.b2_subset_z2 = rep.b2_subset_z2 && rep.delta1_outputs_in_C2;
    rep.dim_H2 = rep.b2_subset_z2 ? rep.dim_Z2 - rep.dim_B2 : 0;
    return rep;
}

} // namespace bihom
