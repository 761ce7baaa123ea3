#include <bihom/derivations.hpp>
#include <bihom/errors.hpp>

namespace bihom {

const char* operator_space_label(OperatorSpaceKind kind) {
    switch (kind) {
        case OperatorSpaceKind::Derivation: return "der";
        case OperatorSpaceKind::GeneralizedDerivation: return "gder";
        case OperatorSpaceKind::QuasiDerivation: return "qder";
        case OperatorSpaceKind::Centroid: return "c";
        case OperatorSpaceKind::QuasiCentroid: return "qc";
        case OperatorSpaceKind::CentralDerivation: return "zder";
        case OperatorSpaceKind::Commutant: return "commutant";
    }
    return "unknown";
}

RatMatrix matrix_from_flat(const RatVec& v, std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    return m;
}

RatVec flat_from_matrix(const RatMatrix& m) {
    return m.entries();
}

RatMatrix OperatorSpace::matrix_at(std::size_t idx) const {
    return matrix_from_flat(basis.vectors[idx], alg_dim);
}

namespace {

// rows of "X M - M X = 0" for the unknown block at offset `off` in a `width`-wide system
void commutation_rows(EchelonSpan& rows, std::size_t width, std::size_t off, const RatMatrix& m) {
    const std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            RatVec row(width, Rat(0));
            for (std::size_t p = 0; p < n; ++p) {
                row[off + r * n + p] += m(p, c);
                row[off + p * n + c] -= m(r, p);
            }
            rows.insert(std::move(row));
        }
}

// coeff += T(D e_i, M e_j)[r] as a function of vec(D) at block offset `off`
void slot1_coeffs(RatVec& row, std::size_t off, const Rat& sign, const RatTensor3& t,
                  const RatMatrix& m, std::size_t n, std::size_t i, std::size_t j,
                  std::size_t r) {
    for (std::size_t p = 0; p < n; ++p) {
        Rat acc(0);
        for (std::size_t q = 0; q < n; ++q) {
            const Rat& tv = t(p, q, r);
            if (tv != 0 && m(q, j) != 0) acc += m(q, j) * tv;
        }
        if (acc != 0) row[off + p * n + i] += sign * acc;
    }
}

// coeff += T(M e_i, D e_j)[r]
void slot2_coeffs(RatVec& row, std::size_t off, const Rat& sign, const RatTensor3& t,
                  const RatMatrix& m, std::size_t n, std::size_t i, std::size_t j,
                  std::size_t r) {
    for (std::size_t p = 0; p < n; ++p) {
        Rat acc(0);
        for (std::size_t q = 0; q < n; ++q) {
            const Rat& tv = t(q, p, r);
            if (tv != 0 && m(q, i) != 0) acc += m(q, i) * tv;
        }
        if (acc != 0) row[off + p * n + j] += sign * acc;
    }
}

// coeff += X(T(e_i, e_j))[r] for the block at `off`
void applied_coeffs(RatVec& row, std::size_t off, const Rat& sign, const RatTensor3& t,
                    std::size_t n, std::size_t i, std::size_t j, std::size_t r) {
    for (std::size_t p = 0; p < n; ++p) {
        const Rat& f = t(i, j, p);
        if (f != 0) row[off + r * n + p] += sign * f;
    }
}

struct BlockRref {
    std::vector<RatVec> pivot_rows;    // D part nonzero, D parts in RREF
    std::vector<RatVec> leftover_rows; // D part zero
};

// Gauss-Jordan restricted to the first `block` columns, full rows carried along.
BlockRref block_rref(std::vector<RatVec> rows, std::size_t block) {
    std::size_t next = 0;
    std::vector<std::size_t> pivot_of_row;
    for (std::size_t col = 0; col < block && next < rows.size(); ++col) {
        std::size_t sel = next;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[next], rows[sel]);
        const Rat inv = 1 / rows[next][col];
        for (Rat& x : rows[next]) x *= inv;
        for (std::size_t t = 0; t < rows.size(); ++t) {
            if (t == next || rows[t][col] == 0) continue;
            const Rat f(rows[t][col]);
            for (std::size_t j = 0; j < rows[t].size(); ++j)
                if (rows[next][j] != 0) rows[t][j] -= f * rows[next][j];
        }
        pivot_of_row.push_back(col);
        ++next;
    }
    BlockRref out;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        bool zero_block = true;
        for (std::size_t j = 0; j < block; ++j)
            if (rows[t][j] != 0) {
                zero_block = false;
                break;
            }
        if (zero_block) {
            bool all_zero = true;
            for (const Rat& x : rows[t])
                if (x != 0) {
                    all_zero = false;
                    break;
                }
            if (!all_zero) out.leftover_rows.push_back(std::move(rows[t]));
        } else {
            out.pivot_rows.push_back(std::move(rows[t]));
        }
    }
    return out;
}

} // namespace

OperatorSpace solve_commutant(const BiHomPoissonAlgebra& a) {
    a.validate_shape();
    const std::size_t n = a.dim, w = n * n;
    EchelonSpan rows(w);
    commutation_rows(rows, w, 0, a.alpha);
    commutation_rows(rows, w, 0, a.beta);
    OperatorSpace s;
    s.kind = OperatorSpaceKind::Commutant;
    s.alg_dim = n;
    s.basis = nullspace_of_span(rows);
    return s;
}

OperatorSpace solve_space(const BiHomPoissonAlgebra& a, OperatorSpaceKind kind, unsigned k,
                          unsigned l) {
    a.validate_shape();
    if (kind == OperatorSpaceKind::Commutant) {
        OperatorSpace s = solve_commutant(a);
        s.k = k;
        s.l = l;
        return s;
    }

    const std::size_t n = a.dim, w = n * n;
    const RatMatrix m = a.alpha.pow(k) * a.beta.pow(l);
    const bool joint = kind == OperatorSpaceKind::GeneralizedDerivation ||
                       kind == OperatorSpaceKind::QuasiDerivation;
    const std::size_t width = joint ? 3 * w : w;

    EchelonSpan rows(width);
    commutation_rows(rows, width, 0, a.alpha);
    commutation_rows(rows, width, 0, a.beta);
    if (joint) {
        commutation_rows(rows, width, w, a.alpha);
        commutation_rows(rows, width, w, a.beta);
        commutation_rows(rows, width, 2 * w, a.alpha);
        commutation_rows(rows, width, 2 * w, a.beta);
    }

    const RatTensor3* tensors[2] = {&a.bracket, &a.product};
    for (int which = 0; which < 2; ++which) {
        const RatTensor3& t = *tensors[which];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t r = 0; r < n; ++r) {
                    switch (kind) {
                        case OperatorSpaceKind::Derivation: {
                            // D(T(x,y)) - T(Dx,My) - T(Mx,Dy) = 0
                            RatVec row(width, Rat(0));
                            applied_coeffs(row, 0, Rat(1), t, n, i, j, r);
                            slot1_coeffs(row, 0, Rat(-1), t, m, n, i, j, r);
                            slot2_coeffs(row, 0, Rat(-1), t, m, n, i, j, r);
                            rows.insert(std::move(row));
                            break;
                        }
                        case OperatorSpaceKind::Centroid: {
                            // T(Dx,My) = D(T(x,y)) and T(Mx,Dy) = D(T(x,y))
                            RatVec r1(width, Rat(0));
                            slot1_coeffs(r1, 0, Rat(1), t, m, n, i, j, r);
                            applied_coeffs(r1, 0, Rat(-1), t, n, i, j, r);
                            rows.insert(std::move(r1));
                            RatVec r2(width, Rat(0));
                            slot2_coeffs(r2, 0, Rat(1), t, m, n, i, j, r);
                            applied_coeffs(r2, 0, Rat(-1), t, n, i, j, r);
                            rows.insert(std::move(r2));
                            break;
                        }
                        case OperatorSpaceKind::QuasiCentroid: {
                            // T(Dx,My) = T(Mx,Dy)
                            RatVec row(width, Rat(0));
                            slot1_coeffs(row, 0, Rat(1), t, m, n, i, j, r);
                            slot2_coeffs(row, 0, Rat(-1), t, m, n, i, j, r);
                            rows.insert(std::move(row));
                            break;
                        }
                        case OperatorSpaceKind::CentralDerivation: {
                            // T(Dx,My) = 0 and D(T(x,y)) = 0
                            RatVec r1(width, Rat(0));
                            slot1_coeffs(r1, 0, Rat(1), t, m, n, i, j, r);
                            rows.insert(std::move(r1));
                            RatVec r2(width, Rat(0));
                            applied_coeffs(r2, 0, Rat(1), t, n, i, j, r);
                            rows.insert(std::move(r2));
                            break;
                        }
                        case OperatorSpaceKind::QuasiDerivation: {
                            // T(Dx,My) + T(Mx,Dy) - C(T(x,y)) = 0 with one companion C
                            // shared by the bracket and product clauses (the blockwise
                            // D' = D'' rows below tie the two slots together)
                            RatVec row(width, Rat(0));
                            slot1_coeffs(row, 0, Rat(1), t, m, n, i, j, r);
                            slot2_coeffs(row, 0, Rat(1), t, m, n, i, j, r);
                            applied_coeffs(row, which == 0 ? w : 2 * w, Rat(-1), t, n, i, j, r);
                            rows.insert(std::move(row));
                            break;
                        }
                        case OperatorSpaceKind::GeneralizedDerivation: {
                            // T(Dx,My) + T(Mx,D'y) - D''(T(x,y)) = 0 for both clauses
                            RatVec row(width, Rat(0));
                            slot1_coeffs(row, 0, Rat(1), t, m, n, i, j, r);
                            slot2_coeffs(row, w, Rat(1), t, m, n, i, j, r);
                            applied_coeffs(row, 2 * w, Rat(-1), t, n, i, j, r);
                            rows.insert(std::move(row));
                            break;
                        }
                        case OperatorSpaceKind::Commutant: break; // handled above
                    }
                }
    }

    if (kind == OperatorSpaceKind::QuasiDerivation) {
        // shared companion: D' = D''
        for (std::size_t p = 0; p < w; ++p) {
            RatVec row(width, Rat(0));
            row[w + p] = 1;
            row[2 * w + p] = -1;
            rows.insert(std::move(row));
        }
    }

    OperatorSpace s;
    s.kind = kind;
    s.k = k;
    s.l = l;
    s.alg_dim = n;

    const SubspaceBasis sol = nullspace_of_span(rows);
    if (!joint) {
        s.basis = sol;
        return s;
    }

    BlockRref br = block_rref(sol.vectors, w);
    s.basis.ambient_dim = w;
    for (const RatVec& full : br.pivot_rows) {
        RatVec d(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(w));
        RatVec dp(full.begin() + static_cast<std::ptrdiff_t>(w),
                  full.begin() + static_cast<std::ptrdiff_t>(2 * w));
        RatVec ds(full.begin() + static_cast<std::ptrdiff_t>(2 * w), full.end());
        s.basis.vectors.push_back(std::move(d));
        s.companion_prime.push_back(matrix_from_flat(dp, n));
        s.companion_second.push_back(matrix_from_flat(ds, n));
    }
    s.companion_only_dim = br.leftover_rows.size();
    return s;
}

std::pair<RatMatrix, RatMatrix> sigma_maps(const BiHomPoissonAlgebra& a, const RatMatrix& w) {
    return {a.alpha * w, a.beta * w};
}

bool in_commutant(const BiHomPoissonAlgebra& a, const RatMatrix& d) {
    return d * a.alpha == a.alpha * d && d * a.beta == a.beta * d;
}

namespace {

RatMatrix twist_power(const BiHomPoissonAlgebra& a, unsigned k, unsigned l) {
    return a.alpha.pow(k) * a.beta.pow(l);
}

} // namespace

bool satisfies_derivation(const BiHomPoissonAlgebra& a, const RatMatrix& d, unsigned k,
                          unsigned l) {
    if (!in_commutant(a, d)) return false;
    const RatMatrix m = twist_power(a, k, l);
    const std::size_t n = a.dim;
    for (const RatTensor3* t : {&a.bracket, &a.product})
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                RatVec lhs = d.apply(t->fiber(i, j));
                RatVec rhs = t->eval(d.col(i), m.col(j));
                rhs = vec_add(rhs, t->eval(m.col(i), d.col(j)));
                if (lhs != rhs) return false;
            }
    return true;
}

bool satisfies_centroid(const BiHomPoissonAlgebra& a, const RatMatrix& d, unsigned k, unsigned l) {
    if (!in_commutant(a, d)) return false;
    const RatMatrix m = twist_power(a, k, l);
    for (const RatTensor3* t : {&a.bracket, &a.product})
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                const RatVec want = d.apply(t->fiber(i, j));
                if (t->eval(d.col(i), m.col(j)) != want) return false;
                if (t->eval(m.col(i), d.col(j)) != want) return false;
            }
    return true;
}

bool satisfies_quasicentroid(const BiHomPoissonAlgebra& a, const RatMatrix& d, unsigned k,
                             unsigned l) {
    if (!in_commutant(a, d)) return false;
    const RatMatrix m = twist_power(a, k, l);
    for (const RatTensor3* t : {&a.bracket, &a.product})
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                if (t->eval(d.col(i), m.col(j)) != t->eval(m.col(i), d.col(j))) return false;
    return true;
}

bool satisfies_central_derivation(const BiHomPoissonAlgebra& a, const RatMatrix& d, unsigned k,
                                  unsigned l) {
    if (!in_commutant(a, d)) return false;
    const RatMatrix m = twist_power(a, k, l);
    for (const RatTensor3* t : {&a.bracket, &a.product})
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                if (!vec_is_zero(t->eval(d.col(i), m.col(j)))) return false;
                if (!vec_is_zero(d.apply(t->fiber(i, j)))) return false;
            }
    return true;
}

bool satisfies_quasiderivation_with(const BiHomPoissonAlgebra& a, const RatMatrix& d,
                                    const RatMatrix& companion, unsigned k, unsigned l) {
    if (!in_commutant(a, d) || !in_commutant(a, companion)) return false;
    const RatMatrix m = twist_power(a, k, l);
    for (const RatTensor3* t : {&a.bracket, &a.product})
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                RatVec lhs = t->eval(d.col(i), m.col(j));
                lhs = vec_add(lhs, t->eval(m.col(i), d.col(j)));
                if (lhs != companion.apply(t->fiber(i, j))) return false;
            }
    return true;
}

bool satisfies_generalized_derivation_with(const BiHomPoissonAlgebra& a, const RatMatrix& d,
                                           const RatMatrix& d_prime, const RatMatrix& d_second,
                                           unsigned k, unsigned l) {
    if (!in_commutant(a, d) || !in_commutant(a, d_prime) || !in_commutant(a, d_second))
        return false;
    const RatMatrix m = twist_power(a, k, l);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            RatVec lhs = a.bracket.eval(d.col(i), m.col(j));
            lhs = vec_add(lhs, a.bracket.eval(m.col(i), d_prime.col(j)));
            if (lhs != d_second.apply(a.bracket.fiber(i, j))) return false;

            RatVec lhs2 = a.product.eval(d.col(i), m.col(j));
            lhs2 = vec_add(lhs2, a.product.eval(m.col(i), d_prime.col(j)));
            if (lhs2 != d_second.apply(a.product.fiber(i, j))) return false;
        }
    return true;
}

bool space_contains(const OperatorSpace& space, const RatMatrix& d) {
    EchelonSpan span(space.basis.ambient_dim);
    for (const RatVec& v : space.basis.vectors) span.insert(v);
    return span.contains(flat_from_matrix(d));
}

} // namespace bihom
