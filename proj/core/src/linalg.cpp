#include <bihom/errors.hpp>
#include <bihom/linalg.hpp>

#include <algorithm>

namespace bihom {

bool EchelonSpan::reduce(RatVec& v) const {
    // Rows are fully reduced and sorted by pivot, so one pass eliminates everything.
    bool zero = true;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const Rat& c = v[pivots_[t]];
        if (c != 0) {
            const Rat f(c);
            const RatVec& r = rows_[t];
            for (std::size_t j = pivots_[t]; j < ambient_; ++j)
                if (r[j] != 0) v[j] -= f * r[j];
        }
    }
    for (const Rat& x : v)
        if (x != 0) { zero = false; break; }
    return zero;
}

bool EchelonSpan::insert(RatVec v) {
    if (v.size() != ambient_) throw DimensionMismatch("EchelonSpan: wrong vector length");
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (v[p] == 0) ++p;
    if (v[p] != 1) {
        const Rat inv = 1 / v[p];
        for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
    }
    // keep existing rows reduced against the new pivot
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        Rat& c = rows_[t][p];
        if (c != 0) {
            const Rat f(c);
            for (std::size_t j = p; j < ambient_; ++j)
                if (v[j] != 0) rows_[t][j] -= f * v[j];
        }
    }
    const auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
}

bool EchelonSpan::coordinates(const RatVec& v, RatVec& coords) const {
    coords.assign(rows_.size(), Rat(0));
    RatVec w(v);
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        const Rat c = w[pivots_[t]];
        coords[t] = c;
        if (c != 0) {
            const RatVec& r = rows_[t];
            for (std::size_t j = pivots_[t]; j < ambient_; ++j)
                if (r[j] != 0) w[j] -= c * r[j];
        }
    }
    return vec_is_zero(w);
}

SubspaceBasis EchelonSpan::basis() const {
    SubspaceBasis b;
    b.ambient_dim = ambient_;
    b.vectors = rows_;
    return b;
}

EchelonSpan span_of(const std::vector<RatVec>& vectors, std::size_t ambient) {
    EchelonSpan s(ambient);
    for (const RatVec& v : vectors) s.insert(v);
    return s;
}

RatMatrix rref(const RatMatrix& m) {
    EchelonSpan s(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
    RatMatrix r(s.dim(), m.cols());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s.rows()[i][j];
    return r;
}

std::size_t rank(const RatMatrix& m) {
    EchelonSpan s(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
    return s.dim();
}

SubspaceBasis nullspace_of_span(const EchelonSpan& span) {
    const std::size_t n = span.ambient();
    const auto& pivots = span.pivots();
    const auto& rows = span.rows();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    SubspaceBasis b;
    b.ambient_dim = n;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(n, Rat(0));
        v[f] = 1;
        for (std::size_t t = 0; t < rows.size(); ++t) v[pivots[t]] = -rows[t][f];
        b.vectors.push_back(std::move(v));
    }
    return b;
}

SubspaceBasis nullspace(const RatMatrix& m) {
    EchelonSpan s(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) s.insert(m.row(i));
    return nullspace_of_span(s);
}

RatMatrix invert(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("invert: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix a(m);
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw SingularMatrix("invert: matrix is singular");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        const Rat d = 1 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= d;
            inv(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rat f(a(i, col));
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool is_invertible(const RatMatrix& m) {
    return m.is_square() && rank(m) == m.rows();
}

} // namespace bihom
