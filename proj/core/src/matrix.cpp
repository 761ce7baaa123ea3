#include <bihom/errors.hpp>
#include <bihom/matrix.hpp>

namespace bihom {

RatVec RatMatrix::col(std::size_t j) const {
    RatVec v(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void RatMatrix::set_col(std::size_t j, const RatVec& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RatVec RatMatrix::row(std::size_t i) const {
    RatVec v(cols_, Rat(0));
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

RatVec RatMatrix::apply(const RatVec& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix apply: size mismatch");
    RatVec y(rows_, Rat(0));
    for (std::size_t j = 0; j < cols_; ++j) {
        if (x[j] == 0) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rat& m = (*this)(i, j);
            if (m != 0) y[i] += m * x[j];
        }
    }
    return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product: size mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& b = o(k, j);
                if (b != 0) r(i, j) += a * b;
            }
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum: size mismatch");
    RatMatrix r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff: size mismatch");
    RatMatrix r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const Rat& c) const {
    RatMatrix r(*this);
    for (Rat& x : r.e_) x *= c;
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

RatMatrix RatMatrix::pow(unsigned k) const {
    if (!is_square()) throw DimensionMismatch("matrix power of a non-square matrix");
    RatMatrix r = identity(rows_);
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

RatMatrix op_commutator(const RatMatrix& d1, const RatMatrix& d2) {
    return d1 * d2 - d2 * d1;
}

bool commute_check(const RatMatrix& m, const RatMatrix& n) {
    if (!m.is_square() || !n.is_square() || m.rows() != n.rows())
        throw DimensionMismatch("commute_check: need equal square matrices");
    return m * n == n * m;
}

} // namespace bihom
