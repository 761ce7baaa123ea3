#pragma once

#include <bihom/rational.hpp>

#include <cstddef>

namespace bihom {

/// Dense rational matrix, row-major. Carries the linear self-maps of the theory
/// (alpha, beta, phi, psi, derivations, degree-1 cochains).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    /// Column j, i.e. the image of the j-th basis vector.
    RatVec col(std::size_t j) const;
    void set_col(std::size_t j, const RatVec& v);
    RatVec row(std::size_t i) const;

    /// Matrix * column vector; zero entries of x are skipped.
    RatVec apply(const RatVec& x) const;

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& c) const;
    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    RatMatrix transpose() const;
    RatMatrix pow(unsigned k) const; // square matrices only

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;

    const RatVec& entries() const { return e_; }
    RatVec& entries() { return e_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    RatVec e_;
};

/// D1*D2 - D2*D1 for same-size square matrices.
RatMatrix op_commutator(const RatMatrix& d1, const RatMatrix& d2);

/// True iff MN = NM exactly. Throws DimensionMismatch unless both are square of equal size.
bool commute_check(const RatMatrix& m, const RatMatrix& n);

} // namespace bihom
