#pragma once

#include <bihom/rational.hpp>

#include <cstddef>

namespace bihom {

/// Dense rank-3 rational array. c(i,j,k) is the k-th coordinate of the image of the
/// basis pair (i,j), so a tensor is at once the structure-constant table and the
/// bilinear map it encodes. Dimensions need not agree (module actions mix algebra
/// and module axes).
class RatTensor3 {
public:
    RatTensor3() = default;
    RatTensor3(std::size_t d1, std::size_t d2, std::size_t d3)
        : d1_(d1), d2_(d2), d3_(d3), e_(d1 * d2 * d3, Rat(0)) {}

    std::size_t d1() const { return d1_; }
    std::size_t d2() const { return d2_; }
    std::size_t d3() const { return d3_; }

    Rat& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return e_[(i * d2_ + j) * d3_ + k];
    }
    const Rat& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return e_[(i * d2_ + j) * d3_ + k];
    }

    /// Image of the basis pair (i,j) as a coordinate vector of length d3.
    RatVec fiber(std::size_t i, std::size_t j) const;

    /// out += c * T(i,j,.)
    void add_fiber(std::size_t i, std::size_t j, const Rat& c, RatVec& out) const;

    /// Bilinear evaluation sum_{i,j} x_i y_j T(i,j,.). Zero coefficients are skipped,
    /// which makes evaluation on basis vectors and sparse twist images cheap.
    RatVec eval(const RatVec& x, const RatVec& y) const;

    bool is_zero() const;
    bool operator==(const RatTensor3& o) const {
        return d1_ == o.d1_ && d2_ == o.d2_ && d3_ == o.d3_ && e_ == o.e_;
    }

    const RatVec& entries() const { return e_; }
    RatVec& entries() { return e_; }

private:
    std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
    RatVec e_;
};

/// Argument swap: out(i,j,k) = T(j,i,k). Realizes precomposition with the twist
/// isomorphism tau(x (x) y) = y (x) x. Requires d1 == d2; involutive.
RatTensor3 tensor_swap12(const RatTensor3& t);

} // namespace bihom
