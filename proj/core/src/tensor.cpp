#include <bihom/errors.hpp>
#include <bihom/tensor.hpp>

namespace bihom {

RatVec RatTensor3::fiber(std::size_t i, std::size_t j) const {
    RatVec v(d3_, Rat(0));
    const std::size_t base = (i * d2_ + j) * d3_;
    for (std::size_t k = 0; k < d3_; ++k) v[k] = e_[base + k];
    return v;
}

void RatTensor3::add_fiber(std::size_t i, std::size_t j, const Rat& c, RatVec& out) const {
    const std::size_t base = (i * d2_ + j) * d3_;
    for (std::size_t k = 0; k < d3_; ++k) {
        const Rat& t = e_[base + k];
        if (t != 0) out[k] += c * t;
    }
}

RatVec RatTensor3::eval(const RatVec& x, const RatVec& y) const {
    if (x.size() != d1_ || y.size() != d2_)
        throw DimensionMismatch("tensor eval: argument size mismatch");
    RatVec out(d3_, Rat(0));
    for (std::size_t i = 0; i < d1_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < d2_; ++j) {
            if (y[j] == 0) continue;
            add_fiber(i, j, Rat(x[i] * y[j]), out);
        }
    }
    return out;
}

bool RatTensor3::is_zero() const {
    for (const Rat& x : e_)
        if (x != 0) return false;
    return true;
}

RatTensor3 tensor_swap12(const RatTensor3& t) {
    if (t.d1() != t.d2())
        throw DimensionMismatch("tensor_swap12: first two dimensions must agree");
    RatTensor3 r(t.d1(), t.d2(), t.d3());
    for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
            for (std::size_t k = 0; k < t.d3(); ++k) r(i, j, k) = t(j, i, k);
    return r;
}

} // namespace bihom
