#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace bihom {

/// Exact rational scalar. GMP keeps values canonical: lowest terms, denominator > 0.
/// Every computation in this library is exact; there is no floating-point mode.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;

/// Parses "p" or "p/q" (q > 0 after normalization). Throws ParseError on anything else.
Rat rat_from_string(const std::string& s);

/// Lowest-terms text form, "p/q" with the "/q" omitted when q == 1.
std::string rat_to_string(const Rat& r);

inline RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

inline RatVec unit_vec(std::size_t n, std::size_t i) {
    RatVec v(n, Rat(0));
    v[i] = 1;
    return v;
}

inline bool vec_is_zero(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

/// y += c * x
inline void vec_axpy(RatVec& y, const Rat& c, const RatVec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline void vec_scale(RatVec& v, const Rat& c) {
    for (Rat& x : v) x *= c;
}

} // namespace bihom
