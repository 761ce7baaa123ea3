#pragma once

#include <bihom/matrix.hpp>
#include <bihom/rational.hpp>

#include <cstddef>
#include <vector>

namespace bihom {

/// A list of linearly independent vectors spanning a subspace. All producers in this
/// library return the unique reduced-echelon basis, so reported dimensions and basis
/// entries are deterministic and reproducible.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<RatVec> vectors;

    std::size_t dim() const { return vectors.size(); }
};

/// Incrementally maintained reduced row echelon span. Rows can be fed one at a time;
/// the structure keeps itself fully reduced, which bounds memory by rank x ambient
/// even for very tall constraint systems.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t ambient) : ambient_(ambient) {}

    /// Reduces v against the current rows in place. Returns true iff v ended up zero.
    bool reduce(RatVec& v) const;

    /// Inserts a vector; returns true if it enlarged the span.
    bool insert(RatVec v);

    bool contains(const RatVec& v) const {
        RatVec w(v);
        return reduce(w);
    }

    /// Coordinates of v in the reduced basis, or empty if v is outside the span.
    /// (Read off the pivot positions; valid because rows are fully reduced.)
    bool coordinates(const RatVec& v, RatVec& coords) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }

    /// The reduced-echelon basis, rows ordered by pivot column.
    SubspaceBasis basis() const;
    const std::vector<RatVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t ambient_;
    std::vector<RatVec> rows_;          // kept in RREF, sorted by pivot
    std::vector<std::size_t> pivots_;   // pivot column of each row
};

/// Reduced row echelon form.
RatMatrix rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Reduced-echelon basis of { v : Mv = 0 }; dimension cols - rank.
SubspaceBasis nullspace(const RatMatrix& m);

/// Kernel basis read off an already-reduced constraint system.
SubspaceBasis nullspace_of_span(const EchelonSpan& span);

/// Exact inverse. Throws SingularMatrix when rank < dim, which is how non-regular
/// inputs surface in the constructions that require invertible twist maps.
RatMatrix invert(const RatMatrix& m);

bool is_invertible(const RatMatrix& m);

/// Echelon span of a set of vectors.
EchelonSpan span_of(const std::vector<RatVec>& vectors, std::size_t ambient);

} // namespace bihom
