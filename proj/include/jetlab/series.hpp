#ifndef JETLAB_SERIES_HPP
#define JETLAB_SERIES_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "jetlab/polynomial.hpp"

namespace jetlab {

/// Element of R[t]/(t^{m+1}) with R a polynomial ring: coeffs[l] is the
/// coefficient of t^l, 0 <= l <= m. Arithmetic discards t-degrees above m.
class TruncatedSeries {
public:
    TruncatedSeries(CoefficientField field, std::uint32_t order)
        : field_(field), coeffs_(order + 1, Polynomial::zero(field)) {}

    static TruncatedSeries constant(const Polynomial& p, std::uint32_t order) {
        TruncatedSeries s(p.field(), order);
        s.coeffs_[0] = p;
        return s;
    }

    const CoefficientField& field() const { return field_; }
    std::uint32_t order() const { return static_cast<std::uint32_t>(coeffs_.size()) - 1; }

    const Polynomial& coeff(std::uint32_t l) const { return coeffs_.at(l); }
    void set_coeff(std::uint32_t l, Polynomial p);

    bool is_zero() const;

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    void check_compatible(const TruncatedSeries& o) const;

    CoefficientField field_;
    std::vector<Polynomial> coeffs_;
};

using SeriesMatrix = std::vector<std::vector<TruncatedSeries>>;

/// Determinant by Laplace expansion along the first remaining row, with the
/// minors memoized by (row offset, column subset) so all submatrix work is
/// shared. Rows/columns beyond 64 are rejected.
TruncatedSeries determinant(const SeriesMatrix& m);

/// Memo shared across several determinant calls on submatrices of one parent
/// matrix (all minors of a fixed row set reuse each other's column subsets).
class DeterminantMemo {
public:
    explicit DeterminantMemo(const SeriesMatrix& parent);

    /// Determinant of the square submatrix on the given parent columns
    /// (ascending, 0-based) and the first cols.size() parent rows.
    TruncatedSeries minor_on_columns(const std::vector<int>& cols);

private:
    TruncatedSeries expand(int row, std::uint64_t col_mask);

    const SeriesMatrix& parent_;
    std::map<std::pair<int, std::uint64_t>, TruncatedSeries> memo_;
};

} // namespace jetlab

#endif
