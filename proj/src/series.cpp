#include "jetlab/series.hpp"

#include <bit>

namespace jetlab {

void TruncatedSeries::set_coeff(std::uint32_t l, Polynomial p) {
    if (p.field() != field_)
        fail(ErrorCode::FieldMismatch, "series coefficient field");
    coeffs_.at(l) = std::move(p);
}

bool TruncatedSeries::is_zero() const {
    for (const Polynomial& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (field_ != o.field_)
        fail(ErrorCode::FieldMismatch, field_.describe() + " vs " + o.field_.describe());
    if (coeffs_.size() != o.coeffs_.size())
        fail(ErrorCode::TruncationMismatch,
             "order " + std::to_string(order()) + " vs " + std::to_string(o.order()));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r(field_, order());
    for (std::size_t l = 0; l < coeffs_.size(); ++l)
        r.coeffs_[l] = coeffs_[l] + o.coeffs_[l];
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(field_, order());
    for (std::size_t l = 0; l < coeffs_.size(); ++l) r.coeffs_[l] = -coeffs_[l];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r(field_, order());
    for (std::size_t l = 0; l < coeffs_.size(); ++l) {
        Polynomial acc = Polynomial::zero(field_);
        for (std::size_t i = 0; i <= l; ++i) {
            if (coeffs_[i].is_zero() || o.coeffs_[l - i].is_zero()) continue;
            acc = acc + coeffs_[i] * o.coeffs_[l - i];
        }
        r.coeffs_[l] = std::move(acc);
    }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    if (field_ != o.field_ || coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t l = 0; l < coeffs_.size(); ++l)
        if (coeffs_[l] != o.coeffs_[l]) return false;
    return true;
}

DeterminantMemo::DeterminantMemo(const SeriesMatrix& parent) : parent_(parent) {
    if (parent.empty() || parent[0].empty())
        fail(ErrorCode::ShapeError, "empty matrix");
    if (parent[0].size() > 64)
        fail(ErrorCode::ShapeError, "more than 64 columns");
    const TruncatedSeries& probe = parent[0][0];
    for (const auto& row : parent_) {
        if (row.size() != parent_[0].size())
            fail(ErrorCode::ShapeError, "ragged matrix");
        for (const TruncatedSeries& e : row) {
            if (e.field() != probe.field())
                fail(ErrorCode::FieldMismatch, "matrix entry field");
            if (e.order() != probe.order())
                fail(ErrorCode::TruncationMismatch, "matrix entry truncation order");
        }
    }
}

TruncatedSeries DeterminantMemo::minor_on_columns(const std::vector<int>& cols) {
    if (cols.size() > parent_.size())
        fail(ErrorCode::ShapeError, "more columns than rows");
    std::uint64_t mask = 0;
    for (int c : cols) {
        if (c < 0 || static_cast<std::size_t>(c) >= parent_[0].size())
            fail(ErrorCode::ShapeError, "column index out of range");
        mask |= std::uint64_t{1} << c;
    }
    if (std::popcount(mask) != static_cast<int>(cols.size()))
        fail(ErrorCode::ShapeError, "repeated column");
    return expand(0, mask);
}

TruncatedSeries DeterminantMemo::expand(int row, std::uint64_t col_mask) {
    const std::uint32_t order = parent_[0][0].order();
    if (col_mask == 0)
        return TruncatedSeries::constant(Polynomial::constant(parent_[0][0].field(), 1), order);
    auto key = std::make_pair(row, col_mask);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    TruncatedSeries acc(parent_[0][0].field(), order);
    std::uint64_t rest = col_mask;
    bool negate = false;
    while (rest) {
        int col = std::countr_zero(rest);
        rest &= rest - 1;
        TruncatedSeries cofactor =
            parent_[row][col] * expand(row + 1, col_mask & ~(std::uint64_t{1} << col));
        acc = negate ? acc - cofactor : acc + cofactor;
        negate = !negate;
    }
    memo_.emplace(key, acc);
    return acc;
}

TruncatedSeries determinant(const SeriesMatrix& m) {
    if (m.empty()) fail(ErrorCode::ShapeError, "empty matrix");
    if (m.size() != m[0].size()) fail(ErrorCode::ShapeError, "non-square matrix");
    DeterminantMemo memo(m);
    std::vector<int> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = static_cast<int>(i);
    return memo.minor_on_columns(cols);
}

} // namespace jetlab
