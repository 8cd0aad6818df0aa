#include "jetlab/jetideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace jetlab {

namespace {

// next size-k subset of {0..n-1} in lexicographic order; false when done
bool next_subset(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_subset(int k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

} // namespace

SeriesMatrix generic_jet_matrix(int rows, int cols, int order, CoefficientField field) {
    if (rows < 1 || cols < 1 || order < 0)
        fail(ErrorCode::InvalidSpec, "generic_jet_matrix parameters");
    SeriesMatrix m(rows, std::vector<TruncatedSeries>(
                             cols, TruncatedSeries(field, static_cast<std::uint32_t>(order))));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            for (int k = 0; k <= order; ++k)
                m[i - 1][j - 1].set_coeff(
                    static_cast<std::uint32_t>(k),
                    Polynomial::variable(field, JetVariable(i, j, k)));
    return m;
}

JetIdealPresentation jet_ideal_generators(const DeterminantalSpec& spec, int order,
                                          CoefficientField field) {
    if (order < 0) fail(ErrorCode::InvalidSpec, "jet order must be nonnegative");
    const int r = spec.rows, s = spec.cols, d = spec.rank_bound + 1;

    JetIdealPresentation pres{spec, order, variable_universe(r, s, order), {}};
    if (d > std::min(r, s)) return pres; // c = min(r,s): whole space, no minors

    SeriesMatrix full = generic_jet_matrix(r, s, order, field);
    std::vector<int> row_set = first_subset(d);
    do {
        SeriesMatrix sub;
        sub.reserve(d);
        for (int i : row_set) sub.push_back(full[i]);
        DeterminantMemo memo(sub);
        std::vector<int> col_set = first_subset(d);
        do {
            TruncatedSeries minor = memo.minor_on_columns(col_set);
            for (int l = 0; l <= order; ++l)
                pres.generators.push_back(minor.coeff(static_cast<std::uint32_t>(l)));
        } while (next_subset(col_set, s));
    } while (next_subset(row_set, r));
    return pres;
}

JetIdealPresentation singular_locus_ideal(const DeterminantalSpec& spec,
                                          CoefficientField field) {
    if (spec.rank_bound == 0)
        fail(ErrorCode::NoSingularLocus, "X_0 is a single point");
    DeterminantalSpec lower(spec.rows, spec.cols, spec.rank_bound - 1);
    return jet_ideal_generators(lower, 0, field);
}

RankPoint::RankPoint(CoefficientField field, std::vector<std::vector<FieldValue>> entries)
    : field_(field), entries_(std::move(entries)) {
    if (entries_.empty() || entries_[0].empty())
        fail(ErrorCode::ShapeError, "empty matrix");
    for (const auto& row : entries_)
        if (row.size() != entries_[0].size()) fail(ErrorCode::ShapeError, "ragged matrix");

    // rank by Gaussian elimination over the coefficient field
    auto work = entries_;
    const int nr = static_cast<int>(work.size());
    const int nc = static_cast<int>(work[0].size());
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int pivot = -1;
        for (int row = rank; row < nr; ++row)
            if (!field_.is_zero(work[row][col])) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[pivot], work[rank]);
        for (int row = rank + 1; row < nr; ++row) {
            if (field_.is_zero(work[row][col])) continue;
            FieldValue factor = field_.div(work[row][col], work[rank][col]);
            for (int j = col; j < nc; ++j)
                work[row][j] = field_.sub(work[row][j], field_.mul(factor, work[rank][j]));
        }
        ++rank;
    }
    rank_ = rank;
}

RankPoint RankPoint::standard(CoefficientField field, int rows, int cols, int rank) {
    if (rows < 1 || cols < 1 || rank < 0 || rank > std::min(rows, cols))
        fail(ErrorCode::InvalidSpec, "rank point parameters");
    std::vector<std::vector<FieldValue>> entries(
        rows, std::vector<FieldValue>(cols, field.zero()));
    for (int p = 0; p < rank; ++p) entries[p][p] = field.one();
    return RankPoint(field, std::move(entries));
}

FiberPresentation fiber_ideal_over_point(const JetIdealPresentation& pres,
                                         const RankPoint& pt) {
    if (pt.rows() != pres.spec.rows || pt.cols() != pres.spec.cols)
        fail(ErrorCode::ShapeError, "point dimensions do not match the spec");

    std::map<VarKey, FieldValue> bindings;
    for (int i = 1; i <= pt.rows(); ++i)
        for (int j = 1; j <= pt.cols(); ++j)
            bindings[JetVariable(i, j, 0).key()] = pt.entry(i, j);

    FiberPresentation fiber{pres.spec, pres.order, {}, 0};
    for (const Polynomial& g : pres.generators) {
        Polynomial sub = g.substitute(bindings);
        if (sub.is_zero())
            ++fiber.dropped_zero_count;
        else
            fiber.generators.push_back(std::move(sub));
    }
    return fiber;
}

std::vector<Polynomial> jet_lift(const std::vector<Polynomial>& gens, int order) {
    if (order < 0) fail(ErrorCode::InvalidSpec, "jet order must be nonnegative");
    std::vector<Polynomial> out;
    for (const Polynomial& g : gens) {
        const CoefficientField& field = g.field();
        const std::uint32_t m = static_cast<std::uint32_t>(order);

        std::map<VarKey, TruncatedSeries> lift;
        for (VarKey v : g.variables()) {
            JetVariable jv = JetVariable::from_key(v);
            if (jv.order != 0)
                fail(ErrorCode::InvalidSpec, "jet_lift input must use order-0 variables");
            TruncatedSeries s(field, m);
            for (int k = 0; k <= order; ++k)
                s.set_coeff(static_cast<std::uint32_t>(k),
                            Polynomial::variable(field, JetVariable(jv.row, jv.col, k)));
            lift.emplace(v, std::move(s));
        }

        TruncatedSeries acc(field, m);
        for (const Term& t : g.terms()) {
            TruncatedSeries prod =
                TruncatedSeries::constant(Polynomial::constant(field, t.coeff), m);
            for (const auto& [v, exp] : t.mono.entries())
                for (std::uint32_t e = 0; e < exp; ++e) prod = prod * lift.at(v);
            acc = acc + prod;
        }
        for (int l = 0; l <= order; ++l)
            out.push_back(acc.coeff(static_cast<std::uint32_t>(l)));
    }
    return out;
}

OriginFiberReport verify_origin_fiber_isomorphism(const std::vector<Polynomial>& gens,
                                                  const std::vector<JetVariable>& ambient,
                                                  int order) {
    if (gens.empty()) fail(ErrorCode::InvalidSpec, "empty generator list");
    std::set<VarKey> ambient_keys;
    for (const JetVariable& v : ambient) {
        if (v.order != 0)
            fail(ErrorCode::InvalidSpec, "ambient variables must have order 0");
        ambient_keys.insert(v.key());
    }

    std::uint32_t degree = 0;
    if (!gens.front().is_homogeneous(&degree) || degree < 2)
        fail(ErrorCode::HomogeneityError, "generators must be homogeneous of degree >= 2");
    for (const Polynomial& g : gens) {
        std::uint32_t d = 0;
        if (g.is_zero() || !g.is_homogeneous(&d) || d != degree)
            fail(ErrorCode::HomogeneityError, "generators must share one degree");
        for (VarKey v : g.variables())
            if (!ambient_keys.count(v))
                fail(ErrorCode::InvalidSpec, "generator variable outside ambient space");
    }
    const int d = static_cast<int>(degree);
    if (order < d) fail(ErrorCode::OrderTooSmall, "jet order below generator degree");

    OriginFiberReport report{d, order, 0, 0, false, false, false};

    // survivors of x^(0) := 0 in the J_m presentation
    std::map<VarKey, FieldValue> zero_order0;
    for (VarKey v : ambient_keys) zero_order0[v] = gens.front().field().zero();
    std::vector<Polynomial> survivors;
    for (const Polynomial& g : jet_lift(gens, order)) {
        Polynomial sub = g.substitute(zero_order0);
        if (sub.is_zero())
            ++report.dropped_count;
        else
            survivors.push_back(std::move(sub));
    }
    report.survivor_count = survivors.size();

    // orders m-d+2 .. m must not occur among the survivors
    report.high_orders_absent = true;
    for (const Polynomial& g : survivors)
        for (VarKey v : g.variables())
            if (JetVariable::from_key(v).order > order - d + 1) {
                report.high_orders_absent = false;
                break;
            }

    // shift x^(k+1) -> x^(k) and compare with the J_{m-d} presentation
    std::map<VarKey, VarKey> shift;
    for (VarKey v : ambient_keys) {
        JetVariable jv = JetVariable::from_key(v);
        for (int k = 1; k <= order; ++k)
            shift[JetVariable(jv.row, jv.col, k).key()] =
                JetVariable(jv.row, jv.col, k - 1).key();
    }
    std::multiset<std::string> shifted;
    for (const Polynomial& g : survivors)
        shifted.insert(g.rename_variables(shift).to_text());
    std::multiset<std::string> lower;
    for (const Polynomial& g : jet_lift(gens, order - d)) lower.insert(g.to_text());
    report.survivors_match_lower_jets = shifted == lower;

    report.isomorphic = report.survivors_match_lower_jets && report.high_orders_absent;
    return report;
}

} // namespace jetlab
