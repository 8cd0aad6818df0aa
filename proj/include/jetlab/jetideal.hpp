#ifndef JETLAB_JETIDEAL_HPP
#define JETLAB_JETIDEAL_HPP

#include <cstddef>
#include <vector>

#include "jetlab/series.hpp"

namespace jetlab {

/// X_c: r x s matrices of rank at most c.
struct DeterminantalSpec {
    int rows;
    int cols;
    int rank_bound;

    DeterminantalSpec(int r, int s, int c) : rows(r), cols(s), rank_bound(c) {
        if (r < 1 || s < 1)
            fail(ErrorCode::InvalidSpec, "matrix dimensions must be positive");
        if (c < 0 || c > std::min(r, s))
            fail(ErrorCode::InvalidSpec, "rank bound out of range");
    }
};

/// Generators {D^(l)} of the jet ideal J_m(X_c) plus the ambient variables.
struct JetIdealPresentation {
    DeterminantalSpec spec;
    int order;
    std::vector<JetVariable> variables;
    std::vector<Polynomial> generators;
};

/// A concrete r x s matrix of known rank; the default representative of the
/// rank-k stratum is A_k (k x k identity block in the upper left).
class RankPoint {
public:
    RankPoint(CoefficientField field, std::vector<std::vector<FieldValue>> entries);

    static RankPoint standard(CoefficientField field, int rows, int cols, int rank);

    const CoefficientField& field() const { return field_; }
    int rows() const { return static_cast<int>(entries_.size()); }
    int cols() const { return static_cast<int>(entries_[0].size()); }
    int rank() const { return rank_; }
    const FieldValue& entry(int i, int j) const { return entries_[i - 1][j - 1]; }

private:
    CoefficientField field_;
    std::vector<std::vector<FieldValue>> entries_;
    int rank_;
};

/// Fiber of J_m(X_c) -> X over a point: generators after x^(0) substitution.
struct FiberPresentation {
    DeterminantalSpec spec;
    int order;
    std::vector<Polynomial> generators;
    std::size_t dropped_zero_count;
};

struct OriginFiberReport {
    int degree;
    int order;
    std::size_t survivor_count;
    std::size_t dropped_count;
    bool survivors_match_lower_jets;
    bool high_orders_absent;
    bool isomorphic; // both checks
};

/// r x s matrix with entry (i,j) = x_ij^(0) + x_ij^(1) t + ... + x_ij^(m) t^m.
SeriesMatrix generic_jet_matrix(int rows, int cols, int order, CoefficientField field);

/// All D^(l): coefficient of t^l in each (c+1)-minor of the generic jet
/// matrix, ordered by (row subset, column subset, l).
JetIdealPresentation jet_ideal_generators(const DeterminantalSpec& spec, int order,
                                          CoefficientField field);

/// c-minors of the generic constant matrix; cuts out X_{c-1} = (X_c)^sing.
JetIdealPresentation singular_locus_ideal(const DeterminantalSpec& spec,
                                          CoefficientField field);

/// Substitutes x_ij^(0) := pt(i,j) in every generator and drops zeros.
FiberPresentation fiber_ideal_over_point(const JetIdealPresentation& pres,
                                         const RankPoint& pt);

/// Jet lift of arbitrary generators in order-0 variables: substitutes
/// x_ij^(0) -> sum_k x_ij^(k) t^k and extracts t-coefficients 0..m,
/// ordered by (generator index, l).
std::vector<Polynomial> jet_lift(const std::vector<Polynomial>& gens, int order);

/// Checks the presentation-level isomorphism pi_m^{-1}(0) = J_{m-d} x A^{n(d-1)}
/// for an ideal generated in a single degree d: survivors of x^(0) := 0 must
/// equal the J_{m-d} generators under x^(k+1) -> x^(k), and orders
/// m-d+2 .. m must not occur.
OriginFiberReport verify_origin_fiber_isomorphism(const std::vector<Polynomial>& gens,
                                                  const std::vector<JetVariable>& ambient,
                                                  int order);

} // namespace jetlab

#endif
