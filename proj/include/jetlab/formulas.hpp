#ifndef JETLAB_FORMULAS_HPP
#define JETLAB_FORMULAS_HPP

#include <string>
#include <utility>
#include <vector>

#include "jetlab/field.hpp"

namespace jetlab {

std::uint64_t binomial(unsigned n, unsigned k);

/// dim X_c = c(r+s-c).
long long dim_determinantal(int r, int s, int c);

/// Dimension of the component of J_m(X_c) over the smooth locus: (m+1) dim X_c.
long long dim_smooth_component(int r, int s, int c, int m);

/// dim J_1(X_c) = rs+(c-1)(r+s-c+1), valid under the stated hypotheses;
/// the raw value is reported even when they fail.
struct DimJ1 {
    long long value;
    bool applies; // c >= 1, r,s >= c+2, r+s >= 2c+5
};
DimJ1 dim_j1(int r, int s, int c);

/// dim pi_1^{-1}((X_c)^sing) = rs+(c-1)(r+s-c+1); requires a singular locus.
long long singular_fiber_dim_j1(int r, int s, int c);

enum class Verdict { ReducibleByTheorem, NoConclusion };

struct ReducibilityVerdict {
    Verdict verdict;
    long long product;   // (r-c-1)(s-c-1)
    long long threshold; // 2 for odd jets, 3 for second jets
    std::string certificate;
};

/// Odd jets of X_c are reducible when r,s >= c+2 and r+s >= 2c+5.
ReducibilityVerdict odd_jets_reducible(int r, int s, int c);

/// J_2(X_c) is reducible when c >= 2, r,s >= c+2 and r+s >= 2c+6.
ReducibilityVerdict second_jet_reducible(int r, int s, int c);

/// (dim pi_2^{-1}(X_{c-2}), dim pi_2^{-1} of the rank-(c-1) stratum).
std::pair<long long, long long> second_jet_fiber_dims(int r, int s, int c);

enum class Applicability { Applies, HypothesesFail };

/// Component data of J_m for rank <= 1 matrices, valid for r > s >= 3.
struct ComponentPrediction {
    Applicability applicable;
    int count;
    std::vector<long long> dims; // dims[q] = q rs + (m+1-2q)(r+s-1)
    std::string certificate;
};
ComponentPrediction rank1_components(int r, int s, int m);

/// dim J_m of the rank <= 1 variety = max over q of the component dimensions.
long long rank1_jet_dim(int r, int s, int m);

/// lct(A^{rs}, X) = rs - sup_m dim J_m/(m+1), swept over 0 <= m <= sweep_limit.
struct LctReport {
    Rational value;
    Rational supremum;
    int first_argmax;
    bool attained_at_m1;
};
LctReport lct_rank1(int r, int s, int sweep_limit = 10000);

} // namespace jetlab

#endif
