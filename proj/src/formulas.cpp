#include "jetlab/formulas.hpp"

#include <algorithm>

#include "jetlab/errors.hpp"

namespace jetlab {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t v = 1;
    for (unsigned i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

namespace {

void check_spec(int r, int s, int c) {
    if (r < 1 || s < 1 || c < 0 || c > std::min(r, s))
        fail(ErrorCode::InvalidSpec, "determinantal parameters out of range");
}

std::string inequality_text(long long product, long long threshold, bool holds) {
    return "(r-c-1)(s-c-1) = " + std::to_string(product) +
           (holds ? " >= " : " < ") + std::to_string(threshold);
}

} // namespace

long long dim_determinantal(int r, int s, int c) {
    check_spec(r, s, c);
    return static_cast<long long>(c) * (r + s - c);
}

long long dim_smooth_component(int r, int s, int c, int m) {
    if (m < 0) fail(ErrorCode::InvalidSpec, "jet order must be nonnegative");
    return (m + 1) * dim_determinantal(r, s, c);
}

DimJ1 dim_j1(int r, int s, int c) {
    check_spec(r, s, c);
    long long value =
        static_cast<long long>(r) * s + static_cast<long long>(c - 1) * (r + s - c + 1);
    bool applies = c >= 1 && r >= c + 2 && s >= c + 2 && r + s >= 2 * c + 5;
    return {value, applies};
}

long long singular_fiber_dim_j1(int r, int s, int c) {
    check_spec(r, s, c);
    if (c == 0) fail(ErrorCode::NoSingularLocus, "X_0 is a single point");
    return static_cast<long long>(r) * s +
           static_cast<long long>(c - 1) * (r + s - c + 1);
}

ReducibilityVerdict odd_jets_reducible(int r, int s, int c) {
    check_spec(r, s, c);
    if (c < 1) fail(ErrorCode::InvalidSpec, "rank bound must be at least 1");
    bool holds = r >= c + 2 && s >= c + 2 && r + s >= 2 * c + 5;
    long long product = static_cast<long long>(r - c - 1) * (s - c - 1);
    return {holds ? Verdict::ReducibleByTheorem : Verdict::NoConclusion, product, 2,
            inequality_text(product, 2, holds)};
}

ReducibilityVerdict second_jet_reducible(int r, int s, int c) {
    check_spec(r, s, c);
    if (c < 2) fail(ErrorCode::InvalidSpec, "rank bound must be at least 2");
    bool holds = r >= c + 2 && s >= c + 2 && r + s >= 2 * c + 6;
    long long product = static_cast<long long>(r - c - 1) * (s - c - 1);
    return {holds ? Verdict::ReducibleByTheorem : Verdict::NoConclusion, product, 3,
            inequality_text(product, 3, holds)};
}

std::pair<long long, long long> second_jet_fiber_dims(int r, int s, int c) {
    check_spec(r, s, c);
    if (c < 2) fail(ErrorCode::InvalidSpec, "rank bound must be at least 2");
    long long rs = static_cast<long long>(r) * s;
    long long low = 2 * rs + static_cast<long long>(c - 2) * (r + s - c + 2);
    long long stratum = (r + s - 2 * c + 1) + 2 * rs -
                        static_cast<long long>(r - c + 1) * (s - c + 1) +
                        static_cast<long long>(c - 1) * (r + s - c + 1);
    return {low, stratum};
}

ComponentPrediction rank1_components(int r, int s, int m) {
    if (r < 1 || s < 1 || m < 0)
        fail(ErrorCode::InvalidSpec, "rank1_components parameters");
    if (!(r > s && s >= 3))
        return {Applicability::HypothesesFail, 0, {},
                "needs r > s >= 3, got r = " + std::to_string(r) +
                    ", s = " + std::to_string(s)};
    long long rs = static_cast<long long>(r) * s;
    long long dim_x = r + s - 1;
    int count = (m + 1) / 2 + 1;
    std::vector<long long> dims;
    dims.reserve(count);
    for (int q = 0; q < count; ++q) dims.push_back(q * rs + (m + 1 - 2 * q) * dim_x);
    return {Applicability::Applies, count, dims,
            "r > s >= 3 holds; rs >= 2 dim X since (r-2)(s-2) >= 2"};
}

long long rank1_jet_dim(int r, int s, int m) {
    ComponentPrediction p = rank1_components(r, s, m);
    if (p.applicable != Applicability::Applies)
        fail(ErrorCode::HypothesesFail, p.certificate);
    return *std::max_element(p.dims.begin(), p.dims.end());
}

LctReport lct_rank1(int r, int s, int sweep_limit) {
    if (sweep_limit < 1) fail(ErrorCode::InvalidSpec, "sweep limit must be positive");
    if (!(r > s && s >= 3))
        fail(ErrorCode::HypothesesFail, "needs r > s >= 3");
    long long rs = static_cast<long long>(r) * s;
    long long dim_x = r + s - 1;

    Rational sup(0);
    Rational at_m1(0);
    int argmax = -1;
    for (int m = 0; m <= sweep_limit; ++m) {
        long long dim = static_cast<long long>((m + 1) / 2) * rs +
                        ((m + 1) % 2 == 1 ? dim_x : 0);
        Rational ratio(static_cast<long>(dim), m + 1);
        ratio.canonicalize();
        if (m == 1) at_m1 = ratio;
        if (argmax < 0 || ratio > sup) {
            sup = ratio;
            argmax = m;
        }
    }
    Rational lct = Rational(static_cast<long>(rs)) - sup;
    lct.canonicalize();
    return {lct, sup, argmax, at_m1 == sup};
}

} // namespace jetlab
