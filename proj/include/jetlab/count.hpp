#ifndef JETLAB_COUNT_HPP
#define JETLAB_COUNT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "jetlab/jetideal.hpp"

namespace jetlab {

inline constexpr std::uint64_t kDefaultCountCap = std::uint64_t{1} << 28;

struct MonteCarloInfo {
    std::uint64_t samples;
    std::uint64_t hits;
    double confidence;
    double half_width; // of the estimate, at `confidence`
    std::uint64_t seed;
    int workers;
};

/// Number of common zeros of a generator list over F_q, exact or estimated.
struct PointCountReport {
    std::uint64_t q;
    int num_vars;
    double count;                     // exact integer or MC estimate
    std::optional<MonteCarloInfo> mc; // empty for exact mode
    bool exact() const { return !mc.has_value(); }
};

/// Full enumeration of F_q^vars, short-circuiting on the first nonzero
/// generator. Workers split the odometer range into contiguous chunks; the
/// total is independent of the worker count.
PointCountReport exhaustive_count(const std::vector<Polynomial>& gens,
                                  const std::vector<JetVariable>& vars,
                                  std::uint64_t q, int workers = 1,
                                  std::uint64_t cap = kDefaultCountCap);

/// Unbiased estimate q^|vars| * hits/samples with a binomial confidence
/// interval. Deterministic for a fixed (seed, workers) pair.
PointCountReport monte_carlo_count(const std::vector<Polynomial>& gens,
                                   const std::vector<JetVariable>& vars,
                                   std::uint64_t q, std::uint64_t samples,
                                   double confidence = 0.99,
                                   std::uint64_t seed = 0, int workers = 1);

struct DimEstimate {
    double slope;    // least-squares slope of log count against log q
    double residual; // root mean square fit residual
};

/// Heuristic dimension from counts at two or more primes.
DimEstimate dim_estimate(const std::vector<PointCountReport>& reports);

struct OriginFiberCountReport {
    std::uint64_t q;
    std::uint64_t left;       // points of the order-m fiber over the origin
    std::uint64_t jet_count;  // points of the order-(m-d) jet scheme
    std::uint64_t factor;     // q^{n(d-1)}
    std::uint64_t right;      // jet_count * factor
    bool equal;
};

/// Numeric form of the origin-fiber product decomposition: the fiber of
/// J_m(X_c) over 0 must have exactly |J_{m-d}(X_c)| * q^{n(d-1)} points,
/// d = c+1, n = rs. Both sides by exhaustive_count.
OriginFiberCountReport origin_fiber_count_check(const DeterminantalSpec& spec, int m,
                                                int d, std::uint64_t q,
                                                int workers = 1,
                                                std::uint64_t cap = kDefaultCountCap);

} // namespace jetlab

#endif
