#ifndef JETLAB_CONTACT_HPP
#define JETLAB_CONTACT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "jetlab/errors.hpp"

namespace jetlab {

/// Log-resolution data: multiplicities a[i][j] of divisor E_j in f^{-1}(Y_i),
/// discrepancies k[j], and the maximal sets of divisors with nonempty common
/// intersection (singletons are implied; subsets of a family are admissible).
struct LogResolutionInput {
    std::vector<long long> k;                // size n
    std::vector<std::vector<long long>> a;   // centers x n
    std::vector<std::vector<int>> families;  // 0-based divisor indices

    LogResolutionInput(std::vector<long long> k_in,
                       std::vector<std::vector<long long>> a_in,
                       std::vector<std::vector<int>> families_in);

    int divisors() const { return static_cast<int>(k.size()); }
    int centers() const { return static_cast<int>(a.size()); }

    /// True when the divisors of `support` (a bitmask) can meet.
    bool admissible(std::uint64_t support) const;

private:
    std::vector<std::uint64_t> family_masks_;
};

/// Orders m_i >= 1, one per center: the query cap Cont^{>= m_i}(Y_i).
struct ContactQuery {
    std::vector<long long> orders;

    explicit ContactQuery(std::vector<long long> orders_in);
};

struct ContactSolution {
    bool feasible;
    long long value;             // sum nu_j (k_j + 1); meaningful when feasible
    std::vector<long long> nu;   // witness achieving the value
};

/// Exact minimum of sum nu_j(k_j+1) over nu in N^n with admissible support
/// and sum_j a[i][j] nu_j >= m_i for every center i. Branch and bound.
ContactSolution contact_codim(const LogResolutionInput& res, const ContactQuery& q);

struct Lemma32Report {
    std::optional<long long> left;   // codim at orders (mp on Y, 1 on Z)
    std::optional<long long> right;  // codim at orders (m on Y, 1 on Z)
    long long p;
    bool inequality_holds;           // left <= p * right (when both feasible)
    std::vector<long long> scaled_witness;
    bool scaled_witness_feasible;
};

/// Inequality of Lemma 3.2's proof on a two-center resolution: the codim of
/// the order-mp locus is at most p times the codim of the order-m locus,
/// with p * nu as the exhibited feasible point.
Lemma32Report lemma32_check(const LogResolutionInput& res, long long m, long long p,
                            int z_index);

} // namespace jetlab

#endif
