#include "jetlab/contact.hpp"

#include <algorithm>

namespace jetlab {

LogResolutionInput::LogResolutionInput(std::vector<long long> k_in,
                                       std::vector<std::vector<long long>> a_in,
                                       std::vector<std::vector<int>> families_in)
    : k(std::move(k_in)), a(std::move(a_in)), families(std::move(families_in)) {
    const int n = static_cast<int>(k.size());
    if (n < 1 || n > 63) fail(ErrorCode::InvalidResolution, "divisor count out of range");
    for (long long kj : k)
        if (kj < 0) fail(ErrorCode::InvalidResolution, "negative discrepancy");
    if (a.empty()) fail(ErrorCode::InvalidResolution, "no centers");
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n)
            fail(ErrorCode::InvalidResolution, "multiplicity row length mismatch");
        for (long long v : row)
            if (v < 0) fail(ErrorCode::InvalidResolution, "negative multiplicity");
    }
    for (const auto& fam : families) {
        std::uint64_t mask = 0;
        for (int j : fam) {
            if (j < 0 || j >= n)
                fail(ErrorCode::InvalidResolution, "family index out of range");
            if (mask & (std::uint64_t{1} << j))
                fail(ErrorCode::InvalidResolution, "repeated index within a family");
            mask |= std::uint64_t{1} << j;
        }
        if (mask == 0) fail(ErrorCode::InvalidResolution, "empty family");
        family_masks_.push_back(mask);
    }
    // singletons always intersect themselves
    for (int j = 0; j < n; ++j) family_masks_.push_back(std::uint64_t{1} << j);
}

bool LogResolutionInput::admissible(std::uint64_t support) const {
    if (support == 0) return true;
    for (std::uint64_t fam : family_masks_)
        if ((support & ~fam) == 0) return true;
    return false;
}

ContactQuery::ContactQuery(std::vector<long long> orders_in)
    : orders(std::move(orders_in)) {
    if (orders.empty()) fail(ErrorCode::InvalidSpec, "no contact orders");
    for (long long m : orders)
        if (m < 1) fail(ErrorCode::InvalidSpec, "contact orders must be positive");
}

namespace {

struct Search {
    const LogResolutionInput& res;
    const std::vector<long long>& m;
    int n;
    std::vector<long long> cost;     // k_j + 1
    std::vector<long long> cap;      // per-variable useful upper bound
    std::vector<long long> nu;
    std::vector<long long> residual; // outstanding amount per center
    long long best = -1;
    std::vector<long long> best_nu;

    Search(const LogResolutionInput& r, const ContactQuery& q)
        : res(r), m(q.orders), n(r.divisors()), nu(n, 0) {
        for (int j = 0; j < n; ++j) {
            cost.push_back(res.k[j] + 1);
            long long c = 0;
            for (int i = 0; i < res.centers(); ++i)
                if (res.a[i][j] > 0)
                    c = std::max(c, (m[i] + res.a[i][j] - 1) / res.a[i][j]);
            cap.push_back(c);
        }
        residual = m;
    }

    // completion cost lower bound using divisors j..n-1, ignoring the family
    // constraint: center i cannot be finished cheaper than
    // ceil(residual_i * min_t cost_t/a_it), so the max over centers is valid
    long long completion_bound(int j) const {
        long long bound = 0;
        for (int i = 0; i < res.centers(); ++i) {
            if (residual[i] <= 0) continue;
            long long bc = -1, ba = 1; // best cost/a ratio as a fraction bc/ba
            for (int t = j; t < n; ++t) {
                if (res.a[i][t] <= 0) continue;
                if (bc < 0 || cost[t] * ba < bc * res.a[i][t]) {
                    bc = cost[t];
                    ba = res.a[i][t];
                }
            }
            if (bc < 0) return -1; // center i can no longer be met
            bound = std::max(bound, (residual[i] * bc + ba - 1) / ba);
        }
        return bound;
    }

    void dfs(int j, long long spent, std::uint64_t support) {
        if (!res.admissible(support)) return;
        if (j == n) {
            bool ok = true;
            for (int i = 0; i < res.centers(); ++i)
                if (residual[i] > 0) ok = false;
            if (ok && (best < 0 || spent < best)) {
                best = spent;
                best_nu = nu;
            }
            return;
        }
        long long lower = completion_bound(j);
        if (lower < 0) return;
        if (best >= 0 && spent + lower >= best) return;

        long long limit = cap[j];
        if (best >= 0) limit = std::min(limit, (best - 1 - spent) / cost[j]);
        for (long long v = 0; v <= limit; ++v) {
            nu[j] = v;
            for (int i = 0; i < res.centers(); ++i) residual[i] -= res.a[i][j] * v;
            dfs(j + 1, spent + v * cost[j], v > 0 ? support | (std::uint64_t{1} << j)
                                                  : support);
            for (int i = 0; i < res.centers(); ++i) residual[i] += res.a[i][j] * v;
            nu[j] = 0;
        }
    }
};

} // namespace

ContactSolution contact_codim(const LogResolutionInput& res, const ContactQuery& q) {
    if (static_cast<int>(q.orders.size()) != res.centers())
        fail(ErrorCode::InvalidSpec, "one order per center required");
    Search search(res, q);
    search.dfs(0, 0, 0);
    if (search.best < 0) return {false, 0, {}};
    return {true, search.best, search.best_nu};
}

Lemma32Report lemma32_check(const LogResolutionInput& res, long long m, long long p,
                            int z_index) {
    if (res.centers() != 2)
        fail(ErrorCode::InvalidSpec, "lemma 3.2 needs exactly two centers");
    if (m < 1 || p < 1) fail(ErrorCode::InvalidSpec, "m and p must be positive");
    if (z_index != 0 && z_index != 1)
        fail(ErrorCode::InvalidSpec, "z_index must name one of the two centers");
    const int y_index = 1 - z_index;

    auto orders_for = [&](long long y_order) {
        std::vector<long long> orders(2);
        orders[y_index] = y_order;
        orders[z_index] = 1;
        return ContactQuery(orders);
    };

    ContactSolution right = contact_codim(res, orders_for(m));
    ContactSolution left = contact_codim(res, orders_for(m * p));

    Lemma32Report report{std::nullopt, std::nullopt, p, false, {}, false};
    if (left.feasible) report.left = left.value;
    if (right.feasible) report.right = right.value;
    if (left.feasible && right.feasible) {
        report.inequality_holds = left.value <= p * right.value;
        report.scaled_witness = right.nu;
        for (long long& v : report.scaled_witness) v *= p;
        bool ok = true;
        for (int i = 0; i < 2; ++i) {
            long long total = 0;
            for (int j = 0; j < res.divisors(); ++j)
                total += res.a[i][j] * report.scaled_witness[j];
            long long need = i == y_index ? m * p : 1;
            if (total < need) ok = false;
        }
        std::uint64_t support = 0;
        for (int j = 0; j < res.divisors(); ++j)
            if (report.scaled_witness[j] > 0) support |= std::uint64_t{1} << j;
        report.scaled_witness_feasible = ok && res.admissible(support);
    }
    return report;
}

} // namespace jetlab
