#ifndef JETLAB_TEST_HELPERS_HPP
#define JETLAB_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "jetlab/series.hpp"

namespace jetlab::testing {

inline Polynomial random_polynomial(std::mt19937& rng, const CoefficientField& field,
                                    int max_terms = 5, int max_vars = 3, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> nvars(0, max_vars);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> idx(1, 3);
    std::uniform_int_distribution<int> ord(0, 2);
    std::uniform_int_distribution<int> exp(1, max_exp);

    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<Monomial::Entry> entries;
        int v = nvars(rng);
        for (int u = 0; u < v; ++u)
            entries.push_back({JetVariable(idx(rng), idx(rng), ord(rng)).key(),
                               static_cast<std::uint32_t>(exp(rng))});
        terms.push_back({Monomial(std::move(entries)), field.from_int(coeff(rng))});
    }
    return Polynomial::from_terms(field, std::move(terms));
}

inline TruncatedSeries random_series(std::mt19937& rng, const CoefficientField& field,
                                     std::uint32_t order) {
    TruncatedSeries s(field, order);
    for (std::uint32_t l = 0; l <= order; ++l)
        s.set_coeff(l, random_polynomial(rng, field, 3, 2, 2));
    return s;
}

/// Signed permutation-sum determinant, the independent oracle for Laplace.
inline TruncatedSeries determinant_by_permutations(const SeriesMatrix& m) {
    const auto n = m.size();
    const CoefficientField field = m[0][0].field();
    const std::uint32_t order = m[0][0].order();
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);

    TruncatedSeries acc(field, order);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        TruncatedSeries prod =
            TruncatedSeries::constant(Polynomial::constant(field, 1), order);
        for (std::size_t i = 0; i < n; ++i) prod = prod * m[i][perm[i]];
        acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace jetlab::testing

#endif
