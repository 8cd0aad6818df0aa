#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "jetlab/jetideal.hpp"

using namespace jetlab;

namespace {

const CoefficientField QQ = CoefficientField::rationals();

Polynomial var(int i, int j, int k) { return Polynomial::variable(QQ, JetVariable(i, j, k)); }

long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long v = 1;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

std::uint32_t order0_count(const Monomial& m) {
    std::uint32_t n = 0;
    for (const auto& [v, e] : m.entries())
        if (JetVariable::from_key(v).order == 0) n += e;
    return n;
}

} // namespace

TEST_CASE("generic jet matrix") {
    SeriesMatrix m = generic_jet_matrix(1, 1, 1, QQ);
    CHECK(m.size() == 1);
    CHECK(m[0][0].coeff(0) == var(1, 1, 0));
    CHECK(m[0][0].coeff(1) == var(1, 1, 1));

    SeriesMatrix c = generic_jet_matrix(2, 2, 0, QQ);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(c[i][j].coeff(0) == var(i + 1, j + 1, 0));

    SeriesMatrix j = generic_jet_matrix(2, 2, 1, QQ);
    CHECK(j[0][1].coeff(0) == var(1, 2, 0));
    CHECK(j[0][1].coeff(1) == var(1, 2, 1));

    CHECK_THROWS_AS(generic_jet_matrix(0, 1, 0, QQ), Error);
}

TEST_CASE("2x2 rank one first jets match the hand expansion") {
    auto pres = jet_ideal_generators(DeterminantalSpec(2, 2, 1), 1, QQ);
    REQUIRE(pres.generators.size() == 2);
    Polynomial d0 = var(1, 1, 0) * var(2, 2, 0) - var(1, 2, 0) * var(2, 1, 0);
    Polynomial d1 = var(1, 1, 0) * var(2, 2, 1) + var(1, 1, 1) * var(2, 2, 0) -
                    var(1, 2, 0) * var(2, 1, 1) - var(1, 2, 1) * var(2, 1, 0);
    CHECK(pres.generators[0] == d0);
    CHECK(pres.generators[1] == d1);
    CHECK(pres.variables.size() == 8);
}

TEST_CASE("3x3 rank one first jets: count, degree, weight profile") {
    auto pres = jet_ideal_generators(DeterminantalSpec(3, 3, 1), 1, QQ);
    CHECK(pres.generators.size() == 18);
    int weight_counts[2] = {0, 0};
    for (const Polynomial& g : pres.generators) {
        std::uint32_t deg = 0;
        std::uint64_t wt = 99;
        CHECK(g.is_homogeneous(&deg));
        CHECK(deg == 2);
        CHECK(g.is_isobaric(&wt));
        REQUIRE(wt <= 1);
        ++weight_counts[wt];
    }
    CHECK(weight_counts[0] == 9);
    CHECK(weight_counts[1] == 9);
}

TEST_CASE("full-rank bound gives the whole space") {
    auto pres = jet_ideal_generators(DeterminantalSpec(3, 2, 2), 4, QQ);
    CHECK(pres.generators.empty());
    CHECK(pres.variables.size() == 3 * 2 * 5);
}

TEST_CASE("generator count, homogeneity and isobarity across small specs") {
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; s <= 5; ++s)
            for (int c = 0; c < std::min(r, s); ++c)
                for (int m = 0; m <= 3; ++m) {
                    auto pres = jet_ideal_generators(DeterminantalSpec(r, s, c), m, QQ);
                    CHECK(static_cast<long long>(pres.generators.size()) ==
                          choose(r, c + 1) * choose(s, c + 1) * (m + 1));
                    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
                        std::uint32_t deg = 0;
                        std::uint64_t wt = 0;
                        CHECK(pres.generators[g].is_homogeneous(&deg));
                        CHECK(deg == static_cast<std::uint32_t>(c + 1));
                        CHECK(pres.generators[g].is_isobaric(&wt));
                        CHECK(wt == g % (m + 1)); // (row set, col set, l) ordering
                    }
                }
}

TEST_CASE("invalid specs rejected") {
    CHECK_THROWS_AS(DeterminantalSpec(2, 2, 3), Error);
    CHECK_THROWS_AS(DeterminantalSpec(2, 2, -1), Error);
    CHECK_THROWS_AS(DeterminantalSpec(0, 2, 0), Error);
    CHECK_THROWS_AS(jet_ideal_generators(DeterminantalSpec(2, 2, 1), -1, QQ), Error);
}

TEST_CASE("singular locus ideals") {
    auto sl = singular_locus_ideal(DeterminantalSpec(3, 3, 1), QQ);
    CHECK(sl.spec.rank_bound == 0);
    CHECK(sl.order == 0);
    REQUIRE(sl.generators.size() == 9);
    std::set<std::string> names;
    for (const Polynomial& g : sl.generators) names.insert(g.to_text());
    CHECK(names.count("1*x_2_3_0") == 1);

    CHECK(singular_locus_ideal(DeterminantalSpec(4, 4, 2), QQ).generators.size() == 36);

    auto sl22 = singular_locus_ideal(DeterminantalSpec(2, 2, 1), QQ);
    REQUIRE(sl22.generators.size() == 4);
    CHECK(sl22.generators[0] == var(1, 1, 0));
    CHECK(sl22.generators[3] == var(2, 2, 0));

    CHECK_THROWS_AS(singular_locus_ideal(DeterminantalSpec(2, 2, 0), QQ), Error);
}

TEST_CASE("rank points") {
    RankPoint a1 = RankPoint::standard(QQ, 3, 3, 1);
    CHECK(a1.rank() == 1);
    CHECK(QQ.is_one(a1.entry(1, 1)));
    CHECK(QQ.is_zero(a1.entry(2, 2)));
    CHECK(RankPoint::standard(QQ, 4, 3, 3).rank() == 3);
    CHECK(RankPoint::standard(QQ, 2, 2, 0).rank() == 0);

    // rank comes from elimination, not from the builder
    RankPoint p(QQ, {{QQ.from_int(1), QQ.from_int(2)}, {QQ.from_int(2), QQ.from_int(4)}});
    CHECK(p.rank() == 1);
    CHECK_THROWS_AS(RankPoint::standard(QQ, 2, 2, 3), Error);
}

TEST_CASE("fiber over low-rank points") {
    // every J_2 generator of X_2 in 4x4 vanishes at a rank-0 point
    auto pres = jet_ideal_generators(DeterminantalSpec(4, 4, 2), 2, QQ);
    auto fiber = fiber_ideal_over_point(pres, RankPoint::standard(QQ, 4, 4, 0));
    CHECK(fiber.generators.empty());
    CHECK(fiber.dropped_zero_count == 48);

    // over A_{c-1} the 2-minors of the shifted block survive
    auto pres33 = jet_ideal_generators(DeterminantalSpec(3, 3, 2), 2, QQ);
    auto fiber33 = fiber_ideal_over_point(pres33, RankPoint::standard(QQ, 3, 3, 1));
    REQUIRE(fiber33.generators.size() == 1);
    CHECK(fiber33.generators[0] ==
          var(2, 2, 1) * var(3, 3, 1) - var(2, 3, 1) * var(3, 2, 1));
    CHECK(fiber33.dropped_zero_count == 2);

    auto pres22 = jet_ideal_generators(DeterminantalSpec(2, 2, 1), 1, QQ);
    auto fiber22 = fiber_ideal_over_point(pres22, RankPoint::standard(QQ, 2, 2, 0));
    CHECK(fiber22.generators.empty());
    CHECK(fiber22.dropped_zero_count == 2);

    CHECK_THROWS_AS(
        fiber_ideal_over_point(pres22, RankPoint::standard(QQ, 3, 2, 0)), Error);
}

TEST_CASE("every second-jet generator term carries c-1 order-zero variables") {
    for (auto [r, s, c] : {std::tuple{4, 4, 2}, {5, 4, 2}, {5, 5, 3}}) {
        auto pres = jet_ideal_generators(DeterminantalSpec(r, s, c), 2, QQ);
        for (const Polynomial& g : pres.generators)
            for (const Term& t : g.terms())
                CHECK(order0_count(t.mono) >= static_cast<std::uint32_t>(c - 1));
    }
}

TEST_CASE("jet lift of the classical minors reproduces the jet ideal") {
    for (auto [r, s, c, m] : {std::tuple{2, 2, 1, 2}, {3, 3, 1, 1}, {3, 2, 1, 3}}) {
        auto base = jet_ideal_generators(DeterminantalSpec(r, s, c), 0, QQ);
        auto lifted = jet_lift(base.generators, m);
        auto pres = jet_ideal_generators(DeterminantalSpec(r, s, c), m, QQ);
        REQUIRE(lifted.size() == pres.generators.size());
        for (std::size_t i = 0; i < lifted.size(); ++i)
            CHECK(lifted[i] == pres.generators[i]);
    }
    CHECK_THROWS_AS(jet_lift({var(1, 1, 1)}, 1), Error);
}

TEST_CASE("series determinant commutes with numeric evaluation") {
    CoefficientField f7 = CoefficientField::prime_field(7);
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> residue(0, 6);

    const int r = 3, s = 3, c = 1, m = 2;
    auto pres = jet_ideal_generators(DeterminantalSpec(r, s, c), m, f7);

    for (int trial = 0; trial < 10; ++trial) {
        std::map<VarKey, FieldValue> assignment;
        for (const JetVariable& v : pres.variables)
            assignment[v.key()] = f7.from_int(residue(rng));

        // numeric jet matrix with the same assignment
        SeriesMatrix numeric(r, std::vector<TruncatedSeries>(s, TruncatedSeries(f7, m)));
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= s; ++j)
                for (int k = 0; k <= m; ++k)
                    numeric[i - 1][j - 1].set_coeff(
                        k, Polynomial::constant(
                               f7, assignment.at(JetVariable(i, j, k).key())));

        // generators come in blocks of m+1 per minor, (row set, col set) order
        std::size_t gen_index = 0;
        for (int r1 = 0; r1 < r; ++r1)
            for (int r2 = r1 + 1; r2 < r; ++r2)
                for (int c1 = 0; c1 < s; ++c1)
                    for (int c2 = c1 + 1; c2 < s; ++c2) {
                        SeriesMatrix sub = {{numeric[r1][c1], numeric[r1][c2]},
                                            {numeric[r2][c1], numeric[r2][c2]}};
                        TruncatedSeries det = determinant(sub);
                        for (int l = 0; l <= m; ++l) {
                            FieldValue got =
                                pres.generators[gen_index++].evaluate(assignment);
                            const Polynomial& expect = det.coeff(l);
                            CHECK(f7.eq(got, expect.is_zero()
                                                 ? f7.zero()
                                                 : expect.leading_term().coeff));
                        }
                    }
        CHECK(gen_index == pres.generators.size());
    }
}

TEST_CASE("origin fiber isomorphism, symbolic") {
    auto minors22 = jet_ideal_generators(DeterminantalSpec(2, 2, 1), 0, QQ).generators;
    auto ambient22 = variable_universe(2, 2, 0);
    for (int m : {2, 3, 4}) {
        auto report = verify_origin_fiber_isomorphism(minors22, ambient22, m);
        CHECK(report.isomorphic);
        CHECK(report.degree == 2);
        CHECK(report.survivor_count == static_cast<std::size_t>(m - 1));
        CHECK(report.dropped_count == 2);
    }

    auto minors33 = jet_ideal_generators(DeterminantalSpec(3, 3, 1), 0, QQ).generators;
    auto ambient33 = variable_universe(3, 3, 0);
    for (int m : {2, 3}) {
        auto report = verify_origin_fiber_isomorphism(minors33, ambient33, m);
        CHECK(report.isomorphic);
        CHECK(report.survivors_match_lower_jets);
        CHECK(report.high_orders_absent);
    }

    // a 3x3 determinant is a single cubic: d = 3 needs m >= 3
    auto det33 = jet_ideal_generators(DeterminantalSpec(3, 3, 2), 0, QQ).generators;
    CHECK(verify_origin_fiber_isomorphism(det33, ambient33, 3).isomorphic);

    CHECK_THROWS_AS(verify_origin_fiber_isomorphism(minors22, ambient22, 1), Error);
    CHECK_THROWS_AS(
        verify_origin_fiber_isomorphism({var(1, 1, 0) * var(1, 1, 0) + var(1, 2, 0)},
                                        ambient22, 3),
        Error);
    CHECK_THROWS_AS(
        verify_origin_fiber_isomorphism(
            {var(1, 1, 0) * var(1, 1, 0), var(1, 2, 0) * var(1, 2, 0) * var(1, 2, 0)},
            ambient22, 4),
        Error);
    CHECK_THROWS_AS(verify_origin_fiber_isomorphism({var(1, 1, 0)}, ambient22, 3), Error);
}
