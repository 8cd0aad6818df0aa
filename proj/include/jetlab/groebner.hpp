#ifndef JETLAB_GROEBNER_HPP
#define JETLAB_GROEBNER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jetlab/jetideal.hpp"

namespace jetlab {

/// Term order on an explicitly ordered variable universe; position 0 is the
/// most significant variable.
class MonomialOrder {
public:
    enum class Kind { DegRevLex, Lex };

    MonomialOrder(Kind kind, std::vector<JetVariable> universe);

    static MonomialOrder degrevlex(std::vector<JetVariable> universe) {
        return MonomialOrder(Kind::DegRevLex, std::move(universe));
    }
    static MonomialOrder lex(std::vector<JetVariable> universe) {
        return MonomialOrder(Kind::Lex, std::move(universe));
    }

    Kind kind() const { return kind_; }
    const std::vector<JetVariable>& universe() const { return universe_; }
    int size() const { return static_cast<int>(universe_.size()); }

    /// Dense exponent vector along the universe; variables outside the
    /// universe are rejected.
    std::vector<std::uint32_t> exponents(const Monomial& m) const;

    /// Negative, zero, or positive as a < b, a == b, a > b.
    int cmp(const std::vector<std::uint32_t>& a,
            const std::vector<std::uint32_t>& b) const;

private:
    Kind kind_;
    std::vector<JetVariable> universe_;
    std::map<VarKey, int> index_;
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> elements; // monic, interreduced, ascending leading monomials
    bool reduced;
};

inline constexpr std::uint64_t kDefaultPairBudget = 200000;

/// Buchberger's algorithm with the product and chain criteria and normal
/// pair selection (lowest lcm degree, ties by pair index). The budget caps
/// the number of S-polynomial reductions.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         std::uint64_t budget = kDefaultPairBudget);

/// Remainder of multivariate division by the basis: no term of the result
/// is divisible by any leading monomial.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

bool membership(const Polynomial& p, const GroebnerBasis& basis);

/// Whether span(ideal) is contained in span(container).
bool ideal_contains(const std::vector<Polynomial>& ideal,
                    const std::vector<Polynomial>& container, const MonomialOrder& order,
                    std::uint64_t budget = kDefaultPairBudget);

/// Dimension of the quotient ring: the largest variable subset containing
/// the support of no leading monomial, by exhaustive subset search.
/// -1 for the unit ideal.
int krull_dimension(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                    std::uint64_t budget = kDefaultPairBudget);

/// The two named components of the first jet scheme of the 3x3 rank-one
/// locus: P2 = (order-0 variables), P1 = J_1 + (det of the order-1 matrix).
struct Remark310Report {
    std::string field;      // coefficient field actually used
    bool evidence_only;     // true when the run fell back to F_3
    bool cubic_matches;     // six-term expansion equals the determinant
    bool j1_in_p2;
    bool j1_in_p1;
    bool x110_outside_p1;
    bool cubic_outside_p2;
    int p2_dimension;
    int p1_dimension;
    bool dimensions_match;  // (9, 10)
    bool all_pass;
};

Remark310Report verify_remark_310(std::uint64_t budget = kDefaultPairBudget);

} // namespace jetlab

#endif
