#include "jetlab/groebner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>

namespace jetlab {

MonomialOrder::MonomialOrder(Kind kind, std::vector<JetVariable> universe)
    : kind_(kind), universe_(std::move(universe)) {
    if (universe_.empty()) fail(ErrorCode::InvalidSpec, "empty variable universe");
    for (std::size_t i = 0; i < universe_.size(); ++i)
        if (!index_.emplace(universe_[i].key(), static_cast<int>(i)).second)
            fail(ErrorCode::InvalidSpec, "repeated variable in the universe");
}

std::vector<std::uint32_t> MonomialOrder::exponents(const Monomial& m) const {
    std::vector<std::uint32_t> e(universe_.size(), 0);
    for (const auto& [key, exp] : m.entries()) {
        auto it = index_.find(key);
        if (it == index_.end())
            fail(ErrorCode::UnboundVariable,
                 "variable " + var_name(key) + " is outside the order's universe");
        e[it->second] = exp;
    }
    return e;
}

int MonomialOrder::cmp(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) const {
    if (kind_ == Kind::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

namespace {

using Expo = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool divides_exp(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo sub_exp(const Expo& b, const Expo& a) {
    Expo r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Expo add_exp(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Expo lcm_exp(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

struct GbTerm {
    Expo e;
    FieldValue c;
};

using GbPoly = std::vector<GbTerm>; // sorted descending in the active order

struct Engine {
    const MonomialOrder& ord;
    CoefficientField field;

    GbPoly to_internal(const Polynomial& p) const {
        GbPoly out;
        for (const Term& t : p.terms()) out.push_back({ord.exponents(t.mono), t.coeff});
        std::sort(out.begin(), out.end(),
                  [&](const GbTerm& x, const GbTerm& y) { return ord.cmp(x.e, y.e) > 0; });
        return out;
    }

    Polynomial from_internal(const GbPoly& p) const {
        std::vector<Term> terms;
        for (const GbTerm& t : p) {
            std::vector<Monomial::Entry> entries;
            for (std::size_t i = 0; i < t.e.size(); ++i)
                if (t.e[i]) entries.push_back({ord.universe()[i].key(), t.e[i]});
            terms.push_back({Monomial(std::move(entries)), t.c});
        }
        return Polynomial::from_terms(field, std::move(terms));
    }

    GbPoly scale_shift(const GbPoly& g, const FieldValue& c, const Expo& shift) const {
        GbPoly out;
        out.reserve(g.size());
        for (const GbTerm& t : g) out.push_back({add_exp(t.e, shift), field.mul(c, t.c)});
        return out;
    }

    GbPoly sub(const GbPoly& a, const GbPoly& b) const {
        GbPoly out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (i == a.size()) {
                out.push_back({b[j].e, field.neg(b[j].c)});
                ++j;
            } else if (j == b.size()) {
                out.push_back(a[i++]);
            } else {
                int s = ord.cmp(a[i].e, b[j].e);
                if (s > 0) {
                    out.push_back(a[i++]);
                } else if (s < 0) {
                    out.push_back({b[j].e, field.neg(b[j].c)});
                    ++j;
                } else {
                    FieldValue d = field.sub(a[i].c, b[j].c);
                    if (!field.is_zero(d)) out.push_back({a[i].e, std::move(d)});
                    ++i;
                    ++j;
                }
            }
        }
        return out;
    }

    GbPoly spoly(const GbPoly& f, const GbPoly& g) const {
        Expo l = lcm_exp(f[0].e, g[0].e);
        GbPoly a = scale_shift(f, field.inv(f[0].c), sub_exp(l, f[0].e));
        GbPoly b = scale_shift(g, field.inv(g[0].c), sub_exp(l, g[0].e));
        return sub(a, b);
    }

    GbPoly reduce(GbPoly h, const std::vector<GbPoly>& basis) const {
        GbPoly rem;
        while (!h.empty()) {
            bool hit = false;
            for (const GbPoly& g : basis) {
                if (divides_exp(g[0].e, h[0].e)) {
                    FieldValue c = field.div(h[0].c, g[0].c);
                    h = sub(h, scale_shift(g, c, sub_exp(h[0].e, g[0].e)));
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                rem.push_back(std::move(h.front()));
                h.erase(h.begin());
            }
        }
        return rem;
    }

    void make_monic(GbPoly& p) const {
        if (p.empty() || field.is_one(p[0].c)) return;
        FieldValue inv = field.inv(p[0].c);
        for (GbTerm& t : p) t.c = field.mul(t.c, inv);
    }

    bool equal(const GbPoly& a, const GbPoly& b) const {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].e != b[i].e || !field.eq(a[i].c, b[i].c)) return false;
        return true;
    }
};

int dimension_of_leading_terms(const MonomialOrder& ord, const std::vector<Expo>& lms) {
    const int n = ord.size();
    if (n > 24) fail(ErrorCode::TooLarge, "subset search needs at most 24 variables");
    std::vector<std::uint32_t> masks;
    for (const Expo& e : lms) {
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i)
            if (e[i]) mask |= std::uint32_t{1} << i;
        masks.push_back(mask);
    }
    int best = -1;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        bool independent = true;
        for (std::uint32_t m : masks) {
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, std::popcount(s));
    }
    return best;
}

std::vector<Expo> leading_exponents(const GroebnerBasis& basis) {
    std::vector<Expo> lms;
    if (basis.elements.empty()) return lms;
    Engine eng{basis.order, basis.elements.front().field()};
    for (const Polynomial& p : basis.elements) lms.push_back(eng.to_internal(p)[0].e);
    return lms;
}

/// Cofactor expansion along the first row.
Polynomial poly_det(const CoefficientField& field,
                    const std::vector<std::vector<Polynomial>>& m) {
    if (m.size() == 1) return m[0][0];
    Polynomial det = Polynomial::zero(field);
    for (std::size_t j = 0; j < m.size(); ++j) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t i = 1; i < m.size(); ++i) {
            std::vector<Polynomial> row;
            for (std::size_t t = 0; t < m.size(); ++t)
                if (t != j) row.push_back(m[i][t]);
            minor.push_back(std::move(row));
        }
        Polynomial c = m[0][j] * poly_det(field, minor);
        det = j % 2 == 0 ? det + c : det - c;
    }
    return det;
}

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         std::uint64_t budget) {
    if (gens.empty()) fail(ErrorCode::InvalidSpec, "empty generator list");
    CoefficientField field = gens.front().field();
    for (const Polynomial& p : gens)
        if (p.field() != field) fail(ErrorCode::FieldMismatch, "mixed generator fields");
    Engine eng{order, field};

    std::vector<GbPoly> basis;
    for (const Polynomial& p : gens) {
        GbPoly ip = eng.to_internal(p);
        if (ip.empty()) continue;
        eng.make_monic(ip);
        basis.push_back(std::move(ip));
    }
    if (basis.empty()) return {order, {}, true};

    auto lcm_degree = [&](int i, int j) {
        return total_degree(lcm_exp(basis[i][0].e, basis[j][0].e));
    };
    std::set<std::tuple<std::uint32_t, int, int>> pairs;
    for (int j = 1; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < j; ++i) pairs.insert({lcm_degree(i, j), i, j});

    std::uint64_t reductions = 0;
    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const Expo& fi = basis[i][0].e;
        const Expo& fj = basis[j][0].e;
        if (deg == total_degree(fi) + total_degree(fj)) continue; // coprime leads
        Expo l = lcm_exp(fi, fj);
        bool chained = false;
        for (int t = 0; t < static_cast<int>(basis.size()) && !chained; ++t) {
            if (t == i || t == j || !divides_exp(basis[t][0].e, l)) continue;
            int ai = std::min(i, t), bi = std::max(i, t);
            int aj = std::min(j, t), bj = std::max(j, t);
            if (!pairs.count({lcm_degree(ai, bi), ai, bi}) &&
                !pairs.count({lcm_degree(aj, bj), aj, bj}))
                chained = true;
        }
        if (chained) continue;

        if (++reductions > budget)
            fail(ErrorCode::BudgetExceeded, "pair reduction budget exhausted");
        GbPoly h = eng.reduce(eng.spoly(basis[i], basis[j]), basis);
        if (h.empty()) continue;
        eng.make_monic(h);
        basis.push_back(std::move(h));
        int fresh = static_cast<int>(basis.size()) - 1;
        for (int t = 0; t < fresh; ++t) pairs.insert({lcm_degree(t, fresh), t, fresh});
    }

    // minimal generators: ascending leading monomials, drop divisible leads
    std::vector<int> idx(basis.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int s = order.cmp(basis[a][0].e, basis[b][0].e);
        return s != 0 ? s < 0 : a < b;
    });
    std::vector<GbPoly> minimal;
    for (int t : idx) {
        bool redundant = false;
        for (const GbPoly& kept : minimal)
            if (divides_exp(kept[0].e, basis[t][0].e)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[t]);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t < minimal.size(); ++t) {
            std::vector<GbPoly> others;
            for (std::size_t s = 0; s < minimal.size(); ++s)
                if (s != t) others.push_back(minimal[s]);
            GbPoly r = eng.reduce(minimal[t], others);
            if (!eng.equal(r, minimal[t])) {
                minimal[t] = std::move(r);
                changed = true;
            }
        }
    }

    GroebnerBasis out{order, {}, true};
    for (const GbPoly& p : minimal) out.elements.push_back(eng.from_internal(p));
    return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
    if (basis.elements.empty()) return p;
    CoefficientField field = basis.elements.front().field();
    if (p.field() != field)
        fail(ErrorCode::FieldMismatch, "polynomial field differs from the basis");
    Engine eng{basis.order, field};
    std::vector<GbPoly> internal;
    for (const Polynomial& g : basis.elements) internal.push_back(eng.to_internal(g));
    return eng.from_internal(eng.reduce(eng.to_internal(p), internal));
}

bool membership(const Polynomial& p, const GroebnerBasis& basis) {
    return normal_form(p, basis).is_zero();
}

bool ideal_contains(const std::vector<Polynomial>& ideal,
                    const std::vector<Polynomial>& container, const MonomialOrder& order,
                    std::uint64_t budget) {
    GroebnerBasis basis = buchberger(container, order, budget);
    for (const Polynomial& p : ideal)
        if (!membership(p, basis)) return false;
    return true;
}

int krull_dimension(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                    std::uint64_t budget) {
    GroebnerBasis basis = buchberger(gens, order, budget);
    return dimension_of_leading_terms(order, leading_exponents(basis));
}

Remark310Report verify_remark_310(std::uint64_t budget) {
    auto run = [&](CoefficientField field) {
        Remark310Report rep{};
        rep.field = field.describe();

        DeterminantalSpec spec(3, 3, 1);
        JetIdealPresentation pres = jet_ideal_generators(spec, 1, field);
        MonomialOrder ord = MonomialOrder::degrevlex(pres.variables);

        std::vector<std::vector<Polynomial>> order1(3, std::vector<Polynomial>());
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                order1[i - 1].push_back(Polynomial::variable(field, JetVariable(i, j, 1)));
        Polynomial det = poly_det(field, order1);

        Polynomial cubic = Polynomial::parse(
            field,
            "x_1_1_1*x_2_2_1*x_3_3_1 - x_1_1_1*x_3_2_1*x_2_3_1 - "
            "x_1_2_1*x_2_1_1*x_3_3_1 + x_1_2_1*x_3_1_1*x_2_3_1 + "
            "x_1_3_1*x_2_1_1*x_3_2_1 - x_1_3_1*x_3_1_1*x_2_2_1");
        rep.cubic_matches = det == cubic;

        std::vector<Polynomial> p2;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                p2.push_back(Polynomial::variable(field, JetVariable(i, j, 0)));
        GroebnerBasis gb2 = buchberger(p2, ord, budget);
        rep.j1_in_p2 = true;
        for (const Polynomial& g : pres.generators)
            if (!membership(g, gb2)) rep.j1_in_p2 = false;
        rep.cubic_outside_p2 = !membership(cubic, gb2);
        rep.p2_dimension = dimension_of_leading_terms(ord, leading_exponents(gb2));

        std::vector<Polynomial> p1 = pres.generators;
        p1.push_back(cubic);
        GroebnerBasis gb1 = buchberger(p1, ord, budget);
        rep.j1_in_p1 = true;
        for (const Polynomial& g : pres.generators)
            if (!membership(g, gb1)) rep.j1_in_p1 = false;
        rep.x110_outside_p1 =
            !membership(Polynomial::variable(field, JetVariable(1, 1, 0)), gb1);
        rep.p1_dimension = dimension_of_leading_terms(ord, leading_exponents(gb1));

        rep.dimensions_match = rep.p2_dimension == 9 && rep.p1_dimension == 10;
        rep.all_pass = rep.cubic_matches && rep.j1_in_p2 && rep.j1_in_p1 &&
                       rep.x110_outside_p1 && rep.cubic_outside_p2 &&
                       rep.dimensions_match;
        return rep;
    };

    try {
        Remark310Report rep = run(CoefficientField::rationals());
        rep.evidence_only = false;
        return rep;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        Remark310Report rep = run(CoefficientField::prime_field(3));
        rep.evidence_only = true;
        return rep;
    }
}

} // namespace jetlab
