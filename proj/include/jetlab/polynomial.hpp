#ifndef JETLAB_POLYNOMIAL_HPP
#define JETLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetlab/field.hpp"
#include "jetlab/monomial.hpp"

namespace jetlab {

struct Term {
    Monomial mono;
    FieldValue coeff;
};

/// Sparse multivariate polynomial in canonical form: no zero coefficients,
/// terms sorted descending in the module's fixed term order. Equality is
/// structural equality of canonical forms. Immutable after construction.
class Polynomial {
public:
    explicit Polynomial(CoefficientField field) : field_(field) {}

    static Polynomial zero(CoefficientField field) { return Polynomial(field); }
    static Polynomial constant(CoefficientField field, const FieldValue& c);
    static Polynomial constant(CoefficientField field, long long c);
    static Polynomial variable(CoefficientField field, const JetVariable& v);
    static Polynomial term(CoefficientField field, const FieldValue& c, const Monomial& m);
    /// Builds canonical form from an arbitrary term list (combines, drops zeros).
    static Polynomial from_terms(CoefficientField field, std::vector<Term> terms);

    const CoefficientField& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Leading term in the canonical order.
    const Term& leading_term() const;

    std::uint32_t total_degree() const; // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const FieldValue& c) const;
    Polynomial times_term(const FieldValue& c, const Monomial& m) const;

    /// Exact evaluation; the assignment must bind every variable occurring here.
    FieldValue evaluate(const std::map<VarKey, FieldValue>& assignment) const;

    /// Substitutes constants for the bound variables, keeps the rest symbolic.
    Polynomial substitute(const std::map<VarKey, FieldValue>& bindings) const;

    /// Applies an injective variable renaming to every monomial.
    Polynomial rename_variables(const std::map<VarKey, VarKey>& renaming) const;

    /// Reinterprets coefficients in another field (Q -> F_p reduction, etc.).
    Polynomial change_field(CoefficientField target) const;

    std::vector<VarKey> variables() const;

    /// True when every term has the same total degree d (d reported);
    /// the zero polynomial is homogeneous of every degree (reports 0).
    bool is_homogeneous(std::uint32_t* degree_out = nullptr) const;
    /// True when every term has the same weight (x^{(k)} weighted by k).
    bool is_isobaric(std::uint64_t* weight_out = nullptr) const;

    std::string to_text() const;
    static Polynomial parse(CoefficientField field, const std::string& text);

private:
    void check_same_field(const Polynomial& o) const;

    CoefficientField field_;
    std::vector<Term> terms_;
};

} // namespace jetlab

#endif
