#ifndef JETLAB_FIELD_HPP
#define JETLAB_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "jetlab/errors.hpp"

namespace jetlab {

using Rational = mpq_class;
using BigInt = mpz_class;

/// A coefficient, either rational or a reduced residue mod p.
/// Which alternative is active is dictated by the owning CoefficientField.
using FieldValue = std::variant<Rational, std::uint64_t>;

/// Exact coefficient field: the rationals or a prime field F_p.
/// All arithmetic is exact; there is no floating point in this module.
class CoefficientField {
public:
    static CoefficientField rationals() { return CoefficientField(0); }
    static CoefficientField prime_field(std::uint64_t p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    std::uint64_t prime() const { return p_; }

    bool operator==(const CoefficientField& o) const { return p_ == o.p_; }
    bool operator!=(const CoefficientField& o) const { return p_ != o.p_; }

    FieldValue zero() const;
    FieldValue one() const;
    FieldValue from_int(long long n) const;
    FieldValue from_rational(const Rational& r) const;

    FieldValue add(const FieldValue& a, const FieldValue& b) const;
    FieldValue sub(const FieldValue& a, const FieldValue& b) const;
    FieldValue mul(const FieldValue& a, const FieldValue& b) const;
    FieldValue neg(const FieldValue& a) const;
    FieldValue inv(const FieldValue& a) const;
    FieldValue div(const FieldValue& a, const FieldValue& b) const;
    FieldValue pow(const FieldValue& a, std::uint64_t e) const;

    bool is_zero(const FieldValue& a) const;
    bool is_one(const FieldValue& a) const;
    bool eq(const FieldValue& a, const FieldValue& b) const;

    /// "5", "-3/7" over Q; "4" over F_p.
    std::string to_text(const FieldValue& a) const;
    FieldValue parse(const std::string& text) const;

    std::string describe() const;

private:
    explicit CoefficientField(std::uint64_t p) : p_(p) {}

    const Rational& rat(const FieldValue& a) const;
    std::uint64_t res(const FieldValue& a) const;

    std::uint64_t p_; // 0 means Q
};

bool is_prime_u64(std::uint64_t n);

} // namespace jetlab

#endif
