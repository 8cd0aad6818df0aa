#include "jetlab/field.hpp"

#include <sstream>

namespace jetlab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

CoefficientField CoefficientField::prime_field(std::uint64_t p) {
    if (p > 0x7fffffffULL)
        fail(ErrorCode::InvalidSpec, "prime field characteristic must be < 2^31");
    if (!is_prime_u64(p))
        fail(ErrorCode::InvalidSpec, "not a prime: " + std::to_string(p));
    return CoefficientField(p);
}

const Rational& CoefficientField::rat(const FieldValue& a) const {
    return std::get<Rational>(a);
}

std::uint64_t CoefficientField::res(const FieldValue& a) const {
    return std::get<std::uint64_t>(a);
}

FieldValue CoefficientField::zero() const {
    if (is_rationals()) return Rational(0);
    return std::uint64_t{0};
}

FieldValue CoefficientField::one() const {
    if (is_rationals()) return Rational(1);
    return std::uint64_t{1 % p_};
}

FieldValue CoefficientField::from_int(long long n) const {
    if (is_rationals()) return Rational(static_cast<long>(n));
    long long m = n % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(m);
}

FieldValue CoefficientField::from_rational(const Rational& r) const {
    if (is_rationals()) return r;
    BigInt p(static_cast<unsigned long>(p_));
    BigInt num = r.get_num() % p;
    if (num < 0) num += p;
    BigInt den = r.get_den() % p;
    if (den == 0)
        fail(ErrorCode::InvalidSpec, "denominator divisible by " + std::to_string(p_));
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    return mulmod(n, powmod(d, p_ - 2, p_), p_);
}

FieldValue CoefficientField::add(const FieldValue& a, const FieldValue& b) const {
    if (is_rationals()) return Rational(rat(a) + rat(b));
    std::uint64_t s = res(a) + res(b);
    if (s >= p_) s -= p_;
    return s;
}

FieldValue CoefficientField::sub(const FieldValue& a, const FieldValue& b) const {
    if (is_rationals()) return Rational(rat(a) - rat(b));
    std::uint64_t x = res(a), y = res(b);
    return x >= y ? x - y : x + p_ - y;
}

FieldValue CoefficientField::mul(const FieldValue& a, const FieldValue& b) const {
    if (is_rationals()) return Rational(rat(a) * rat(b));
    return mulmod(res(a), res(b), p_);
}

FieldValue CoefficientField::neg(const FieldValue& a) const {
    if (is_rationals()) return Rational(-rat(a));
    std::uint64_t x = res(a);
    return x == 0 ? x : p_ - x;
}

FieldValue CoefficientField::inv(const FieldValue& a) const {
    if (is_zero(a)) fail(ErrorCode::InvalidSpec, "division by zero");
    if (is_rationals()) return Rational(1 / rat(a));
    return powmod(res(a), p_ - 2, p_);
}

FieldValue CoefficientField::div(const FieldValue& a, const FieldValue& b) const {
    return mul(a, inv(b));
}

FieldValue CoefficientField::pow(const FieldValue& a, std::uint64_t e) const {
    if (is_prime_field()) return powmod(res(a), e, p_);
    Rational r(1);
    Rational base = rat(a);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool CoefficientField::is_zero(const FieldValue& a) const {
    if (is_rationals()) return rat(a) == 0;
    return res(a) == 0;
}

bool CoefficientField::is_one(const FieldValue& a) const {
    if (is_rationals()) return rat(a) == 1;
    return res(a) == 1 % p_;
}

bool CoefficientField::eq(const FieldValue& a, const FieldValue& b) const {
    if (is_rationals()) return rat(a) == rat(b);
    return res(a) == res(b);
}

std::string CoefficientField::to_text(const FieldValue& a) const {
    if (is_rationals()) {
        const Rational& r = rat(a);
        if (r.get_den() == 1) return r.get_num().get_str();
        return r.get_num().get_str() + "/" + r.get_den().get_str();
    }
    return std::to_string(res(a));
}

FieldValue CoefficientField::parse(const std::string& text) const {
    try {
        Rational r(text);
        r.canonicalize();
        return from_rational(r);
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad coefficient: " + text);
    }
}

std::string CoefficientField::describe() const {
    if (is_rationals()) return "QQ";
    return "GF(" + std::to_string(p_) + ")";
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::TruncationMismatch: return "TruncationMismatch";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::NoSingularLocus: return "NoSingularLocus";
        case ErrorCode::HomogeneityError: return "HomogeneityError";
        case ErrorCode::OrderTooSmall: return "OrderTooSmall";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidResolution: return "InvalidResolution";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::HypothesesFail: return "HypothesesFail";
        case ErrorCode::Undefined: return "Undefined";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Error";
}

} // namespace jetlab
