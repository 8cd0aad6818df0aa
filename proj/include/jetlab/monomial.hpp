#ifndef JETLAB_MONOMIAL_HPP
#define JETLAB_MONOMIAL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "jetlab/variable.hpp"

namespace jetlab {

/// Power product of jet variables. Exponents are positive; entries are
/// kept sorted by variable key, so structural equality is monomial equality.
class Monomial {
public:
    using Entry = std::pair<VarKey, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);

    static Monomial one() { return Monomial(); }
    static Monomial variable(const JetVariable& v, std::uint32_t exp = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    std::uint32_t degree() const { return degree_; }

    /// Total weight when x^{(k)} carries weight k (isobarity grading).
    std::uint64_t weight() const;

    std::uint32_t exponent_of(VarKey v) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Requires *this to divide o.
    Monomial divide_into(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    bool operator!=(const Monomial& o) const { return entries_ != o.entries_; }

    std::string to_text() const;

private:
    std::vector<Entry> entries_;
    std::uint32_t degree_ = 0;
};

/// Canonical term order fixed by this module: total degree first, ties by
/// lexicographic comparison with the smallest (k,i,j) variable most
/// significant. Returns <0, 0, >0 like strcmp; positive means a > b.
int cmp_canonical(const Monomial& a, const Monomial& b);

} // namespace jetlab

#endif
