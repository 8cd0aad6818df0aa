#include "jetlab/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace jetlab {

Polynomial Polynomial::constant(CoefficientField field, const FieldValue& c) {
    Polynomial p(field);
    if (!field.is_zero(c)) p.terms_.push_back({Monomial::one(), c});
    return p;
}

Polynomial Polynomial::constant(CoefficientField field, long long c) {
    return constant(field, field.from_int(c));
}

Polynomial Polynomial::variable(CoefficientField field, const JetVariable& v) {
    Polynomial p(field);
    p.terms_.push_back({Monomial::variable(v), field.one()});
    return p;
}

Polynomial Polynomial::term(CoefficientField field, const FieldValue& c, const Monomial& m) {
    Polynomial p(field);
    if (!field.is_zero(c)) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(CoefficientField field, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return cmp_canonical(a.mono, b.mono) > 0; });
    Polynomial p(field);
    p.terms_.reserve(terms.size());
    std::size_t i = 0;
    while (i < terms.size()) {
        FieldValue c = terms[i].coeff;
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j].mono == terms[i].mono)
            c = field.add(c, terms[j++].coeff);
        if (!field.is_zero(c)) p.terms_.push_back({terms[i].mono, c});
        i = j;
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) fail(ErrorCode::Undefined, "leading term of zero polynomial");
    return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

void Polynomial::check_same_field(const Polynomial& o) const {
    if (field_ != o.field_)
        fail(ErrorCode::FieldMismatch, field_.describe() + " vs " + o.field_.describe());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_field(o);
    Polynomial r(field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_canonical(terms_[i].mono, o.terms_[j].mono);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            FieldValue s = field_.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!field_.is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono, field_.neg(t.coeff)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const FieldValue& c, const Monomial& m) const {
    Polynomial r(field_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    // multiplying every monomial by m preserves the canonical order
    for (const Term& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::scaled(const FieldValue& c) const {
    return times_term(c, Monomial::one());
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return Polynomial(field_);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            acc.push_back({a.mono * b.mono, field_.mul(a.coeff, b.coeff)});
    return from_terms(field_, std::move(acc));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (field_ != o.field_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || !field_.eq(terms_[i].coeff, o.terms_[i].coeff))
            return false;
    return true;
}

FieldValue Polynomial::evaluate(const std::map<VarKey, FieldValue>& assignment) const {
    FieldValue acc = field_.zero();
    for (const Term& t : terms_) {
        FieldValue v = t.coeff;
        for (const auto& [var, exp] : t.mono.entries()) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                fail(ErrorCode::UnboundVariable, var_name(var));
            v = field_.mul(v, field_.pow(it->second, exp));
        }
        acc = field_.add(acc, v);
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::map<VarKey, FieldValue>& bindings) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const Term& t : terms_) {
        FieldValue c = t.coeff;
        std::vector<Monomial::Entry> rest;
        bool dead = false;
        for (const auto& [var, exp] : t.mono.entries()) {
            auto it = bindings.find(var);
            if (it == bindings.end()) {
                rest.push_back({var, exp});
            } else if (field_.is_zero(it->second)) {
                dead = true;
                break;
            } else {
                c = field_.mul(c, field_.pow(it->second, exp));
            }
        }
        if (!dead) acc.push_back({Monomial(std::move(rest)), c});
    }
    return from_terms(field_, std::move(acc));
}

Polynomial Polynomial::rename_variables(const std::map<VarKey, VarKey>& renaming) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<Monomial::Entry> entries;
        entries.reserve(t.mono.entries().size());
        for (const auto& [var, exp] : t.mono.entries()) {
            auto it = renaming.find(var);
            entries.push_back({it == renaming.end() ? var : it->second, exp});
        }
        acc.push_back({Monomial(std::move(entries)), t.coeff});
    }
    return from_terms(field_, std::move(acc));
}

Polynomial Polynomial::change_field(CoefficientField target) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const Term& t : terms_) {
        FieldValue c = field_.is_rationals()
                           ? target.from_rational(std::get<Rational>(t.coeff))
                           : target.from_int(static_cast<long long>(std::get<std::uint64_t>(t.coeff)));
        acc.push_back({t.mono, c});
    }
    return from_terms(target, std::move(acc));
}

std::vector<VarKey> Polynomial::variables() const {
    std::vector<VarKey> vars;
    for (const Term& t : terms_)
        for (const auto& [var, exp] : t.mono.entries()) vars.push_back(var);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool Polynomial::is_homogeneous(std::uint32_t* degree_out) const {
    std::uint32_t d = terms_.empty() ? 0 : terms_.front().mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d) return false;
    if (degree_out) *degree_out = d;
    return true;
}

bool Polynomial::is_isobaric(std::uint64_t* weight_out) const {
    std::uint64_t w = terms_.empty() ? 0 : terms_.front().mono.weight();
    for (const Term& t : terms_)
        if (t.mono.weight() != w) return false;
    if (weight_out) *weight_out = w;
    return true;
}

std::string Polynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        std::string c = field_.to_text(terms_[i].coeff);
        bool negative = !c.empty() && c[0] == '-';
        if (i == 0) {
            if (negative) out += "-", c = c.substr(1);
        } else {
            out += negative ? " - " : " + ";
            if (negative) c = c.substr(1);
        }
        out += c;
        if (!terms_[i].mono.is_one()) out += "*" + terms_[i].mono.to_text();
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return pos < s.size() ? s[pos] : '\0'; }

    std::string number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(ErrorCode::ParseError, "expected number at " + std::to_string(start));
        return s.substr(start, pos - start);
    }

    std::string identifier() {
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace

Polynomial Polynomial::parse(CoefficientField field, const std::string& text) {
    Cursor cur{text};
    std::vector<Term> acc;
    if (cur.done()) fail(ErrorCode::ParseError, "empty polynomial text");
    bool first = true;
    while (!cur.done()) {
        bool negative = false;
        cur.skip_ws();
        if (!first) {
            char op = cur.peek();
            if (op != '+' && op != '-')
                fail(ErrorCode::ParseError, "expected + or - at " + std::to_string(cur.pos));
            negative = op == '-';
            ++cur.pos;
            cur.skip_ws();
        } else if (cur.peek() == '-') {
            negative = true;
            ++cur.pos;
            cur.skip_ws();
        }
        first = false;

        FieldValue coeff = field.one();
        std::vector<Monomial::Entry> entries;
        bool saw_factor = false;
        for (;;) {
            cur.skip_ws();
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = cur.number();
                cur.skip_ws();
                if (cur.peek() == '/') {
                    ++cur.pos;
                    cur.skip_ws();
                    num += "/" + cur.number();
                }
                coeff = field.mul(coeff, field.parse(num));
                saw_factor = true;
            } else if (c == 'x') {
                std::string name = cur.identifier();
                JetVariable v = JetVariable::parse(name);
                std::uint32_t exp = 1;
                cur.skip_ws();
                if (cur.peek() == '^') {
                    ++cur.pos;
                    cur.skip_ws();
                    exp = static_cast<std::uint32_t>(std::stoul(cur.number()));
                }
                entries.push_back({v.key(), exp});
                saw_factor = true;
            } else {
                fail(ErrorCode::ParseError, "unexpected character at " + std::to_string(cur.pos));
            }
            cur.skip_ws();
            if (cur.peek() == '*') {
                ++cur.pos;
                continue;
            }
            break;
        }
        if (!saw_factor) fail(ErrorCode::ParseError, "empty term");
        if (negative) coeff = field.neg(coeff);
        acc.push_back({Monomial(std::move(entries)), coeff});
    }
    // "0" parses as the constant 0 and collapses to the zero polynomial
    return from_terms(field, std::move(acc));
}

} // namespace jetlab
