#include "jetlab/monomial.hpp"

#include <algorithm>

namespace jetlab {

std::vector<JetVariable> variable_universe(int rows, int cols, int order) {
    std::vector<JetVariable> out;
    out.reserve(static_cast<std::size_t>(rows) * cols * (order + 1));
    for (int k = 0; k <= order; ++k)
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j) out.emplace_back(i, j, k);
    return out;
}

JetVariable JetVariable::parse(const std::string& text) {
    int fields[3];
    std::size_t pos = 0;
    if (text.size() < 2 || text[0] != 'x' || text[1] != '_')
        fail(ErrorCode::ParseError, "bad variable: " + text);
    pos = 2;
    for (int f = 0; f < 3; ++f) {
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) fail(ErrorCode::ParseError, "bad variable: " + text);
        fields[f] = std::stoi(text.substr(pos, end - pos));
        pos = end;
        if (f < 2) {
            if (pos >= text.size() || text[pos] != '_')
                fail(ErrorCode::ParseError, "bad variable: " + text);
            ++pos;
        }
    }
    if (pos != text.size()) fail(ErrorCode::ParseError, "bad variable: " + text);
    return JetVariable(fields[0], fields[1], fields[2]);
}

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries_.size();) {
        VarKey v = entries_[i].first;
        std::uint64_t e = 0;
        while (i < entries_.size() && entries_[i].first == v) e += entries_[i++].second;
        if (e > 0) entries_[out++] = {v, static_cast<std::uint32_t>(e)};
    }
    entries_.resize(out);
    for (const Entry& en : entries_) degree_ += en.second;
}

Monomial Monomial::variable(const JetVariable& v, std::uint32_t exp) {
    Monomial m;
    if (exp > 0) {
        m.entries_.push_back({v.key(), exp});
        m.degree_ = exp;
    }
    return m;
}

std::uint64_t Monomial::weight() const {
    std::uint64_t w = 0;
    for (const Entry& e : entries_)
        w += static_cast<std::uint64_t>(e.first >> 16) * e.second;
    return w;
}

std::uint32_t Monomial::exponent_of(VarKey v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    if (it != entries_.end() && it->first == v) return it->second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    std::size_t i = 0, j = 0;
    while (i < entries_.size() && j < o.entries_.size()) {
        if (entries_[i].first < o.entries_[j].first)
            r.entries_.push_back(entries_[i++]);
        else if (entries_[i].first > o.entries_[j].first)
            r.entries_.push_back(o.entries_[j++]);
        else {
            r.entries_.push_back({entries_[i].first, entries_[i].second + o.entries_[j].second});
            ++i, ++j;
        }
    }
    for (; i < entries_.size(); ++i) r.entries_.push_back(entries_[i]);
    for (; j < o.entries_.size(); ++j) r.entries_.push_back(o.entries_[j]);
    r.degree_ = degree_ + o.degree_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    std::size_t j = 0;
    for (const Entry& e : entries_) {
        while (j < o.entries_.size() && o.entries_[j].first < e.first) ++j;
        if (j == o.entries_.size() || o.entries_[j].first != e.first ||
            o.entries_[j].second < e.second)
            return false;
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0;
    for (const Entry& e : o.entries_) {
        std::uint32_t sub = 0;
        if (i < entries_.size() && entries_[i].first == e.first) sub = entries_[i++].second;
        if (e.second > sub) r.entries_.push_back({e.first, e.second - sub});
    }
    r.degree_ = o.degree_ - degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.entries_.size() && j < b.entries_.size()) {
        if (a.entries_[i].first < b.entries_[j].first)
            r.entries_.push_back(a.entries_[i++]);
        else if (a.entries_[i].first > b.entries_[j].first)
            r.entries_.push_back(b.entries_[j++]);
        else {
            r.entries_.push_back(
                {a.entries_[i].first, std::max(a.entries_[i].second, b.entries_[j].second)});
            ++i, ++j;
        }
    }
    for (; i < a.entries_.size(); ++i) r.entries_.push_back(a.entries_[i]);
    for (; j < b.entries_.size(); ++j) r.entries_.push_back(b.entries_[j]);
    for (const Entry& e : r.entries_) r.degree_ += e.second;
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    std::size_t i = 0, j = 0;
    while (i < entries_.size() && j < o.entries_.size()) {
        if (entries_[i].first < o.entries_[j].first)
            ++i;
        else if (entries_[i].first > o.entries_[j].first)
            ++j;
        else
            return false;
    }
    return true;
}

std::string Monomial::to_text() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += "*";
        out += var_name(entries_[i].first);
        if (entries_[i].second > 1) out += "^" + std::to_string(entries_[i].second);
    }
    return out;
}

int cmp_canonical(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first != eb[j].first)
            // the earlier variable has a positive exponent in exactly one of
            // them; that one is lexicographically larger
            return ea[i].first < eb[j].first ? 1 : -1;
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? 1 : -1;
        ++i, ++j;
    }
    if (i < ea.size()) return 1;
    if (j < eb.size()) return -1;
    return 0;
}

} // namespace jetlab
