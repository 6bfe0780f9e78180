#include "beikit/monomial.hpp"

#include <algorithm>

namespace beikit {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    std::size_t i = 0, j = 0;
    while (i < exps_.size() && j < o.exps_.size()) {
        int c = compare_vars(exps_[i].first, o.exps_[j].first);
        if (c > 0) {
            r.exps_.push_back(exps_[i++]);
        } else if (c < 0) {
            r.exps_.push_back(o.exps_[j++]);
        } else {
            r.exps_.emplace_back(exps_[i].first, exps_[i].second + o.exps_[j].second);
            ++i;
            ++j;
        }
    }
    for (; i < exps_.size(); ++i)
        r.exps_.push_back(exps_[i]);
    for (; j < o.exps_.size(); ++j)
        r.exps_.push_back(o.exps_[j]);
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    std::size_t j = 0;
    for (const auto& [v, e] : exps_) {
        while (j < other.exps_.size() && var_greater(other.exps_[j].first, v))
            ++j;
        if (j >= other.exps_.size() || other.exps_[j].first != v || other.exps_[j].second < e)
            return false;
    }
    return true;
}

Monomial Monomial::divide(const Monomial& divisor) const {
    Monomial r;
    std::size_t j = 0;
    for (const auto& [v, e] : exps_) {
        if (j < divisor.exps_.size() && divisor.exps_[j].first == v) {
            int d = e - divisor.exps_[j].second;
            if (d < 0)
                throw input_error("monomial division is not exact");
            if (d > 0)
                r.exps_.emplace_back(v, d);
            ++j;
        } else {
            r.exps_.emplace_back(v, e);
        }
    }
    if (j != divisor.exps_.size())
        throw input_error("monomial division is not exact");
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.exps_.size() && j < b.exps_.size()) {
        int c = compare_vars(a.exps_[i].first, b.exps_[j].first);
        if (c > 0) {
            r.exps_.push_back(a.exps_[i++]);
        } else if (c < 0) {
            r.exps_.push_back(b.exps_[j++]);
        } else {
            r.exps_.emplace_back(a.exps_[i].first,
                                 std::max(a.exps_[i].second, b.exps_[j].second));
            ++i;
            ++j;
        }
    }
    for (; i < a.exps_.size(); ++i)
        r.exps_.push_back(a.exps_[i]);
    for (; j < b.exps_.size(); ++j)
        r.exps_.push_back(b.exps_[j]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    std::size_t i = 0, j = 0;
    while (i < exps_.size() && j < o.exps_.size()) {
        int c = compare_vars(exps_[i].first, o.exps_[j].first);
        if (c == 0)
            return false;
        if (c > 0)
            ++i;
        else
            ++j;
    }
    return true;
}

int compare_monomials_lex(const Monomial& a, const Monomial& b) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        int c = compare_vars(ea[i].first, eb[j].first);
        if (c > 0)
            return 1; // a has positive exponent on a larger variable
        if (c < 0)
            return -1;
        if (ea[i].second != eb[j].second)
            return ea[i].second > eb[j].second ? 1 : -1;
        ++i;
        ++j;
    }
    if (i < ea.size())
        return 1;
    if (j < eb.size())
        return -1;
    return 0;
}

Multidegree multidegree(const Monomial& m, int d0, int n) {
    if (d0 < 1 || n < 0)
        throw input_error("multidegree needs d0 >= 1 and n >= 0");
    Multidegree deg(static_cast<std::size_t>(d0 + n), 0);
    for (const auto& [v, e] : m.exponents()) {
        if (v.is_elimination())
            throw input_error("multidegree is undefined for the elimination variable");
        if (v.row < 1 || v.row > d0 || v.col < 1 || v.col > n)
            throw input_error("variable p[" + std::to_string(v.row) + "," +
                              std::to_string(v.col) + "] outside ring with d0=" +
                              std::to_string(d0) + ", n=" + std::to_string(n));
        deg[static_cast<std::size_t>(v.row - 1)] += e;
        deg[static_cast<std::size_t>(d0 + v.col - 1)] += e;
    }
    return deg;
}

std::string monomial_to_text(const Monomial& m) {
    if (m.is_one())
        return "1";
    std::string s;
    // display ascending: reverse of the internal descending order
    const auto& exps = m.exponents();
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (!s.empty())
            s += '*';
        if (it->first.is_elimination())
            s += "t";
        else
            s += "p[" + std::to_string(it->first.row) + "," + std::to_string(it->first.col) + "]";
        if (it->second > 1)
            s += "^" + std::to_string(it->second);
    }
    return s;
}

} // namespace beikit
