#ifndef BEIKIT_POLYNOMIAL_HPP
#define BEIKIT_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "beikit/field.hpp"
#include "beikit/monomial.hpp"

namespace beikit {

/// Sparse polynomial over the coefficient field K (Rational or GF). Terms
/// are kept in descending lexicographic order, so begin() is the leading
/// term. No zero coefficients are ever stored.
template <class K>
class Polynomial {
  public:
    using TermMap = std::map<Monomial, K, MonomialGreater>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }

    static Polynomial term(const K& c, const Monomial& m) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Monomial& leading_monomial() const { return leading().first; }
    const K& leading_coeff() const { return leading().second; }

    const std::pair<const Monomial, K>& leading() const {
        if (terms_.empty())
            throw input_error("leading term of the zero polynomial");
        return *terms_.begin();
    }

    void add_term(const Monomial& m, const K& c) {
        if (coeff_is_zero(c))
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            K s = it->second + c;
            if (coeff_is_zero(s))
                terms_.erase(it);
            else
                it->second = s;
        }
    }

    void drop_leading() {
        if (!terms_.empty())
            terms_.erase(terms_.begin());
    }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }

    /// this * c*m
    Polynomial times_term(const K& c, const Monomial& m) const {
        Polynomial r;
        if (coeff_is_zero(c))
            return r;
        for (const auto& [mt, ct] : terms_)
            r.terms_.emplace(mt * m, ct * c);
        return r;
    }

    Polynomial scaled(const K& c) const { return times_term(c, Monomial::one()); }

    Polynomial monic() const {
        if (is_zero())
            return *this;
        return scaled(coeff_inverse(leading_coeff()));
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    TermMap terms_;
};

/// The 2x2 minor p[i,x]p[j,y] - p[i,y]p[j,x]. `one` fixes the coefficient
/// field. Degenerate index pairs are rejected since the minor would vanish.
template <class K>
Polynomial<K> make_f(int i, int j, int x, int y, const K& one) {
    if (i == j)
        throw input_error("make_f: row indices coincide (i=j=" + std::to_string(i) + ")");
    if (x == y)
        throw input_error("make_f: vertices coincide (x=y=" + std::to_string(x) + ")");
    if (i < 1 || j < 1 || x < 1 || y < 1)
        throw input_error("make_f: indices must be positive");
    auto pij = [](int r, int c) { return Monomial::variable(Variable{r, c}); };
    Polynomial<K> p;
    p.add_term(pij(i, x) * pij(j, y), one);
    p.add_term(pij(i, y) * pij(j, x), -one);
    return p;
}

/// true iff every term of p has the same multidegree.
template <class K>
bool is_multihomogeneous(const Polynomial<K>& p, int d0, int n) {
    if (p.is_zero())
        return true;
    Multidegree first = multidegree(p.leading_monomial(), d0, n);
    for (const auto& [m, c] : p.terms())
        if (multidegree(m, d0, n) != first)
            return false;
    return true;
}

/// Remainder of p under multivariate division by `divisors`, leading term
/// first, divisors tried in the given order. No remainder term is divisible
/// by any divisor's leading monomial.
template <class K>
Polynomial<K> reduce_modulo(const Polynomial<K>& p, std::span<const Polynomial<K>> divisors) {
    Polynomial<K> r;
    Polynomial<K> h = p;
    while (!h.is_zero()) {
        const Monomial& lm = h.leading_monomial();
        bool reduced = false;
        for (const auto& d : divisors) {
            if (d.is_zero())
                continue;
            if (d.leading_monomial().divides(lm)) {
                Monomial q = lm.divide(d.leading_monomial());
                K c = h.leading_coeff() / d.leading_coeff();
                h = h - d.times_term(c, q);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(lm, h.leading_coeff());
            h.drop_leading();
        }
    }
    return r;
}

} // namespace beikit

#endif
