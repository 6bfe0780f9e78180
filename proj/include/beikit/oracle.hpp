#ifndef BEIKIT_ORACLE_HPP
#define BEIKIT_ORACLE_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "beikit/polynomial.hpp"

namespace beikit {
namespace oracle {

/// Monomial order for oracle runs. Both variants compare lexicographically;
/// the elimination variant additionally admits the auxiliary variable, which
/// outranks every p[i,x] by construction of the variable order.
struct OracleOrder {
    bool allow_elimination = false;

    static OracleOrder lex() { return {false}; }
    static OracleOrder elimination() { return {true}; }
};

/// Hard caps for Buchberger-style runs. Exceeding any cap raises
/// budget_error so verification fails loudly instead of hanging.
struct Budget {
    std::size_t max_basis = 5000;
    std::size_t max_spairs = 500000;
    double max_seconds = 600.0;
};

namespace detail {

class BudgetClock {
  public:
    explicit BudgetClock(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    void count_spair() {
        if (++spairs_ > budget_.max_spairs)
            throw budget_error("budget exceeded: more than " +
                               std::to_string(budget_.max_spairs) + " S-pairs");
        if ((spairs_ & 0x3f) == 0)
            check_clock();
    }

    void count_basis(std::size_t size) const {
        if (size > budget_.max_basis)
            throw budget_error("budget exceeded: basis larger than " +
                               std::to_string(budget_.max_basis));
    }

    void check_clock() const {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
        if (dt.count() > budget_.max_seconds)
            throw budget_error("budget exceeded: ran longer than " +
                               std::to_string(budget_.max_seconds) + "s");
    }

  private:
    Budget budget_;
    std::size_t spairs_ = 0;
    std::chrono::steady_clock::time_point start_;
};

template <class K>
void check_order(std::span<const Polynomial<K>> polys, const OracleOrder& order) {
    if (order.allow_elimination)
        return;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms())
            if (m.contains_elimination_variable())
                throw input_error("elimination variable used under the plain lex order");
}

} // namespace detail

/// Leading-term cancellation of a nonzero pair.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                           const OracleOrder& order = OracleOrder::lex()) {
    if (f.is_zero() || g.is_zero())
        throw input_error("s_polynomial of a zero polynomial");
    const Polynomial<K> pair[2] = {f, g};
    detail::check_order<K>(pair, order);
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial<K> a = f.times_term(coeff_inverse(f.leading_coeff()),
                                   l.divide(f.leading_monomial()));
    Polynomial<K> b = g.times_term(coeff_inverse(g.leading_coeff()),
                                   l.divide(g.leading_monomial()));
    return a - b;
}

/// true iff every S-pair of the basis reduces to zero modulo the basis.
/// Every pair is reduced; no criterion is assumed.
template <class K>
bool is_groebner(std::span<const Polynomial<K>> basis,
                 const OracleOrder& order = OracleOrder::lex(), const Budget& budget = {}) {
    detail::check_order(basis, order);
    detail::BudgetClock clock(budget);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero())
            continue;
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[j].is_zero())
                continue;
            clock.count_spair();
            Polynomial<K> s = s_polynomial(basis[i], basis[j], order);
            if (!reduce_modulo(s, basis).is_zero())
                return false;
        }
    }
    return true;
}

namespace detail {

template <class K>
struct SPair {
    std::size_t i, j;
    Monomial lcm;
};

template <class K>
void push_pairs(std::vector<SPair<K>>& queue, const std::vector<Polynomial<K>>& basis,
                std::size_t fresh) {
    for (std::size_t i = 0; i < fresh; ++i) {
        Monomial l = Monomial::lcm(basis[i].leading_monomial(),
                                   basis[fresh].leading_monomial());
        queue.push_back(SPair<K>{i, fresh, std::move(l)});
    }
}

// normal strategy: smallest lcm first, ties by index pair
template <class K>
std::size_t pick_pair(const std::vector<SPair<K>>& queue) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
        int c = compare_monomials_lex(queue[k].lcm, queue[best].lcm);
        if (c < 0 || (c == 0 && std::pair(queue[k].i, queue[k].j) <
                                    std::pair(queue[best].i, queue[best].j)))
            best = k;
    }
    return best;
}

// keep only elements whose initial term no other kept element divides, then
// reduce every tail; output sorted by descending initial term
template <class K>
std::vector<Polynomial<K>> interreduce(std::vector<Polynomial<K>> basis) {
    std::erase_if(basis, [](const Polynomial<K>& p) { return p.is_zero(); });
    std::sort(basis.begin(), basis.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
        return compare_monomials_lex(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial<K>> minimal;
    for (const auto& p : basis) {
        bool redundant = false;
        for (const auto& q : minimal)
            if (q.leading_monomial().divides(p.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant)
            minimal.push_back(p);
    }
    std::vector<Polynomial<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<K>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        Polynomial<K> nf = reduce_modulo(minimal[i], std::span<const Polynomial<K>>(others));
        if (!nf.is_zero())
            reduced.push_back(nf.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial<K>& a, const Polynomial<K>& b) {
        return compare_monomials_lex(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

} // namespace detail

/// The unique reduced Groebner basis of the ideal generated by `generators`.
/// Classical Buchberger with the normal selection strategy and the coprime
/// leading-monomial skip, followed by inter-reduction.
template <class K>
std::vector<Polynomial<K>> buchberger(std::span<const Polynomial<K>> generators,
                                      const OracleOrder& order = OracleOrder::lex(),
                                      const Budget& budget = {}) {
    detail::check_order(generators, order);
    detail::BudgetClock clock(budget);
    std::vector<Polynomial<K>> basis;
    std::vector<detail::SPair<K>> queue;
    for (const auto& gen : generators) {
        if (gen.is_zero())
            continue;
        basis.push_back(gen.monic());
        detail::push_pairs(queue, basis, basis.size() - 1);
    }
    clock.count_basis(basis.size());
    while (!queue.empty()) {
        std::size_t k = detail::pick_pair(queue);
        detail::SPair<K> pair = std::move(queue[k]);
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(k));
        const Polynomial<K>& f = basis[pair.i];
        const Polynomial<K>& g = basis[pair.j];
        if (f.leading_monomial().coprime(g.leading_monomial()))
            continue; // product criterion
        clock.count_spair();
        Polynomial<K> s = s_polynomial(f, g, order);
        Polynomial<K> r = reduce_modulo(s, std::span<const Polynomial<K>>(basis));
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            clock.count_basis(basis.size());
            detail::push_pairs(queue, basis, basis.size() - 1);
        }
    }
    return detail::interreduce(std::move(basis));
}

/// true iff both generator lists span the same ideal, decided by comparing
/// reduced Groebner bases.
template <class K>
bool ideal_equal(std::span<const Polynomial<K>> a, std::span<const Polynomial<K>> b,
                 const OracleOrder& order = OracleOrder::lex(), const Budget& budget = {}) {
    std::vector<Polynomial<K>> ga = buchberger(a, order, budget);
    std::vector<Polynomial<K>> gb = buchberger(b, order, budget);
    return ga == gb;
}

/// Generators of the intersection of two ideals via the classical
/// t*A + (1-t)*B construction: the auxiliary variable t is ranked above all
/// p[i,x], and basis elements involving t are discarded.
template <class K>
std::vector<Polynomial<K>> ideal_intersection(std::span<const Polynomial<K>> a,
                                              std::span<const Polynomial<K>> b, const K& one,
                                              const Budget& budget = {}) {
    detail::check_order(a, OracleOrder::lex());
    detail::check_order(b, OracleOrder::lex());
    const Monomial t = Monomial::variable(Variable::elimination());
    const Polynomial<K> t_poly = Polynomial<K>::term(one, t);
    Polynomial<K> one_minus_t = Polynomial<K>::term(one, Monomial::one()) - t_poly;
    std::vector<Polynomial<K>> gens;
    for (const auto& p : a)
        gens.push_back(t_poly * p);
    for (const auto& p : b)
        gens.push_back(one_minus_t * p);
    std::vector<Polynomial<K>> gb =
        buchberger(std::span<const Polynomial<K>>(gens), OracleOrder::elimination(), budget);
    std::vector<Polynomial<K>> out;
    for (auto& p : gb) {
        bool has_t = false;
        for (const auto& [m, c] : p.terms())
            if (m.contains_elimination_variable()) {
                has_t = true;
                break;
            }
        if (!has_t)
            out.push_back(std::move(p));
    }
    return out;
}

/// Intersection of several ideals, folded left in the given order. An empty
/// family yields the unit ideal.
template <class K>
std::vector<Polynomial<K>> ideal_intersection_many(
    std::span<const std::vector<Polynomial<K>>> ideals, const K& one,
    const Budget& budget = {}) {
    if (ideals.empty())
        return {Polynomial<K>::term(one, Monomial::one())};
    std::vector<Polynomial<K>> acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i)
        acc = ideal_intersection(std::span<const Polynomial<K>>(acc),
                                 std::span<const Polynomial<K>>(ideals[i]), one, budget);
    return acc;
}

} // namespace oracle
} // namespace beikit

#endif
