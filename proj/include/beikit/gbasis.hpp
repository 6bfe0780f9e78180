#ifndef BEIKIT_GBASIS_HPP
#define BEIKIT_GBASIS_HPP

#include <span>
#include <vector>

#include "beikit/graph.hpp"
#include "beikit/polynomial.hpp"

namespace beikit {

/// One structured basis element together with its provenance: the admissible
/// path and the strictly antitone labeling it was built from.
///   poly    = (prod over interior k of p[kappa_k, x_k])
///             * (p[kappa_r, x_0] p[kappa_0, x_r] - p[kappa_r, x_r] p[kappa_0, x_0])
///   initial = the first of the two products, which is the lex leading term.
template <class K>
struct BasisElement {
    std::vector<int> path;
    std::vector<int> kappa;
    Polynomial<K> poly;
    Monomial initial;
};

/// Builds the generator for one (admissible path, strict labeling) pair.
/// Rejects paths that are not admissible and labelings that are not strictly
/// antitone.
template <class K>
BasisElement<K> build_generator(const OrderedGraph& g, std::span<const int> path,
                                std::span<const int> kappa, const K& one) {
    if (!is_admissible(g, path))
        throw input_error("path is not admissible");
    if (!is_strictly_pi_antitone(path, kappa))
        throw input_error("labeling is not strictly antitone for the path");
    return detail_build_generator(path, kappa, one);
}

/// Same construction without the validity re-checks; used by the enumerators
/// which produce valid pairs by construction.
template <class K>
BasisElement<K> detail_build_generator(std::span<const int> path, std::span<const int> kappa,
                                       const K& one) {
    const std::size_t r = path.size() - 1;
    Monomial u = Monomial::one();
    for (std::size_t k = 1; k < r; ++k)
        u = u * Monomial::variable(Variable{kappa[k], path[k]});
    const int x0 = path.front(), xr = path.back();
    const int k0 = kappa.front(), kr = kappa.back();
    const Monomial lead =
        u * Monomial::variable(Variable{kr, x0}) * Monomial::variable(Variable{k0, xr});
    const Monomial trail =
        u * Monomial::variable(Variable{kr, xr}) * Monomial::variable(Variable{k0, x0});
    Polynomial<K> poly;
    poly.add_term(lead, one);
    poly.add_term(trail, -one);
    BasisElement<K> e{std::vector<int>(path.begin(), path.end()),
                      std::vector<int>(kappa.begin(), kappa.end()), std::move(poly), lead};
    // strict antitonicity makes `lead` the lex leading term; keep it checked
    if (e.poly.leading_monomial() != e.initial)
        throw input_error("internal: constructed initial term is not leading");
    return e;
}

/// The full structured basis: one element per (admissible path, strictly
/// antitone labeling) pair, ordered by path then labeling. d0 == 1 yields an
/// empty basis; d0 < 1 is an input error.
template <class K>
std::vector<BasisElement<K>> groebner_basis(const OrderedGraph& g, int d0, const K& one) {
    if (d0 < 1)
        throw input_error("d0 must be >= 1, got " + std::to_string(d0));
    std::vector<BasisElement<K>> basis;
    for (const auto& path : enumerate_admissible_paths(g))
        for (const auto& kappa : enumerate_strict_antitone(path, d0))
            basis.push_back(detail_build_generator<K>(path, kappa, one));
    return basis;
}

template <class K>
std::vector<Polynomial<K>> basis_polynomials(std::span<const BasisElement<K>> basis) {
    std::vector<Polynomial<K>> polys;
    polys.reserve(basis.size());
    for (const auto& e : basis)
        polys.push_back(e.poly);
    return polys;
}

/// Remainder of p modulo the basis; divisors are tried in basis order and
/// the leading term is reduced first.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, std::span<const BasisElement<K>> basis) {
    std::vector<Polynomial<K>> polys = basis_polynomials(basis);
    return reduce_modulo<K>(p, polys);
}

/// true iff all leading coefficients are 1 and no element's initial term
/// divides any term of a different element.
template <class K>
bool is_reduced(std::span<const BasisElement<K>> basis) {
    for (const auto& e : basis)
        if (!e.poly.is_zero() && !coeff_is_one(e.poly.leading_coeff()))
            return false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& [m, c] : basis[j].poly.terms())
                if (basis[i].initial.divides(m))
                    return false;
        }
    }
    return true;
}

/// Radicality certificate: every initial term has all exponents equal to 1.
template <class K>
bool initial_terms_squarefree(std::span<const BasisElement<K>> basis) {
    for (const auto& e : basis)
        if (!e.initial.squarefree())
            return false;
    return true;
}

} // namespace beikit

#endif
