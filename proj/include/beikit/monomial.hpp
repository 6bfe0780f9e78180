#ifndef BEIKIT_MONOMIAL_HPP
#define BEIKIT_MONOMIAL_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "beikit/errors.hpp"

namespace beikit {

/// An unknown p[row,col]: row indexes 1..d0, col is a vertex 1..n. The
/// special elimination variable used by ideal intersection has
/// row == kEliminationRow and outranks every p[row,col].
struct Variable {
    std::int32_t row;
    std::int32_t col;

    static constexpr std::int32_t kEliminationRow = std::numeric_limits<std::int32_t>::max();

    static Variable elimination() { return Variable{kEliminationRow, 0}; }
    bool is_elimination() const { return row == kEliminationRow; }

    bool operator==(const Variable& o) const { return row == o.row && col == o.col; }
    bool operator!=(const Variable& o) const { return !(*this == o); }
};

/// Order of the unknowns: p[i,x] > p[j,y] iff i > j, or i = j and x > y.
/// Returns +1, 0 or -1.
inline int compare_vars(const Variable& a, const Variable& b) {
    if (a.row != b.row)
        return a.row > b.row ? 1 : -1;
    if (a.col != b.col)
        return a.col > b.col ? 1 : -1;
    return 0;
}

inline bool var_greater(const Variable& a, const Variable& b) { return compare_vars(a, b) > 0; }

/// Power product of unknowns. Exponents are kept sparse, sorted descending
/// by the variable order, with no zero exponents stored.
class Monomial {
  public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial variable(Variable v, int exponent = 1) {
        if (exponent < 0)
            throw input_error("negative exponent in monomial");
        Monomial m;
        if (exponent > 0)
            m.exps_.emplace_back(v, exponent);
        return m;
    }

    const std::vector<std::pair<Variable, int>>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_)
            d += e;
        return d;
    }

    int exponent_of(const Variable& v) const {
        for (const auto& [w, e] : exps_)
            if (w == v)
                return e;
        return 0;
    }

    bool contains_elimination_variable() const {
        for (const auto& [v, e] : exps_)
            if (v.is_elimination())
                return true;
        return false;
    }

    bool squarefree() const {
        for (const auto& [v, e] : exps_)
            if (e > 1)
                return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const;

    /// true iff this divides other.
    bool divides(const Monomial& other) const;

    /// Exact quotient other := this / divisor; throws input_error when the
    /// divisor does not divide this.
    Monomial divide(const Monomial& divisor) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

  private:
    std::vector<std::pair<Variable, int>> exps_;
};

/// Pure lexicographic comparison of exponent vectors with respect to the
/// variable order above. Returns +1, 0 or -1.
int compare_monomials_lex(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_monomials_lex(a, b) > 0;
    }
};

/// Row degrees followed by column degrees: entry i-1 is the total exponent of
/// row i, entry d0+x-1 the total exponent of vertex x.
using Multidegree = std::vector<int>;

/// Multidegree of m in the ring with rows 1..d0 and vertices 1..n.
Multidegree multidegree(const Monomial& m, int d0, int n);

/// `p[i,x]` factors joined by `*`, ascending by (row, col); `^e` for e > 1.
/// The empty monomial prints as `1`.
std::string monomial_to_text(const Monomial& m);

} // namespace beikit

#endif
