#ifndef BEIKIT_FIELD_HPP
#define BEIKIT_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "beikit/errors.hpp"

namespace beikit {

/// Exact rational coefficients on arbitrary-precision integers.
using Rational = boost::multiprecision::cpp_rational;

/// Element of the prime field GF(p). Every element carries its modulus so
/// that mixing operands from different fields is caught at run time.
class GF {
  public:
    GF(std::int64_t value, std::int64_t p) : p_(p) {
        if (p < 2)
            throw input_error("GF modulus must be >= 2, got " + std::to_string(p));
        v_ = value % p;
        if (v_ < 0)
            v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    GF operator-() const { return GF(v_ == 0 ? 0 : p_ - v_, p_); }

    GF operator+(const GF& o) const {
        check_same(o);
        std::int64_t s = v_ + o.v_;
        if (s >= p_)
            s -= p_;
        return GF(s, p_);
    }

    GF operator-(const GF& o) const {
        check_same(o);
        std::int64_t s = v_ - o.v_;
        if (s < 0)
            s += p_;
        return GF(s, p_);
    }

    GF operator*(const GF& o) const {
        check_same(o);
        return GF(mulmod(v_, o.v_, p_), p_);
    }

    GF operator/(const GF& o) const { return *this * o.inverse(); }

    GF inverse() const {
        if (v_ == 0)
            throw input_error("division by zero in GF(" + std::to_string(p_) + ")");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        if (x0 < 0)
            x0 += p_;
        return GF(x0, p_);
    }

    bool operator==(const GF& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const GF& o) const { return !(*this == o); }

  private:
    void check_same(const GF& o) const {
        if (p_ != o.p_)
            throw input_error("mixed-field operands: GF(" + std::to_string(p_) +
                              ") vs GF(" + std::to_string(o.p_) + ")");
    }

    static std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
        return static_cast<std::int64_t>(
            (static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b)) %
            static_cast<unsigned __int128>(p));
    }

    std::int64_t v_;
    std::int64_t p_;
};

inline bool coeff_is_zero(const GF& k) { return k.is_zero(); }
inline bool coeff_is_zero(const Rational& k) { return k == 0; }

inline bool coeff_is_one(const GF& k) { return k.value() == 1; }
inline bool coeff_is_one(const Rational& k) { return k == 1; }

/// The multiplicative unit of the same field as `like`.
inline GF coeff_one(const GF& like) { return GF(1, like.modulus()); }
inline Rational coeff_one(const Rational&) { return Rational(1); }

inline GF coeff_inverse(const GF& k) { return k.inverse(); }
inline Rational coeff_inverse(const Rational& k) {
    if (k == 0)
        throw input_error("division by zero in rational field");
    return Rational(1) / k;
}

/// Integer n mapped into the same field as `like`.
inline GF coeff_from_int(std::int64_t n, const GF& like) { return GF(n, like.modulus()); }
inline Rational coeff_from_int(std::int64_t n, const Rational&) { return Rational(n); }

/// Canonical coefficient text: representative 0..p-1 for GF(p), `a/b` or `a`
/// for rationals.
inline std::string coeff_to_string(const GF& k) { return std::to_string(k.value()); }
inline std::string coeff_to_string(const Rational& k) { return k.str(); }

bool is_prime(std::int64_t p);

} // namespace beikit

#endif
