#ifndef BEIKIT_POLYTEXT_HPP
#define BEIKIT_POLYTEXT_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "beikit/polynomial.hpp"

namespace beikit {

// Textual polynomial syntax, e.g. `+3*p[1,2]*p[2,3]^2 -1/2*p[1,1]`.
// Output is canonical: terms in descending lex order, every term carries an
// explicit sign and coefficient, factors ascend by (row, col).

namespace detail {

inline std::string rational_term_prefix(const Rational& c) {
    Rational a = c < 0 ? Rational(-c) : c;
    return (c < 0 ? std::string("-") : std::string("+")) + a.str();
}

inline std::string gf_term_prefix(const GF& c) { return "+" + std::to_string(c.value()); }

inline std::string term_prefix(const Rational& c) { return rational_term_prefix(c); }
inline std::string term_prefix(const GF& c) { return gf_term_prefix(c); }

} // namespace detail

template <class K>
std::string polynomial_to_text(const Polynomial<K>& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (!out.empty())
            out += ' ';
        out += detail::term_prefix(c);
        if (!m.is_one())
            out += "*" + monomial_to_text(m);
    }
    return out;
}

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    template <class K>
    Polynomial<K> parse(const K& one) {
        Polynomial<K> p;
        skip_ws();
        if (eof())
            throw input_error("empty polynomial");
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw input_error("expected '+' or '-' between terms at offset " +
                                  std::to_string(pos_));
            }
            K coeff = sign < 0 ? -one : one;
            Monomial mon = Monomial::one();
            bool any_factor = false;
            while (true) {
                skip_ws();
                if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    coeff = coeff * parse_number(one);
                    any_factor = true;
                } else if (!eof() && peek() == 'p') {
                    auto [v, e] = parse_variable_power();
                    mon = mon * Monomial::variable(v, e);
                    any_factor = true;
                } else {
                    break;
                }
                skip_ws();
                if (!eof() && peek() == '*') {
                    ++pos_;
                    continue;
                }
                break;
            }
            if (!any_factor)
                throw input_error("expected a term at offset " + std::to_string(pos_));
            p.add_term(mon, coeff);
            first = false;
            skip_ws();
        }
        return p;
    }

  private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::int64_t parse_integer() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            throw input_error("expected an integer at offset " + std::to_string(start));
        std::string digits(s_.substr(start, pos_ - start));
        if (digits.size() > 18)
            throw input_error("integer literal too large: " + digits);
        return std::stoll(digits);
    }

    template <class K>
    K parse_number(const K& one) {
        std::int64_t num = parse_integer();
        K value = coeff_from_int(num, one);
        if (!eof() && peek() == '/') {
            ++pos_;
            std::int64_t den = parse_integer();
            if (den == 0)
                throw input_error("zero denominator in coefficient");
            value = value / coeff_from_int(den, one);
        }
        return value;
    }

    std::pair<Variable, int> parse_variable_power() {
        expect('p');
        expect('[');
        skip_ws();
        std::int64_t row = parse_integer();
        skip_ws();
        expect(',');
        skip_ws();
        std::int64_t col = parse_integer();
        skip_ws();
        expect(']');
        if (row < 1 || col < 1)
            throw input_error("variable indices must be >= 1");
        int exp = 1;
        if (!eof() && peek() == '^') {
            ++pos_;
            exp = static_cast<int>(parse_integer());
            if (exp < 0)
                throw input_error("negative exponent");
        }
        return {Variable{static_cast<std::int32_t>(row), static_cast<std::int32_t>(col)}, exp};
    }

    void expect(char c) {
        if (eof() || peek() != c)
            throw input_error(std::string("expected '") + c + "' at offset " +
                              std::to_string(pos_));
        ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse the textual syntax into a polynomial over the field of `one`.
/// Throws input_error on malformed input.
template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const K& one) {
    return detail::PolyParser(text).parse(one);
}

} // namespace beikit

#endif
