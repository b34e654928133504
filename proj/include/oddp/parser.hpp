/*
 * parser.hpp
 * ----------
 * Recursive-descent parser for the expression grammar used by the CLI and
 * the test fixtures:
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := scalar | var | '(' expr ')'
 *   var    := 'T'idx | 'th'idx | 'q'idx | 'p'idx | 'X'idx      (idx >= 1)
 *   scalar := ['-'] INT ['/' INT] ['r2'|'r3'|'r6']
 *
 * Odd-variable order in the input is significant; parsing sign-normalizes
 * it into canonical form.  Errors carry line and column.
 */
#pragma once

#include <oddp/superpoly.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oddp {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, int line, int column)
        : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " +
                                message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view src, int dim) : src_(src), dim_(dim) {}

    SuperPolynomial run() {
        skip_ws();
        if (at_end())
            fail("empty expression");
        SuperPolynomial result = parse_expr();
        skip_ws();
        if (!at_end())
            fail("unexpected trailing input");
        return result;
    }

private:
    SuperPolynomial parse_expr() {
        SuperPolynomial result = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                advance();
                result += parse_term();
            } else if (peek() == '-') {
                advance();
                result -= parse_term();
            } else {
                return result;
            }
        }
    }

    SuperPolynomial parse_term() {
        SuperPolynomial result = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                advance();
                result *= parse_factor();
            } else {
                return result;
            }
        }
    }

    SuperPolynomial parse_factor() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            advance();
            SuperPolynomial inner = parse_expr();
            skip_ws();
            if (peek() != ')')
                fail("expected ')'");
            advance();
            return inner;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return parse_scalar_factor();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_variable();
        fail("expected a scalar, a variable, or '('");
        return {};  // unreachable
    }

    SuperPolynomial parse_scalar_factor() {
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            advance();
            skip_ws();
        }
        const BigInt num = parse_integer();
        BigInt den = 1;
        if (peek() == '/') {
            advance();
            den = parse_integer();
            if (den == 0)
                fail("zero denominator");
        }
        Rational r(negative ? -num : num, den);
        // optional radical tag, separated by whitespace or adjacent
        const std::size_t mark = pos_;
        skip_ws();
        if (peek() == 'r' && pos_ + 1 < src_.size() &&
            (src_[pos_ + 1] == '2' || src_[pos_ + 1] == '3' || src_[pos_ + 1] == '6') &&
            !is_index_char(pos_ + 2)) {
            const char radical = src_[pos_ + 1];
            advance();
            advance();
            Scalar s;
            if (radical == '2')
                s = Scalar(Rational(0), r, Rational(0), Rational(0));
            else if (radical == '3')
                s = Scalar(Rational(0), Rational(0), r, Rational(0));
            else
                s = Scalar(Rational(0), Rational(0), Rational(0), r);
            return SuperPolynomial::constant(s);
        }
        pos_ = mark;
        return SuperPolynomial::constant(Scalar(r));
    }

    SuperPolynomial parse_variable() {
        const int err_line = line_of(pos_), err_col = col_of(pos_);
        Family family;
        if (peek() == 'T') {
            family = Family::Theta;
            advance();
        } else if (peek() == 't' && pos_ + 1 < src_.size() && src_[pos_ + 1] == 'h') {
            family = Family::SmallTheta;
            advance();
            advance();
        } else if (peek() == 'q') {
            family = Family::Q;
            advance();
        } else if (peek() == 'p') {
            family = Family::P;
            advance();
        } else if (peek() == 'X') {
            family = Family::X;
            advance();
        } else {
            fail("unknown variable family (expected T, th, q, p, or X)");
            return {};
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("variable needs a decimal index >= 1");
        const BigInt raw = parse_integer();
        if (raw < 1 || raw > 1000000)
            throw ParseError("variable index out of range", err_line, err_col);
        const int index = static_cast<int>(raw);
        if (family_is_odd(family) && index > kMaxOddIndex)
            throw ParseError("odd variable index must be in 1.." + std::to_string(kMaxOddIndex),
                             err_line, err_col);
        if (dim_ > 0 && index > dim_)
            throw ParseError("variable index " + std::to_string(index) + " out of range 1.." +
                                 std::to_string(dim_),
                             err_line, err_col);
        return SuperPolynomial::variable(VariableId{family, index});
    }

    BigInt parse_integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        return BigInt(digits);
    }

    bool is_index_char(std::size_t at) const {
        return at < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at]));
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    bool at_end() const { return pos_ >= src_.size(); }
    void advance() { ++pos_; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    int line_of(std::size_t at) const {
        int line = 1;
        for (std::size_t i = 0; i < at && i < src_.size(); ++i)
            if (src_[i] == '\n')
                ++line;
        return line;
    }

    int col_of(std::size_t at) const {
        int col = 1;
        for (std::size_t i = 0; i < at && i < src_.size(); ++i)
            col = (src_[i] == '\n') ? 1 : col + 1;
        return col;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_of(pos_), col_of(pos_));
    }

    std::string_view src_;
    int dim_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse an expression into canonical form.  `dim`, when positive, bounds
/// every variable index; 0 leaves only the odd-index capacity limit.
inline SuperPolynomial parse_expression(std::string_view src, int dim = 0) {
    return detail::ExpressionParser(src, dim).run();
}

}  // namespace oddp
