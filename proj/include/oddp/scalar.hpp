/*
 * scalar.hpp
 * ----------
 * Exact arithmetic in the biquadratic field Q(sqrt2, sqrt3).
 *
 * Every element is uniquely  a + b*sqrt2 + c*sqrt3 + d*sqrt6  with rational
 * coordinates, so equality is coordinate-wise and no rounding ever happens.
 * The field is closed under the products of the radicals:
 *
 *     sqrt2*sqrt2 = 2     sqrt3*sqrt3 = 3     sqrt6*sqrt6 = 6
 *     sqrt2*sqrt3 = sqrt6 sqrt2*sqrt6 = 2*sqrt3  sqrt3*sqrt6 = 3*sqrt2
 *
 * Inversion goes through the three Galois conjugates (independent sign flips
 * on sqrt2 and sqrt3): x * sig(x) * tau(x) * sigtau(x) is a rational norm.
 *
 * Wire format: radical components "p/q", "p/q r2", "p/q r3", "p/q r6"
 * joined by " + " / " - ", e.g. "1/2 + 3/4 r2".  Round-trips exactly.
 */
#pragma once

#include <oddp/rational.hpp>

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oddp {

class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) : a_(n) {}  // NOLINT: implicit on purpose
    Scalar(Rational a) : a_(std::move(a)) {}
    Scalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Scalar sqrt2() { return Scalar(0, 1, 0, 0); }
    static Scalar sqrt3() { return Scalar(0, 0, 1, 0); }
    static Scalar sqrt6() { return Scalar(0, 0, 0, 1); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }
    const Rational& sqrt3_part() const { return c_; }
    const Rational& sqrt6_part() const { return d_; }

    bool is_zero() const {
        return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    bool is_one() const {
        return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

    Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }

    Scalar operator+(const Scalar& o) const {
        return Scalar(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
    }

    Scalar operator-(const Scalar& o) const {
        return Scalar(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
    }

    Scalar operator*(const Scalar& o) const {
        if (is_rational()) {
            if (a_.is_zero()) return Scalar();
            return Scalar(a_ * o.a_, a_ * o.b_, a_ * o.c_, a_ * o.d_);
        }
        if (o.is_rational()) {
            if (o.a_.is_zero()) return Scalar();
            return Scalar(a_ * o.a_, b_ * o.a_, c_ * o.a_, d_ * o.a_);
        }
        const Rational two(2), three(3), six(6);
        Rational a = a_ * o.a_ + two * (b_ * o.b_) + three * (c_ * o.c_) + six * (d_ * o.d_);
        Rational b = a_ * o.b_ + b_ * o.a_ + three * (c_ * o.d_ + d_ * o.c_);
        Rational c = a_ * o.c_ + c_ * o.a_ + two * (b_ * o.d_ + d_ * o.b_);
        Rational d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
        return Scalar(std::move(a), std::move(b), std::move(c), std::move(d));
    }

    /// Galois conjugate sending sqrt2 -> -sqrt2.
    Scalar conj_sqrt2() const { return Scalar(a_, -b_, c_, -d_); }
    /// Galois conjugate sending sqrt3 -> -sqrt3.
    Scalar conj_sqrt3() const { return Scalar(a_, b_, -c_, -d_); }

    /// Product of all four Galois conjugates; rational, nonzero iff *this is.
    Rational norm() const {
        Scalar n = *this * conj_sqrt2() * conj_sqrt3() * (conj_sqrt2().conj_sqrt3());
        // The norm is Galois-invariant, hence purely rational.
        if (!n.is_rational())
            throw std::logic_error("Scalar: norm left the rationals");
        return n.a_;
    }

    Scalar inverse() const {
        if (is_zero())
            throw std::domain_error("Scalar: inverse of zero");
        if (is_rational())
            return Scalar(a_.inverse());
        Scalar cofactor = conj_sqrt2() * conj_sqrt3() * conj_sqrt2().conj_sqrt3();
        Rational n = (*this * cofactor).a_;
        Rational inv_n = n.inverse();
        return Scalar(cofactor.a_ * inv_n, cofactor.b_ * inv_n,
                      cofactor.c_ * inv_n, cofactor.d_ * inv_n);
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const {
        static const char* tags[4] = {"", " r2", " r3", " r6"};
        const Rational* coord[4] = {&a_, &b_, &c_, &d_};
        std::string out;
        for (int i = 0; i < 4; ++i) {
            if (coord[i]->is_zero())
                continue;
            if (out.empty()) {
                out += coord[i]->to_string();
            } else if (coord[i]->sign() < 0) {
                out += " - " + (-*coord[i]).to_string();
            } else {
                out += " + " + coord[i]->to_string();
            }
            out += tags[i];
        }
        return out.empty() ? std::string("0/1") : out;
    }

    static Scalar parse(std::string_view text);

private:
    Rational a_, b_, c_, d_;  // a + b*sqrt2 + c*sqrt3 + d*sqrt6
};

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline BigInt parse_bigint(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits)
        throw std::invalid_argument("Scalar: expected integer at position " +
                                    std::to_string(start) + " in '" + std::string(s) + "'");
    return BigInt(std::string(s.substr(start, i - start)));
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
    std::size_t i = 0;
    detail::skip_ws(text, i);
    if (i == text.size())
        throw std::invalid_argument("Scalar: empty input");
    Scalar result;
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        detail::skip_ws(text, i);
        if (!first) {
            if (text[i] == '+') {
                ++i;
            } else if (text[i] == '-') {
                sign = -1;
                ++i;
            } else {
                throw std::invalid_argument("Scalar: expected '+' or '-' at position " +
                                            std::to_string(i) + " in '" + std::string(text) + "'");
            }
            detail::skip_ws(text, i);
        }
        BigInt num = detail::parse_bigint(text, i);
        BigInt den = 1;
        if (i < text.size() && text[i] == '/') {
            ++i;
            den = detail::parse_bigint(text, i);
        }
        detail::skip_ws(text, i);
        Rational coeff(sign < 0 ? -num : num, den);
        if (i + 1 < text.size() && text[i] == 'r') {
            char radical = text[i + 1];
            if (radical == '2') {
                result += Scalar(0, coeff, 0, 0);
            } else if (radical == '3') {
                result += Scalar(0, 0, coeff, 0);
            } else if (radical == '6') {
                result += Scalar(0, 0, 0, coeff);
            } else {
                throw std::invalid_argument("Scalar: unknown radical 'r" +
                                            std::string(1, radical) + "'");
            }
            i += 2;
        } else {
            result += Scalar(coeff);
        }
        detail::skip_ws(text, i);
        first = false;
    }
    return result;
}

}  // namespace oddp
