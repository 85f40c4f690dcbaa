#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <sstream>
#include <string>

namespace braidnc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Element of the field Q(i,sqrt2), stored on the fixed basis {1, i, sqrt2, i*sqrt2}.
class BaseNumber {
public:
    BaseNumber() = default;
    BaseNumber(long v) : a_(v) {}  // NOLINT: implicit by intent
    BaseNumber(Rational v) : a_(std::move(v)) {}
    BaseNumber(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static BaseNumber i() { return {0, 1, 0, 0}; }
    static BaseNumber sqrt2() { return {0, 0, 1, 0}; }
    static BaseNumber half() { return {Rational(1, 2), 0, 0, 0}; }
    static BaseNumber inv_sqrt2() { return {0, 0, Rational(1, 2), 0}; }  // sqrt2/2

    const Rational& re1() const { return a_; }
    const Rational& im1() const { return b_; }
    const Rational& re2() const { return c_; }
    const Rational& im2() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

    friend bool operator==(const BaseNumber& x, const BaseNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const BaseNumber& x, const BaseNumber& y) { return !(x == y); }

    BaseNumber operator-() const { return {-a_, -b_, -c_, -d_}; }

    friend BaseNumber operator+(const BaseNumber& x, const BaseNumber& y) {
        return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
    }
    friend BaseNumber operator-(const BaseNumber& x, const BaseNumber& y) {
        return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
    }

    // (a + bi + c s + d i s)(a' + b'i + c's + d'i s), with i^2 = -1, s^2 = 2.
    friend BaseNumber operator*(const BaseNumber& x, const BaseNumber& y) {
        return {x.a_ * y.a_ - x.b_ * y.b_ + 2 * (x.c_ * y.c_ - x.d_ * y.d_),
                x.a_ * y.b_ + x.b_ * y.a_ + 2 * (x.c_ * y.d_ + x.d_ * y.c_),
                x.a_ * y.c_ + x.c_ * y.a_ - x.b_ * y.d_ - x.d_ * y.b_,
                x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_};
    }

    BaseNumber& operator+=(const BaseNumber& y) { return *this = *this + y; }
    BaseNumber& operator-=(const BaseNumber& y) { return *this = *this - y; }
    BaseNumber& operator*=(const BaseNumber& y) { return *this = *this * y; }

    /// i -> -i, sqrt2 -> sqrt2.
    BaseNumber conj() const { return {a_, -b_, c_, -d_}; }

    /// Multiplicative inverse; views the field as Q(i)(sqrt2).
    BaseNumber inverse() const {
        // x + y*sqrt2 with x = a + bi, y = c + di:
        // 1/(x + y s) = (x - y s) / (x^2 - 2 y^2), the denominator in Q(i).
        // x^2 - 2y^2 = 0 would force sqrt2 into Q(i), so it is nonzero here.
        if (is_zero()) throw std::domain_error("BaseNumber: division by zero");
        Rational na = a_ * a_ - b_ * b_ - 2 * (c_ * c_ - d_ * d_);
        Rational nb = 2 * a_ * b_ - 4 * c_ * d_;
        // (na + nb i) is x^2 - 2y^2; invert it in Q(i).
        Rational den = na * na + nb * nb;
        Rational ia = na / den, ib = -nb / den;
        BaseNumber inv_d{ia, ib, 0, 0};
        BaseNumber num{a_, b_, -c_, -d_};
        return num * inv_d;
    }

    std::complex<double> eval() const {
        const double s = 1.4142135623730950488;
        auto f = [](const Rational& r) { return static_cast<double>(r); };
        return {f(a_) + f(c_) * s, f(b_) + f(d_) * s};
    }

    /// Renders on the fixed basis, e.g. "3/2", "-i", "sqrt2", "1/2*i*sqrt2".
    std::string render() const {
        if (is_zero()) return "0";
        std::string out;
        auto add = [&](const Rational& r, const char* unit) {
            if (r == 0) return;
            std::string coeff;
            Rational abs_r = r < 0 ? Rational(-r) : r;
            bool neg = r < 0;
            if (abs_r == 1 && unit[0] != '\0') {
                coeff = unit;
            } else {
                std::ostringstream os;
                os << abs_r;
                coeff = os.str();
                if (unit[0] != '\0') coeff += std::string("*") + unit;
            }
            if (out.empty())
                out = neg ? "-" + coeff : coeff;
            else
                out += (neg ? " - " : " + ") + coeff;
        };
        add(a_, "");
        add(b_, "i");
        add(c_, "sqrt2");
        add(d_, "i*sqrt2");
        return out;
    }

    /// True when the rendering needs parentheses inside a product.
    bool is_multi_term() const {
        int n = (a_ != 0) + (b_ != 0) + (c_ != 0) + (d_ != 0);
        return n > 1;
    }

    std::size_t hash() const {
        std::hash<std::string> h;
        std::ostringstream os;
        os << a_ << '|' << b_ << '|' << c_ << '|' << d_;
        return h(os.str());
    }

private:
    Rational a_{0}, b_{0}, c_{0}, d_{0};
};

} // namespace braidnc
