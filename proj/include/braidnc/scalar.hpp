#pragma once

#include "base_number.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>

namespace braidnc {

/// Laurent polynomial sum_k c_k q^k over Q(i,sqrt2), with q the formal
/// unit-modulus phase e^{i pi theta / 2}.  Canonical form: no zero
/// coefficients, exponents kept sorted by the map.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) { set(0, BaseNumber(v)); }  // NOLINT: implicit by intent
    Scalar(BaseNumber v) { set(0, std::move(v)); }

    static Scalar q_power(int k, BaseNumber c = BaseNumber(1)) {
        Scalar s;
        s.set(k, std::move(c));
        return s;
    }
    static Scalar i() { return Scalar(BaseNumber::i()); }
    static Scalar sqrt2() { return Scalar(BaseNumber::sqrt2()); }

    const std::map<int, BaseNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
    }
    bool is_single_term() const { return terms_.size() == 1; }

    /// The coefficient at exponent k (zero if absent).
    BaseNumber coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? BaseNumber() : it->second;
    }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar operator-() const {
        Scalar r;
        for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        Scalar r = x;
        for (auto& [k, c] : y.terms_) r.add(k, c);
        return r;
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        Scalar r = x;
        for (auto& [k, c] : y.terms_) r.add(k, -c);
        return r;
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        Scalar r;
        for (auto& [k1, c1] : x.terms_)
            for (auto& [k2, c2] : y.terms_) r.add(k1 + k2, c1 * c2);
        return r;
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    /// i -> -i, sqrt2 -> sqrt2, q^k -> q^-k.
    Scalar conj() const {
        Scalar r;
        for (auto& [k, c] : terms_) r.terms_.emplace(-k, c.conj());
        return r;
    }

    /// Inverse of a single-term scalar c q^k (the units of the Laurent ring).
    Scalar inverse_single() const {
        if (terms_.size() != 1) throw std::domain_error("Scalar: inverse of non-unit");
        auto& [k, c] = *terms_.begin();
        return q_power(-k, c.inverse());
    }

    /// Substitutes q = e^{i pi theta / 2}.
    std::complex<double> eval(double theta) const {
        std::complex<double> out{0.0, 0.0};
        for (auto& [k, c] : terms_) {
            double ph = std::numbers::pi * theta * 0.5 * static_cast<double>(k);
            out += c.eval() * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        return out;
    }

    /// Exact value at q = 1 (theta = 0).
    BaseNumber at_q_one() const {
        BaseNumber out;
        for (auto& [k, c] : terms_) out += c;
        return out;
    }

    std::string render() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [k, c] : terms_) {
            std::string piece;
            BaseNumber abs_c = c;
            bool neg = false;
            // Pull a leading minus only for single-component coefficients.
            if (!c.is_multi_term()) {
                std::string r = c.render();
                if (!r.empty() && r[0] == '-') {
                    neg = true;
                    abs_c = -c;
                }
            }
            std::string cs = abs_c.render();
            if (abs_c.is_multi_term()) cs = "(" + cs + ")";
            if (k == 0) {
                piece = cs;
            } else {
                std::string qs = (k == 1) ? "q" : "q^" + std::to_string(k);
                piece = abs_c.is_one() ? qs : cs + "*" + qs;
            }
            if (out.empty())
                out = neg ? "-" + piece : piece;
            else
                out += (neg ? " - " : " + ") + piece;
        }
        return out;
    }

    bool is_multi_term() const {
        if (terms_.size() > 1) return true;
        if (terms_.empty()) return false;
        return terms_.begin()->second.is_multi_term();
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (auto& [k, c] : terms_) h = h * 1099511628211ull + (std::size_t(k) ^ c.hash());
        return h;
    }

private:
    void set(int k, BaseNumber c) {
        if (!c.is_zero()) terms_.emplace(k, std::move(c));
    }
    void add(int k, const BaseNumber& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<int, BaseNumber> terms_;
};

} // namespace braidnc
