#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace lbern {

// Polynomial in the formal symbol L with coefficients in an exact field K.
// L stands for the logarithm of the base parameter; it is never evaluated
// by exact code paths.  The zero polynomial is the empty coefficient list.
template <class K>
class log_poly {
public:
    log_poly() = default;
    log_poly(const K& constant) {
        if (!lbern::is_zero(constant))
            c_.push_back(constant);
    }
    explicit log_poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    // mult * L, expressed in the field of `model`.
    static log_poly log_symbol(const K& model, long mult = 1) {
        if (mult == 0)
            return log_poly();
        return log_poly(std::vector<K>{zero_like(model), embed_like(model, rational(mult))});
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& coeff(std::size_t i) const {
        if (i >= c_.size())
            throw range_error("log_poly: coefficient index out of range");
        return c_[i];
    }

    // Constant term, or a supplied zero when the polynomial is zero.
    K constant_or(const K& zero_value) const { return c_.empty() ? zero_value : c_[0]; }

    // The value as a plain scalar; requires degree <= 0.
    K scalar_value(const K& zero_value) const {
        if (degree() > 0)
            throw divisor_not_scalar("log_poly: value has positive degree in L");
        return constant_or(zero_value);
    }

    friend log_poly operator+(const log_poly& a, const log_poly& b) {
        const log_poly& lo = a.c_.size() <= b.c_.size() ? a : b;
        const log_poly& hi = a.c_.size() <= b.c_.size() ? b : a;
        log_poly out = hi;
        for (std::size_t i = 0; i < lo.c_.size(); ++i)
            out.c_[i] = out.c_[i] + lo.c_[i];
        out.trim();
        return out;
    }
    friend log_poly operator-(const log_poly& a, const log_poly& b) { return a + (-b); }
    log_poly operator-() const {
        log_poly out = *this;
        for (auto& x : out.c_)
            x = -x;
        return out;
    }
    friend log_poly operator*(const log_poly& a, const log_poly& b) {
        if (a.is_zero() || b.is_zero())
            return log_poly();
        log_poly out;
        out.c_.reserve(a.c_.size() + b.c_.size() - 1);
        for (std::size_t n = 0; n + 1 < a.c_.size() + b.c_.size(); ++n) {
            K acc = zero_like(a.c_[0]);
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                std::size_t j = n - i;
                if (i > n || j >= b.c_.size())
                    continue;
                acc = acc + a.c_[i] * b.c_[j];
            }
            out.c_.push_back(std::move(acc));
        }
        out.trim();
        return out;
    }

    log_poly& operator+=(const log_poly& b) { *this = *this + b; return *this; }
    log_poly& operator-=(const log_poly& b) { *this = *this - b; return *this; }
    log_poly& operator*=(const log_poly& b) { *this = *this * b; return *this; }

    // Scale by a field element / exact rational.
    log_poly scaled(const K& s) const {
        if (lbern::is_zero(s))
            return log_poly();
        log_poly out = *this;
        for (auto& x : out.c_)
            x = x * s;
        out.trim();
        return out;
    }
    template <class T = K, class = std::enable_if_t<!std::is_same_v<T, rational>>>
    log_poly scaled(const rational& s) const {
        if (s.is_zero())
            return log_poly();
        log_poly out = *this;
        for (auto& x : out.c_)
            x = x * s;
        return out;
    }
    log_poly divided(const K& s) const {
        if (lbern::is_zero(s))
            throw zero_inverse("log_poly: division by zero scalar");
        return scaled(inv(s));
    }
    template <class T = K, class = std::enable_if_t<!std::is_same_v<T, rational>>>
    log_poly divided(const rational& s) const {
        if (s.is_zero())
            throw zero_inverse("log_poly: division by zero rational");
        return scaled(inv(s));
    }

    // Division by a degree-0 polynomial.
    friend log_poly operator/(const log_poly& a, const log_poly& b) {
        if (b.degree() > 0)
            throw divisor_not_scalar("log_poly: divisor has positive degree in L");
        if (b.is_zero())
            throw zero_inverse("log_poly: division by zero");
        return a.scaled(inv(b.c_[0]));
    }

    // Multiply by L^k.
    log_poly shifted(std::size_t k) const {
        if (is_zero() || k == 0)
            return *this;
        log_poly out;
        out.c_.assign(c_.size() + k, zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i)
            out.c_[i + k] = c_[i];
        return out;
    }

    friend bool operator==(const log_poly& a, const log_poly& b) {
        if (a.c_.size() != b.c_.size())
            return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i]))
                return false;
        return true;
    }
    friend bool operator!=(const log_poly& a, const log_poly& b) { return !(a == b); }

    // Rendered as a polynomial in L, e.g. "1 - 2*L".
    std::string str() const {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (lbern::is_zero(c_[i]))
                continue;
            std::string coeff = scalar_str(c_[i]);
            bool needs_parens = coeff.find(' ') != std::string::npos;
            std::string term;
            if (i == 0) {
                term = needs_parens ? "(" + coeff + ")" : coeff;
            } else {
                std::string lpow = i == 1 ? "L" : "L^" + std::to_string(i);
                if (coeff == "1")
                    term = lpow;
                else if (coeff == "-1")
                    term = "-" + lpow;
                else
                    term = (needs_parens ? "(" + coeff + ")" : coeff) + "*" + lpow;
            }
            if (out.empty()) {
                out = term;
            } else if (term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && lbern::is_zero(c_.back()))
            c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
inline bool is_zero(const log_poly<K>& p) { return p.is_zero(); }

} // namespace lbern
