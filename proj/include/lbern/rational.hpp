#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lbern {

using Int = boost::multiprecision::cpp_int;

namespace detail {
using boost_rational = boost::multiprecision::cpp_rational;
}

// Arbitrary-precision rational with exact arithmetic throughout.
class rational {
public:
    rational() = default;
    rational(int n) : v_(n) {}
    rational(long n) : v_(n) {}
    rational(long long n) : v_(n) {}
    rational(const Int& n) : v_(n) {}
    rational(const Int& num, const Int& den) {
        if (den == 0)
            throw invalid_parameter("rational: zero denominator");
        v_ = detail::boost_rational(num) / detail::boost_rational(den);
    }

    Int num() const { return boost::multiprecision::numerator(v_); }
    Int den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return den() == 1; }

    friend rational operator+(const rational& a, const rational& b) { return rational(a.v_ + b.v_); }
    friend rational operator-(const rational& a, const rational& b) { return rational(a.v_ - b.v_); }
    friend rational operator*(const rational& a, const rational& b) { return rational(a.v_ * b.v_); }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.is_zero())
            throw zero_inverse("rational: division by zero");
        return rational(a.v_ / b.v_);
    }
    rational operator-() const { return rational(-v_); }

    rational& operator+=(const rational& b) { v_ += b.v_; return *this; }
    rational& operator-=(const rational& b) { v_ -= b.v_; return *this; }
    rational& operator*=(const rational& b) { v_ *= b.v_; return *this; }
    rational& operator/=(const rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    // Integer power; negative exponents require a nonzero base.
    rational pow(long e) const {
        if (e == 0)
            return rational(1);
        if (e < 0) {
            if (is_zero())
                throw zero_inverse("rational: negative power of zero");
            rational base(den(), num());
            return base.pow(-e);
        }
        rational acc(1), base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1)
                acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    double to_double() const { return v_.convert_to<double>(); }

    // "num" when the denominator is 1, otherwise "num/den".
    std::string str() const {
        if (is_integer())
            return num().str();
        return num().str() + "/" + den().str();
    }

    // Parses "num" or "num/den" with optional leading sign. Throws invalid_parameter.
    static rational parse(std::string_view s) {
        auto bad = [&] { throw invalid_parameter("rational: malformed literal '" + std::string(s) + "'"); };
        if (s.empty())
            bad();
        std::size_t slash = s.find('/');
        std::string_view ns = s.substr(0, slash == std::string_view::npos ? s.size() : slash);
        std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
        auto check = [&](std::string_view part) {
            if (part.empty())
                bad();
            std::size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
            if (i == part.size())
                bad();
            for (; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9')
                    bad();
        };
        check(ns);
        check(ds);
        auto to_int = [](std::string_view part) {
            bool neg = part[0] == '-';
            if (part[0] == '+' || part[0] == '-')
                part.remove_prefix(1);
            Int v{std::string(part)};
            return neg ? Int(-v) : v;
        };
        Int num = to_int(ns);
        Int den = to_int(ds);
        if (den == 0)
            bad();
        return rational(num, den);
    }

private:
    explicit rational(detail::boost_rational v) : v_(std::move(v)) {}
    detail::boost_rational v_;
};

inline bool is_zero(const rational& a) { return a.is_zero(); }
inline bool is_one(const rational& a) { return a.is_one(); }

inline rational inv(const rational& a) {
    if (a.is_zero())
        throw zero_inverse("rational: inverse of zero");
    return rational(a.den(), a.num());
}

inline Int int_pow(Int base, unsigned long e) {
    Int acc(1);
    while (e) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// p-adic valuation of a nonzero rational; nullopt for zero.
inline std::optional<long> val_p(const rational& r, long p) {
    if (r.is_zero())
        return std::nullopt;
    long v = 0;
    Int n = r.num(), d = r.den();
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

// Binomial coefficient with a synchronized row cache.
inline const Int& binomial(long n, long k) {
    static const Int zero(0);
    if (k < 0 || k > n)
        return zero;
    static std::vector<std::vector<Int>> rows{{Int(1)}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<Int> row(rows.size() + 1, Int(1));
        for (std::size_t j = 1; j + 1 < row.size(); ++j)
            row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

inline rational factorial(long n) {
    Int acc(1);
    for (long i = 2; i <= n; ++i)
        acc *= i;
    return rational(acc);
}

} // namespace lbern
