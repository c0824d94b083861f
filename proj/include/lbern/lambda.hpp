#pragma once

#include <numeric>
#include <string>
#include <string_view>
#include <utility>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "log_poly.hpp"
#include "rational.hpp"

namespace lbern {

enum class lambda_mode {
    one,            // the classical degeneration, log-term absent
    rational_value, // lambda = q^power for a rational q not in {0, 1, -1}; log lambda = power * L
    root_of_unity,  // lambda = zeta_m^k != 1; the log-term is taken to vanish
};

// Describes the twist parameter lambda together with its log bookkeeping.
// In rational mode the descriptor tracks lambda = base^power so that
// log(lambda) = power * L stays exact under powering.  Roots of unity carry
// no log-term; repowering can collapse them to smaller orders or to 1.
class lambda_descriptor {
public:
    static lambda_descriptor one() {
        lambda_descriptor d;
        d.mode_ = lambda_mode::one;
        return d;
    }

    static lambda_descriptor from_rational(const rational& base, long power = 1) {
        if (base.is_zero() || base.is_one())
            throw invalid_parameter("lambda: rational base must differ from 0 and 1");
        if (base == rational(-1))
            throw invalid_parameter("lambda: -1 carries no log-term; use the order-2 root of unity Z:2,1");
        if (power < 1)
            throw invalid_parameter("lambda: power must be >= 1");
        lambda_descriptor d;
        d.mode_ = lambda_mode::rational_value;
        d.base_ = base;
        d.power_ = power;
        return d;
    }

    static lambda_descriptor root(long m, long k) {
        if (m < 1)
            throw invalid_parameter("lambda: root order must be >= 1");
        long kk = ((k % m) + m) % m;
        long g = std::gcd(kk, m);
        long mm = m / g;
        kk = kk / g;
        if (mm == 1)
            throw invalid_parameter("lambda: root of unity equal to 1 is the degenerate mode; use lambda = 1");
        lambda_descriptor d;
        d.mode_ = lambda_mode::root_of_unity;
        d.root_m_ = mm;
        d.root_k_ = kk;
        return d;
    }

    lambda_mode mode() const { return mode_; }
    bool is_one() const { return mode_ == lambda_mode::one; }
    bool is_root() const { return mode_ == lambda_mode::root_of_unity; }
    bool is_rational_mode() const { return mode_ == lambda_mode::rational_value; }

    // log(lambda) = log_mult() * L; zero in root/one modes.
    long log_mult() const { return mode_ == lambda_mode::rational_value ? power_ : 0; }

    rational rational_value() const {
        if (mode_ == lambda_mode::one)
            return rational(1);
        if (mode_ != lambda_mode::rational_value)
            throw invalid_parameter("lambda: root-of-unity twist has no rational value");
        return base_.pow(power_);
    }
    // The base q with lambda = q^power; L stands for log(q).
    rational rational_base() const {
        if (mode_ == lambda_mode::one)
            return rational(1);
        if (mode_ != lambda_mode::rational_value)
            throw invalid_parameter("lambda: root-of-unity twist has no rational base");
        return base_;
    }
    long root_order() const {
        if (mode_ != lambda_mode::root_of_unity)
            throw invalid_parameter("lambda: not a root of unity");
        return root_m_;
    }
    long root_exponent() const {
        if (mode_ != lambda_mode::root_of_unity)
            throw invalid_parameter("lambda: not a root of unity");
        return root_k_;
    }

    // lambda^e with exact log bookkeeping; roots may collapse to lower
    // orders or to the degenerate mode.
    lambda_descriptor pow(long e) const {
        if (e < 1)
            throw invalid_parameter("lambda: power must be >= 1");
        switch (mode_) {
        case lambda_mode::one:
            return *this;
        case lambda_mode::rational_value: {
            lambda_descriptor d = *this;
            d.power_ = power_ * e;
            return d;
        }
        case lambda_mode::root_of_unity: {
            long kk = (root_k_ * (e % root_m_)) % root_m_;
            if (kk == 0)
                return one();
            return root(root_m_, kk);
        }
        }
        throw invalid_parameter("lambda: unknown mode");
    }

    // Formatted per the external grammar: "1" | "R:num/den" | "Z:m,k".
    // Rational powers are folded into the value.
    std::string spec_string() const {
        switch (mode_) {
        case lambda_mode::one:
            return "1";
        case lambda_mode::rational_value: {
            rational v = rational_value();
            return "R:" + v.num().str() + "/" + v.den().str();
        }
        case lambda_mode::root_of_unity:
            return "Z:" + std::to_string(root_m_) + "," + std::to_string(root_k_);
        }
        return "?";
    }

    friend bool operator==(const lambda_descriptor& a, const lambda_descriptor& b) {
        if (a.mode_ != b.mode_)
            return false;
        switch (a.mode_) {
        case lambda_mode::one:
            return true;
        case lambda_mode::rational_value:
            return a.rational_value() == b.rational_value() && a.power_ == b.power_;
        case lambda_mode::root_of_unity:
            return a.root_m_ == b.root_m_ && a.root_k_ == b.root_k_;
        }
        return false;
    }

private:
    lambda_descriptor() = default;
    lambda_mode mode_ = lambda_mode::one;
    rational base_;
    long power_ = 1;
    long root_m_ = 1;
    long root_k_ = 0;
};

// Parses "1" | "R:num/den" | "Z:m,k".  Throws invalid_parameter.
inline lambda_descriptor parse_lambda_spec(std::string_view s) {
    if (s == "1")
        return lambda_descriptor::one();
    if (s.size() > 2 && s.substr(0, 2) == "R:")
        return lambda_descriptor::from_rational(rational::parse(s.substr(2)));
    if (s.size() > 2 && s.substr(0, 2) == "Z:") {
        std::string_view body = s.substr(2);
        std::size_t comma = body.find(',');
        if (comma == std::string_view::npos)
            throw invalid_parameter("lambda: malformed root spec '" + std::string(s) + "'");
        rational m = rational::parse(body.substr(0, comma));
        rational k = rational::parse(body.substr(comma + 1));
        if (!m.is_integer() || !k.is_integer() || m < rational(1))
            throw invalid_parameter("lambda: malformed root spec '" + std::string(s) + "'");
        return lambda_descriptor::root(static_cast<long>(m.num()), static_cast<long>(k.num()));
    }
    throw invalid_parameter("lambda: malformed spec '" + std::string(s) + "' (expected \"1\", \"R:num/den\" or \"Z:m,k\")");
}

// The twist parameter realized in a concrete field K, carrying the
// multiplicity of L in log(lambda).  Computational layers work with this.
template <class K>
struct lambda_scalar {
    K value;
    long log_mult = 0;

    bool is_one() const { return lbern::is_one(value); }

    lambda_scalar pow(long e) const {
        if (e < 1)
            throw invalid_parameter("lambda: power must be >= 1");
        return {value.pow(e), log_mult * e};
    }

    K inverse_value() const { return inv(value); }

    log_poly<K> log_term() const { return log_poly<K>::log_symbol(value, log_mult); }
};

// Realize a descriptor in the rational field.  Root-of-unity twists are not
// representable here.
inline lambda_scalar<rational> as_rational_scalar(const lambda_descriptor& d) {
    switch (d.mode()) {
    case lambda_mode::one:
        return {rational(1), 0};
    case lambda_mode::rational_value:
        return {d.rational_value(), d.log_mult()};
    case lambda_mode::root_of_unity:
        throw invalid_parameter("lambda: root-of-unity twist needs the cyclotomic field");
    }
    throw invalid_parameter("lambda: unknown mode");
}

// Realize a descriptor in Q(zeta_order); `order` must be a multiple of the
// root order (any positive order works for rational/one modes).
inline lambda_scalar<cyclotomic> as_cyclotomic_scalar(const lambda_descriptor& d, long order) {
    switch (d.mode()) {
    case lambda_mode::one:
        return {cyclotomic::one(order), 0};
    case lambda_mode::rational_value:
        return {cyclotomic(d.rational_value(), order), d.log_mult()};
    case lambda_mode::root_of_unity: {
        long m = d.root_order();
        if (order % m != 0)
            throw order_mismatch("lambda: target order must be a multiple of the root order");
        return {cyclotomic::root_of_unity(m, d.root_exponent()).embedded(order), 0};
    }
    }
    throw invalid_parameter("lambda: unknown mode");
}

inline lambda_scalar<cyclotomic> as_cyclotomic_scalar(const lambda_descriptor& d) {
    return as_cyclotomic_scalar(d, d.is_root() ? d.root_order() : 1);
}

template <class K>
lambda_scalar<K> as_scalar(const lambda_descriptor& d);

template <>
inline lambda_scalar<rational> as_scalar<rational>(const lambda_descriptor& d) {
    return as_rational_scalar(d);
}

template <>
inline lambda_scalar<cyclotomic> as_scalar<cyclotomic>(const lambda_descriptor& d) {
    return as_cyclotomic_scalar(d);
}

} // namespace lbern
