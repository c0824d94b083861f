#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "lambda.hpp"
#include "log_poly.hpp"
#include "rational.hpp"

namespace lbern {

// Truncated power series in the exponential convention: c_[n] holds the
// coefficient of t^n/n!.  Products are therefore binomial convolutions.
template <class K>
class truncated_series {
public:
    explicit truncated_series(long order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0)
            throw invalid_parameter("series: order must be >= 0");
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const log_poly<K>& coeff(long n) const {
        if (n < 0 || n > order())
            throw range_error("series: coefficient index out of range");
        return c_[static_cast<std::size_t>(n)];
    }
    void set_coeff(long n, log_poly<K> v) {
        if (n < 0 || n > order())
            throw range_error("series: coefficient index out of range");
        c_[static_cast<std::size_t>(n)] = std::move(v);
    }

    // e^{at} truncated to the series order.
    static truncated_series exponential(const K& a, long order) {
        truncated_series out(order);
        K acc = one_like(a);
        out.c_[0] = log_poly<K>(acc);
        for (long n = 1; n <= order; ++n) {
            acc = acc * a;
            out.c_[static_cast<std::size_t>(n)] = log_poly<K>(acc);
        }
        return out;
    }

    friend truncated_series operator+(const truncated_series& a, const truncated_series& b) {
        a.require_same_order(b);
        truncated_series out = a;
        for (std::size_t i = 0; i < out.c_.size(); ++i)
            out.c_[i] += b.c_[i];
        return out;
    }
    friend truncated_series operator-(const truncated_series& a, const truncated_series& b) {
        a.require_same_order(b);
        truncated_series out = a;
        for (std::size_t i = 0; i < out.c_.size(); ++i)
            out.c_[i] -= b.c_[i];
        return out;
    }

    // Binomial convolution: (fg)_n = sum_k C(n,k) f_k g_{n-k}.
    friend truncated_series operator*(const truncated_series& a, const truncated_series& b) {
        a.require_same_order(b);
        truncated_series out(a.order());
        for (long n = 0; n <= a.order(); ++n) {
            log_poly<K> acc;
            for (long k = 0; k <= n; ++k) {
                const auto& fa = a.c_[static_cast<std::size_t>(k)];
                const auto& fb = b.c_[static_cast<std::size_t>(n - k)];
                if (fa.is_zero() || fb.is_zero())
                    continue;
                acc += (fa * fb).scaled(rational(binomial(n, k)));
            }
            out.c_[static_cast<std::size_t>(n)] = std::move(acc);
        }
        return out;
    }

    truncated_series& operator*=(const truncated_series& b) { *this = *this * b; return *this; }

    // Division; the divisor's constant term must be an L-free nonzero scalar.
    friend truncated_series operator/(const truncated_series& f, const truncated_series& g) {
        f.require_same_order(g);
        const log_poly<K>& g0 = g.c_[0];
        if (g0.is_zero() || g0.degree() > 0)
            throw non_invertible_constant_term("series: divisor constant term is not an invertible scalar");
        K g0inv = inv(g0.coeff(0));
        truncated_series h(f.order());
        for (long n = 0; n <= f.order(); ++n) {
            log_poly<K> acc = f.c_[static_cast<std::size_t>(n)];
            for (long k = 0; k < n; ++k) {
                const auto& hk = h.c_[static_cast<std::size_t>(k)];
                const auto& gk = g.c_[static_cast<std::size_t>(n - k)];
                if (hk.is_zero() || gk.is_zero())
                    continue;
                acc -= (hk * gk).scaled(rational(binomial(n, k)));
            }
            h.c_[static_cast<std::size_t>(n)] = acc.scaled(g0inv);
        }
        return h;
    }

    // Divide by t symbolically: requires a vanishing constant term and costs
    // one order of truncation.  (t^{n+1}/(n+1)! = t * t^n/n! / (n+1).)
    truncated_series factor_t() const {
        if (!c_[0].is_zero())
            throw invalid_parameter("series: constant term must vanish to factor out t");
        if (order() < 1)
            throw range_error("series: cannot factor t out of an order-0 series");
        truncated_series out(order() - 1);
        for (long n = 0; n < order(); ++n)
            out.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n) + 1].divided(rational(n + 1));
        return out;
    }

    truncated_series truncated(long new_order) const {
        if (new_order > order())
            throw range_error("series: cannot extend the truncation order");
        truncated_series out(new_order);
        for (long n = 0; n <= new_order; ++n)
            out.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n)];
        return out;
    }

    truncated_series scaled(const log_poly<K>& s) const {
        truncated_series out(order());
        for (std::size_t i = 0; i < c_.size(); ++i)
            out.c_[i] = c_[i] * s;
        return out;
    }
    truncated_series scaled(const rational& s) const {
        truncated_series out(order());
        for (std::size_t i = 0; i < c_.size(); ++i)
            out.c_[i] = c_[i].scaled(s);
        return out;
    }

    friend bool operator==(const truncated_series& a, const truncated_series& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const truncated_series& a, const truncated_series& b) { return !(a == b); }

private:
    void require_same_order(const truncated_series& b) const {
        if (c_.size() != b.c_.size())
            throw order_mismatch("series: operands have different truncation orders");
    }
    std::vector<log_poly<K>> c_;
};

// Expansion of the twisted generating function
//     (log lambda + t) / (lambda e^t - 1) * e^{xt}
// to the requested order.  In the degenerate mode lambda = 1 the log-term is
// absent and t is cancelled symbolically against the vanishing denominator.
template <class K>
truncated_series<K> expand_order_one(const lambda_scalar<K>& lam, const rational& x, long order) {
    if (order < 0)
        throw invalid_parameter("series: order must be >= 0");
    const K one = one_like(lam.value);
    const bool degenerate = lam.is_one();
    const long work = order + (degenerate ? 1 : 0);

    truncated_series<K> num(work);
    num.set_coeff(0, lam.log_term());
    if (work >= 1)
        num.set_coeff(1, log_poly<K>(one));

    truncated_series<K> den(work);
    den.set_coeff(0, log_poly<K>(lam.value - one));
    for (long n = 1; n <= work; ++n)
        den.set_coeff(n, log_poly<K>(lam.value));

    truncated_series<K> result = degenerate ? num.factor_t() / den.factor_t() : num / den;
    if (!x.is_zero())
        result *= truncated_series<K>::exponential(embed_like(one, x), order);
    return result;
}

// Order-r version: the r-fold product of the order-one kernel, then e^{xt}.
template <class K>
truncated_series<K> expand_order_r(const lambda_scalar<K>& lam, long r, const rational& x, long order) {
    if (r < 1)
        throw invalid_parameter("series: order-r kernel needs r >= 1");
    truncated_series<K> factor = expand_order_one(lam, rational(0), order);
    truncated_series<K> acc = factor;
    for (long i = 1; i < r; ++i)
        acc *= factor;
    if (!x.is_zero())
        acc *= truncated_series<K>::exponential(embed_like(one_like(lam.value), x), order);
    return acc;
}

// Multiple-weight kernel: the product over weights w of
//     (log lambda^w + w t) / (lambda^w e^{wt} - 1).
template <class K>
truncated_series<K> expand_barnes(const lambda_scalar<K>& lam, const std::vector<long>& weights, long order) {
    if (weights.empty())
        throw invalid_parameter("series: weight list must be nonempty");
    const K one = one_like(lam.value);
    truncated_series<K> acc(order);
    acc.set_coeff(0, log_poly<K>(one));
    for (long w : weights) {
        if (w < 1)
            throw invalid_parameter("series: weights must be positive integers");
        lambda_scalar<K> lw = lam.pow(w);
        const bool degenerate = lw.is_one();
        const long work = order + (degenerate ? 1 : 0);

        truncated_series<K> num(work);
        num.set_coeff(0, lw.log_term());
        if (work >= 1)
            num.set_coeff(1, log_poly<K>(embed_like(one, rational(w))));

        truncated_series<K> den(work);
        den.set_coeff(0, log_poly<K>(lw.value - one));
        rational wpow(1);
        for (long n = 1; n <= work; ++n) {
            wpow *= rational(w);
            den.set_coeff(n, log_poly<K>(lw.value * wpow));
        }
        acc *= degenerate ? num.factor_t() / den.factor_t() : num / den;
    }
    return acc;
}

} // namespace lbern
