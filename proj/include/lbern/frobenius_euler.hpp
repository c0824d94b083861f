#pragma once

#include <vector>

#include "errors.hpp"
#include "lambda.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace lbern {

// Numbers H_n(u) generated by (1 - u) / (e^t - u), for u != 1.
// Recurrence: H_0 = 1 and sum_{k<n} C(n,k) H_k(u) = (u - 1) H_n(u) for n >= 1,
// which is the coefficient identity of (e^t - u) * GF = 1 - u.
template <class K>
std::vector<K> fe_numbers(const K& u, long nmax) {
    if (is_one(u))
        throw invalid_parameter("frobenius-euler: parameter u must differ from 1");
    if (nmax < 0)
        throw invalid_parameter("frobenius-euler: nmax must be >= 0");
    const K one = one_like(u);
    const K scale = inv(u - one);
    std::vector<K> h;
    h.reserve(static_cast<std::size_t>(nmax) + 1);
    h.push_back(one);
    for (long n = 1; n <= nmax; ++n) {
        K acc = zero_like(u);
        for (long k = 0; k < n; ++k)
            acc = acc + h[static_cast<std::size_t>(k)] * embed_like(u, rational(binomial(n, k)));
        h.push_back(acc * scale);
    }
    return h;
}

template <class K>
K fe_number(const K& u, long n) {
    return fe_numbers(u, n)[static_cast<std::size_t>(n)];
}

// Appell shift: H_n(u; x) = sum_k C(n,k) H_k(u) x^{n-k}.
template <class K>
K fe_poly_from_table(const std::vector<K>& table, const rational& x, long n) {
    if (n < 0 || n >= static_cast<long>(table.size()))
        throw range_error("frobenius-euler: index out of table range");
    K acc = zero_like(table[0]);
    rational xpow(1);
    for (long k = n; k >= 0; --k) {
        acc = acc + table[static_cast<std::size_t>(k)] * embed_like(table[0], rational(binomial(n, k)) * xpow);
        xpow *= x;
    }
    return acc;
}

template <class K>
K fe_poly(const K& u, const rational& x, long n) {
    return fe_poly_from_table(fe_numbers(u, n), x, n);
}

// Higher-order numbers via the r-fold binomial convolution of the order-one
// table: GF is ((1 - u)/(e^t - u))^r.
template <class K>
std::vector<K> fe_order_r_numbers(const K& u, long r, long nmax) {
    if (r < 1)
        throw invalid_parameter("frobenius-euler: order r must be >= 1");
    std::vector<K> base = fe_numbers(u, nmax);
    std::vector<K> acc = base;
    for (long i = 1; i < r; ++i) {
        std::vector<K> next(acc.size(), zero_like(u));
        for (long n = 0; n <= nmax; ++n) {
            K s = zero_like(u);
            for (long k = 0; k <= n; ++k)
                s = s + acc[static_cast<std::size_t>(k)] * base[static_cast<std::size_t>(n - k)] *
                            embed_like(u, rational(binomial(n, k)));
            next[static_cast<std::size_t>(n)] = s;
        }
        acc = std::move(next);
    }
    return acc;
}

template <class K>
K fe_order_r(const K& u, long r, const rational& x, long n) {
    return fe_poly_from_table(fe_order_r_numbers(u, r, n), x, n);
}

// Series oracle for the same family: expansion of ((1-u)/(e^t-u))^r e^{xt}.
template <class K>
truncated_series<K> fe_series(const K& u, long r, const rational& x, long order) {
    if (is_one(u))
        throw invalid_parameter("frobenius-euler: parameter u must differ from 1");
    if (r < 1)
        throw invalid_parameter("frobenius-euler: order r must be >= 1");
    const K one = one_like(u);
    truncated_series<K> num(order);
    num.set_coeff(0, log_poly<K>(one - u));
    truncated_series<K> den(order);
    den.set_coeff(0, log_poly<K>(one - u));
    for (long n = 1; n <= order; ++n)
        den.set_coeff(n, log_poly<K>(one));
    truncated_series<K> factor = num / den;
    truncated_series<K> acc = factor;
    for (long i = 1; i < r; ++i)
        acc *= factor;
    if (!x.is_zero())
        acc *= truncated_series<K>::exponential(embed_like(one, x), order);
    return acc;
}

} // namespace lbern
