#pragma once

#include <vector>

#include "errors.hpp"
#include "frobenius_euler.hpp"
#include "lambda.hpp"
#include "log_poly.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace lbern {

// Twisted Bernoulli numbers B_n(lambda) as polynomials in L = log(base).
//
// For lambda != 1 they satisfy (lambda e^t - 1) GF = log(lambda) + t, i.e.
//   (lambda - 1) B_0 = log(lambda),
//   (lambda - 1) B_n = [n = 1] - lambda * sum_{k<n} C(n,k) B_k.
// Roots of unity carry log(lambda) = 0.  For lambda = 1 the classical
// recurrence sum_{k<n} C(n,k) B_k = [n = 1] applies with B_0 = 1.
template <class K>
std::vector<log_poly<K>> lb_numbers(const lambda_scalar<K>& lam, long nmax) {
    if (nmax < 0)
        throw invalid_parameter("bernoulli: nmax must be >= 0");
    std::vector<log_poly<K>> b;
    b.reserve(static_cast<std::size_t>(nmax) + 1);
    if (lam.is_one()) {
        std::vector<rational> c;
        c.reserve(static_cast<std::size_t>(nmax) + 1);
        c.push_back(rational(1));
        for (long n = 1; n <= nmax; ++n) {
            rational acc(0);
            for (long k = 0; k < n; ++k)
                acc += c[static_cast<std::size_t>(k)] * rational(binomial(n + 1, k));
            c.push_back(-acc / rational(n + 1));
        }
        for (const rational& v : c)
            b.emplace_back(embed_like(lam.value, v));
        return b;
    }
    const K one = one_like(lam.value);
    const K scale = inv(lam.value - one);
    b.push_back(lam.log_term().scaled(scale));
    for (long n = 1; n <= nmax; ++n) {
        log_poly<K> acc;
        for (long k = 0; k < n; ++k)
            acc += b[static_cast<std::size_t>(k)].scaled(rational(binomial(n, k)));
        log_poly<K> rhs = n == 1 ? log_poly<K>(one) : log_poly<K>();
        rhs -= acc.scaled(lam.value);
        b.push_back(rhs.scaled(scale));
    }
    return b;
}

template <class K>
log_poly<K> lb_number(const lambda_scalar<K>& lam, long n) {
    return lb_numbers(lam, n)[static_cast<std::size_t>(n)];
}

inline log_poly<rational> lb_number(const lambda_descriptor& d, long n) {
    return lb_number(as_rational_scalar(d), n);
}

// Independent route through the Frobenius-Euler family:
//   B_n(lambda) = (log lambda / (lambda - 1)) H_n(1/lambda)
//                 + n H_{n-1}(1/lambda) / (lambda - 1).
template <class K>
log_poly<K> lb_number_via_fe(const lambda_scalar<K>& lam, long n) {
    if (lam.is_one())
        throw invalid_parameter("bernoulli: the Frobenius-Euler route needs lambda != 1");
    const K one = one_like(lam.value);
    const K scale = inv(lam.value - one);
    std::vector<K> h = fe_numbers(lam.inverse_value(), n);
    log_poly<K> out = lam.log_term().scaled(scale).scaled(h[static_cast<std::size_t>(n)]);
    if (n >= 1)
        out += log_poly<K>(h[static_cast<std::size_t>(n) - 1] * embed_like(one, rational(n)) * scale);
    return out;
}

// Appell shift B_n(lambda; x) = sum_k C(n,k) B_k(lambda) x^{n-k}.
template <class K>
log_poly<K> lb_poly_from_table(const std::vector<log_poly<K>>& table, const rational& x, long n) {
    if (n < 0 || n >= static_cast<long>(table.size()))
        throw range_error("bernoulli: index out of table range");
    log_poly<K> acc;
    rational xpow(1);
    for (long k = n; k >= 0; --k) {
        acc += table[static_cast<std::size_t>(k)].scaled(rational(binomial(n, k)) * xpow);
        xpow *= x;
    }
    return acc;
}

template <class K>
log_poly<K> lb_poly(const lambda_scalar<K>& lam, const rational& x, long n) {
    return lb_poly_from_table(lb_numbers(lam, n), x, n);
}

// Right side of the distribution identity:
//   d^{n-1} sum_{a<d} lambda^a B_n(lambda^d; (x+a)/d).
template <class K>
log_poly<K> lb_distribution_rhs(const lambda_scalar<K>& lam, const rational& x, long n, long d) {
    if (d < 1)
        throw invalid_parameter("bernoulli: distribution parameter d must be >= 1");
    lambda_scalar<K> lam_d = lam.pow(d);
    std::vector<log_poly<K>> table = lb_numbers(lam_d, n);
    log_poly<K> acc;
    K lpow = one_like(lam.value);
    for (long a = 0; a < d; ++a) {
        acc += lb_poly_from_table(table, (x + rational(a)) / rational(d), n).scaled(lpow);
        lpow = lpow * lam.value;
    }
    return acc.scaled(rational(d).pow(n - 1));
}

// Geometric sum [m]_lambda = sum_{i<m} lambda^i (exact at collapse points).
template <class K>
K lambda_bracket(const lambda_scalar<K>& lam, long m) {
    K acc = zero_like(lam.value);
    K lpow = one_like(lam.value);
    for (long i = 0; i < m; ++i) {
        acc = acc + lpow;
        lpow = lpow * lam.value;
    }
    return acc;
}

// Right side of the multiplication identity, normalized so that
//   m * B_n(lambda) = gauss_mult_rhs(lambda, n, m):
//   sum_{j<=n} C(n,j) B_j(lambda^m) m^j sum_{a<m} lambda^a a^{n-j}  (0^0 = 1).
template <class K>
log_poly<K> gauss_mult_rhs(const lambda_scalar<K>& lam, long n, long m) {
    if (m < 1)
        throw invalid_parameter("bernoulli: multiplication parameter m must be >= 1");
    lambda_scalar<K> lam_m = lam.pow(m);
    std::vector<log_poly<K>> table = lb_numbers(lam_m, n);
    std::vector<K> lambda_powers;
    lambda_powers.reserve(static_cast<std::size_t>(m));
    K lpow = one_like(lam.value);
    for (long a = 0; a < m; ++a) {
        lambda_powers.push_back(lpow);
        lpow = lpow * lam.value;
    }
    log_poly<K> acc;
    rational mpow(1);
    for (long j = 0; j <= n; ++j) {
        K s = zero_like(lam.value);
        for (long a = 0; a < m; ++a) {
            long e = n - j;
            rational apow = e == 0 ? rational(1) : rational(int_pow(Int(a), static_cast<unsigned long>(e)));
            s = s + lambda_powers[static_cast<std::size_t>(a)] * embed_like(lam.value, apow);
        }
        acc += table[static_cast<std::size_t>(j)].scaled(rational(binomial(n, j)) * mpow).scaled(s);
        if (j < n)
            mpow *= rational(m);
    }
    return acc;
}

// Rearranged multiplication identity: the right side of
//   m B_n(lambda) - m^n [m]_lambda B_n(lambda^m)
//     = sum_{j<n} C(n,j) B_j(lambda^m) m^j sum_{k=1}^{m-1} lambda^k k^{n-j}.
template <class K>
log_poly<K> mult_rearranged_rhs(const lambda_scalar<K>& lam, long n, long m) {
    if (m < 1)
        throw invalid_parameter("bernoulli: multiplication parameter m must be >= 1");
    lambda_scalar<K> lam_m = lam.pow(m);
    std::vector<log_poly<K>> table = lb_numbers(lam_m, n);
    log_poly<K> acc;
    rational mpow(1);
    for (long j = 0; j < n; ++j) {
        K s = zero_like(lam.value);
        K lpow = lam.value;
        for (long k = 1; k < m; ++k) {
            s = s + lpow * embed_like(lam.value, rational(int_pow(Int(k), static_cast<unsigned long>(n - j))));
            lpow = lpow * lam.value;
        }
        acc += table[static_cast<std::size_t>(j)].scaled(rational(binomial(n, j)) * mpow).scaled(s);
        mpow *= rational(m);
    }
    return acc;
}

// Closed form of the twisted power sum: B_l(lambda; k) - lambda^{-k} B_l(lambda).
template <class K>
log_poly<K> sum_of_powers_closed(const lambda_scalar<K>& lam, long l, long k) {
    if (l < 0 || k < 1)
        throw invalid_parameter("bernoulli: power sum needs l >= 0 and k >= 1");
    std::vector<log_poly<K>> table = lb_numbers(lam, l);
    log_poly<K> out = lb_poly_from_table(table, rational(k), l);
    out -= table[static_cast<std::size_t>(l)].scaled(lam.inverse_value().pow(k));
    return out;
}

// Direct summation route for the same quantity:
//   lambda^{-k} ( l sum_{n<k} lambda^n n^{l-1} + log(lambda) sum_{n<k} lambda^n n^l ).
template <class K>
log_poly<K> sum_of_powers_direct(const lambda_scalar<K>& lam, long l, long k) {
    if (l < 0 || k < 1)
        throw invalid_parameter("bernoulli: power sum needs l >= 0 and k >= 1");
    const K lk = lam.inverse_value().pow(k);
    K main_sum = zero_like(lam.value);
    K log_sum = zero_like(lam.value);
    K lpow = one_like(lam.value);
    for (long n = 0; n < k; ++n) {
        if (l >= 1) {
            rational np = (n == 0 && l == 1) ? rational(1)
                                             : rational(int_pow(Int(n), static_cast<unsigned long>(l - 1)));
            main_sum = main_sum + lpow * embed_like(lam.value, np);
        }
        if (lam.log_mult != 0)
            log_sum = log_sum + lpow * embed_like(lam.value, rational(int_pow(Int(n), static_cast<unsigned long>(l))));
        lpow = lpow * lam.value;
    }
    log_poly<K> out(main_sum * embed_like(lam.value, rational(l)));
    out += log_poly<K>::log_symbol(lam.value, lam.log_mult).scaled(log_sum);
    return out.scaled(lk);
}

// Coefficient extraction from the order-r generating function.
template <class K>
log_poly<K> lb_order_r(const lambda_scalar<K>& lam, long r, const rational& x, long n) {
    return expand_order_r(lam, r, x, n).coeff(n);
}

// Coefficient extraction from the multiple-weight generating function.
template <class K>
log_poly<K> barnes_multiweight(const lambda_scalar<K>& lam, const std::vector<long>& weights, long n) {
    return expand_barnes(lam, weights, n).coeff(n);
}

} // namespace lbern
