#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "bernoulli.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"

namespace lbern {

// ---- numeric bridges ----

inline std::complex<double> to_complex(const rational& r) { return {r.to_double(), 0.0}; }

inline std::complex<double> to_complex(const cyclotomic& z) {
    const long m = z.order();
    std::complex<double> acc(0.0, 0.0);
    const auto& c = z.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (is_zero(c[i]))
            continue;
        double arg = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
        acc += c[i].to_double() * std::polar(1.0, arg);
    }
    return acc;
}

// Evaluate a polynomial in the formal symbol L at a numeric value of L.
template <class K>
std::complex<double> eval_at_log(const log_poly<K>& p, std::complex<double> logval) {
    std::complex<double> acc(0.0, 0.0);
    for (long i = p.degree(); i >= 0; --i)
        acc = acc * logval + to_complex(p.coeff(i));
    return acc;
}

namespace detail {

struct kahan_sum {
    std::complex<double> s{0.0, 0.0};
    std::complex<double> c{0.0, 0.0};
    void add(std::complex<double> x) {
        std::complex<double> y = x - c;
        std::complex<double> t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

} // namespace detail

// ---- exact special values at non-positive integers ----

// zeta_lambda(1-k, x) = -B_k(lambda; x) / k.
template <class K>
log_poly<K> hurwitz_zeta_neg(const lambda_scalar<K>& lam, long k, const rational& x) {
    if (k < 1)
        throw invalid_parameter("hurwitz_zeta_neg: k must be >= 1");
    return lb_poly(lam, x, k).scaled(rational(Int(-1), Int(k)));
}

// Partial zeta H_lambda(1-n, a|F) = -F^{n-1} lambda^a B_n(lambda^F; a/F) / n
// for lambda a root of unity (where log lambda = 0 and the value is a scalar).
inline cyclotomic partial_zeta_neg(const lambda_descriptor& lam, long n, long a, long F) {
    if (n < 1)
        throw invalid_parameter("partial_zeta_neg: n must be >= 1");
    if (F < 1 || a < 1 || a > F)
        throw invalid_parameter("partial_zeta_neg: need 1 <= a <= F");
    if (lam.is_rational_mode())
        throw invalid_parameter("partial_zeta_neg: lambda must be 1 or a root of unity");
    long W = lam.is_root() ? lam.root_order() : 1;
    lambda_scalar<cyclotomic> ls = as_cyclotomic_scalar(lam, W);
    log_poly<cyclotomic> p = lb_poly(ls.pow(F), rational(a) / rational(F), n);
    cyclotomic v = p.scalar_value(cyclotomic::zero(W));
    rational pref = rational(F).pow(n - 1) / rational(n);
    return v * ls.value.pow(a) * -pref;
}

// L_lambda(1-k, chi) = -B_{k,chi}(lambda) / k.
inline log_poly<cyclotomic> l_value_neg(const dirichlet_character& chi, const lambda_descriptor& lam, long k) {
    if (k < 1)
        throw invalid_parameter("l_value_neg: k must be >= 1");
    return generalized_bernoulli(chi, lam, k).scaled(rational(Int(-1), Int(k)));
}

// ---- numeric Dirichlet series (|lambda| < 1) ----

// zeta_lambda(s, x) = (log lambda / (1-s)) sum_n lambda^n (n+x)^{1-s}
//                   + sum_n lambda^n (n+x)^{-s}.
inline std::complex<double> zeta_series_numeric(std::complex<double> lambda, std::complex<double> s, double x,
                                                double tol = 1e-12) {
    if (!(x > 0.0))
        throw invalid_parameter("zeta_series_numeric: x must be positive");
    double r = std::abs(lambda);
    if (r >= 1.0 || r == 0.0)
        throw non_convergent("zeta_series_numeric: requires 0 < |lambda| < 1");
    if (s == std::complex<double>(1.0, 0.0))
        throw pole_at_one("zeta_series_numeric: s = 1");
    const std::complex<double> logl = std::log(lambda);
    const std::complex<double> ratio = logl / (std::complex<double>(1.0, 0.0) - s);
    const double thresh = tol * (1.0 - r) / 4.0;
    const long cap = 2000000;
    detail::kahan_sum sum;
    std::complex<double> lp(1.0, 0.0);
    int consec = 0;
    for (long n = 0; n < cap; ++n) {
        double base = static_cast<double>(n) + x;
        std::complex<double> w = std::exp(-s * std::log(base));
        std::complex<double> term = lp * w * (std::complex<double>(1.0, 0.0) + ratio * base);
        sum.add(term);
        if (std::abs(term) < thresh)
            ++consec;
        else
            consec = 0;
        if (consec >= 4 && n >= 16)
            return sum.s;
        lp *= lambda;
    }
    throw non_convergent("zeta_series_numeric: tolerance not met within iteration cap");
}

// L_lambda(s, chi) = sum_{m>=1} lambda^m chi(m) m^{-s}
//                  - (log lambda / (s-1)) sum_{m>=1} lambda^m chi(m) m^{1-s}.
inline std::complex<double> l_series_numeric(std::complex<double> lambda, std::complex<double> s,
                                             const dirichlet_character& chi, double tol = 1e-12) {
    double r = std::abs(lambda);
    if (r >= 1.0 || r == 0.0)
        throw non_convergent("l_series_numeric: requires 0 < |lambda| < 1");
    if (s == std::complex<double>(1.0, 0.0))
        throw pole_at_one("l_series_numeric: s = 1");
    const long f = chi.modulus();
    std::vector<std::complex<double>> cv(static_cast<std::size_t>(f));
    for (long a = 0; a < f; ++a)
        cv[static_cast<std::size_t>(a)] = to_complex(chi.value(a));
    const std::complex<double> logl = std::log(lambda);
    const std::complex<double> ratio = logl / (std::complex<double>(1.0, 0.0) - s);
    const double thresh = tol * (1.0 - r) / 4.0;
    const int need = std::max<long>(4, f + 1);
    const long cap = 2000000;
    detail::kahan_sum sum;
    std::complex<double> lp = lambda;
    int consec = 0;
    for (long m = 1; m < cap; ++m) {
        double md = static_cast<double>(m);
        std::complex<double> term =
            lp * cv[static_cast<std::size_t>(m % f)] * std::exp(-s * std::log(md)) *
            (std::complex<double>(1.0, 0.0) + ratio * md);
        sum.add(term);
        if (std::abs(term) < thresh)
            ++consec;
        else
            consec = 0;
        if (consec >= need && m >= 16)
            return sum.s;
        lp *= lambda;
    }
    throw non_convergent("l_series_numeric: tolerance not met within iteration cap");
}

// ---- multiple (r-ple) zeta values at non-positive integers ----

namespace detail {

// B_n(1) from the closed recurrence n = sum_{k<n} C(n,k) B_k(1); kept separate
// from the main tables so the two multiple-zeta routes stay independent.
inline std::vector<rational> bernoulli_plus(long nmax) {
    std::vector<rational> b(static_cast<std::size_t>(nmax) + 1);
    b[0] = rational(1);
    for (long j = 1; j <= nmax; ++j) {
        rational acc(j + 1);
        for (long k = 0; k < j; ++k)
            acc -= rational(binomial(j + 1, k)) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(j)] = acc / rational(j + 1);
    }
    return b;
}

} // namespace detail

// zeta(-k) for k >= 0.
inline rational riemann_zeta_neg(long k) {
    if (k < 0)
        throw invalid_parameter("riemann_zeta_neg: k must be >= 0");
    std::vector<rational> b = detail::bernoulli_plus(k + 1);
    return -b[static_cast<std::size_t>(k) + 1] / rational(k + 1);
}

// zeta_r(-m) = (-1)^r m! B^{(r)}_{m+r}(1; r) / (m+r)!.
inline rational multiple_zeta_neg(long r, long m) {
    if (r < 1 || m < 0)
        throw invalid_parameter("multiple_zeta_neg: need r >= 1 and m >= 0");
    lambda_scalar<rational> one{rational(1), 0};
    rational b = lb_order_r(one, r, rational(r), m + r).scalar_value(rational(0));
    rational pref = factorial(m) / factorial(m + r);
    return (r % 2 == 0 ? pref : -pref) * b;
}

// Independent route: expand the count C(N-1, r-1) as a polynomial in N and
// reduce zeta_r(-m) = sum_j a_j zeta(-m-j) to plain zeta values.
inline rational multiple_zeta_neg_via_zeta(long r, long m) {
    if (r < 1 || m < 0)
        throw invalid_parameter("multiple_zeta_neg_via_zeta: need r >= 1 and m >= 0");
    std::vector<rational> a(1, rational(1));
    for (long i = 1; i < r; ++i) {
        // multiply by (N - i)
        a.insert(a.begin(), rational(0));
        for (std::size_t j = 0; j + 1 < a.size(); ++j)
            a[j] -= rational(i) * a[j + 1];
    }
    rational fact = factorial(r - 1);
    rational acc(0);
    for (std::size_t j = 0; j < a.size(); ++j)
        acc += a[j] / fact * riemann_zeta_neg(m + static_cast<long>(j));
    return acc;
}

// Lambda-twisted closed form for zeta_r(-m):
//   (-lambda)^r m! sum_{j>=0} C(-m-r-1, j) (log lambda)^j B^{(r)}_{m+r+j}(lambda; r) / (m+r+j)!
// In root-of-unity mode only j = 0 survives.  The suite documents where this
// display disagrees with the lambda-free routes; it is not an identity.
template <class K>
log_poly<K> multiple_zeta_twisted_rhs(const lambda_scalar<K>& lam, long r, long m, long j_terms = 0) {
    if (r < 1 || m < 0 || j_terms < 0)
        throw invalid_parameter("multiple_zeta_twisted_rhs: need r >= 1, m >= 0, j_terms >= 0");
    const long jmax = lam.log_mult == 0 ? 0 : j_terms;
    log_poly<K> acc;
    rational lm_pow(1);
    for (long j = 0; j <= jmax; ++j) {
        rational cj = rational(binomial(m + r + j, j)) / factorial(m + r + j);
        if (j % 2 != 0)
            cj = -cj;
        acc += lb_order_r(lam, r, rational(r), m + r + j).scaled(cj * lm_pow).shifted(j);
        lm_pow *= rational(lam.log_mult);
    }
    acc = acc.scaled(r % 2 == 0 ? factorial(m) : -factorial(m));
    return acc.scaled(lam.value.pow(r));
}

// ---- truncation report for the log-shift resummation display ----

// Claimed: B^{(r)}_n(lambda; x) = P * sum_{l>=0} B^{(r)}_{n+l}(lambda; x) (log lambda)^l / l!
// with prefactor P = lambda^{-r} as stated (its derivation instead suggests
// P = lambda^{-x}).  Neither truncation settles; this reports both residual
// sequences so callers can display the behaviour without asserting it.
struct log_shift_report {
    std::vector<double> residual_order_prefactor;    // P = lambda^{-r}
    std::vector<double> residual_argument_prefactor; // P = lambda^{-x}
};

inline log_shift_report log_shift_expansion(const lambda_descriptor& lam, long r, const rational& x, long n,
                                            long lmax) {
    if (r < 1 || n < 0 || lmax < 0)
        throw invalid_parameter("log_shift_expansion: need r >= 1, n >= 0, lmax >= 0");
    if (lam.is_root())
        throw invalid_parameter("log_shift_expansion: defined for lambda = 1 or rational lambda");
    lambda_scalar<rational> ls = as_rational_scalar(lam);
    std::complex<double> Lnum =
        lam.is_one() ? std::complex<double>(0.0, 0.0)
                     : std::log(std::complex<double>(lam.rational_base().to_double(), 0.0));
    std::complex<double> logl = static_cast<double>(lam.log_mult()) * Lnum;
    truncated_series<rational> gf = expand_order_r(ls, r, x, n + lmax);
    std::complex<double> target = eval_at_log(gf.coeff(n), Lnum);
    std::complex<double> pref_r = std::exp(static_cast<double>(-r) * logl);
    std::complex<double> pref_x = std::exp(-x.to_double() * logl);
    log_shift_report rep;
    detail::kahan_sum partial;
    std::complex<double> lp(1.0, 0.0); // (log lambda)^l / l!
    for (long l = 0; l <= lmax; ++l) {
        partial.add(eval_at_log(gf.coeff(n + l), Lnum) * lp);
        rep.residual_order_prefactor.push_back(std::abs(target - pref_r * partial.s));
        rep.residual_argument_prefactor.push_back(std::abs(target - pref_x * partial.s));
        lp *= logl / static_cast<double>(l + 1);
    }
    return rep;
}

} // namespace lbern
