#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bernoulli.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"
#include "lambda.hpp"
#include "rational.hpp"

namespace lbern {

namespace detail {

inline bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0)
        return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

inline void require_padic_params(long p, long prec) {
    if (!is_odd_prime(p))
        throw invalid_parameter("padic: p must be an odd prime");
    if (prec < 1 || prec > 10000)
        throw invalid_parameter("padic: precision must be between 1 and 10000 digits");
}

// Divide out all factors of p; returns the count.  x must be nonzero.
inline long strip_p(Int& x, long p) {
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline long ilog(long p, long n) {
    long e = 0;
    long acc = 1;
    while (acc <= n / p) {
        acc *= p;
        ++e;
    }
    return e;
}

inline long vp_long(long x, long p) {
    long v = 0;
    while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// Absolute working-precision padding needed to evaluate with this coefficient:
// a denominator power of p costs that many guaranteed digits in a product.
inline long neg_val(const rational& q, long p) {
    auto v = val_p(q, p);
    return v && *v < 0 ? -*v : 0;
}

inline long neg_val(const cyclotomic& z, long p) {
    long slack = 0;
    for (const rational& c : z.coeffs())
        slack = std::max(slack, neg_val(c, p));
    return slack;
}

template <class K>
long poly_slack(const log_poly<K>& poly, long p) {
    long slack = 0;
    for (long i = 0; i <= poly.degree(); ++i)
        slack = std::max(slack, neg_val(poly.coeff(i), p));
    return slack;
}

} // namespace detail

// Element of Q_p tracked as residue * p^{-shift} with residue known modulo
// p^prec; the value itself is therefore determined modulo p^{prec - shift}.
class padic_int {
public:
    padic_int(long p, long prec, Int residue, long shift = 0)
        : p_(p), prec_(prec), shift_(shift), residue_(std::move(residue)) {
        if (p_ < 2)
            throw invalid_parameter("padic: p must be at least 2");
        if (prec_ < 1)
            throw invalid_parameter("padic: precision must be positive");
        if (shift_ < 0)
            throw invalid_parameter("padic: negative shift");
        reduce();
        normalize();
    }

    static padic_int zero(long p, long prec) { return padic_int(p, prec, Int(0)); }

    static padic_int from_rational(const rational& q, long p, long prec) {
        if (prec < 1)
            throw invalid_parameter("padic: precision must be positive");
        if (q.is_zero())
            return zero(p, prec);
        Int nu = q.num();
        Int de = q.den();
        long vn = detail::strip_p(nu, p);
        long vd = detail::strip_p(de, p);
        long v = vn - vd;
        long sh = v < 0 ? -v : 0;
        long P = prec + sh;
        Int mod = int_pow(Int(p), static_cast<unsigned long>(P));
        Int phi = int_pow(Int(p), static_cast<unsigned long>(P - 1)) * (p - 1);
        Int inv = boost::multiprecision::powm(((de % mod) + mod) % mod, phi - 1, mod);
        Int r = ((nu % mod) + mod) % mod * inv % mod;
        if (v > 0)
            r = r * int_pow(Int(p), static_cast<unsigned long>(v)) % mod;
        return padic_int(p, P, r, sh);
    }

    long p() const { return p_; }
    long prec() const { return prec_; }
    long shift() const { return shift_; }
    const Int& residue() const { return residue_; }
    // The value is determined modulo p^guaranteed().
    long guaranteed() const { return prec_ - shift_; }

    bool is_zero_to_precision() const { return residue_ == 0; }

    // Valuation of the value; for an element indistinguishable from zero this
    // is only a lower bound (full working precision).
    long valuation() const {
        if (residue_ == 0)
            return guaranteed();
        Int r = residue_;
        return detail::strip_p(r, p_) - shift_;
    }

    padic_int operator-() const {
        Int mod = int_pow(Int(p_), static_cast<unsigned long>(prec_));
        return padic_int(p_, prec_, (mod - residue_) % mod, shift_);
    }

    friend padic_int operator+(const padic_int& a, const padic_int& b) {
        a.require_same(b);
        long s = std::max(a.shift_, b.shift_);
        long pa = a.prec_ + (s - a.shift_);
        long pb = b.prec_ + (s - b.shift_);
        long P = std::min(pa, pb);
        Int mod = int_pow(Int(a.p_), static_cast<unsigned long>(P));
        Int ra = a.residue_ * int_pow(Int(a.p_), static_cast<unsigned long>(s - a.shift_)) % mod;
        Int rb = b.residue_ * int_pow(Int(a.p_), static_cast<unsigned long>(s - b.shift_)) % mod;
        return padic_int(a.p_, P, (ra + rb) % mod, s);
    }
    friend padic_int operator-(const padic_int& a, const padic_int& b) { return a + (-b); }

    friend padic_int operator*(const padic_int& a, const padic_int& b) {
        a.require_same(b);
        long P = std::min(a.prec_, b.prec_);
        Int mod = int_pow(Int(a.p_), static_cast<unsigned long>(P));
        return padic_int(a.p_, P, a.residue_ % mod * (b.residue_ % mod) % mod, a.shift_ + b.shift_);
    }

    padic_int invert() const {
        if (residue_ == 0)
            throw zero_inverse("padic: cannot invert an element indistinguishable from zero");
        if (shift_ > 0) {
            // normalized with shift > 0, so the residue is a unit
            long P = prec_ + shift_;
            Int mod = int_pow(Int(p_), static_cast<unsigned long>(P));
            Int inv = unit_inverse(residue_, P);
            Int r = inv * int_pow(Int(p_), static_cast<unsigned long>(shift_)) % mod;
            return padic_int(p_, P, r, 0);
        }
        Int u = residue_;
        long w = detail::strip_p(u, p_);
        if (w >= prec_)
            throw zero_inverse("padic: cannot invert an element indistinguishable from zero");
        long P = prec_ - w;
        return padic_int(p_, P, unit_inverse(u % int_pow(Int(p_), static_cast<unsigned long>(P)), P), w);
    }

    padic_int pow(long e) const {
        if (e < 0)
            return pow(-e).invert();
        padic_int acc(p_, prec_, Int(1));
        padic_int base = *this;
        while (e > 0) {
            if (e & 1)
                acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const {
        std::string out = residue_.str();
        if (shift_ > 0)
            out += "/" + std::to_string(p_) + "^" + std::to_string(shift_);
        out += " + O(" + std::to_string(p_) + "^" + std::to_string(guaranteed()) + ")";
        return out;
    }

private:
    void reduce() {
        Int mod = int_pow(Int(p_), static_cast<unsigned long>(prec_));
        residue_ = ((residue_ % mod) + mod) % mod;
    }
    void normalize() {
        while (shift_ > 0 && prec_ > 1 && residue_ % p_ == 0) {
            residue_ /= p_;
            --shift_;
            --prec_;
        }
    }
    void require_same(const padic_int& other) const {
        if (p_ != other.p_)
            throw order_mismatch("padic: mixed primes");
    }
    Int unit_inverse(const Int& u, long P) const {
        Int mod = int_pow(Int(p_), static_cast<unsigned long>(P));
        Int phi = int_pow(Int(p_), static_cast<unsigned long>(P - 1)) * (p_ - 1);
        return boost::multiprecision::powm(((u % mod) + mod) % mod, phi - 1, mod);
    }

    long p_;
    long prec_;
    long shift_;
    Int residue_;
};

// Digits through which two values provably agree: the valuation of their
// difference, capped by the difference's own working precision.
inline long agree_digits(const padic_int& a, const padic_int& b) {
    padic_int d = a - b;
    return d.valuation();
}

inline bool equal_to_precision(const padic_int& a, const padic_int& b) {
    return (a - b).is_zero_to_precision();
}

// Teichmuller representative: the unique (p-1)-th root of unity congruent to
// a modulo p, computed by iterated p-th powering.
inline padic_int teichmuller(const Int& a, long p, long prec) {
    detail::require_padic_params(p, prec);
    Int mod = int_pow(Int(p), static_cast<unsigned long>(prec));
    Int x = ((a % mod) + mod) % mod;
    if (x % p == 0)
        throw not_a_unit("teichmuller: argument must be a p-adic unit");
    for (long i = 0; i < prec + 2; ++i) {
        Int nx = boost::multiprecision::powm(x, Int(p), mod);
        if (nx == x)
            break;
        x = nx;
    }
    return padic_int(p, prec, x);
}

inline padic_int teichmuller(long a, long p, long prec) { return teichmuller(Int(a), p, prec); }

// p-adic logarithm of a rational lambda with lambda = 1 (mod p), via the
// exact partial sum of log(1+z) through every term that can touch p^prec.
inline padic_int padic_log(const rational& lam, long p, long prec) {
    detail::require_padic_params(p, prec);
    rational z = lam - rational(1);
    if (z.is_zero())
        return padic_int::zero(p, prec);
    auto vz = val_p(z, p);
    if (!vz || *vz < 1)
        throw outside_domain("padic_log: lambda must be congruent to 1 modulo p");
    rational acc(0);
    rational zp(1);
    for (long k = 1;; ++k) {
        if (k * *vz - detail::ilog(p, k) > prec)
            break;
        zp *= z;
        rational term = zp / rational(k);
        acc += (k % 2 == 0) ? -term : term;
    }
    return padic_int::from_rational(acc, p, prec);
}

// ---- canonical embedding of the cyclotomic layer into Z_p ----

inline padic_int embed_padic(const rational& q, long p, long prec) {
    return padic_int::from_rational(q, p, prec);
}

// Q(zeta_m) -> Z_p for m | p-1, sending zeta_m to omega(c)^{(p-1)/m} where c
// is the least primitive root mod p.  Compatible across divisors of p-1.
inline padic_int embed_padic(const cyclotomic& z, long p, long prec) {
    detail::require_padic_params(p, prec);
    long m = z.order();
    if ((p - 1) % m != 0)
        throw outside_domain("embed_padic: cyclotomic order must divide p - 1");
    if (z.is_rational())
        return padic_int::from_rational(z.rational_part(), p, prec);
    // Coefficients with p-power denominators cost absolute digits in the
    // products below, so widen the working precision by that amount.
    long w = prec + detail::neg_val(z, p);
    long c = detail::primitive_root(p, 1);
    padic_int eta = teichmuller(Int(c), p, w).pow((p - 1) / m);
    padic_int acc = padic_int::zero(p, w);
    padic_int epow(p, w, Int(1));
    const auto& co = z.coeffs();
    for (std::size_t i = 0; i < co.size(); ++i) {
        if (!is_zero(co[i]))
            acc = acc + padic_int::from_rational(co[i], p, w) * epow;
        epow = epow * eta;
    }
    return acc;
}

// Evaluate a polynomial in the formal symbol L at a numeric p-adic value.
template <class K>
padic_int eval_at_log(const log_poly<K>& poly, const padic_int& logval, long prec) {
    padic_int acc = padic_int::zero(logval.p(), prec);
    for (long i = poly.degree(); i >= 0; --i)
        acc = acc * logval + embed_padic(poly.coeff(i), logval.p(), prec);
    return acc;
}

// The Teichmuller character as an exact Dirichlet character mod p, chosen so
// that embed_padic of its values reproduces teichmuller() exactly.
inline dirichlet_character teichmuller_character(long p) {
    detail::require_padic_params(p, 1);
    long c = detail::primitive_root(p, 1);
    std::vector<cyclotomic> vals(static_cast<std::size_t>(p), cyclotomic::zero(p - 1));
    long x = 1;
    for (long k = 0; k < p - 1; ++k) {
        vals[static_cast<std::size_t>(x)] = cyclotomic::root_of_unity(p - 1, k);
        x = static_cast<long>(x * c % p);
    }
    return dirichlet_character::from_values(p, vals);
}

// Riemann sums p^{-M} sum_{y<p^M} lambda^y (x+y)^n of the bosonic p-adic
// integral; converges (for lambda = 1 mod p) to the twisted Bernoulli value.
inline rational volkenborn_sum(const rational& lam, const rational& x, long n, long p, long M) {
    detail::require_padic_params(p, 1);
    if (n < 0 || M < 0)
        throw invalid_parameter("volkenborn_sum: need n >= 0 and M >= 0");
    auto vx = val_p(x, p);
    if (vx && *vx < 0)
        throw outside_domain("volkenborn_sum: x must be a p-adic integer");
    if (!lam.is_one()) {
        auto vl = val_p(lam - rational(1), p);
        if (!vl || *vl < 1)
            throw outside_domain("volkenborn_sum: lambda must be congruent to 1 modulo p");
    }
    double size = std::pow(static_cast<double>(p), static_cast<double>(M));
    if (size > 2e7)
        throw invalid_parameter("volkenborn_sum: p^M too large");
    long N = 1;
    for (long i = 0; i < M; ++i)
        N *= p;
    // Integer accumulation over the running common denominator d^y w^n:
    // a per-term rational normalization would cost a gcd on numbers of
    // growing size, turning the loop quadratic.
    const Int c = lam.num(), d = lam.den();
    const Int u = x.num(), w = x.den();
    Int acc(0), cpow(1);
    for (long y = 0; y < N; ++y) {
        if (y)
            cpow *= c;
        acc = acc * d + cpow * int_pow(u + w * y, static_cast<unsigned long>(n));
    }
    Int den = int_pow(d, static_cast<unsigned long>(N - 1)) * int_pow(w, static_cast<unsigned long>(n)) * N;
    return rational(acc, den);
}

namespace detail {

// B_n(lambda^F; x) as a p-adic value, with L evaluated at log_p of the base.
inline padic_int eval_b_poly_padic(const lambda_descriptor& lam, long F, const rational& x, long n, long p,
                                   long prec) {
    if (lam.is_root()) {
        long m = lam.root_order();
        if ((p - 1) % m != 0)
            throw outside_domain("padic: root-of-unity order must divide p - 1");
        lambda_scalar<cyclotomic> ls = as_cyclotomic_scalar(lam, m);
        log_poly<cyclotomic> poly = lb_poly(ls.pow(F), x, n);
        return embed_padic(poly.constant_or(cyclotomic::zero(m)), p, prec);
    }
    if (lam.is_rational_mode()) {
        auto v = val_p(lam.rational_base() - rational(1), p);
        if (!v || *v < 1)
            throw outside_domain("padic: rational lambda base must be congruent to 1 modulo p");
    }
    lambda_scalar<rational> ls = as_rational_scalar(lam);
    log_poly<rational> poly = lb_poly(ls.pow(F), x, n);
    if (poly.degree() <= 0)
        return padic_int::from_rational(poly.constant_or(rational(0)), p, prec);
    long w = prec + detail::poly_slack(poly, p);
    return eval_at_log(poly, padic_log(lam.rational_base(), p, w), w);
}

inline padic_int lambda_power_padic(const lambda_descriptor& lam, long e, long p, long prec) {
    if (lam.is_root()) {
        long m = lam.root_order();
        if ((p - 1) % m != 0)
            throw outside_domain("padic: root-of-unity order must divide p - 1");
        return embed_padic(cyclotomic::root_of_unity(m, lam.root_exponent() * e), p, prec);
    }
    return padic_int::from_rational(lam.rational_value().pow(e), p, prec);
}

inline void require_h_args(long n, long a, long F, long p, long prec) {
    require_padic_params(p, prec);
    if (n < 1)
        throw invalid_parameter("padic: n must be >= 1");
    if (F < 1 || a < 1 || a > F)
        throw invalid_parameter("padic: need 1 <= a <= F");
    if (a % p == 0)
        throw outside_domain("padic: a must be a p-adic unit");
}

} // namespace detail

// H_{p,lambda}(1-n, a|F) = -(1/n) F^{n-1} lambda^a omega^{-n}(a) B_n(lambda^F; a/F).
inline padic_int h_p_lambda_neg(const lambda_descriptor& lam, long n, long a, long F, long p, long prec) {
    detail::require_h_args(n, a, F, p, prec);
    rational pref = -(rational(F).pow(n - 1) / rational(n));
    padic_int bval = detail::eval_b_poly_padic(lam, F, rational(a) / rational(F), n, p,
                                               prec + detail::neg_val(pref, p));
    // the B value may sit at negative valuation; the unit cofactors must be
    // known that much deeper for the product to stay determined mod p^prec
    long w = prec + detail::neg_val(pref, p) + bval.shift();
    padic_int om = teichmuller(Int(a), p, w).pow(-n);
    padic_int la = detail::lambda_power_padic(lam, a, p, w);
    padic_int out = om * la * padic_int::from_rational(pref, p, w) * bval;
    if (out.guaranteed() < 1)
        throw precision_loss("h_p_lambda_neg: no guaranteed digits remain; raise the working precision");
    return out;
}

// Same value through the binomial display
//   -(1/n) (lambda^a / F) <a>^n sum_{j<=n} C(n,j) (F/a)^j B_j(lambda^F),
// with <a> = a / omega(a).
inline padic_int h_p_lambda_neg_jsum(const lambda_descriptor& lam, long n, long a, long F, long p, long prec) {
    detail::require_h_args(n, a, F, p, prec);
    rational pref = rational(Int(-1), Int(n)) / rational(F);
    long wb = prec + detail::neg_val(pref, p);
    std::optional<padic_int> sum;
    rational fa(1); // (F/a)^j
    for (long j = 0; j <= n; ++j) {
        padic_int bj = detail::eval_b_poly_padic(lam, F, rational(0), j, p, wb);
        long wj = wb + bj.shift();
        padic_int term = bj * padic_int::from_rational(rational(binomial(n, j)) * fa, p, wj);
        sum = sum ? *sum + term : term;
        fa *= rational(F) / rational(a);
    }
    long w = wb + sum->shift();
    padic_int ha = padic_int::from_rational(rational(a), p, w) * teichmuller(Int(a), p, w).invert();
    padic_int la = detail::lambda_power_padic(lam, a, p, w);
    padic_int out = ha.pow(n) * la * padic_int::from_rational(pref, p, w) * *sum;
    if (out.guaranteed() < 1)
        throw precision_loss("h_p_lambda_neg_jsum: no guaranteed digits remain; raise the working precision");
    return out;
}

// L_{p,lambda}(1-n, chi) as the unit-restricted sum of partial values over a
// period F (any common multiple of the modulus and p; default lcm).
inline padic_int l_p_lambda_neg(const dirichlet_character& chi, const lambda_descriptor& lam, long n, long p,
                                long prec, long F = 0) {
    detail::require_padic_params(p, prec);
    if (n < 1)
        throw invalid_parameter("l_p_lambda_neg: n must be >= 1");
    long f = chi.modulus();
    if (F == 0)
        F = std::lcm(f, p);
    if (F < 1 || F % f != 0 || F % p != 0)
        throw invalid_parameter("l_p_lambda_neg: F must be a common multiple of the modulus and p");
    if ((p - 1) % chi.order() != 0)
        throw character_not_representable("l_p_lambda_neg: character order must divide p - 1");
    std::optional<padic_int> acc;
    for (long a = 1; a <= F; ++a) {
        if (a % p == 0)
            continue;
        const cyclotomic& cv = chi.value(a);
        if (cv.is_zero())
            continue;
        padic_int hv = h_p_lambda_neg(lam, n, a, F, p, prec);
        padic_int term = embed_padic(cv, p, prec + hv.shift()) * hv;
        acc = acc ? *acc + term : term;
    }
    return *acc;
}

namespace detail {

inline padic_int eval_gb_padic(const log_poly<cyclotomic>& poly, const lambda_descriptor& lam, long p, long prec) {
    if (poly.degree() <= 0)
        return embed_padic(poly.constant_or(cyclotomic::zero(1)), p, prec);
    long w = prec + poly_slack(poly, p);
    return eval_at_log(poly, padic_log(lam.rational_base(), p, w), w);
}

} // namespace detail

// The same values through the twisted Bernoulli numbers of the attached
// primitive character:
//   L_{p,lambda}(1-n, chi)
//     = -(1/n) (B_{n,chi'}(lambda) - chi'(p) p^{n-1} B_{n,chi'}(lambda^p)),
// where chi' is the primitive character inducing chi * omega^{-n}.
inline padic_int l_p_lambda_neg_euler(const dirichlet_character& chi, const lambda_descriptor& lam, long n, long p,
                                      long prec) {
    detail::require_padic_params(p, prec);
    if (n < 1)
        throw invalid_parameter("l_p_lambda_neg_euler: n must be >= 1");
    if ((p - 1) % chi.order() != 0)
        throw character_not_representable("l_p_lambda_neg_euler: character order must divide p - 1");
    if (lam.is_rational_mode()) {
        auto v = val_p(lam.rational_base() - rational(1), p);
        if (!v || *v < 1)
            throw outside_domain("l_p_lambda_neg_euler: rational lambda base must be congruent to 1 modulo p");
    }
    if (lam.is_root() && (p - 1) % lam.root_order() != 0)
        throw outside_domain("l_p_lambda_neg_euler: root-of-unity order must divide p - 1");
    long w0 = prec + detail::vp_long(n, p);
    dirichlet_character chi_prim = chi.mul(teichmuller_character(p).pow(-n)).primitive_restriction();
    padic_int e1 = detail::eval_gb_padic(generalized_bernoulli(chi_prim, lam, n), lam, p, w0);
    padic_int e2 = detail::eval_gb_padic(generalized_bernoulli(chi_prim, lam.pow(p), n), lam, p, w0);
    long w = w0 + std::max(e1.shift(), e2.shift());
    padic_int cp = embed_padic(chi_prim.value(p), p, w);
    padic_int euler = cp * padic_int::from_rational(rational(p).pow(n - 1), p, w) * e2;
    padic_int out = (e1 - euler) * padic_int::from_rational(rational(Int(-1), Int(n)), p, w);
    if (out.guaranteed() < 1)
        throw precision_loss("l_p_lambda_neg_euler: no guaranteed digits remain; raise the working precision");
    return out;
}

} // namespace lbern
