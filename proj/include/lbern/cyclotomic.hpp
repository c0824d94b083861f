#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace lbern {

inline long euler_phi(long m) {
    if (m <= 0)
        throw invalid_parameter("euler_phi: order must be positive");
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace detail {

// Little-endian polynomials over the rationals; used for reduction and gcd.
using qpoly = std::vector<rational>;

inline void qp_trim(qpoly& a) {
    while (!a.empty() && a.back().is_zero())
        a.pop_back();
}

inline qpoly qp_mul(const qpoly& a, const qpoly& b) {
    if (a.empty() || b.empty())
        return {};
    qpoly out(a.size() + b.size() - 1, rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    qp_trim(out);
    return out;
}

inline std::pair<qpoly, qpoly> qp_divmod(qpoly a, const qpoly& b) {
    qp_trim(a);
    if (b.empty())
        throw zero_inverse("polynomial division by zero");
    qpoly q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, rational(0));
    const rational lead_inv = inv(b.back());
    while (a.size() >= b.size()) {
        rational c = a.back() * lead_inv;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= c * b[j];
        qp_trim(a);
    }
    qp_trim(q);
    return {std::move(q), std::move(a)};
}

// Extended gcd over Q[x]: returns (g, u) with u*a == g (mod b), g monic or zero.
inline std::pair<qpoly, qpoly> qp_half_egcd(qpoly a, qpoly b) {
    qpoly r0 = std::move(a), r1 = std::move(b);
    qpoly u0{rational(1)}, u1{};
    qp_trim(r0);
    qp_trim(r1);
    while (!r1.empty()) {
        auto [q, r] = qp_divmod(r0, r1);
        qpoly u2 = u0;
        qpoly qu = qp_mul(q, u1);
        if (u2.size() < qu.size())
            u2.resize(qu.size(), rational(0));
        for (std::size_t i = 0; i < qu.size(); ++i)
            u2[i] -= qu[i];
        qp_trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (!r0.empty()) {
        rational lead_inv = inv(r0.back());
        for (auto& c : r0)
            c *= lead_inv;
        for (auto& c : u0)
            c *= lead_inv;
    }
    return {std::move(r0), std::move(u0)};
}

// Exact division of integer polynomials (divisor monic).
inline std::vector<Int> ip_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() - b.size() + 1, Int(0));
    for (std::size_t pos = a.size(); pos-- >= b.size();) {
        Int c = a[pos];
        if (c == 0)
            continue;
        std::size_t shift = pos - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= c * b[j];
        if (pos == b.size() - 1)
            break;
    }
    return q;
}

// Coefficients of the m-th cyclotomic polynomial, cached.
inline const std::vector<Int>& cyclo_poly(long m) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;

    // Compute Phi_d for every divisor d of m in ascending order.
    std::vector<long> divisors;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0)
            divisors.push_back(d);
    for (long d : divisors) {
        if (cache.count(d))
            continue;
        std::vector<Int> num(static_cast<std::size_t>(d) + 1, Int(0));
        num[0] = -1;
        num[static_cast<std::size_t>(d)] = 1;
        for (long e : divisors) {
            if (e == d || d % e != 0)
                continue;
            num = ip_div_exact(std::move(num), cache.at(e));
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

} // namespace detail

// Element of the cyclotomic field Q(zeta_m), stored on the power basis
// 1, zeta, ..., zeta^{phi(m)-1} with coefficients reduced mod Phi_m.
class cyclotomic {
public:
    cyclotomic() : m_(1), c_(1, rational(0)) {}
    explicit cyclotomic(const rational& r, long m = 1) : m_(check_order(m)), c_(static_cast<std::size_t>(euler_phi(m)), rational(0)) {
        c_[0] = r;
    }

    // zeta_m^k, k arbitrary (reduced mod m).
    static cyclotomic root_of_unity(long m, long k) {
        check_order(m);
        long kk = ((k % m) + m) % m;
        std::vector<rational> poly(static_cast<std::size_t>(kk) + 1, rational(0));
        poly[static_cast<std::size_t>(kk)] = rational(1);
        return cyclotomic(m, reduce(std::move(poly), m));
    }

    static cyclotomic zero(long m) { return cyclotomic(rational(0), m); }
    static cyclotomic one(long m) { return cyclotomic(rational(1), m); }

    long order() const { return m_; }
    const std::vector<rational>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const rational& x) { return x.is_zero(); });
    }
    bool is_one() const {
        if (!c_[0].is_one())
            return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](const rational& x) { return x.is_zero(); });
    }
    bool is_rational() const {
        return std::all_of(c_.begin() + 1, c_.end(), [](const rational& x) { return x.is_zero(); });
    }
    const rational& rational_part() const {
        if (!is_rational())
            throw invalid_parameter("cyclotomic: element is not rational");
        return c_[0];
    }

    friend cyclotomic operator+(const cyclotomic& a, const cyclotomic& b) {
        a.require_same_order(b);
        cyclotomic out = a;
        for (std::size_t i = 0; i < out.c_.size(); ++i)
            out.c_[i] += b.c_[i];
        return out;
    }
    friend cyclotomic operator-(const cyclotomic& a, const cyclotomic& b) {
        a.require_same_order(b);
        cyclotomic out = a;
        for (std::size_t i = 0; i < out.c_.size(); ++i)
            out.c_[i] -= b.c_[i];
        return out;
    }
    cyclotomic operator-() const {
        cyclotomic out = *this;
        for (auto& x : out.c_)
            x = -x;
        return out;
    }
    friend cyclotomic operator*(const cyclotomic& a, const cyclotomic& b) {
        a.require_same_order(b);
        std::vector<rational> prod(2 * a.c_.size(), rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero())
                    prod[i + j] += a.c_[i] * b.c_[j];
        }
        return cyclotomic(a.m_, reduce(std::move(prod), a.m_));
    }
    friend cyclotomic operator/(const cyclotomic& a, const cyclotomic& b) { return a * b.inverse(); }

    cyclotomic& operator+=(const cyclotomic& b) { *this = *this + b; return *this; }
    cyclotomic& operator-=(const cyclotomic& b) { *this = *this - b; return *this; }
    cyclotomic& operator*=(const cyclotomic& b) { *this = *this * b; return *this; }

    // Scaling by rationals stays in the same order.
    friend cyclotomic operator*(const cyclotomic& a, const rational& s) {
        cyclotomic out = a;
        for (auto& x : out.c_)
            x *= s;
        return out;
    }
    friend cyclotomic operator*(const rational& s, const cyclotomic& a) { return a * s; }
    friend cyclotomic operator/(const cyclotomic& a, const rational& s) {
        if (s.is_zero())
            throw zero_inverse("cyclotomic: division by zero rational");
        return a * inv(s);
    }
    friend cyclotomic operator+(const cyclotomic& a, const rational& s) {
        cyclotomic out = a;
        out.c_[0] += s;
        return out;
    }
    friend cyclotomic operator-(const cyclotomic& a, const rational& s) {
        cyclotomic out = a;
        out.c_[0] -= s;
        return out;
    }

    cyclotomic inverse() const {
        if (is_zero())
            throw zero_inverse("cyclotomic: inverse of zero");
        detail::qpoly a(c_.begin(), c_.end());
        detail::qp_trim(a);
        const auto& phi_int = detail::cyclo_poly(m_);
        detail::qpoly phi(phi_int.size());
        for (std::size_t i = 0; i < phi_int.size(); ++i)
            phi[i] = rational(phi_int[i]);
        auto [g, u] = detail::qp_half_egcd(a, phi);
        // Phi_m is squarefree, so gcd with a nonzero reduced element is 1.
        if (g.size() != 1)
            throw zero_inverse("cyclotomic: element is not invertible");
        detail::qpoly scaled = u;
        rational ginv = inv(g[0]);
        for (auto& x : scaled)
            x *= ginv;
        return cyclotomic(m_, reduce(std::move(scaled), m_));
    }

    cyclotomic pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        cyclotomic acc = one(m_), base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1)
                acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    // Embed into Q(zeta_M) for m | M via zeta_m = zeta_M^{M/m}.
    cyclotomic embedded(long M) const {
        if (M % m_ != 0)
            throw order_mismatch("cyclotomic: embedding target order must be a multiple of the source order");
        if (M == m_)
            return *this;
        long step = M / m_;
        std::vector<rational> poly(static_cast<std::size_t>((c_.size() - 1) * step) + 1, rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            poly[i * static_cast<std::size_t>(step)] = c_[i];
        return cyclotomic(M, reduce(std::move(poly), M));
    }

    friend bool operator==(const cyclotomic& a, const cyclotomic& b) {
        if (a.m_ == b.m_)
            return a.c_ == b.c_;
        long M = std::lcm(a.m_, b.m_);
        return a.embedded(M).c_ == b.embedded(M).c_;
    }
    friend bool operator!=(const cyclotomic& a, const cyclotomic& b) { return !(a == b); }

    // Rendered as a polynomial in z (= zeta_order), e.g. "1/2 + 3*z^2".
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero())
                continue;
            std::string coeff = c_[i].str();
            std::string term;
            if (i == 0) {
                term = coeff;
            } else {
                std::string zpow = i == 1 ? "z" : "z^" + std::to_string(i);
                if (coeff == "1")
                    term = zpow;
                else if (coeff == "-1")
                    term = "-" + zpow;
                else
                    term = coeff + "*" + zpow;
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
    cyclotomic(long m, std::vector<rational> reduced) : m_(m), c_(std::move(reduced)) {}

    static long check_order(long m) {
        if (m < 1)
            throw invalid_parameter("cyclotomic: order must be >= 1");
        return m;
    }

    void require_same_order(const cyclotomic& b) const {
        if (m_ != b.m_)
            throw order_mismatch("cyclotomic: operands have orders " + std::to_string(m_) + " and " + std::to_string(b.m_));
    }

    static std::vector<rational> reduce(std::vector<rational> poly, long m) {
        const auto& phi = detail::cyclo_poly(m);
        const std::size_t deg = phi.size() - 1; // = phi(m)
        while (poly.size() > deg) {
            rational lead = poly.back();
            if (!lead.is_zero()) {
                std::size_t shift = poly.size() - phi.size();
                for (std::size_t j = 0; j + 1 < phi.size(); ++j)
                    if (phi[j] != 0)
                        poly[shift + j] -= lead * rational(phi[j]);
            }
            poly.pop_back();
        }
        poly.resize(deg, rational(0));
        return poly;
    }

    long m_;
    std::vector<rational> c_;
};

inline bool is_zero(const cyclotomic& a) { return a.is_zero(); }
inline bool is_one(const cyclotomic& a) { return a.is_one(); }
inline cyclotomic inv(const cyclotomic& a) { return a.inverse(); }

// Lift two elements into the smallest common field.
inline std::pair<cyclotomic, cyclotomic> lift_common(const cyclotomic& a, const cyclotomic& b) {
    long M = std::lcm(a.order(), b.order());
    return {a.embedded(M), b.embedded(M)};
}

inline cyclotomic mul_mixed(const cyclotomic& a, const cyclotomic& b) {
    auto [x, y] = lift_common(a, b);
    return x * y;
}

inline cyclotomic add_mixed(const cyclotomic& a, const cyclotomic& b) {
    auto [x, y] = lift_common(a, b);
    return x + y;
}

// Multiplicative order of a root of unity; throws if no order <= bound works.
inline long multiplicative_order(const cyclotomic& v, long bound) {
    if (v.is_zero())
        throw invalid_parameter("multiplicative_order: zero element");
    cyclotomic acc = v;
    for (long d = 1; d <= bound; ++d) {
        if (acc.is_one())
            return d;
        acc *= v;
    }
    throw invalid_parameter("multiplicative_order: no order <= " + std::to_string(bound));
}

// Scalar-embedding helpers shared by the generic layers.
inline rational zero_like(const rational&) { return rational(0); }
inline rational one_like(const rational&) { return rational(1); }
inline rational embed_like(const rational&, const rational& r) { return r; }
inline cyclotomic zero_like(const cyclotomic& model) { return cyclotomic::zero(model.order()); }
inline cyclotomic one_like(const cyclotomic& model) { return cyclotomic::one(model.order()); }
inline cyclotomic embed_like(const cyclotomic& model, const rational& r) { return cyclotomic(r, model.order()); }

inline std::string scalar_str(const rational& r) { return r.str(); }
inline std::string scalar_str(const cyclotomic& z) { return z.str(); }

} // namespace lbern
