#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "bernoulli.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "lambda.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace lbern {

namespace detail {

inline long pow_mod_long(long base, long exp, long mod) {
    long long acc = 1 % mod;
    long long b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1)
            acc = (acc * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return static_cast<long>(acc);
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

// Least primitive root modulo an odd prime power p^e.
inline long primitive_root(long p, long e) {
    long phi_p = p - 1;
    std::vector<long> qs = prime_factors(phi_p);
    long g = 0;
    for (long cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (long q : qs)
            if (pow_mod_long(cand, phi_p / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (e == 1)
        return g;
    long pe = 1;
    for (long i = 0; i < e; ++i)
        pe *= p;
    // g is primitive mod p^e iff g^{p-1} != 1 mod p^2; otherwise g + p is.
    long p2 = p * p;
    if (pow_mod_long(g, p - 1, p2) == 1)
        g += p;
    return g % pe;
}

// Cyclic decomposition of the unit group (Z/f)^* with discrete logs.
struct unit_group {
    long f = 1;
    std::vector<long> generators; // residues mod f
    std::vector<long> orders;     // component orders, same length
    long exponent = 1;            // lcm of orders
    // dlogs[i][a]: exponent of generator i in a, or -1 when gcd(a, f) != 1.
    std::vector<std::vector<long>> dlogs;

    bool is_unit(long a) const { return std::gcd(((a % f) + f) % f, f) == 1; }
};

inline unit_group analyze_units(long f) {
    if (f < 1)
        throw invalid_parameter("dirichlet: modulus must be >= 1");
    unit_group g;
    g.f = f;

    struct local_gen {
        long pe;      // prime power
        long residue; // generator modulo pe
        long order;
    };
    std::vector<local_gen> locals;
    std::vector<std::pair<long, long>> factors; // (p, e), ascending p
    long n = f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            long e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    for (auto [p, e] : factors) {
        long pe = 1;
        for (long i = 0; i < e; ++i)
            pe *= p;
        if (p == 2) {
            if (e == 2) {
                locals.push_back({pe, 3, 2});
            } else if (e >= 3) {
                locals.push_back({pe, pe - 1, 2});
                locals.push_back({pe, 5, 1L << (e - 2)});
            }
        } else {
            long phi_pe = (pe / p) * (p - 1);
            locals.push_back({pe, primitive_root(p, e), phi_pe});
        }
    }

    for (const auto& lg : locals) {
        // CRT lift: residue ~ lg.residue mod pe, ~ 1 elsewhere.
        long other = f / lg.pe;
        long lifted = 0;
        for (long x = lg.residue % lg.pe; x < f; x += lg.pe) {
            if (other == 1 || x % other == 1) {
                lifted = x;
                break;
            }
        }
        g.generators.push_back(lifted);
        g.orders.push_back(lg.order);
        g.exponent = std::lcm(g.exponent, lg.order);
    }

    g.dlogs.assign(g.generators.size(), std::vector<long>(static_cast<std::size_t>(f), -1));
    // Enumerate the group once, walking exponent tuples mixed-radix.
    std::vector<long> t(g.generators.size(), 0);
    bool more = true;
    while (more) {
        long long a = 1 % f;
        for (std::size_t i = 0; i < g.generators.size(); ++i)
            a = (a * pow_mod_long(g.generators[i], t[i], f)) % f;
        for (std::size_t i = 0; i < g.generators.size(); ++i)
            g.dlogs[i][static_cast<std::size_t>(a)] = t[i];
        if (t.empty())
            break;
        std::size_t pos = t.size();
        more = false;
        while (pos-- > 0) {
            if (++t[pos] < g.orders[pos]) {
                more = true;
                break;
            }
            t[pos] = 0;
        }
    }
    if (f == 1) {
        // The single residue 0 acts as the unit.
        g.dlogs.assign(g.generators.size(), std::vector<long>(1, 0));
    }
    return g;
}

} // namespace detail

// Dirichlet character modulo f with values in Q(zeta_e), e = order of the
// character.  Non-units map to exact zero.
class dirichlet_character {
public:
    long modulus() const { return f_; }
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == f_; }
    // Position in the deterministic enumeration of characters_mod(modulus());
    // -1 for characters synthesized from value tables.
    long index() const { return index_; }

    const cyclotomic& value(long a) const {
        long r = ((a % f_) + f_) % f_;
        return values_[static_cast<std::size_t>(r)];
    }
    const cyclotomic& value(const Int& a) const {
        Int r = a % f_;
        if (r < 0)
            r += f_;
        return values_[static_cast<std::size_t>(r.convert_to<long>())];
    }
    const std::vector<cyclotomic>& values() const { return values_; }

    bool is_trivial() const { return order_ == 1; }

    static dirichlet_character trivial(long f) {
        detail::unit_group g = detail::analyze_units(f);
        std::vector<cyclotomic> vals;
        vals.reserve(static_cast<std::size_t>(f));
        for (long a = 0; a < f; ++a)
            vals.push_back(g.is_unit(a) || f == 1 ? cyclotomic::one(1) : cyclotomic::zero(1));
        dirichlet_character chi;
        chi.f_ = f;
        chi.order_ = 1;
        chi.values_ = std::move(vals);
        chi.conductor_ = 1;
        chi.index_ = 0;
        return chi;
    }

    // All characters mod f in a deterministic order: exponent tuples over the
    // cyclic decomposition of (Z/f)^* (factors by ascending prime; for the
    // 2-part, the order-2 generator before the power-of-two one), enumerated
    // lexicographically with the last component fastest.  Index 0 is trivial.
    static std::vector<dirichlet_character> characters_mod(long f) {
        detail::unit_group g = detail::analyze_units(f);
        long count = 1;
        for (long o : g.orders)
            count *= o;
        std::vector<dirichlet_character> out;
        out.reserve(static_cast<std::size_t>(count));
        std::vector<long> t(g.orders.size(), 0);
        const long M = g.exponent;
        for (long idx = 0; idx < count; ++idx) {
            long e = 1;
            for (std::size_t i = 0; i < t.size(); ++i)
                e = std::lcm(e, g.orders[i] / std::gcd(g.orders[i], t[i]));
            std::vector<cyclotomic> vals;
            vals.reserve(static_cast<std::size_t>(f));
            for (long a = 0; a < f; ++a) {
                bool unit = f == 1 ? a == 0 : g.is_unit(a);
                if (!unit) {
                    vals.push_back(cyclotomic::zero(e));
                    continue;
                }
                long j = 0; // exponent of zeta_M
                for (std::size_t i = 0; i < t.size(); ++i) {
                    long x = g.dlogs[i][static_cast<std::size_t>(a)];
                    j = (j + t[i] % g.orders[i] * (M / g.orders[i]) % M * x) % M;
                }
                // chi^e is trivial, so j is a multiple of M/e.
                vals.push_back(cyclotomic::root_of_unity(e, j / (M / e)));
            }
            dirichlet_character chi;
            chi.f_ = f;
            chi.order_ = e;
            chi.values_ = std::move(vals);
            chi.conductor_ = compute_conductor(chi.f_, chi.values_, g);
            chi.index_ = idx;
            out.push_back(std::move(chi));

            // Advance the tuple, last component fastest.
            std::size_t pos = t.size();
            while (pos-- > 0) {
                if (++t[pos] < g.orders[pos])
                    break;
                t[pos] = 0;
            }
        }
        return out;
    }

    // Builds a character from an explicit value table (used for products,
    // powers and primitive restrictions).  Values must be roots of unity at
    // units and zero elsewhere; multiplicativity is not re-verified.
    static dirichlet_character from_values(long f, const std::vector<cyclotomic>& raw) {
        if (static_cast<long>(raw.size()) != f)
            throw invalid_parameter("dirichlet: value table size must equal the modulus");
        detail::unit_group g = detail::analyze_units(f);
        long e = 1;
        long phi_f = euler_phi(f);
        for (long a = 0; a < f; ++a) {
            bool unit = f == 1 ? a == 0 : g.is_unit(a);
            if (!unit)
                continue;
            e = std::lcm(e, multiplicative_order(raw[static_cast<std::size_t>(a)], phi_f));
        }
        std::vector<cyclotomic> vals;
        vals.reserve(static_cast<std::size_t>(f));
        for (long a = 0; a < f; ++a) {
            bool unit = f == 1 ? a == 0 : g.is_unit(a);
            if (!unit) {
                vals.push_back(cyclotomic::zero(e));
                continue;
            }
            bool matched = false;
            cyclotomic target = cyclotomic::one(e);
            for (long j = 0; j < e; ++j) {
                if (raw[static_cast<std::size_t>(a)] == target) {
                    vals.push_back(cyclotomic::root_of_unity(e, j));
                    matched = true;
                    break;
                }
                target *= cyclotomic::root_of_unity(e, 1);
            }
            if (!matched)
                throw invalid_parameter("dirichlet: value table entry is not a root of unity of the character order");
        }
        dirichlet_character chi;
        chi.f_ = f;
        chi.order_ = e;
        chi.values_ = std::move(vals);
        chi.conductor_ = compute_conductor(chi.f_, chi.values_, g);
        chi.index_ = -1;
        return chi;
    }

    // Pointwise product, defined modulo lcm of the moduli.
    dirichlet_character mul(const dirichlet_character& other) const {
        long F = std::lcm(f_, other.f_);
        detail::unit_group g = detail::analyze_units(F);
        std::vector<cyclotomic> vals;
        vals.reserve(static_cast<std::size_t>(F));
        for (long a = 0; a < F; ++a) {
            bool unit = F == 1 ? a == 0 : g.is_unit(a);
            if (!unit) {
                vals.push_back(cyclotomic::zero(1));
                continue;
            }
            vals.push_back(mul_mixed(value(a), other.value(a)));
        }
        return from_values(F, vals);
    }

    // Integer power; negative exponents reduce modulo the order.
    dirichlet_character pow(long e) const {
        long ee = ((e % order_) + order_) % order_;
        std::vector<cyclotomic> vals;
        vals.reserve(values_.size());
        for (const auto& v : values_)
            vals.push_back(v.is_zero() ? v : v.pow(ee));
        return from_values(f_, vals);
    }

    // The primitive character of conductor() that induces this one.
    dirichlet_character primitive_restriction() const {
        long c = conductor_;
        if (c == f_)
            return *this;
        std::vector<cyclotomic> vals;
        vals.reserve(static_cast<std::size_t>(c));
        for (long a = 0; a < c; ++a) {
            bool unit = c == 1 ? a == 0 : std::gcd(a, c) == 1;
            if (!unit) {
                vals.push_back(cyclotomic::zero(order_));
                continue;
            }
            // Lift a to a residue coprime to the full modulus.
            long b = a;
            while (std::gcd(b, f_) != 1)
                b += c;
            vals.push_back(value(b));
        }
        return from_values(c, vals);
    }

    friend bool operator==(const dirichlet_character& a, const dirichlet_character& b) {
        if (a.f_ != b.f_)
            return false;
        for (std::size_t i = 0; i < a.values_.size(); ++i)
            if (!(a.values_[i] == b.values_[i]))
                return false;
        return true;
    }
    friend bool operator!=(const dirichlet_character& a, const dirichlet_character& b) { return !(a == b); }

private:
    dirichlet_character() = default;

    static long compute_conductor(long f, const std::vector<cyclotomic>& vals, const detail::unit_group& g) {
        for (long c = 1; c <= f; ++c) {
            if (f % c != 0)
                continue;
            bool ok = true;
            for (long a = 1; a < f && ok; ++a) {
                if (a % c != 1 % c)
                    continue;
                if (!g.is_unit(a))
                    continue;
                if (!vals[static_cast<std::size_t>(a)].is_one())
                    ok = false;
            }
            if (ok)
                return c;
        }
        return f;
    }

    long f_ = 1;
    long order_ = 1;
    long conductor_ = 1;
    long index_ = -1;
    std::vector<cyclotomic> values_;
};

// Generalized twisted Bernoulli numbers attached to chi:
//   B_{n,chi}(lambda) = F^{n-1} sum_{a<F} chi(a) lambda^a B_n(lambda^F; a/F)
// for any multiple F of the modulus of chi (the value is F-independent).
inline log_poly<cyclotomic> generalized_bernoulli(const dirichlet_character& chi, const lambda_descriptor& lambda,
                                                  long n, long F) {
    long f = chi.modulus();
    if (F < 1 || F % f != 0)
        throw conductor_mismatch("dirichlet: F must be a positive multiple of the character modulus");
    long W = std::lcm(chi.order(), lambda.is_root() ? lambda.root_order() : 1);
    lambda_scalar<cyclotomic> lam = as_cyclotomic_scalar(lambda, W);
    lambda_scalar<cyclotomic> lam_F = lam.pow(F);
    std::vector<log_poly<cyclotomic>> table = lb_numbers(lam_F, n);
    log_poly<cyclotomic> acc;
    cyclotomic lpow = cyclotomic::one(W);
    for (long a = 0; a < F; ++a) {
        const cyclotomic& cv = chi.value(a);
        if (!cv.is_zero())
            acc += lb_poly_from_table(table, rational(a) / rational(F), n).scaled(lpow * cv.embedded(W));
        lpow *= lam.value;
    }
    return acc.scaled(rational(F).pow(n - 1));
}

inline log_poly<cyclotomic> generalized_bernoulli(const dirichlet_character& chi, const lambda_descriptor& lambda,
                                                  long n) {
    return generalized_bernoulli(chi, lambda, n, chi.modulus());
}

// Series oracle: expansion of
//   sum_{a<f} chi(a) lambda^a e^{at} (log lambda + t) / (lambda^f e^{ft} - 1),
// whose t^n/n! coefficient is B_{n,chi}(lambda).
inline truncated_series<cyclotomic> expand_generalized(const dirichlet_character& chi, const lambda_descriptor& lambda,
                                                       long order) {
    long f = chi.modulus();
    long W = std::lcm(chi.order(), lambda.is_root() ? lambda.root_order() : 1);
    lambda_scalar<cyclotomic> lam = as_cyclotomic_scalar(lambda, W);
    lambda_scalar<cyclotomic> lam_f = lam.pow(f);
    const bool degenerate = lam_f.is_one();
    const long work = order + (degenerate ? 1 : 0);

    // sum_a chi(a) lambda^a e^{at}: coefficient of t^n/n! is sum_a chi(a) lambda^a a^n.
    truncated_series<cyclotomic> front(work);
    for (long nn = 0; nn <= work; ++nn) {
        cyclotomic acc = cyclotomic::zero(W);
        cyclotomic lpow = cyclotomic::one(W);
        for (long a = 0; a < f; ++a) {
            const cyclotomic& cv = chi.value(a);
            if (!cv.is_zero()) {
                rational apow = nn == 0 ? rational(1) : rational(int_pow(Int(a), static_cast<unsigned long>(nn)));
                acc += lpow * cv.embedded(W) * apow;
            }
            lpow *= lam.value;
        }
        front.set_coeff(nn, log_poly<cyclotomic>(acc));
    }

    truncated_series<cyclotomic> head(work);
    head.set_coeff(0, lam.log_term());
    if (work >= 1)
        head.set_coeff(1, log_poly<cyclotomic>(cyclotomic::one(W)));
    truncated_series<cyclotomic> num = front * head;

    truncated_series<cyclotomic> den(work);
    den.set_coeff(0, log_poly<cyclotomic>(lam_f.value - cyclotomic::one(W)));
    rational fpow(1);
    for (long nn = 1; nn <= work; ++nn) {
        fpow *= rational(f);
        den.set_coeff(nn, log_poly<cyclotomic>(lam_f.value * fpow));
    }

    return degenerate ? num.factor_t() / den.factor_t() : num / den;
}

} // namespace lbern
