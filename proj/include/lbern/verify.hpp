#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bernoulli.hpp"
#include "dirichlet.hpp"
#include "errors.hpp"
#include "frobenius_euler.hpp"
#include "lambda.hpp"
#include "padic.hpp"
#include "special_values.hpp"

// Identity-verification suites.  Every identity the library implements is
// registered here with the tag it carries in the identity catalog; running a
// suite re-derives both sides of each identity at the documented bounds and
// reports pass/fail per entry.

namespace lbern {

struct verify_options {
    std::string suite = "all"; // all | core | distribution | characters | special-values | padic
    long max_n = 0;            // > 0 caps the per-check index bounds (smoke runs)
    unsigned long seed = 20260818; // drives the randomized spot instances
};

struct check_result {
    std::string id;
    std::string suite;
    std::string anchor; // identity catalog tag
    bool passed = false;
    std::string detail;
};

inline const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> suites = {"core", "distribution", "characters", "special-values",
                                                    "padic"};
    return suites;
}

namespace detail {

inline void vcheck(bool ok, const std::string& msg) {
    if (!ok)
        throw error("mismatch: " + msg);
}

inline long vcap(long dflt, const verify_options& o) {
    return o.max_n > 0 && o.max_n < dflt ? o.max_n : dflt;
}

inline std::string count_note(long instances) {
    return std::to_string(instances) + " instances";
}

inline std::string residual_note(long instances, double max_residual, double tol) {
    std::ostringstream os;
    os.setf(std::ios::scientific);
    os.precision(2);
    os << instances << " instances, max residual " << max_residual << " (tol " << tol << ")";
    return os.str();
}

inline std::vector<lambda_descriptor> rational_samples() {
    return {lambda_descriptor::from_rational(rational(2)), lambda_descriptor::from_rational(rational::parse("3/2")),
            lambda_descriptor::from_rational(rational(-5))};
}

inline std::vector<lambda_descriptor> root_samples() {
    return {lambda_descriptor::root(2, 1), lambda_descriptor::root(3, 1), lambda_descriptor::root(4, 1)};
}

inline std::vector<rational> seeded_xs(unsigned long seed) {
    std::mt19937 gen(static_cast<std::mt19937::result_type>(seed));
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<rational> xs = {rational(0), rational::parse("1/2")};
    for (int i = 0; i < 2; ++i)
        xs.push_back(rational(Int(num(gen)), Int(den(gen))));
    return xs;
}

// ---- core ----

inline std::string check_worked_values(const verify_options&) {
    long count = 0;
    for (const auto& d : rational_samples()) {
        rational lam = d.rational_value();
        log_poly<rational> b0 = lb_number(d, 0);
        log_poly<rational> b1 = lb_number(d, 1);
        rational c = lam - rational(1);
        vcheck(b0 == log_poly<rational>(std::vector<rational>{rational(0), rational(1) / c}),
               "B_0 at " + lam.str());
        vcheck(b1 == log_poly<rational>(std::vector<rational>{rational(1) / c, -lam / (c * c)}),
               "B_1 at " + lam.str());
        count += 2;
    }
    log_poly<rational> b2 = lb_number(lambda_descriptor::from_rational(rational(2)), 2);
    vcheck(b2 == log_poly<rational>(std::vector<rational>{rational(-4), rational(6)}), "B_2(2) = -4 + 6L");
    return count_note(count + 1);
}

template <class K>
long triple_route_count(const lambda_scalar<K>& lam, long nmax, bool with_fe) {
    std::vector<log_poly<K>> table = lb_numbers(lam, nmax);
    truncated_series<K> series = expand_order_one(lam, rational(0), nmax);
    long count = 0;
    for (long n = 0; n <= nmax; ++n) {
        vcheck(table[static_cast<std::size_t>(n)] == series.coeff(n), "series route at n=" + std::to_string(n));
        if (with_fe) {
            vcheck(table[static_cast<std::size_t>(n)] == lb_number_via_fe(lam, n),
                   "Frobenius-Euler route at n=" + std::to_string(n));
        }
        ++count;
    }
    return count;
}

inline std::string check_triple_route(const verify_options& o) {
    long nmax = vcap(30, o);
    long count = 0;
    for (const auto& d : rational_samples())
        count += triple_route_count(as_rational_scalar(d), nmax, true);
    for (const auto& d : root_samples())
        count += triple_route_count(as_cyclotomic_scalar(d), nmax, true);
    count += triple_route_count(as_rational_scalar(lambda_descriptor::one()), nmax, false);
    return count_note(count) + " (lambda=1 has no Frobenius-Euler route)";
}

inline std::string check_classical_reduction(const verify_options& o) {
    long nmax = vcap(30, o);
    std::vector<rational> classical = detail::bernoulli_plus(nmax);
    lambda_scalar<rational> one = as_rational_scalar(lambda_descriptor::one());
    std::vector<log_poly<rational>> table = lb_numbers(one, nmax);
    for (long n = 0; n <= nmax; ++n) {
        rational expect = n == 1 ? -classical[1] : classical[static_cast<std::size_t>(n)];
        vcheck(table[static_cast<std::size_t>(n)] == log_poly<rational>(expect),
               "classical value at n=" + std::to_string(n));
    }
    return count_note(nmax + 1);
}

inline std::string check_root_mode(const verify_options& o) {
    long nmax = vcap(12, o);
    long count = 0;
    for (const auto& d : root_samples()) {
        lambda_scalar<cyclotomic> lam = as_cyclotomic_scalar(d);
        std::vector<log_poly<cyclotomic>> table = lb_numbers(lam, nmax);
        for (long n = 0; n <= nmax; ++n) {
            vcheck(table[static_cast<std::size_t>(n)].degree() <= 0, "log-free at n=" + std::to_string(n));
            ++count;
        }
        vcheck(table[0].constant_or(cyclotomic::zero(d.root_order())).is_zero(), "B_0 vanishes");
        cyclotomic b1 = table[1].constant_or(cyclotomic::zero(d.root_order()));
        vcheck((b1 * (lam.value - one_like(lam.value))).is_one(), "B_1 = 1/(lambda - 1)");
        count += 2;
    }
    return count_note(count);
}

// ---- distribution ----

template <class K>
long distribution_count(const lambda_scalar<K>& lam, long nmax, const std::vector<rational>& xs) {
    long count = 0;
    for (long d : {2L, 3L, 4L})
        for (const rational& x : xs) {
            std::vector<log_poly<K>> table = lb_numbers(lam, nmax);
            for (long n = 0; n <= nmax; ++n) {
                vcheck(lb_poly_from_table(table, x, n) == lb_distribution_rhs(lam, x, n, d),
                       "d=" + std::to_string(d) + " n=" + std::to_string(n));
                ++count;
            }
        }
    return count;
}

inline std::string check_distribution(const verify_options& o) {
    long nmax = vcap(12, o);
    std::vector<rational> xs = seeded_xs(o.seed);
    long count = 0;
    for (const auto& d : rational_samples())
        count += distribution_count(as_rational_scalar(d), nmax, xs);
    for (const auto& d : root_samples())
        count += distribution_count(as_cyclotomic_scalar(d), nmax, xs);
    count += distribution_count(as_rational_scalar(lambda_descriptor::one()), nmax, xs);
    return count_note(count);
}

template <class K>
long gauss_mult_count(const lambda_scalar<K>& lam, long nmax, bool rearranged) {
    long count = 0;
    for (long m : {2L, 3L})
        for (long n = 0; n <= nmax; ++n) {
            if (rearranged) {
                log_poly<K> lhs = lb_number(lam, n).scaled(rational(m)) -
                                  lb_number(lam.pow(m), n)
                                      .scaled(rational(Int(m)).pow(n))
                                      .scaled(lambda_bracket(lam, m));
                vcheck(lhs == mult_rearranged_rhs(lam, n, m),
                       "m=" + std::to_string(m) + " n=" + std::to_string(n));
            } else {
                vcheck(lb_number(lam, n).scaled(rational(m)) == gauss_mult_rhs(lam, n, m),
                       "m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
            ++count;
        }
    return count;
}

inline std::string check_gauss_mult(const verify_options& o) {
    long nmax = vcap(12, o);
    long count = 0;
    for (const auto& d : rational_samples())
        count += gauss_mult_count(as_rational_scalar(d), nmax, false);
    for (const auto& d : root_samples())
        count += gauss_mult_count(as_cyclotomic_scalar(d), nmax, false);
    count += gauss_mult_count(as_rational_scalar(lambda_descriptor::one()), nmax, false);
    return count_note(count);
}

inline std::string check_mult_rearranged(const verify_options& o) {
    long nmax = vcap(12, o);
    long count = 0;
    for (const auto& d : rational_samples())
        count += gauss_mult_count(as_rational_scalar(d), nmax, true);
    for (const auto& d : root_samples())
        count += gauss_mult_count(as_cyclotomic_scalar(d), nmax, true);
    count += gauss_mult_count(as_rational_scalar(lambda_descriptor::one()), nmax, true);
    return count_note(count);
}

inline std::string check_worked_distribution_instance(const verify_options&) {
    lambda_scalar<rational> lam = as_rational_scalar(lambda_descriptor::from_rational(rational(2)));
    log_poly<rational> expect(std::vector<rational>{rational(1), rational(-2)});
    vcheck(lb_poly(lam, rational(0), 1) == expect, "left side is 1 - 2L");
    vcheck(lb_distribution_rhs(lam, rational(0), 1, 2) == expect, "right side is 1 - 2L");
    return "both sides equal 1 - 2L at lambda=2, d=2, n=1";
}

template <class K>
long sums_of_powers_count(const lambda_scalar<K>& lam, long lmax, long kmax) {
    long count = 0;
    for (long l = 0; l <= lmax; ++l)
        for (long k = 2; k <= kmax; ++k) {
            vcheck(sum_of_powers_closed(lam, l, k) == sum_of_powers_direct(lam, l, k),
                   "l=" + std::to_string(l) + " k=" + std::to_string(k));
            ++count;
        }
    return count;
}

inline std::string check_sums_of_powers(const verify_options& o) {
    long lmax = vcap(8, o);
    long kmax = std::max<long>(2, vcap(25, o));
    long count = 0;
    for (const auto& d : rational_samples())
        count += sums_of_powers_count(as_rational_scalar(d), lmax, kmax);
    for (const auto& d : root_samples())
        count += sums_of_powers_count(as_cyclotomic_scalar(d), lmax, kmax);
    count += sums_of_powers_count(as_rational_scalar(lambda_descriptor::one()), lmax, kmax);

    // classical instance: B_4(3) - B_4 = 4 (1 + 8) = 36
    lambda_scalar<rational> one = as_rational_scalar(lambda_descriptor::one());
    log_poly<rational> diff = lb_poly(one, rational(3), 4) - lb_number(one, 4);
    vcheck(diff == log_poly<rational>(rational(36)), "B_4(3) - B_4 = 36");
    return count_note(count + 1);
}

template <class K>
long order_r_count(const lambda_scalar<K>& lam, long rmax, long nmax, const std::vector<rational>& xs) {
    long count = 0;
    for (long r = 1; r <= rmax; ++r)
        for (const rational& x : xs) {
            truncated_series<K> series = expand_order_r(lam, r, x, nmax);
            for (long n = 0; n <= nmax; ++n) {
                vcheck(lb_order_r(lam, r, x, n) == series.coeff(n),
                       "r=" + std::to_string(r) + " n=" + std::to_string(n));
                ++count;
            }
        }
    return count;
}

inline std::string check_order_r(const verify_options& o) {
    long nmax = vcap(10, o);
    std::vector<rational> xs = {rational(0), rational::parse("1/2")};
    long count = 0;
    for (const auto& d : rational_samples())
        count += order_r_count(as_rational_scalar(d), 4, nmax, xs);
    for (const auto& d : root_samples())
        count += order_r_count(as_cyclotomic_scalar(d), 3, nmax, xs);
    count += order_r_count(as_rational_scalar(lambda_descriptor::one()), 4, nmax, xs);
    return count_note(count);
}

template <class K>
long barnes_count(const lambda_scalar<K>& lam, long nmax) {
    const std::vector<std::vector<long>> weight_sets = {{1, 2}, {2, 3}, {1, 2, 3}};
    long count = 0;
    for (const auto& ws : weight_sets) {
        truncated_series<K> series = expand_barnes(lam, ws, nmax);
        for (long n = 0; n <= nmax; ++n) {
            vcheck(barnes_multiweight(lam, ws, n) == series.coeff(n), "n=" + std::to_string(n));
            ++count;
        }
    }
    return count;
}

inline std::string check_barnes(const verify_options& o) {
    long nmax = vcap(8, o);
    long count = 0;
    for (const auto& d : rational_samples())
        count += barnes_count(as_rational_scalar(d), nmax);
    count += barnes_count(as_cyclotomic_scalar(lambda_descriptor::root(3, 1)), nmax);
    count += barnes_count(as_rational_scalar(lambda_descriptor::one()), nmax);
    return count_note(count);
}

// ---- characters ----

inline std::vector<lambda_descriptor> character_lambdas() {
    return {lambda_descriptor::one(), lambda_descriptor::from_rational(rational(2)), lambda_descriptor::root(2, 1)};
}

inline std::string check_generalized_dual(const verify_options& o) {
    long nmax = vcap(12, o);
    long count = 0;
    for (long f : {3L, 4L, 5L, 8L})
        for (const auto& chi : dirichlet_character::characters_mod(f))
            for (const auto& lam : character_lambdas()) {
                truncated_series<cyclotomic> series = expand_generalized(chi, lam, nmax);
                for (long n = 0; n <= nmax; ++n) {
                    vcheck(generalized_bernoulli(chi, lam, n) == series.coeff(n),
                           "f=" + std::to_string(f) + " n=" + std::to_string(n));
                    ++count;
                }
            }
    return count_note(count);
}

inline std::string check_generalized_period_free(const verify_options& o) {
    long nmax = vcap(8, o);
    long count = 0;
    for (long f : {3L, 4L, 5L})
        for (const auto& chi : dirichlet_character::characters_mod(f))
            for (const auto& lam : character_lambdas())
                for (long n = 0; n <= nmax; ++n) {
                    log_poly<cyclotomic> base = generalized_bernoulli(chi, lam, n, f);
                    vcheck(base == generalized_bernoulli(chi, lam, n, 2 * f), "F=2f at n=" + std::to_string(n));
                    vcheck(base == generalized_bernoulli(chi, lam, n, 3 * f), "F=3f at n=" + std::to_string(n));
                    count += 2;
                }
    return count_note(count);
}

inline std::string check_generalized_classical(const verify_options&) {
    dirichlet_character c4 = dirichlet_character::characters_mod(4)[1];
    dirichlet_character c3 = dirichlet_character::characters_mod(3)[1];
    lambda_descriptor one = lambda_descriptor::one();
    auto as_rat = [](const log_poly<cyclotomic>& p) {
        cyclotomic c = p.scalar_value(cyclotomic::zero(1));
        vcheck(c.is_rational(), "value is rational");
        return c.rational_part();
    };
    vcheck(as_rat(generalized_bernoulli(c4, one, 1)) == rational::parse("-1/2"), "B_{1,chi_4} = -1/2");
    vcheck(as_rat(generalized_bernoulli(c3, one, 1)) == rational::parse("-1/3"), "B_{1,chi_3} = -1/3");
    vcheck(generalized_bernoulli(c4, one, 2).degree() < 0, "B_{2,chi_4} = 0");
    vcheck(as_rat(generalized_bernoulli(c4, one, 3)) == rational::parse("3/2"), "B_{3,chi_4} = 3/2");
    return "4 classical values";
}

inline std::string check_orthogonality(const verify_options&) {
    long count = 0;
    for (long f : {3L, 4L, 5L, 8L, 12L}) {
        auto chars = dirichlet_character::characters_mod(f);
        for (const auto& chi : chars) {
            cyclotomic row = cyclotomic::zero(chi.order());
            for (long a = 0; a < f; ++a)
                row = add_mixed(row, chi.value(a));
            vcheck(chi.is_trivial() ? row.rational_part() == rational(euler_phi(f)) : row.is_zero(),
                   "row sum mod " + std::to_string(f));
            ++count;
        }
        for (long a = 1; a < f; ++a) {
            cyclotomic col = cyclotomic::zero(1);
            for (const auto& chi : chars)
                col = add_mixed(col, chi.value(a));
            bool is_one_residue = a % f == 1 % f;
            vcheck(is_one_residue ? col.rational_part() == rational(euler_phi(f)) : col.is_zero(),
                   "column sum mod " + std::to_string(f) + " at a=" + std::to_string(a));
            ++count;
        }
    }
    return count_note(count);
}

// ---- special values ----

inline std::string check_hurwitz_interpolation(const verify_options& o) {
    long kmax = vcap(8, o);
    const std::vector<rational> xs = {rational(1), rational::parse("1/2"), rational::parse("3/10")};
    long count = 0;
    auto run = [&](auto lam) {
        for (const rational& x : xs) {
            // independent route: coefficients of the generating function itself
            auto series = expand_order_one(lam, x, kmax);
            for (long k = 1; k <= kmax; ++k) {
                auto expect = series.coeff(k).scaled(rational(Int(-1), Int(k)));
                vcheck(hurwitz_zeta_neg(lam, k, x) == expect, "k=" + std::to_string(k));
                ++count;
            }
        }
    };
    for (const auto& d : rational_samples())
        run(as_rational_scalar(d));
    for (const auto& d : root_samples())
        run(as_cyclotomic_scalar(d));
    run(as_rational_scalar(lambda_descriptor::one()));
    return count_note(count);
}

inline std::string check_zeta_numeric_bridge(const verify_options& o) {
    long kmax = std::min<long>(4, vcap(4, o));
    const double tol = 1e-10;
    const std::vector<rational> lams = {rational::parse("1/2"), rational::parse("3/10"), rational::parse("-2/5")};
    const std::vector<rational> xs = {rational(1), rational::parse("1/2")};
    double worst = 0;
    long count = 0;
    for (const rational& lq : lams) {
        lambda_scalar<rational> lam = as_rational_scalar(lambda_descriptor::from_rational(lq));
        std::complex<double> logl = std::log(std::complex<double>(lq.to_double(), 0.0));
        for (long k = 1; k <= kmax; ++k)
            for (const rational& x : xs) {
                std::complex<double> exact = eval_at_log(hurwitz_zeta_neg(lam, k, x), logl);
                std::complex<double> numeric =
                    zeta_series_numeric(std::complex<double>(lq.to_double(), 0.0),
                                        std::complex<double>(1.0 - static_cast<double>(k), 0.0), x.to_double(), tol);
                worst = std::max(worst, std::abs(exact - numeric));
                ++count;
            }
    }
    vcheck(worst <= tol, "numeric residual exceeds tolerance");
    return residual_note(count, worst, tol);
}

inline std::string check_theorem9_numeric(const verify_options&) {
    const double tol = 1e-9;
    const std::complex<double> svals[] = {{2.0, 0.0}, {2.5, 0.0}, {3.0, 1.0}};
    const std::complex<double> lam(0.5, 0.0);
    double worst = 0;
    long count = 0;
    for (long f : {3L, 4L, 5L}) {
        dirichlet_character chi = dirichlet_character::characters_mod(f)[1];
        std::complex<double> lam_f = std::pow(lam, static_cast<double>(f));
        for (const auto& s : svals) {
            std::complex<double> lhs = l_series_numeric(lam, s, chi, 1e-13);
            std::complex<double> rhs = 0;
            std::complex<double> lampow = 1; // lambda^a
            for (long a = 1; a <= f; ++a) {
                lampow *= lam;
                if (chi.value(a).is_zero())
                    continue;
                rhs += to_complex(chi.value(a)) * lampow *
                       zeta_series_numeric(lam_f, s, static_cast<double>(a) / static_cast<double>(f), 1e-13);
            }
            rhs *= std::pow(std::complex<double>(static_cast<double>(f), 0.0), -s);
            worst = std::max(worst, std::abs(lhs - rhs));
            ++count;
        }
    }
    vcheck(worst <= tol, "decomposition residual exceeds tolerance");
    return residual_note(count, worst, tol);
}

inline std::string check_theorem8_structural(const verify_options&) {
    const double tol = 1e-10;
    const std::complex<double> lam(0.5, 0.0);
    const std::complex<double> logl = std::log(lam);
    double worst = 0;
    long count = 0;
    for (long f : {3L, 5L}) {
        dirichlet_character chi = dirichlet_character::characters_mod(f)[1];
        lambda_descriptor half = lambda_descriptor::from_rational(rational::parse("1/2"));
        for (long k = 1; k <= 3; ++k) {
            std::complex<double> exact = eval_at_log(l_value_neg(chi, half, k), logl);
            std::complex<double> series =
                l_series_numeric(lam, std::complex<double>(1.0 - static_cast<double>(k), 0.0), chi, 1e-13);
            worst = std::max(worst, std::abs(exact - series));
            ++count;
        }
    }
    vcheck(worst <= tol, "structural residual exceeds tolerance");
    return residual_note(count, worst, tol);
}

inline std::string check_l_value_partial_sum(const verify_options& o) {
    long nmax = vcap(5, o);
    const std::vector<lambda_descriptor> lams = {lambda_descriptor::one(), lambda_descriptor::root(2, 1),
                                                 lambda_descriptor::root(3, 1)};
    long count = 0;
    for (long f : {3L, 4L, 5L})
        for (const auto& chi : dirichlet_character::characters_mod(f)) {
            if (chi.is_trivial() && f > 3)
                continue;
            for (const auto& lam : lams)
                for (long n = 1; n <= nmax; ++n)
                    for (long F : {f, 2 * f}) {
                        cyclotomic sum = cyclotomic::zero(1);
                        for (long a = 1; a <= F; ++a) {
                            if (chi.value(a).is_zero())
                                continue;
                            sum = add_mixed(sum, mul_mixed(chi.value(a), partial_zeta_neg(lam, n, a, F)));
                        }
                        cyclotomic expect = l_value_neg(chi, lam, n).scalar_value(cyclotomic::zero(1));
                        vcheck(add_mixed(sum, -expect).is_zero(),
                               "f=" + std::to_string(f) + " n=" + std::to_string(n) + " F=" + std::to_string(F));
                        ++count;
                    }
        }
    return count_note(count);
}

inline std::string check_multiple_zeta_dual(const verify_options& o) {
    long mmax = vcap(6, o);
    long count = 0;
    for (long r = 1; r <= 4; ++r)
        for (long m = 0; m <= mmax; ++m) {
            vcheck(multiple_zeta_neg(r, m) == multiple_zeta_neg_via_zeta(r, m),
                   "r=" + std::to_string(r) + " m=" + std::to_string(m));
            ++count;
        }
    vcheck(multiple_zeta_neg(1, 1) == rational::parse("-1/12"), "zeta_1(-1) = -1/12");
    vcheck(multiple_zeta_neg(2, 1) == rational::parse("1/12"), "zeta_2(-1) = 1/12");
    vcheck(multiple_zeta_neg(1, 0) == rational::parse("-1/2"), "zeta(0) = -1/2");
    return count_note(count + 3);
}

inline std::string check_d1_defect(const verify_options&) {
    // lambda = zeta_2, r = 1, m = 1: the (D1) right side evaluates to -1/4,
    // which differs from the lambda-free zeta_1(-1) = -1/12 — the documented
    // lambda-dependence defect.  The lambda -> 1 degeneration does hold.
    lambda_scalar<cyclotomic> neg = as_cyclotomic_scalar(lambda_descriptor::root(2, 1));
    log_poly<cyclotomic> rhs = multiple_zeta_twisted_rhs(neg, 1, 1);
    cyclotomic val = rhs.scalar_value(cyclotomic::zero(2));
    vcheck(val.is_rational() && val.rational_part() == rational::parse("-1/4"), "defect instance is -1/4");
    vcheck(val.rational_part() != multiple_zeta_neg(1, 1), "defect differs from the lambda-free value");

    lambda_scalar<rational> one = as_rational_scalar(lambda_descriptor::one());
    long count = 2;
    for (long r = 1; r <= 3; ++r)
        for (long m = 0; m <= 4; ++m) {
            log_poly<rational> collapsed = multiple_zeta_twisted_rhs(one, r, m);
            vcheck(collapsed == log_poly<rational>(multiple_zeta_neg(r, m)),
                   "degeneration r=" + std::to_string(r) + " m=" + std::to_string(m));
            ++count;
        }
    return count_note(count) + " (documented defect reproduced)";
}

inline std::string check_theorem12_degeneration(const verify_options&) {
    log_shift_report exact = log_shift_expansion(lambda_descriptor::one(), 1, rational(0), 2, 3);
    for (double r : exact.residual_order_prefactor)
        vcheck(std::abs(r) <= 1e-14, "lambda=1 residual should vanish");
    log_shift_report probe =
        log_shift_expansion(lambda_descriptor::from_rational(rational::parse("101/100")), 2, rational(3), 1, 8);
    for (double r : probe.residual_order_prefactor)
        vcheck(std::isfinite(r), "finite residuals");
    for (double r : probe.residual_argument_prefactor)
        vcheck(std::isfinite(r), "finite residuals");
    return "exploratory: lambda=1 degenerates exactly; residual sequences reported, no convergence asserted";
}

// ---- padic ----

inline std::string check_teichmuller_log(const verify_options&) {
    vcheck(teichmuller(2, 5, 2).residue() == 7, "omega(2) = 7 mod 25");
    vcheck(padic_log(rational(6), 5, 2).residue() == 5, "log_5 6 = 5 mod 25");
    long count = 2;
    for (long p : {5L, 7L}) {
        for (long a = 1; a < p; ++a) {
            padic_int t = teichmuller(a, p, 6);
            vcheck(equal_to_precision(t.pow(p - 1), padic_int::from_rational(rational(1), p, 6)),
                   "root of unity at a=" + std::to_string(a));
            vcheck((t - padic_int::from_rational(rational(a), p, 6)).valuation() >= 1,
                   "congruent to a at a=" + std::to_string(a));
            count += 2;
        }
        vcheck(equal_to_precision(teichmuller(2, p, 6) * teichmuller(3, p, 6), teichmuller(6, p, 6)),
               "multiplicativity");
        padic_int lhs = padic_log(rational(1 + p), p, 8) * padic_int::from_rational(rational(2), p, 8);
        vcheck(equal_to_precision(lhs, padic_log((rational(1 + p)).pow(2), p, 8)), "log homomorphism");
        count += 2;
    }
    return count_note(count);
}

inline std::string check_witt_volkenborn(const verify_options& o) {
    const long p = 5;
    const long prec = 8;
    const long mmax = vcap(6, o);
    long count = 0;
    for (long n = 1; n <= 3; ++n) {
        rational target = lb_number(lambda_descriptor::one(), n).scalar_value(rational(0));
        padic_int tv = padic_int::from_rational(target, p, prec);
        long prev = 0;
        for (long M = 1; M <= mmax; ++M) {
            long d = agree_digits(padic_int::from_rational(volkenborn_sum(rational(1), rational(0), n, p, M), p, prec), tv);
            vcheck(d >= prev, "nondecreasing at lambda=1, n=" + std::to_string(n));
            prev = d;
            ++count;
        }
        vcheck(prev >= mmax - 2, "final agreement depth at lambda=1");
    }
    lambda_descriptor d6 = lambda_descriptor::from_rational(rational(6));
    padic_int l6 = padic_log(rational(6), p, prec + 2);
    for (long n = 1; n <= 3; ++n) {
        padic_int tv = eval_at_log(lb_number(d6, n), l6, prec + 2);
        long prev = 0;
        for (long M = 1; M <= mmax; ++M) {
            long d = agree_digits(padic_int::from_rational(volkenborn_sum(rational(6), rational(0), n, p, M), p, prec), tv);
            vcheck(d >= prev, "nondecreasing at lambda=6, n=" + std::to_string(n));
            prev = d;
            ++count;
        }
        vcheck(prev >= mmax - 2, "final agreement depth at lambda=6");
    }
    return count_note(count) + " over Riemann-sum depth M = 1.." + std::to_string(mmax);
}

inline std::string check_hp_dual(const verify_options&) {
    long count = 0;
    {
        const long p = 5, prec = 8;
        const lambda_descriptor lams[] = {lambda_descriptor::one(), lambda_descriptor::root(2, 1),
                                          lambda_descriptor::root(4, 1),
                                          lambda_descriptor::from_rational(rational(6))};
        const long probes[][2] = {{1, 5}, {2, 5}, {3, 10}};
        for (const auto& lam : lams)
            for (const auto& pb : probes)
                for (long n : {1L, 2L, 3L, 5L}) {
                    vcheck(equal_to_precision(h_p_lambda_neg(lam, n, pb[0], pb[1], p, prec),
                                              h_p_lambda_neg_jsum(lam, n, pb[0], pb[1], p, prec)),
                           "p=5 a=" + std::to_string(pb[0]) + " n=" + std::to_string(n));
                    ++count;
                }
    }
    {
        const long p = 7, prec = 6;
        const lambda_descriptor lams[] = {lambda_descriptor::one(), lambda_descriptor::root(3, 1),
                                          lambda_descriptor::from_rational(rational(8))};
        const long probes[][2] = {{1, 7}, {5, 14}};
        for (const auto& lam : lams)
            for (const auto& pb : probes)
                for (long n : {1L, 2L, 4L}) {
                    vcheck(equal_to_precision(h_p_lambda_neg(lam, n, pb[0], pb[1], p, prec),
                                              h_p_lambda_neg_jsum(lam, n, pb[0], pb[1], p, prec)),
                           "p=7 a=" + std::to_string(pb[0]) + " n=" + std::to_string(n));
                    ++count;
                }
    }
    return count_note(count) + " (exact agreement)";
}

inline std::string check_hp_partial_link(const verify_options&) {
    const long p = 5, prec = 8;
    const lambda_descriptor lams[] = {lambda_descriptor::one(), lambda_descriptor::root(2, 1)};
    const long probes[][2] = {{1, 5}, {2, 5}, {3, 10}};
    long count = 0;
    for (const auto& lam : lams)
        for (const auto& pb : probes)
            for (long n = 1; n <= 4; ++n) {
                padic_int expected = embed_padic(partial_zeta_neg(lam, n, pb[0], pb[1]), p, prec) *
                                     teichmuller(pb[0], p, prec).pow(-n);
                vcheck(equal_to_precision(h_p_lambda_neg(lam, n, pb[0], pb[1], p, prec), expected),
                       "a=" + std::to_string(pb[0]) + " n=" + std::to_string(n));
                ++count;
            }
    return count_note(count);
}

inline std::string check_lp_dual(const verify_options&) {
    const long c = 2; // documented precision-loss constant
    long count = 0;
    struct setup {
        long p;
        long prec;
        rational base;
    };
    const setup setups[] = {{5, 8, rational(6)}, {7, 6, rational(8)}};
    for (const auto& s : setups) {
        const dirichlet_character chis[] = {dirichlet_character::trivial(1),
                                            dirichlet_character::characters_mod(3)[1],
                                            dirichlet_character::characters_mod(4)[1]};
        const lambda_descriptor lams[] = {lambda_descriptor::one(), lambda_descriptor::from_rational(s.base),
                                          lambda_descriptor::root(2, 1)};
        for (const auto& chi : chis)
            for (const auto& lam : lams)
                for (long n : {1L, 2L, 4L, 5L}) {
                    long d = agree_digits(l_p_lambda_neg(chi, lam, n, s.p, s.prec),
                                          l_p_lambda_neg_euler(chi, lam, n, s.p, s.prec));
                    vcheck(d >= s.prec - c,
                           "p=" + std::to_string(s.p) + " f=" + std::to_string(chi.modulus()) +
                               " n=" + std::to_string(n) + " agreement " + std::to_string(d));
                    ++count;
                }
    }
    return count_note(count) + " mod p^(N-" + std::to_string(c) + ")";
}

inline std::string check_kubota_leopoldt_instance(const verify_options&) {
    padic_int a = l_p_lambda_neg(dirichlet_character::trivial(1), lambda_descriptor::one(), 4, 5, 8);
    vcheck(equal_to_precision(a, padic_int::from_rational(rational::parse("-31/30"), 5, 8)),
           "sum route hits -31/30");
    padic_int b = l_p_lambda_neg_euler(dirichlet_character::trivial(1), lambda_descriptor::one(), 4, 5, 8);
    vcheck(agree_digits(b, padic_int::from_rational(rational::parse("-31/30"), 5, 8)) >= 6,
           "Euler route hits -31/30");
    return "L_p(-3, trivial) = -(1 - 5^3) B_4 / 4 = -31/30 at p=5";
}

struct check_def {
    const char* id;
    const char* suite;
    const char* anchor;
    std::string (*fn)(const verify_options&);
};

inline const std::vector<check_def>& check_registry() {
    static const std::vector<check_def> defs = {
        {"worked-values", "core", "Display after Eq (3)", check_worked_values},
        {"triple-route", "core", "Theorem 1", check_triple_route},
        {"classical-reduction", "core", "Eq (3a)", check_classical_reduction},
        {"root-mode", "core", "Eq (4), T_p remark", check_root_mode},
        {"distribution", "distribution", "Theorem 3 / Eq (7)", check_distribution},
        {"distribution-instance", "distribution", "Theorem 3 / Eq (7), worked instance",
         check_worked_distribution_instance},
        {"gauss-multiplication", "distribution", "Corollary 1", check_gauss_mult},
        {"multiplication-rearranged", "distribution", "Theorem 4 / Eq (9)", check_mult_rearranged},
        {"sums-of-powers", "distribution", "Theorem 5 / Eq (10)", check_sums_of_powers},
        {"order-r-series", "distribution", "Eq (15)", check_order_r},
        {"barnes-multiweight", "distribution", "Eq (16)", check_barnes},
        {"generalized-dual-route", "characters", "Eq (12a)/(12c)", check_generalized_dual},
        {"generalized-period-free", "characters", "Eq (12a), F-independence", check_generalized_period_free},
        {"generalized-classical", "characters", "Eq (12c), classical instances", check_generalized_classical},
        {"orthogonality", "characters", "Section 5, character sums", check_orthogonality},
        {"hurwitz-interpolation", "special-values", "Theorem 7 / Eq (12)", check_hurwitz_interpolation},
        {"zeta-numeric-bridge", "special-values", "Definition 1 / Theorem 6", check_zeta_numeric_bridge},
        {"theorem9-decomposition", "special-values", "Theorem 9", check_theorem9_numeric},
        {"theorem8-structural", "special-values", "Theorem 8 / Eq (13)", check_theorem8_structural},
        {"l-value-partial-sum", "special-values", "Theorem 10 / Eq (18)", check_l_value_partial_sum},
        {"multiple-zeta-dual", "special-values", "Theorem 11 (D2)", check_multiple_zeta_dual},
        {"d1-lambda-defect", "special-values", "Theorem 11 (D1), defect", check_d1_defect},
        {"theorem12-degeneration", "special-values", "Theorem 12, degeneration", check_theorem12_degeneration},
        {"teichmuller-log", "padic", "Section 7, Teichmuller and log_p", check_teichmuller_log},
        {"witt-volkenborn", "padic", "Theorem 2 / Eq (6)", check_witt_volkenborn},
        {"h-p-dual-route", "padic", "Section 7, H_p displays", check_hp_dual},
        {"h-p-partial-link", "padic", "Section 7, H_p vs Eq (18)", check_hp_partial_link},
        {"l-p-dual-route", "padic", "Section 7, L_p displays", check_lp_dual},
        {"kubota-leopoldt-instance", "padic", "Section 7, L_p instance", check_kubota_leopoldt_instance},
    };
    return defs;
}

} // namespace detail

inline std::vector<check_result> run_verification(const verify_options& options) {
    const auto& suites = verification_suites();
    if (options.suite != "all" && std::find(suites.begin(), suites.end(), options.suite) == suites.end())
        throw invalid_parameter("verify: unknown suite '" + options.suite + "'");
    std::vector<check_result> results;
    for (const auto& def : detail::check_registry()) {
        if (options.suite != "all" && options.suite != def.suite)
            continue;
        check_result res;
        res.id = def.id;
        res.suite = def.suite;
        res.anchor = def.anchor;
        try {
            res.detail = def.fn(options);
            res.passed = true;
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = e.what();
        }
        results.push_back(std::move(res));
    }
    return results;
}

inline bool all_passed(const std::vector<check_result>& results) {
    return std::all_of(results.begin(), results.end(), [](const check_result& r) { return r.passed; });
}

} // namespace lbern
