// Shows the p-adic side of the library: Teichmuller lifts, the p-adic
// logarithm, Volkenborn-style Riemann sums converging to a twisted Bernoulli
// number, and an interpolated L-value matching its exact counterpart.

#include <lbern/lbern.hpp>

#include <cstdio>

using namespace lbern;

int main() {
    const long p = 5;
    const long prec = 8;

    // Teichmuller representatives: the unique (p-1)-st root of unity
    // congruent to a mod p.
    for (long a = 1; a < p; ++a)
        std::printf("omega(%ld) mod %ld^%ld = %s\n", a, p, prec,
                    teichmuller(a, p, prec).residue().str().c_str());

    // log_p extends to rationals congruent to 1 mod p; log_p(6) then follows
    // from the Fermat quotient construction.
    padic_int l6 = padic_log(rational(6), p, prec);
    std::printf("log_5(6) mod 5^%ld = %s\n", l6.guaranteed(), l6.residue().str().c_str());

    // Riemann sums over Z_p at depth p^M approach B_2(6) 5-adically: each
    // extra level pins down roughly one more digit.
    lambda_descriptor six = lambda_descriptor::from_rational(rational(6));
    padic_int target = eval_at_log(lb_number(six, 2), padic_log(rational(6), p, prec + 2), prec + 2);
    std::printf("B_2(6) evaluated at L = log_5(6): %s\n", target.str().c_str());
    for (long M = 1; M <= 6; ++M) {
        rational s = volkenborn_sum(rational(6), rational(0), 2, p, M);
        padic_int approx = padic_int::from_rational(s, p, prec);
        std::printf("  depth M = %ld: agrees with target to %ld digits\n", M,
                    agree_digits(approx, target));
    }

    // The interpolated L-function at a negative integer matches the exact
    // twisted value after removing the Euler factor at p.
    dirichlet_character trivial = dirichlet_character::trivial(1);
    lambda_descriptor one = lambda_descriptor::one();
    padic_int lp = l_p_lambda_neg(trivial, one, 4, p, prec);
    std::printf("L_p(-3, trivial) mod 5^%ld = %s\n", lp.guaranteed(), lp.residue().str().c_str());
    return 0;
}
