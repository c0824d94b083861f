// Attaches Dirichlet characters to twisted Bernoulli numbers and evaluates
// the associated L-function at negative integers, exactly.

#include <lbern/lbern.hpp>

#include <cstdio>

using namespace lbern;

int main() {
    // The nontrivial character mod 4 takes values 1, -1 on units.
    dirichlet_character chi = dirichlet_character::characters_mod(4)[1];
    std::printf("character mod %ld, order %ld, conductor %ld\n", chi.modulus(), chi.order(),
                chi.conductor());

    // Character-twisted Bernoulli numbers at lambda = 1 (values in Q(zeta_4),
    // here all rational since chi is quadratic).
    lambda_descriptor one = lambda_descriptor::one();
    for (long n = 0; n <= 6; ++n) {
        log_poly<cyclotomic> bn = generalized_bernoulli(chi, one, n);
        std::printf("  B_%ld,chi = %s\n", n, bn.str().c_str());
    }

    // L(-k, chi) = -B_{k+1,chi} / (k+1); for this chi the values interpolate
    // the Dirichlet beta function.
    for (long k = 0; k <= 4; ++k) {
        log_poly<cyclotomic> val = l_value_neg(chi, one, k + 1);
        std::printf("L(%ld, chi) = %s\n", -k, val.str().c_str());
    }

    // The period used to compute B_{n,chi} does not matter: any multiple of
    // the modulus gives the same value.
    log_poly<cyclotomic> at_f = generalized_bernoulli(chi, one, 5, 4);
    log_poly<cyclotomic> at_3f = generalized_bernoulli(chi, one, 5, 12);
    std::printf("period independence (F = 4 vs F = 12): %s\n",
                at_f == at_3f ? "agrees" : "DIFFERS");
    return 0;
}
