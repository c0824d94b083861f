// Computes twisted Bernoulli values three independent ways and prints the
// exact results, demonstrating the descriptor/scalar split and the formal
// log-polynomial representation.

#include <lbern/lbern.hpp>

#include <cstdio>

using namespace lbern;

int main() {
    // lambda = 2: values are polynomials in L = log 2.
    lambda_scalar<rational> two = as_rational_scalar(lambda_descriptor::from_rational(rational(2)));
    std::printf("lambda = 2\n");
    for (long n = 0; n <= 4; ++n) {
        log_poly<rational> recurrence = lb_number(two, n);
        log_poly<rational> via_fe = lb_number_via_fe(two, n);
        log_poly<rational> via_series = expand_order_one(two, rational(0), 4).coeff(n);
        std::printf("  B_%ld = %s  (three routes agree: %s)\n", n, recurrence.str().c_str(),
                    recurrence == via_fe && recurrence == via_series ? "yes" : "NO");
    }

    // lambda = zeta_4: the log term vanishes and values live in Q(zeta_4).
    lambda_scalar<cyclotomic> root = as_cyclotomic_scalar(lambda_descriptor::root(4, 1));
    std::printf("lambda = zeta_4\n");
    for (long n = 0; n <= 4; ++n)
        std::printf("  B_%ld = %s\n", n, lb_number(root, n).str().c_str());

    // Appell polynomials and the distribution identity at a sample point.
    rational x(1, 2);
    log_poly<rational> poly = lb_poly(two, x, 3);
    log_poly<rational> rhs = lb_distribution_rhs(two, x, 3, 2);
    std::printf("B_3(2; 1/2) = %s, distribution right side %s\n", poly.str().c_str(),
                poly == rhs ? "matches" : "DIFFERS");

    // Exact values serialize to JSON strings and re-parse without loss.
    json encoded = to_json(poly);
    std::printf("as JSON: %s\n", encoded.dump().c_str());
    std::printf("round-trips exactly: %s\n", rational_poly_from_json(encoded) == poly ? "yes" : "NO");
    return 0;
}
