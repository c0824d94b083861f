// Command-line surface: exact tables, identity-verification suites, numeric
// zeta reports, and p-adic computations, with machine-readable output.
//
// Exit codes: 0 success, 1 verification/tolerance failure, 2 malformed
// input, 3 mode violation (a structurally valid request the chosen value
// domain cannot satisfy).

#include <CLI11.hpp>

#include <lbern/lbern.hpp>

#include <algorithm>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace {

using lbern::json;
using lbern::rational;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_malformed = 2;
constexpr int exit_mode = 3;

struct cli_options {
    std::string lambda = "1";
    std::string x = "0";
    std::string zeta_x = "1";
    std::string weights = "1,2";
    std::string format = "text";
    std::string suite = "all";
    long max_n = 0;
    long r = 1;
    long m = 0;
    long k = 1;
    long modulus = 1;
    long index = 0;
    bool numeric = false;
    double tol = 1e-10;
    long p = 5;
    long prec = 8;
    long a = 1;
    long big_f = 0; // 0 -> defaulted per command
    long n = 1;
    long steps = 3;
    unsigned long seed = 20260818;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    if (z.imag() == 0.0)
        return format_double(z.real());
    return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + format_double(std::abs(z.imag())) + "i";
}

json complex_json(std::complex<double> z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// log(lambda) on the principal branch, for optional numeric row evaluation.
std::complex<double> numeric_log(const lbern::lambda_descriptor& d) {
    if (!d.is_rational_mode())
        return {0.0, 0.0}; // lambda = 1 or a root of unity: no log term
    std::complex<double> base(d.rational_base().to_double(), 0.0);
    return static_cast<double>(d.log_mult()) * std::log(base);
}

struct table_rows {
    std::vector<long> ns;
    std::vector<json> exact;              // L_coeffs arrays
    std::vector<std::string> text;        // rendered polynomials
    std::vector<std::complex<double>> nums; // filled when numeric output is on
};

template <class K>
table_rows make_rows(const std::vector<std::pair<long, lbern::log_poly<K>>>& data, bool numeric,
                     std::complex<double> logl) {
    table_rows out;
    for (const auto& [idx, poly] : data) {
        out.ns.push_back(idx);
        out.exact.push_back(lbern::to_json(poly).at("L_coeffs"));
        out.text.push_back(poly.str());
        if (numeric)
            out.nums.push_back(lbern::eval_at_log(poly, logl));
    }
    return out;
}

void emit(const std::string& s) {
    std::fwrite(s.data(), 1, s.size(), stdout);
}

// Shared renderer for all table commands; `header` carries the echoed
// configuration in insertion order and lands at the top of the JSON document.
void render_table(const cli_options& o, json header, const table_rows& rows) {
    std::string out;
    if (o.format == "json") {
        json doc = std::move(header);
        json arr = json::array();
        for (std::size_t i = 0; i < rows.ns.size(); ++i) {
            json row{{"n", rows.ns[i]}, {"L_coeffs", rows.exact[i]}};
            if (!rows.nums.empty())
                row["numeric"] = complex_json(rows.nums[i]);
            arr.push_back(std::move(row));
        }
        doc["rows"] = std::move(arr);
        out = doc.dump(2) + "\n";
    } else if (o.format == "csv") {
        out = rows.nums.empty() ? "n,value\n" : "n,value,numeric\n";
        for (std::size_t i = 0; i < rows.ns.size(); ++i) {
            out += std::to_string(rows.ns[i]) + "," + csv_quote(rows.text[i]);
            if (!rows.nums.empty())
                out += "," + csv_quote(format_complex(rows.nums[i]));
            out += '\n';
        }
    } else {
        for (std::size_t i = 0; i < rows.ns.size(); ++i) {
            out += "n=" + std::to_string(rows.ns[i]) + ": " + rows.text[i];
            if (!rows.nums.empty())
                out += "  ~= " + format_complex(rows.nums[i]);
            out += '\n';
        }
    }
    emit(out);
}

std::vector<long> parse_weights(const std::string& s) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        rational w = rational::parse(tok);
        if (!w.is_integer())
            throw lbern::outside_domain("barnes: weights must be integers");
        out.push_back(static_cast<long>(w.num()));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

json character_json(const lbern::dirichlet_character& chi) {
    json values = json::array();
    for (long a = 0; a < chi.modulus(); ++a)
        values.push_back(lbern::to_json(chi.value(a)));
    return json{{"modulus", chi.modulus()},
                {"index", chi.index()},
                {"order", chi.order()},
                {"conductor", chi.conductor()},
                {"values", std::move(values)}};
}

lbern::dirichlet_character character_at(long modulus, long index) {
    auto chars = lbern::dirichlet_character::characters_mod(modulus);
    if (index < 0 || index >= static_cast<long>(chars.size()))
        throw lbern::invalid_parameter("character index out of range for modulus " + std::to_string(modulus));
    return chars[static_cast<std::size_t>(index)];
}

// ---- table commands ----

template <class K>
std::vector<std::pair<long, lbern::log_poly<K>>> build_rows(const std::string& kind, const cli_options& o,
                                                            const lbern::lambda_descriptor& d, const rational& x) {
    using lbern::log_poly;
    lbern::lambda_scalar<K> lam = lbern::as_scalar<K>(d);
    std::vector<std::pair<long, log_poly<K>>> rows;
    if (kind == "bern") {
        auto table = lbern::lb_numbers(lam, o.max_n);
        for (long n = 0; n <= o.max_n; ++n)
            rows.emplace_back(n, table[static_cast<std::size_t>(n)]);
    } else if (kind == "bern-poly") {
        auto table = lbern::lb_numbers(lam, o.max_n);
        for (long n = 0; n <= o.max_n; ++n)
            rows.emplace_back(n, lbern::lb_poly_from_table(table, x, n));
    } else if (kind == "bern-order-r") {
        auto series = lbern::expand_order_r(lam, o.r, x, o.max_n);
        for (long n = 0; n <= o.max_n; ++n)
            rows.emplace_back(n, series.coeff(n));
    } else if (kind == "barnes") {
        auto series = lbern::expand_barnes(lam, parse_weights(o.weights), o.max_n);
        for (long n = 0; n <= o.max_n; ++n)
            rows.emplace_back(n, series.coeff(n));
    } else if (kind == "fe") {
        auto table = lbern::fe_numbers(lam.value, o.max_n);
        for (long n = 0; n <= o.max_n; ++n)
            rows.emplace_back(n, log_poly<K>(table[static_cast<std::size_t>(n)]));
    } else { // zeta-neg
        auto table = lbern::lb_numbers(lam, std::max<long>(o.max_n, 1));
        for (long k = 1; k <= o.max_n; ++k)
            rows.emplace_back(k, lbern::lb_poly_from_table(table, x, k).scaled(rational(lbern::Int(-1), lbern::Int(k))));
    }
    return rows;
}

int run_scalar_table(const std::string& kind, const cli_options& o) {
    lbern::lambda_descriptor d = lbern::parse_lambda_spec(o.lambda);
    rational x = rational::parse(o.x);
    json header{{"command", kind}, {"lambda", o.lambda}};
    if (kind == "bern-poly" || kind == "bern-order-r" || kind == "zeta-neg")
        header["x"] = x.str();
    if (kind == "bern-order-r")
        header["r"] = o.r;
    if (kind == "barnes")
        header["weights"] = o.weights;
    table_rows rows;
    if (d.is_root())
        rows = make_rows(build_rows<lbern::cyclotomic>(kind, o, d, x), o.numeric, numeric_log(d));
    else
        rows = make_rows(build_rows<rational>(kind, o, d, x), o.numeric, numeric_log(d));
    render_table(o, std::move(header), rows);
    return exit_ok;
}

int run_character_table(const std::string& kind, const cli_options& o) {
    lbern::lambda_descriptor d = lbern::parse_lambda_spec(o.lambda);
    lbern::dirichlet_character chi = character_at(o.modulus, o.index);
    std::vector<std::pair<long, lbern::log_poly<lbern::cyclotomic>>> data;
    if (kind == "gen-bern") {
        auto series = lbern::expand_generalized(chi, d, o.max_n);
        for (long n = 0; n <= o.max_n; ++n)
            data.emplace_back(n, series.coeff(n));
    } else { // l-neg
        for (long k = 1; k <= o.max_n; ++k)
            data.emplace_back(k, lbern::l_value_neg(chi, d, k));
    }
    json header{{"command", kind}, {"lambda", o.lambda}, {"character", character_json(chi)}};
    render_table(o, std::move(header), make_rows(data, o.numeric, numeric_log(d)));
    return exit_ok;
}

int run_multi_zeta(const cli_options& o) {
    rational v = lbern::multiple_zeta_neg(o.r, o.m);
    if (o.format == "json") {
        json doc{{"command", "multi-zeta"}, {"r", o.r}, {"m", o.m}, {"value", v.str()}};
        emit(doc.dump(2) + "\n");
    } else if (o.format == "csv") {
        emit("r,m,value\n" + std::to_string(o.r) + "," + std::to_string(o.m) + "," + csv_quote(v.str()) + "\n");
    } else {
        emit(v.str() + "\n");
    }
    return exit_ok;
}

// ---- numeric zeta report ----

int run_zeta(const cli_options& o) {
    lbern::lambda_descriptor d = lbern::parse_lambda_spec(o.lambda);
    rational x = rational::parse(o.zeta_x);
    if (!d.is_rational_mode())
        throw lbern::non_convergent("zeta: the numeric series needs rational lambda with 0 < |lambda| < 1");
    lbern::log_poly<rational> exact = lbern::hurwitz_zeta_neg(lbern::as_rational_scalar(d), o.k, x);
    std::complex<double> lam(d.rational_value().to_double(), 0.0);
    std::complex<double> logl = numeric_log(d);
    std::complex<double> exact_num = lbern::eval_at_log(exact, logl);
    std::complex<double> s(1.0 - static_cast<double>(o.k), 0.0);
    std::complex<double> series = lbern::zeta_series_numeric(lam, s, x.to_double(), o.tol);
    double residual = std::abs(exact_num - series);
    json doc{{"command", "zeta"},
             {"lambda", o.lambda},
             {"k", o.k},
             {"x", x.str()},
             {"s", s.real()},
             {"exact", lbern::to_json(exact)},
             {"exact_numeric", complex_json(exact_num)},
             {"series_numeric", complex_json(series)},
             {"residual", residual},
             {"tolerance", o.tol},
             {"within_tolerance", residual <= o.tol}};
    emit(doc.dump(2) + "\n");
    return residual <= o.tol ? exit_ok : exit_fail;
}

// ---- verification ----

int run_verify(const cli_options& o) {
    lbern::verify_options vo;
    vo.suite = o.suite;
    vo.max_n = o.max_n;
    vo.seed = o.seed;
    std::vector<lbern::check_result> results = lbern::run_verification(vo);
    bool ok = lbern::all_passed(results);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(json{{"id", r.id},
                               {"suite", r.suite},
                               {"anchor", r.anchor},
                               {"passed", r.passed},
                               {"detail", r.detail}});
        json doc{{"command", "verify"}, {"suite", o.suite}, {"results", std::move(arr)}, {"all_passed", ok}};
        emit(doc.dump(2) + "\n");
    } else {
        std::string out;
        std::size_t width = 0;
        for (const auto& r : results)
            width = std::max(width, r.anchor.size());
        long passed = 0;
        for (const auto& r : results) {
            out += r.anchor + (r.passed ? " ✓" : " ✗");
            out.append(width - r.anchor.size() + 2, ' ');
            out += "[" + r.suite + "/" + r.id + "] " + r.detail + "\n";
            if (r.passed)
                ++passed;
        }
        out += std::to_string(passed) + "/" + std::to_string(results.size()) + " identity checks passed\n";
        emit(out);
    }
    return ok ? exit_ok : exit_fail;
}

// ---- p-adic commands ----

int run_padic(const std::string& sub, const cli_options& o) {
    if (sub == "teichmuller") {
        emit(lbern::to_json(lbern::teichmuller(o.a, o.p, o.prec)).dump(2) + "\n");
        return exit_ok;
    }
    if (sub == "log") {
        lbern::lambda_descriptor d = lbern::parse_lambda_spec(o.lambda);
        lbern::padic_int v = lbern::padic_int::zero(o.p, o.prec); // lambda = 1 or a root of unity
        if (d.is_rational_mode()) {
            v = lbern::padic_log(d.rational_base(), o.p, o.prec);
            if (d.log_mult() != 1)
                v = v * lbern::padic_int::from_rational(rational(d.log_mult()), o.p, o.prec);
        }
        emit(lbern::to_json(v).dump(2) + "\n");
        return exit_ok;
    }
    if (sub == "volkenborn") {
        lbern::lambda_descriptor d = lbern::parse_lambda_spec(o.lambda);
        if (!d.is_rational_mode() && !d.is_one())
            throw lbern::outside_domain("volkenborn: lambda must be 1 or rational");
        rational lam = d.is_one() ? rational(1) : d.rational_value();
        rational x = rational::parse(o.x);
        std::vector<rational> sums;
        for (long M = 1; M <= o.steps; ++M)
            sums.push_back(lbern::volkenborn_sum(lam, x, o.n, o.p, M));
        json partial = json::array();
        for (const rational& s : sums)
            partial.push_back(s.str());
        json diffs = json::array(); // v_p(S_{M+1} - S_M): growth witnesses convergence
        for (std::size_t i = 0; i + 1 < sums.size(); ++i) {
            auto v = lbern::val_p(sums[i + 1] - sums[i], o.p);
            if (v)
                diffs.push_back(*v);
            else
                diffs.push_back(nullptr);
        }
        json doc{{"command", "padic volkenborn"}, {"p", o.p},      {"lambda", o.lambda},
                 {"x", x.str()},                  {"n", o.n},      {"steps", o.steps},
                 {"partial_sums", std::move(partial)},             {"difference_valuations", std::move(diffs)}};
        emit(doc.dump(2) + "\n");
        return exit_ok;
    }
    if (sub == "h-p") {
        lbern::lambda_descriptor d = lbern::parse_lambda_spec(o.lambda);
        long F = o.big_f > 0 ? o.big_f : o.p;
        emit(lbern::to_json(lbern::h_p_lambda_neg(d, o.n, o.a, F, o.p, o.prec)).dump(2) + "\n");
        return exit_ok;
    }
    // l-p
    lbern::lambda_descriptor d = lbern::parse_lambda_spec(o.lambda);
    lbern::dirichlet_character chi = character_at(o.modulus, o.index);
    emit(lbern::to_json(lbern::l_p_lambda_neg(chi, d, o.n, o.p, o.prec)).dump(2) + "\n");
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    cli_options o;
    CLI::App app{"Exact calculator for twisted Bernoulli / Frobenius-Euler numbers,\n"
                 "their zeta and L values, and the p-adic interpolation layer."};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->envname("LBERN_FORMAT");
    };
    auto add_lambda = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", o.lambda, "Twist: \"1\", \"R:num/den\", or \"Z:m,k\" for zeta_m^k");
    };

    const std::vector<std::string> scalar_kinds = {"bern", "bern-poly", "bern-order-r", "barnes", "fe", "zeta-neg"};
    for (const auto& kind : scalar_kinds) {
        CLI::App* cmd = app.add_subcommand(kind, "Exact value table");
        add_lambda(cmd);
        add_format(cmd);
        cmd->add_option("--max-n", o.max_n, "Last index of the table")->check(CLI::Range(0L, 2000L));
        cmd->add_flag("--numeric", o.numeric, "Append a floating-point evaluation to each row");
        if (kind == "bern-poly" || kind == "bern-order-r" || kind == "zeta-neg")
            cmd->add_option("--x", o.x, "Polynomial argument (rational literal)");
        if (kind == "bern-order-r")
            cmd->add_option("--r", o.r, "Order of the generating function")->check(CLI::Range(1L, 64L));
        if (kind == "barnes")
            cmd->add_option("--weights", o.weights, "Comma-separated integer weights");
    }

    for (const std::string kind : {"gen-bern", "l-neg"}) {
        CLI::App* cmd = app.add_subcommand(kind, "Character-twisted exact value table");
        add_lambda(cmd);
        add_format(cmd);
        cmd->add_option("--max-n", o.max_n, "Last index of the table")->check(CLI::Range(0L, 2000L));
        cmd->add_option("--modulus", o.modulus, "Character modulus")->required()->check(CLI::Range(1L, 100000L));
        cmd->add_option("--index", o.index, "Character position in the enumeration for that modulus");
        cmd->add_flag("--numeric", o.numeric, "Append a floating-point evaluation to each row");
    }

    CLI::App* mz = app.add_subcommand("multi-zeta", "Exact multiple zeta value at a negative integer");
    add_format(mz);
    mz->add_option("--r", o.r, "Depth")->required()->check(CLI::Range(1L, 64L));
    mz->add_option("--m", o.m, "Evaluate at s = -m")->required()->check(CLI::Range(0L, 2000L));

    CLI::App* zt = app.add_subcommand("zeta", "Exact vs numeric zeta value report (JSON)");
    add_lambda(zt);
    zt->add_option("--k", o.k, "Evaluate at s = 1-k")->required()->check(CLI::Range(1L, 64L));
    zt->add_option("--x", o.zeta_x, "Hurwitz shift (rational literal)");
    zt->add_option("--tol", o.tol, "Comparison tolerance");

    CLI::App* vf = app.add_subcommand("verify", "Run the identity-verification suites");
    vf->add_option("--suite", o.suite, "all, core, distribution, characters, special-values, or padic");
    vf->add_option("--max-n", o.max_n, "Cap the per-check index bounds (smoke run)")->check(CLI::Range(0L, 2000L));
    vf->add_option("--seed", o.seed, "Seed for the randomized spot instances");
    add_format(vf);

    CLI::App* pd = app.add_subcommand("padic", "p-adic computations (JSON output)");
    pd->require_subcommand(1);
    auto add_padic_common = [&](CLI::App* cmd, bool with_prec) {
        cmd->add_option("--p", o.p, "Odd prime")->required();
        if (with_prec)
            cmd->add_option("--prec", o.prec, "Working precision (p-adic digits)")->check(CLI::Range(1L, 64L));
    };
    CLI::App* tc = pd->add_subcommand("teichmuller", "Teichmuller representative of a unit");
    add_padic_common(tc, true);
    tc->add_option("--a", o.a, "Unit residue")->required();
    CLI::App* lg = pd->add_subcommand("log", "p-adic logarithm of lambda");
    add_padic_common(lg, true);
    add_lambda(lg);
    CLI::App* vb = pd->add_subcommand("volkenborn", "Exact Riemann sums of the bosonic integral");
    add_padic_common(vb, false);
    add_lambda(vb);
    vb->add_option("--x", o.x, "Shift (rational literal, p-adic integer)");
    vb->add_option("--n", o.n, "Power of (x+y)")->required()->check(CLI::Range(0L, 64L));
    vb->add_option("--steps", o.steps, "Number of partial sums")->required()->check(CLI::Range(1L, 10L));
    CLI::App* hp = pd->add_subcommand("h-p", "Partial p-adic interpolation value at 1-n");
    add_padic_common(hp, true);
    add_lambda(hp);
    hp->add_option("--n", o.n, "Interpolation index")->required()->check(CLI::Range(1L, 64L));
    hp->add_option("--a", o.a, "Residue class")->required();
    hp->add_option("--F", o.big_f, "Period (defaults to p)");
    CLI::App* lp = pd->add_subcommand("l-p", "p-adic L value at 1-n");
    add_padic_common(lp, true);
    add_lambda(lp);
    lp->add_option("--n", o.n, "Interpolation index")->required()->check(CLI::Range(1L, 64L));
    lp->add_option("--modulus", o.modulus, "Character modulus")->required()->check(CLI::Range(1L, 100000L));
    lp->add_option("--index", o.index, "Character position in the enumeration for that modulus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_malformed;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    // Stage 1: input validation (malformed requests exit 2).
    try {
        if (name == "verify") {
            const auto& suites = lbern::verification_suites();
            if (o.suite != "all" && std::find(suites.begin(), suites.end(), o.suite) == suites.end())
                throw lbern::invalid_parameter("verify: unknown suite '" + o.suite + "'");
        } else if (name == "padic") {
            lbern::detail::require_padic_params(o.p, o.prec);
        } else if (name != "multi-zeta") {
            lbern::parse_lambda_spec(o.lambda);
            rational::parse(name == "zeta" ? o.zeta_x : o.x);
        }
        bool wants_character = name == "gen-bern" || name == "l-neg" ||
                               (name == "padic" && sub->get_subcommands().front()->get_name() == "l-p");
        if (wants_character && (o.index < 0 || o.index >= lbern::euler_phi(o.modulus)))
            throw lbern::invalid_parameter("character index out of range for modulus " + std::to_string(o.modulus));
    } catch (const lbern::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_malformed;
    }

    // Stage 2: computation (domain violations exit 3; padic domain errors
    // exit 2 since every such request is malformed for the chosen p).
    try {
        if (name == "verify")
            return run_verify(o);
        if (name == "zeta")
            return run_zeta(o);
        if (name == "multi-zeta")
            return run_multi_zeta(o);
        if (name == "gen-bern" || name == "l-neg")
            return run_character_table(name, o);
        if (name == "padic")
            return run_padic(sub->get_subcommands().front()->get_name(), o);
        return run_scalar_table(name, o);
    } catch (const lbern::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return name == "padic" ? exit_malformed : exit_mode;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_mode;
    }
}
