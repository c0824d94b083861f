#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "lbern/lbern.hpp"

using namespace lbern;

namespace {

struct run_result {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell with stdout+stderr captured to a file.
run_result run_cli(const std::string& args) {
    static int counter = 0;
    std::string path = "cli_capture_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(LBERN_CLI_PATH) + " " + args + " > " + path + " 2>&1";
    int rc = std::system(cmd.c_str());
    run_result res;
    res.code = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    res.out = buf.str();
    std::remove(path.c_str());
    return res;
}

json parse_doc(const std::string& s) { return json::parse(s); }

} // namespace

TEST_CASE("bern table emits the documented exact coefficients") {
    run_result r = run_cli("bern --lambda R:2/1 --max-n 2 --format json");
    REQUIRE(r.code == 0);
    json doc = parse_doc(r.out);
    CHECK(doc.at("command") == "bern");
    CHECK(doc.at("lambda") == "R:2/1");
    const json& rows = doc.at("rows");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].at("L_coeffs") == json::array({"0", "1"}));
    CHECK(rows[1].at("L_coeffs") == json::array({"1", "-2"}));
    CHECK(rows[2].at("L_coeffs") == json::array({"-4", "6"}));
}

TEST_CASE("classical csv table matches the known values") {
    run_result r = run_cli("bern --lambda 1 --max-n 4 --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out == "n,value\n0,1\n1,-1/2\n2,1/6\n3,0\n4,-1/30\n");
}

TEST_CASE("multi-zeta prints the exact special value") {
    run_result text = run_cli("multi-zeta --r 2 --m 1");
    REQUIRE(text.code == 0);
    CHECK(text.out == "1/12\n");
    run_result doc = run_cli("multi-zeta --r 1 --m 1 --format json");
    REQUIRE(doc.code == 0);
    CHECK(parse_doc(doc.out).at("value") == "-1/12");
}

TEST_CASE("json rows re-parse to exactly the in-memory values") {
    // rational lambda through a polynomial table
    run_result r = run_cli("bern-poly --lambda R:3/2 --x 1/2 --max-n 8 --format json");
    REQUIRE(r.code == 0);
    lambda_scalar<rational> lam = as_rational_scalar(lambda_descriptor::from_rational(rational(3, 2)));
    auto table = lb_numbers(lam, 8);
    for (const json& row : parse_doc(r.out).at("rows")) {
        long n = row.at("n").get<long>();
        json poly{{"L_coeffs", row.at("L_coeffs")}};
        CHECK(rational_poly_from_json(poly) == lb_poly_from_table(table, rational(1, 2), n));
    }

    // root-of-unity lambda: coefficients are cyclotomic objects
    run_result rz = run_cli("bern --lambda Z:3,1 --max-n 8 --format json");
    REQUIRE(rz.code == 0);
    lambda_scalar<cyclotomic> lz = as_cyclotomic_scalar(lambda_descriptor::root(3, 1));
    auto tz = lb_numbers(lz, 8);
    for (const json& row : parse_doc(rz.out).at("rows")) {
        long n = row.at("n").get<long>();
        json poly{{"L_coeffs", row.at("L_coeffs")}};
        CHECK(cyclotomic_poly_from_json(poly) == tz[static_cast<std::size_t>(n)]);
    }

    // character-twisted rows
    run_result rg = run_cli("gen-bern --modulus 4 --index 1 --lambda R:2/1 --max-n 6 --format json");
    REQUIRE(rg.code == 0);
    dirichlet_character chi = dirichlet_character::characters_mod(4)[1];
    lambda_descriptor two = lambda_descriptor::from_rational(rational(2));
    for (const json& row : parse_doc(rg.out).at("rows")) {
        long n = row.at("n").get<long>();
        json poly{{"L_coeffs", row.at("L_coeffs")}};
        CHECK(cyclotomic_poly_from_json(poly) == generalized_bernoulli(chi, two, n));
    }

    // p-adic values, including one with a negative-valuation shift
    run_result rh = run_cli("padic h-p --p 5 --prec 8 --lambda Z:2,1 --n 2 --a 2 --F 10");
    REQUIRE(rh.code == 0);
    padic_int hv = h_p_lambda_neg(lambda_descriptor::root(2, 1), 2, 2, 10, 5, 8);
    padic_int parsed = padic_from_json(parse_doc(rh.out));
    CHECK(parsed.p() == hv.p());
    CHECK(parsed.shift() == hv.shift());
    CHECK(parsed.guaranteed() == hv.guaranteed());
    CHECK(parsed.residue() == hv.residue());
}

TEST_CASE("verify subcommand reports anchors and gates on failures") {
    run_result core = run_cli("verify --suite core --max-n 4");
    REQUIRE(core.code == 0);
    CHECK(core.out.find("Theorem 1 ✓") != std::string::npos);
    run_result dist = run_cli("verify --suite distribution --max-n 3");
    REQUIRE(dist.code == 0);
    CHECK(dist.out.find("Corollary 1 ✓") != std::string::npos);
    run_result bad = run_cli("verify --suite nope");
    CHECK(bad.code == 2);
    run_result doc = run_cli("verify --suite padic --max-n 2 --format json");
    REQUIRE(doc.code == 0);
    json parsed = parse_doc(doc.out);
    CHECK(parsed.at("all_passed") == true);
    CHECK(parsed.at("results").size() == 6);
}

TEST_CASE("exit codes separate malformed input from mode violations") {
    CHECK(run_cli("bern --lambda R:abc --max-n 1").code == 2);
    CHECK(run_cli("bern --lambda Q:1 --max-n 1").code == 2);
    CHECK(run_cli("bern --lambda R:0/1 --max-n 1").code == 2);
    CHECK(run_cli("bern --max-n -3").code == 2);
    CHECK(run_cli("gen-bern --modulus 4 --index 7 --max-n 1").code == 2);
    CHECK(run_cli("nope --max-n 1").code == 2);
    CHECK(run_cli("barnes --weights 1,3/2 --max-n 2").code == 3);
    CHECK(run_cli("fe --lambda 1 --max-n 2").code == 3);
    CHECK(run_cli("zeta --lambda R:2/1 --k 2").code == 3);
    CHECK(run_cli("padic teichmuller --p 4 --a 2").code == 2);
    CHECK(run_cli("padic teichmuller --p 5 --prec 65 --a 2").code == 2);
    CHECK(run_cli("padic teichmuller --p 5 --a 10").code == 2);
    CHECK(run_cli("padic log --p 5 --lambda R:2/1").code == 2);
    CHECK(run_cli("padic volkenborn --p 5 --lambda R:2/1 --n 1 --steps 2").code == 2);
}

TEST_CASE("padic outputs match the library values") {
    run_result tc = run_cli("padic teichmuller --p 5 --prec 2 --a 2");
    REQUIRE(tc.code == 0);
    json t = parse_doc(tc.out);
    CHECK(t.at("residue") == "7");
    CHECK(t.at("p") == 5);
    CHECK(t.at("prec_guaranteed") == 2);

    run_result lg = run_cli("padic log --p 5 --prec 2 --lambda R:6/1");
    REQUIRE(lg.code == 0);
    CHECK(parse_doc(lg.out).at("residue") == "5");

    run_result vb = run_cli("padic volkenborn --p 5 --lambda 1 --n 1 --steps 3");
    REQUIRE(vb.code == 0);
    json v = parse_doc(vb.out);
    CHECK(v.at("partial_sums") == json::array({"2", "12", "62"}));
    CHECK(v.at("difference_valuations") == json::array({1, 2}));

    run_result lp = run_cli("padic l-p --p 5 --prec 8 --modulus 1 --index 0 --lambda 1 --n 4");
    REQUIRE(lp.code == 0);
    padic_int expect = padic_int::from_rational(rational(-31, 30), 5, 8);
    CHECK(equal_to_precision(padic_from_json(parse_doc(lp.out)), expect));
}

TEST_CASE("identical invocations produce byte-identical output") {
    const char* cmds[] = {
        "bern --lambda R:3/2 --max-n 15 --format json --numeric",
        "verify --suite characters --max-n 4 --format json",
        "zeta --lambda R:1/2 --k 3 --x 1/2",
    };
    for (const char* cmd : cmds) {
        run_result a = run_cli(cmd);
        run_result b = run_cli(cmd);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("environment variable sets the default format") {
    run_result r = run_cli("multi-zeta --r 2 --m 1 --format json");
    std::string via_env_cmd = "LBERN_FORMAT=json " + std::string(LBERN_CLI_PATH) + " multi-zeta --r 2 --m 1";
    run_result e;
    {
        static int counter = 1000;
        std::string path = "cli_capture_" + std::to_string(counter++) + ".txt";
        int rc = std::system((via_env_cmd + " > " + path + " 2>&1").c_str());
        e.code = (rc != -1 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        e.out = buf.str();
        std::remove(path.c_str());
    }
    REQUIRE(e.code == 0);
    CHECK(e.out == r.out);
    // an explicit flag wins over the environment
    std::string override_cmd = "LBERN_FORMAT=json " + std::string(LBERN_CLI_PATH) + " multi-zeta --r 2 --m 1 --format text";
    {
        static int counter = 2000;
        std::string path = "cli_capture_" + std::to_string(counter++) + ".txt";
        int rc = std::system((override_cmd + " > " + path + " 2>&1").c_str());
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        CHECK(WEXITSTATUS(rc) == 0);
        CHECK(buf.str() == "1/12\n");
        std::remove(path.c_str());
    }
}

TEST_CASE("zeta report cross-checks exact against numeric") {
    run_result r = run_cli("zeta --lambda R:1/2 --k 2");
    REQUIRE(r.code == 0);
    json doc = parse_doc(r.out);
    CHECK(doc.at("exact").at("L_coeffs") == json::array({"4", "6"}));
    CHECK(doc.at("within_tolerance") == true);
    CHECK(doc.at("residual").get<double>() <= doc.at("tolerance").get<double>());
    CHECK(doc.at("s").get<double>() == -1.0);
}
