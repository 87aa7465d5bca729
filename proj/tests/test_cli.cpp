#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "kdiv/multiplication_table.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;

    json parsed() const { return json::parse(out); }
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(KDIV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/kdiv_cli_test_" + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << content;
    return path;
}

}  // namespace

TEST_CASE("kgroup reports") {
    auto r = run_cli("kgroup rp 7 0");
    CHECK(r.exit_code == 0);
    auto doc = r.parsed();
    CHECK(doc["group"]["free_rank"] == 1);
    CHECK(doc["group"]["torsion"] == json::array({8}));
    CHECK(doc["method"] == "snf-cokernel");

    auto cp = run_cli("kgroup cp 3 1");
    CHECK(cp.exit_code == 0);
    CHECK(cp.parsed()["group"]["free_rank"] == 0);
    CHECK(cp.parsed()["group"]["torsion"].empty());
    CHECK(cp.parsed()["method"] == "formula-transfer");

    auto rp41 = run_cli("kgroup rp 4 1");
    CHECK(rp41.exit_code == 0);
    CHECK(rp41.parsed()["group"]["free_rank"] == 0);
    CHECK(rp41.parsed()["group"]["torsion"].empty());

    auto rp61 = run_cli("kgroup rp 6 0");
    CHECK(rp61.parsed()["method"] == "formula-transfer");
    CHECK(rp61.parsed()["group"]["torsion"] == json::array({8}));
}

TEST_CASE("kgroup usage errors") {
    CHECK(run_cli("kgroup rp 0 0").exit_code == 2);
    CHECK(run_cli("kgroup xx 2 0").exit_code == 2);
    CHECK(run_cli("kgroup rp 3 5").exit_code == 2);
    CHECK(run_cli("kgroup rp 3").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("algebra mul") {
    auto r = run_cli("algebra mul --level 2 e1 e2");
    CHECK(r.exit_code == 0);
    auto doc = r.parsed();
    CHECK(doc["product"] == json::array({"0", "0", "0", "1"}));

    auto coords = run_cli("algebra mul --level 2 0,1,0,0 0,0,1,0");
    CHECK(coords.exit_code == 0);
    CHECK(coords.parsed()["product"] == doc["product"]);

    auto scaled = run_cli("algebra mul --level 1 1/2,0 0,2/3");
    CHECK(scaled.exit_code == 0);
    CHECK(scaled.parsed()["product"] == json::array({"0", "1/3"}));

    CHECK(run_cli("algebra mul --level 2 1,0 e2").exit_code == 2);
    CHECK(run_cli("algebra mul --level 2 e9 e2").exit_code == 2);
    CHECK(run_cli("algebra mul --level 7 e1 e2").exit_code == 2);
    CHECK(run_cli("algebra mul --level 2 e1 1/0,0,0,0").exit_code == 2);
}

TEST_CASE("algebra zerodiv") {
    auto clean = run_cli("algebra zerodiv --level 3");
    CHECK(clean.exit_code == 0);
    CHECK(clean.parsed()["count"] == 0);
    CHECK(clean.parsed()["pairs"].empty());

    auto found = run_cli("algebra zerodiv --level 4 --limit 2");
    CHECK(found.exit_code == 0);
    auto doc = found.parsed();
    CHECK(doc["count"] == 2);
    REQUIRE(doc["pairs"].size() == 2);
    CHECK(doc["pairs"][0]["left"].size() == 16);

    auto random2 = run_cli("algebra zerodiv --level 2 --strategy random --samples 200");
    CHECK(random2.exit_code == 0);
    CHECK(random2.parsed()["count"] == 0);

    CHECK(run_cli("algebra zerodiv --level 3 --strategy bogus").exit_code == 2);
}

TEST_CASE("algebra normcheck") {
    auto ok = run_cli("algebra normcheck --level 2 --samples 100");
    CHECK(ok.exit_code == 0);
    CHECK(ok.parsed()["multiplicative"] == true);
    CHECK(ok.parsed()["counterexample"].is_null());
    CHECK(ok.parsed()["samples_run"] == 100);

    auto bad = run_cli("algebra normcheck --level 4 --samples 100");
    CHECK(bad.exit_code == 3);
    auto doc = bad.parsed();
    CHECK(doc["multiplicative"] == false);
    REQUIRE(doc["counterexample"].is_object());
    CHECK(doc["counterexample"]["norm_product"].is_string());
}

TEST_CASE("stiefel section reports") {
    auto r = run_cli("stiefel --level 3 --samples 50 --seed 42");
    CHECK(r.exit_code == 0);
    auto doc = r.parsed();
    CHECK(doc["n"] == 8);
    CHECK(doc["samples"] == 50);
    CHECK(doc["nonzero_determinants"] == 50);
    CHECK(doc["full_rank_sections"] == 50);
    CHECK(doc["tangent_sections"] == 50);
    CHECK(doc["homogeneous"] == 50);
    CHECK(doc["first_failure"].is_null());

    CHECK(run_cli("stiefel --level 1 --samples 25").exit_code == 0);
    CHECK(run_cli("stiefel").exit_code == 2);
    CHECK(run_cli("stiefel --level 1 --table /tmp/x.json").exit_code == 2);
}

TEST_CASE("stiefel crosscheck flags the sedenion table") {
    auto r = run_cli("stiefel --level 4 --samples 5 --crosscheck");
    CHECK(r.exit_code == 3);
    auto doc = r.parsed();
    CHECK(doc["crosscheck"]["zero_divisor_found"] == true);
    CHECK(doc["crosscheck"]["left_mult_det"] == "0");
    CHECK(doc["crosscheck"]["left"].size() == 16);

    auto clean = run_cli("stiefel --level 2 --samples 5 --crosscheck");
    CHECK(clean.exit_code == 0);
    CHECK(clean.parsed()["crosscheck"]["zero_divisor_found"] == false);
}

TEST_CASE("stiefel table files") {
    using kdiv::stiefel::MultiplicationTable;
    auto table = MultiplicationTable::from_cd_level(1);
    auto path = write_temp("table_ok.json", kdiv::stiefel::table_to_json_text(table));
    auto r = run_cli("stiefel --table " + path + " --samples 20");
    CHECK(r.exit_code == 0);
    CHECK(r.parsed()["n"] == 2);
    CHECK(r.parsed()["nonzero_determinants"] == 20);

    // A table whose normalization map is singular: report the witness.
    MultiplicationTable singular(2);
    singular.set(0, 0, 0, kdiv::exact::Rational(1));
    singular.set(1, 0, 0, kdiv::exact::Rational(1));
    auto bad_path =
        write_temp("table_singular.json", kdiv::stiefel::table_to_json_text(singular));
    auto bad = run_cli("stiefel --table " + bad_path);
    CHECK(bad.exit_code == 3);
    CHECK(bad.parsed()["error"] == "singular-normalization");
    CHECK(bad.parsed()["witness"].size() == 2);

    auto garbled = write_temp("table_bad.json", "{\"n\": 2}");
    CHECK(run_cli("stiefel --table " + garbled).exit_code == 2);
    CHECK(run_cli("stiefel --table /nonexistent/table.json").exit_code == 2);
}

TEST_CASE("hopf batch reports") {
    auto r = run_cli("hopf --n 1 --samples 30 --seed 7");
    CHECK(r.exit_code == 0);
    auto doc = r.parsed();
    CHECK(doc["n"] == 1);
    CHECK(doc["samples"] == 30);
    CHECK(doc["exponent"] == 2);
    CHECK(doc["exponent_uniform"] == true);
    for (const char* key : {"w_independence", "antipodal_invariance", "equivariance",
                            "base_compatibility", "fiber_injectivity",
                            "pullback_proportion"}) {
        CHECK(doc[key]["run"] == 30);
        CHECK(doc[key]["passed"] == 30);
        CHECK(doc[key]["first_failure"].is_null());
    }
}

TEST_CASE("hopf input files") {
    auto good = write_temp("hopf_ok.json",
                           R"({"x": ["3/5", "0", "0", "4/5"], "w": {"re": "3/5", "im": "4/5"}})");
    auto r = run_cli("hopf --input " + good);
    CHECK(r.exit_code == 0);
    auto doc = r.parsed();
    CHECK(doc["w_independence"] == true);
    CHECK(doc["antipodal_invariance"] == true);
    CHECK(doc["equivariance_plus_two"] == true);
    CHECK(doc["base_compatibility"] == true);
    CHECK(doc["fiber_injectivity"] == true);
    CHECK(doc["pullback_proportion"] == true);

    // Not on the unit sphere.
    auto off = write_temp("hopf_off.json", R"({"x": ["1", "1"]})");
    CHECK(run_cli("hopf --input " + off).exit_code == 2);
    // Odd dimension cannot be complexified.
    auto odd = write_temp("hopf_odd.json", R"({"x": ["1", "0", "0"]})");
    CHECK(run_cli("hopf --input " + odd).exit_code == 2);
    // w off the unit circle.
    auto badw = write_temp("hopf_badw.json",
                           R"({"x": ["1", "0"], "w": {"re": "2", "im": "0"}})");
    CHECK(run_cli("hopf --input " + badw).exit_code == 2);
    auto glop = write_temp("hopf_glop.json", "{");
    CHECK(run_cli("hopf --input " + glop).exit_code == 2);
    CHECK(run_cli("hopf --input /nonexistent/point.json").exit_code == 2);
}

TEST_CASE("frobenius scan and single") {
    auto scan = run_cli("frobenius scan 100");
    CHECK(scan.exit_code == 0);
    CHECK(scan.parsed()["admissible"] == json::array({1, 2, 4, 8}));
    CHECK(scan.parsed()["matches"] == true);

    auto low = run_cli("frobenius scan 3");
    CHECK(low.exit_code == 0);
    CHECK(low.parsed()["admissible"] == json::array({1, 2}));

    auto single = run_cli("frobenius single 16 --samples 5");
    CHECK(single.exit_code == 0);
    auto doc = single.parsed();
    CHECK(doc["admissible"] == false);
    CHECK(doc["required_order"] == 128);
    CHECK(doc["obstruction_witness"].is_object());

    auto eight = run_cli("frobenius single 8 --samples 5");
    CHECK(eight.parsed()["admissible"] == true);
    CHECK(eight.parsed()["algebra_witness"]["zero_divisor_free"] == true);

    CHECK(run_cli("frobenius scan 0").exit_code == 2);
    CHECK(run_cli("frobenius single 0").exit_code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
    for (const std::string& cmd :
         {std::string("hopf --n 2 --samples 20 --seed 7"),
          std::string("stiefel --level 2 --samples 20 --seed 3"),
          std::string("algebra normcheck --level 4 --samples 20 --seed 5"),
          std::string("kgroup rp 15 0")}) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
        CHECK(a.out.back() == '\n');
    }
}

TEST_CASE("tsv output") {
    auto r = run_cli("kgroup rp 7 0 --format tsv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "group.free_rank\t1\ngroup.torsion\t8\nmethod\tsnf-cokernel\n");
    CHECK(run_cli("kgroup rp 7 0 --format yaml").exit_code == 2);
}

TEST_CASE("output redirection") {
    std::string path = "/tmp/kdiv_cli_test_out.json";
    std::remove(path.c_str());
    auto r = run_cli("kgroup rp 9 0 --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(content == run_cli("kgroup rp 9 0").out);
}
