#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef DUVAL_CLI_PATH
#error "DUVAL_CLI_PATH must point at the built command-line binary"
#endif
#ifndef DUVAL_GOLDEN_DIR
#error "DUVAL_GOLDEN_DIR must point at the golden output directory"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    std::string cmd = std::string(DUVAL_CLI_PATH) + " " + args + " > " +
                      out_path + " 2> cli_test_stderr.tmp";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    std::remove(out_path.c_str());
    std::remove("cli_test_stderr.tmp");
    return r;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(DUVAL_GOLDEN_DIR) + "/" + name,
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void check_golden(const std::string& args, const std::string& golden,
                  int expected_exit) {
    RunResult r = run_cli(args);
    CHECK(r.exit_code == expected_exit);
    CHECK(r.out == read_golden(golden));
}

} // namespace

TEST_CASE("golden machine output per subcommand") {
    check_golden("resolve A 2 --format machine", "resolve_a2.json", 0);
    check_golden("cycle E 8 --format machine", "cycle_e8.json", 0);
    check_golden("invariants --set N=3 --set d=6 --set c_p=6 "
                 "--format machine",
                 "invariants_cubic.json", 0);
    check_golden("chisini --set c_pp=6 --set N2=3 --set dbar=3 --set g1=4 "
                 "--format machine",
                 "chisini_cubic.json", 0);
    check_golden("mcanonical 3 1 --format machine", "mcanonical_3_1.json",
                 0);
    check_golden("monodromy 3 --format machine", "monodromy_3.json", 0);
    check_golden("selftest --format machine", "selftest.json", 3);
}

TEST_CASE("machine output is byte-identical across reruns") {
    const std::string args = "cycle D 7 --format machine";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
}

TEST_CASE("machine output parses and echoes its input") {
    RunResult r = run_cli("invariants --set N=3 --set d=6 --set c_p=6 "
                          "--format machine");
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "invariants");
    CHECK(doc["input"]["N"] == 3);
    CHECK(doc["input"]["d"] == 6);
    CHECK(doc["input"]["c_p"] == 6);
    CHECK(doc["K_sq"] == 3);
    /* feeding the echoed input back produces identical output */
    RunResult again = run_cli(
        "invariants --set N=" + doc["input"]["N"].dump() + " --set d=" +
        doc["input"]["d"].dump() + " --set c_p=" +
        doc["input"]["c_p"].dump() + " --format machine");
    CHECK(again.out == r.out);
}

TEST_CASE("file and flag inputs share one schema") {
    const char* path = "cli_profile_tmp.txt";
    {
        std::ofstream out(path);
        out << "# cubic surface\nN = 3\nd = 6\nc_p = 6\n";
    }
    RunResult from_file =
        run_cli(std::string("invariants --input ") + path +
                " --format machine");
    RunResult from_flags = run_cli(
        "invariants --set N=3 --set d=6 --set c_p=6 --format machine");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out == from_flags.out);
    /* flags override the file */
    RunResult overridden =
        run_cli(std::string("invariants --input ") + path +
                " --set N=2 --format machine");
    nlohmann::json doc = nlohmann::json::parse(overridden.out);
    CHECK(doc["input"]["N"] == 2);
    std::remove(path);
}

TEST_CASE("extra blow-up mode reproduces the default resolution") {
    RunResult plain = run_cli("resolve E 6 --format machine");
    RunResult extra =
        run_cli("resolve E 6 --with-extra-blowups --format machine");
    nlohmann::json a = nlohmann::json::parse(plain.out);
    nlohmann::json b = nlohmann::json::parse(extra.out);
    CHECK(a["input"]["extra_blowups"] == false);
    CHECK(b["input"]["extra_blowups"] == true);
    a["input"].erase("extra_blowups");
    b["input"].erase("extra_blowups");
    CHECK(a == b);
}

TEST_CASE("exit codes distinguish outcome classes") {
    CHECK(run_cli("mcanonical 3 1").exit_code == 0);          /* holds   */
    CHECK(run_cli("mcanonical 2 2").exit_code == 1);          /* fails   */
    CHECK(run_cli("mcanonical 2 2 --e 30").exit_code == 0);   /* rescued */
    CHECK(run_cli("cycle A 0").exit_code == 2);               /* input   */
    CHECK(run_cli("invariants --set N=3 --set d=7").exit_code == 2);
    CHECK(run_cli("invariants --set N=3").exit_code == 2);    /* missing */
    CHECK(run_cli("resolve Q 1").exit_code == 2);
    CHECK(run_cli("monodromy 9").exit_code == 2);             /* cap     */
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("selftest").exit_code == 3);
}

TEST_CASE("verdict-driven exits for the pair analysis") {
    /* strict excess over the bound: unique, exit 0 */
    CHECK(run_cli("chisini --set c_pp=6 --set N2=3 --set dbar=3 "
                  "--set g1=4")
              .exit_code == 0);
    /* N2 = 2 can never be unique: exit 1 */
    CHECK(run_cli("chisini --set c_pp=6 --set N2=2 --set dbar=3 "
                  "--set g1=4")
              .exit_code == 1);
    /* inconsistent g1 is an input failure: exit 2 */
    CHECK(run_cli("chisini --set c_pp=6 --set N2=3 --set dbar=3 "
                  "--set g1=5")
              .exit_code == 2);
}

TEST_CASE("human output carries the headline values") {
    RunResult r = run_cli("cycle E 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("E7") != std::string::npos);
    CHECK(r.out.find("delta = 4") != std::string::npos);
    RunResult inv = run_cli("invariants --set N=3 --set d=6 --set c_p=6");
    CHECK(inv.out.find("Noether") != std::string::npos);
}
