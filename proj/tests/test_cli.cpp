// End-to-end tests for the remh command line tool: JSON report shape,
// exit codes, format handling, determinism and the exponential gate.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

#ifndef REMH_CLI_PATH
#error "REMH_CLI_PATH must point at the remh binary"
#endif

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "remh_cli_tests.d";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path path = work_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  fs::path out = work_dir() / "stdout.txt";
  fs::path err = work_dir() / "stderr.txt";
  fs::path in = work_dir() / "stdin.txt";
  std::ofstream(in, std::ios::binary) << stdin_data;
  std::string command = std::string(REMH_CLI_PATH) + " " + args + " < " +
                        in.string() + " > " + out.string() + " 2> " +
                        err.string();
  int status = std::system(command.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

json parse_report(const RunResult& r) {
  CAPTURE(r.out);
  CAPTURE(r.err);
  return json::parse(r.out);
}

struct Fixtures {
  fs::path k4 = write_file("k4.g6", "C~\n");
  fs::path k3 = write_file("k3.g6", "Bw\n");
  fs::path p4 = write_file("p4.g6", "Ch\n");
  fs::path two_k2 = write_file("2k2.g6", "C`\n");
  fs::path k33 = write_file("k33.g6", "EFz_\n");
  fs::path c6 = write_file("c6.g6", "EhEG\n");
  fs::path two_k3 = write_file("2k3.g6", "EwCW\n");
  fs::path petersen = write_file("petersen.g6", "IheA@GUAo\n");
  fs::path c4_edges = write_file("c4.el", "4\n0 1\n1 2\n2 3\n0 3\n");
  fs::path p6_edges = write_file("p6.el", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n");
  fs::path p4_u_k2 = write_file("p4uk2.el", "6\n0 1\n1 2\n2 3\n4 5\n");
  fs::path k8 = write_file("k8.g6", "G~~~~{\n");
  // K_{1,30} plus a disjoint triangle: 33 edges, past the exponential gate.
  fs::path star_tri = [] {
    std::ostringstream ss;
    ss << 34 << "\n";
    for (int v = 1; v <= 30; ++v) ss << 0 << " " << v << "\n";
    ss << "31 32\n31 33\n32 33\n";
    return write_file("star_tri.el", ss.str());
  }();
};

const Fixtures& fx() {
  static Fixtures f;
  return f;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_CASE("cli: ex auto-dispatches star forests to the polynomial solver") {
  RunResult r = run_cli("ex --graph " + q(fx().k4) + " --pattern " +
                        q(fx().two_k2));
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  CHECK(report["command"] == "ex");
  CHECK(report["method"] == "starforest");
  CHECK(report["result"]["ex"] == 3);
  CHECK(report["result"]["rem"] == 3);
  CHECK(report["inputs"]["graph"]["graph6"] == "C~");
  CHECK(report["inputs"]["graph"]["vertices"] == 4);
  CHECK(report["inputs"]["graph"]["edges"] == 6);
  CHECK(report["inputs"]["pattern"]["graph6"] == "C`");
  std::string fp = report["inputs"]["graph"]["fingerprint"];
  CHECK(fp.substr(0, 8) == "fnv1a64:");
  CHECK(fp.size() == 8 + 16);
  CHECK(report["counters"].contains("candidates"));
  CHECK(report.contains("wall_time_ms"));
  // No exponential warning for a star-forest pattern.
  CHECK(r.err.find("exponential") == std::string::npos);
}

TEST_CASE("cli: rem auto-dispatches non-star-forests to the oracle") {
  RunResult r =
      run_cli("rem --graph " + q(fx().k4) + " --pattern " + q(fx().p4));
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  CHECK(report["command"] == "rem");
  CHECK(report["method"] == "oracle");
  CHECK(report["result"]["solved"] == true);
  CHECK(report["result"]["rem"] == 3);
  CHECK(report["result"]["ex"] == 3);
  CHECK(report["result"]["deleted_edges"].size() == 3);
  CHECK(report["counters"].contains("nodes"));
  CHECK(r.err.find("exponential") != std::string::npos);
}

TEST_CASE("cli: reports are deterministic modulo wall time") {
  std::string args =
      "ex --graph " + q(fx().petersen) + " --pattern " + q(fx().two_k2);
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  json ja = parse_report(a);
  json jb = parse_report(b);
  ja.erase("wall_time_ms");
  jb.erase("wall_time_ms");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("cli: explicit --method starforest and --method oracle agree") {
  std::string base =
      "rem --graph " + q(fx().c4_edges) + " --pattern " + q(fx().two_k2);
  RunResult fast = run_cli(base + " --method starforest");
  RunResult slow = run_cli(base + " --method oracle");
  REQUIRE(fast.exit_code == 0);
  REQUIRE(slow.exit_code == 0);
  json jf = parse_report(fast);
  json js = parse_report(slow);
  CHECK(jf["method"] == "starforest");
  CHECK(js["method"] == "oracle");
  CHECK(jf["result"]["rem"] == js["result"]["rem"]);
  CHECK(jf["result"]["rem"] == 2);
}

TEST_CASE("cli: stdin input with -") {
  RunResult r = run_cli("matching --graph -", "IheA@GUAo\n");
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  CHECK(report["result"]["size"] == 5);
  CHECK(report["result"]["edges"].size() == 5);
  CHECK(report["result"]["mate"].size() == 10);
}

TEST_CASE("cli: factor with a uniform cap") {
  RunResult r = run_cli("factor --graph " + q(fx().k4) + " --f-const 2");
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  CHECK(report["method"] == "factor");
  CHECK(report["result"]["m"] == 4);
  CHECK(report["result"]["edges"].size() == 4);
  long long nu = report["counters"]["matching_size"];
  long long slack = report["counters"]["slack_total"];
  CHECK(nu == 4 + slack);
}

TEST_CASE("cli: factor with a per-vertex cap file") {
  fs::path caps = write_file("caps.txt", "0 1\n1 1\n2 1\n3 1\n");
  RunResult r =
      run_cli("factor --graph " + q(fx().c4_edges) + " --f " + q(caps));
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  CHECK(report["result"]["m"] == 2);
  CHECK(report["result"]["caps"] == json::array({1, 1, 1, 1}));
}

TEST_CASE("cli: factor cap flags are mutually exclusive and required") {
  CHECK(run_cli("factor --graph " + q(fx().k4)).exit_code == 2);
  fs::path caps = write_file("caps_k4.txt", "0 1\n1 1\n2 1\n3 1\n");
  CHECK(run_cli("factor --graph " + q(fx().k4) + " --f " + q(caps) +
                " --f-const 2")
            .exit_code == 2);
  fs::path bad = write_file("caps_bad.txt", "0 1\n1 1\n2 1\n");
  CHECK(run_cli("factor --graph " + q(fx().k4) + " --f " + q(bad)).exit_code ==
        2);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("rem --graph " + q(fx().k4)).exit_code == 2);
  CHECK(run_cli("rem --graph /nonexistent.g6 --pattern " + q(fx().p4))
            .exit_code == 2);
  fs::path bad = write_file("bad.g6", "B~\n");  // non-zero padding bits
  CHECK(run_cli("rem --graph " + q(bad) + " --pattern " + q(fx().p4))
            .exit_code == 2);
  CHECK(run_cli("rem --graph " + q(fx().k4) + " --pattern " + q(fx().p4) +
                " --method quantum")
            .exit_code == 2);
  CHECK(run_cli("rem --graph " + q(fx().k4) + " --pattern " + q(fx().p4) +
                " --format yaml")
            .exit_code == 2);
}

TEST_CASE("cli: exceeded budget exits 1 with an honest report") {
  RunResult r = run_cli("rem --graph " + q(fx().k4) + " --pattern " +
                        q(fx().p4) + " --budget 1");
  CHECK(r.exit_code == 1);
  json report = parse_report(r);
  CHECK(report["result"]["solved"] == false);
  CHECK(report["result"]["exceeded_budget"] == 1);
}

TEST_CASE("cli: infeasible instances exit 1") {
  fs::path e1 = write_file("e1.g6", "@\n");  // one isolated vertex
  RunResult r =
      run_cli("rem --graph " + q(fx().k3) + " --pattern " + q(e1));
  CHECK(r.exit_code == 1);
  json report = parse_report(r);
  CHECK(report["error"]["type"] == "infeasible");
}

TEST_CASE("cli: the exponential gate blocks large oracle runs") {
  std::string base =
      "rem --graph " + q(fx().star_tri) + " --pattern " + q(fx().k3);
  RunResult blocked = run_cli(base);
  CHECK(blocked.exit_code == 2);
  CHECK(blocked.err.find("--yes-exponential") != std::string::npos);

  RunResult allowed = run_cli(base + " --yes-exponential");
  REQUIRE(allowed.exit_code == 0);
  json report = parse_report(allowed);
  CHECK(report["result"]["rem"] == 1);

  RunResult budgeted = run_cli(base + " --budget 3");
  REQUIRE(budgeted.exit_code == 0);
  CHECK(parse_report(budgeted)["result"]["rem"] == 1);

  // Small hosts pass the gate without flags (K4 rem test above), and the
  // gate never applies to the polynomial solver.
  fs::path p3 = write_file("p3.g6", "Bg\n");
  RunResult poly =
      run_cli("ex --graph " + q(fx().star_tri) + " --pattern " + q(p3));
  REQUIRE(poly.exit_code == 0);
  json jp = parse_report(poly);
  CHECK(jp["method"] == "starforest");
  CHECK(jp["result"]["ex"] == 2);
}

TEST_CASE("cli: check biclique") {
  RunResult yes = run_cli("check biclique --graph " + q(fx().k33));
  REQUIRE(yes.exit_code == 0);
  json jy = parse_report(yes);
  CHECK(jy["result"]["contains"] == true);
  CHECK(jy["result"]["a"] == 3);
  CHECK(jy["result"]["b"] == 3);

  RunResult no = run_cli("check biclique --graph " + q(fx().c6));
  REQUIRE(no.exit_code == 0);
  CHECK(parse_report(no)["result"]["contains"] == false);
}

TEST_CASE("cli: check clique-factor") {
  RunResult yes =
      run_cli("check clique-factor --graph " + q(fx().two_k3) + " --q 3");
  REQUIRE(yes.exit_code == 0);
  CHECK(parse_report(yes)["result"]["has_factor"] == true);

  RunResult no =
      run_cli("check clique-factor --graph " + q(fx().c6) + " --q 3");
  REQUIRE(no.exit_code == 0);
  CHECK(parse_report(no)["result"]["has_factor"] == false);

  // q must divide the vertex count.
  CHECK(run_cli("check clique-factor --graph " + q(fx().two_k3) + " --q 4")
            .exit_code == 2);
}

TEST_CASE("cli: verify-sesc") {
  RunResult r = run_cli("verify-sesc --tree " + q(fx().p4) + " --n 3");
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  CHECK(report["result"]["k"] == 4);
  CHECK(report["result"]["n"] == 3);
  CHECK(report["result"]["holds"] == true);
  CHECK(report["result"]["extremal"] == json::array({"Bw"}));
  CHECK(report["result"]["counterexamples"].empty());
  CHECK(report["result"]["tree_free_count"] == 4);

  // Stars are legal input; K_{1,3} at n = 6 fails with counterexample C6.
  fs::path star = write_file("k13.g6", "Cs\n");
  RunResult fail = run_cli("verify-sesc --tree " + q(star) + " --n 6");
  REQUIRE(fail.exit_code == 0);
  json jf = parse_report(fail);
  CHECK(jf["result"]["holds"] == false);
  CHECK(!jf["result"]["counterexamples"].empty());

  // K2 has no meaningful bound (k = 2); a single vertex is not a tree
  // problem the verifier accepts.
  CHECK(run_cli("verify-sesc --tree " + q(fx().p4) + " --n 0").exit_code == 2);
}

TEST_CASE("cli: verify-sesc --jobs does not change the verdict") {
  RunResult one = run_cli("verify-sesc --tree " + q(fx().p4) + " --n 5");
  RunResult four =
      run_cli("verify-sesc --tree " + q(fx().p4) + " --n 5 --jobs 4");
  REQUIRE(one.exit_code == 0);
  REQUIRE(four.exit_code == 0);
  json jo = parse_report(one);
  json jf = parse_report(four);
  CHECK(jo["result"]["extremal"] == jf["result"]["extremal"]);
  CHECK(jo["result"]["tree_free_count"] == jf["result"]["tree_free_count"]);
}

TEST_CASE("cli: gen-trees") {
  RunResult r = run_cli("gen-trees --k 5 --non-star --max-diameter 4");
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  CHECK(report["result"]["count"] == 2);

  RunResult all7 = run_cli("gen-trees --k 7");
  REQUIRE(all7.exit_code == 0);
  CHECK(parse_report(all7)["result"]["count"] == 11);
}

TEST_CASE("cli: reduce pendant builds and validates") {
  RunResult r = run_cli("reduce pendant --graph " + q(fx().k3) + " --tree " +
                        q(fx().p6_edges) + " --validate");
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  CHECK(report["result"]["leaves_per_vertex"] == 9);
  CHECK(report["result"]["constructed"]["vertices"] == 30);
  CHECK(report["result"]["validation"]["holds"] == true);
  CHECK(report["result"]["validation"]["lhs"] ==
        report["result"]["validation"]["rhs"]);

  // Trees of diameter < 5 are rejected.
  CHECK(run_cli("reduce pendant --graph " + q(fx().k3) + " --tree " +
                q(fx().p4))
            .exit_code == 2);
  // Non-trees are rejected.
  CHECK(run_cli("reduce pendant --graph " + q(fx().k3) + " --tree " +
                q(fx().c6))
            .exit_code == 2);
}

TEST_CASE("cli: reduce pad builds and validates") {
  RunResult r = run_cli("reduce pad --graph " + q(fx().k3) + " --pattern " +
                        q(fx().p4_u_k2) + " --validate");
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  CHECK(report["result"]["multiplicity"] == 1);
  CHECK(report["result"]["copies_per_component"] == 9);
  CHECK(report["result"]["constructed"]["vertices"] == 21);
  CHECK(report["result"]["validation"]["holds"] == true);

  // All-star patterns are rejected.
  CHECK(run_cli("reduce pad --graph " + q(fx().k3) + " --pattern " +
                q(fx().two_k2))
            .exit_code == 2);
}

TEST_CASE("cli: bench runs its kernel suite") {
  RunResult r = run_cli("bench --repeat 1");
  REQUIRE(r.exit_code == 0);
  json report = parse_report(r);
  const json& entries = report["result"]["entries"];
  REQUIRE(entries.size() == 6);
  CHECK(entries[0]["name"] == "matching/petersen");
  CHECK(entries[0]["value"] == 5);
  CHECK(entries[5]["name"] == "generate/n6");
  CHECK(entries[5]["value"] == 156);
}

TEST_CASE("cli: --help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("rem --help").exit_code == 0);
}
