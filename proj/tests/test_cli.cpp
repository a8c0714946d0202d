#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr combined
};

fs::path temp_file(const std::string& stem) {
  static int counter = 0;
  return fs::temp_directory_path() /
         (stem + "_" + std::to_string(::getpid()) + "_" +
          std::to_string(counter++));
}

RunResult run_cli(const std::string& args) {
  fs::path out = temp_file("fincat_cli_out");
  std::string cmd = std::string(FINCAT_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  if (rc != -1 && WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  fs::remove(out);
  return r;
}

fs::path write_temp(const std::string& stem, const std::string& content) {
  fs::path p = temp_file(stem);
  std::ofstream f(p);
  f << content;
  return p;
}

fs::path gen_example(const std::string& name, const std::string& stem) {
  fs::path p = temp_file(stem);
  RunResult r = run_cli("gen --example " + name + " --out " + p.string());
  REQUIRE(r.code == 0);
  REQUIRE(r.output.empty());
  REQUIRE(fs::exists(p));
  return p;
}

}  // namespace

TEST_CASE("cli validate") {
  fs::path p4 = gen_example("p4", "cli_p4");
  RunResult text = run_cli("validate " + p4.string());
  CHECK(text.code == 0);
  CHECK_FALSE(text.output.empty());
  RunResult js = run_cli("validate " + p4.string() + " --format json");
  CHECK(js.code == 0);
  CHECK(js.output.find("\"status\": \"ok\"") != std::string::npos);
  CHECK(js.output.find("\"format_version\": 1") != std::string::npos);
  fs::remove(p4);
}

TEST_CASE("cli validate rejects bad input with a report") {
  fs::path bad = write_temp("cli_bad", "{not json");
  RunResult r = run_cli("validate " + bad.string() + " --format json");
  CHECK(r.code == 2);
  CHECK(r.output.find("json-parse") != std::string::npos);
  CHECK(r.output.find("\"status\": \"invalid-input\"") != std::string::npos);
  fs::remove(bad);

  RunResult missing = run_cli("validate /nonexistent/nope.json");
  CHECK(missing.code == 2);
}

TEST_CASE("cli proper verdicts") {
  fs::path p4 = gen_example("p4", "cli_p4_proper");
  RunResult r = run_cli("proper " + p4.string() + " --mode both --format json");
  CHECK(r.code == 0);
  CHECK(r.output.find("\"verdict\": \"proper\"") != std::string::npos);

  fs::path d2 = gen_example("discrete:2", "cli_d2");
  RunResult none = run_cli("proper " + d2.string() + " --format json");
  CHECK(none.code == 0);
  CHECK(none.output.find("\"verdict\": \"no-proper\"") != std::string::npos);

  RunResult tiny = run_cli("proper " + p4.string() + " --budget 5 --format json");
  CHECK(tiny.code == 3);
  CHECK(tiny.output.find("budget-exceeded") != std::string::npos);
  CHECK(tiny.output.find("inconclusive") != std::string::npos);

  fs::remove(p4);
  fs::remove(d2);
}

TEST_CASE("cli promote") {
  fs::path e3 = gen_example("e3", "cli_e3");
  fs::path exchange = write_temp(
      "cli_exchange",
      R"({"format_version": 1,
          "obj_map": {"e": "f", "f": "e", "a": "f"},
          "mor_map": {"e->a": "id:f", "a->e": "id:f"}})");
  RunResult r = run_cli("promote " + e3.string() + " --functor " +
                        exchange.string() + " --format json");
  CHECK(r.code == 0);
  CHECK(r.output.find("\"outcome\": \"obstructed\"") != std::string::npos);

  fs::path ident = write_temp(
      "cli_ident",
      R"({"format_version": 1,
          "obj_map": {"e": "e", "f": "f", "a": "a"},
          "mor_map": {"e->a": "e->a", "a->e": "a->e"}})");
  RunResult ok = run_cli("promote " + e3.string() + " --functor " +
                         ident.string() + " --format json");
  CHECK(ok.code == 0);
  CHECK(ok.output.find("\"outcome\": \"promoted\"") != std::string::npos);

  fs::remove(e3);
  fs::remove(exchange);
  fs::remove(ident);
}

TEST_CASE("cli quotient skeleton autoequiv concrete") {
  fs::path p4 = gen_example("p4", "cli_p4_more");
  RunResult q = run_cli("quotient " + p4.string() + " --format json");
  CHECK(q.code == 0);
  CHECK(q.output.find("\"end0_size\": 11") != std::string::npos);

  RunResult sk = run_cli("skeleton " + p4.string() + " --format json");
  CHECK(sk.code == 0);
  CHECK(sk.output.find("\"representatives\"") != std::string::npos);

  fs::path e3 = gen_example("e3", "cli_e3_enum");
  RunResult ae = run_cli("autoequiv " + e3.string() + " --format json");
  CHECK(ae.code == 0);
  CHECK(ae.output.find("\"count\": 6") != std::string::npos);

  RunResult am = run_cli("automorphisms " + e3.string() + " --format json");
  CHECK(am.code == 0);
  CHECK(am.output.find("\"count\": 2") != std::string::npos);

  fs::path finset = gen_example("finset:1,2,2", "cli_finset");
  RunResult con = run_cli("concrete " + finset.string() +
                          " --witness s1 --format json");
  CHECK(con.code == 0);
  CHECK(con.output.find("\"holds\": true") != std::string::npos);
  CHECK(con.output.find("\"representation\"") != std::string::npos);

  RunResult badw = run_cli("concrete " + finset.string() + " --witness nope");
  CHECK(badw.code == 2);

  fs::remove(p4);
  fs::remove(e3);
  fs::remove(finset);
}

TEST_CASE("cli gen and argument errors") {
  RunResult unknown = run_cli("gen --example nope");
  CHECK(unknown.code == 2);

  RunResult badflag = run_cli("validate --frobnicate x.json");
  CHECK(badflag.code == 2);

  RunResult badsub = run_cli("frobnicate");
  CHECK(badsub.code == 2);

  RunResult noargs = run_cli("");
  CHECK(noargs.code == 2);

  RunResult help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(help.output.find("validate") != std::string::npos);

  // gen to stdout emits the canonical file itself, not a report
  RunResult raw = run_cli("gen --example isopair");
  CHECK(raw.code == 0);
  CHECK(raw.output.find("\"format_version\": 1") != std::string::npos);
  CHECK(raw.output.find("\"status\"") == std::string::npos);
}

TEST_CASE("cli suite fast scope passes") {
  RunResult r = run_cli("suite fast --format json");
  CHECK(r.code == 0);
  CHECK(r.output.find("\"failed\": 0") != std::string::npos);

  RunResult bad = run_cli("suite nonsense");
  CHECK(bad.code == 2);
}
