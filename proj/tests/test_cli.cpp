#include <doctest.h>

#ifdef WALD_CLI_PATH

#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wald/fixtures.hpp"
#include "wald/json_io.hpp"

using namespace wald;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("wald_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

Run run(const std::string& args) {
  fs::path out = scratch() / "out.txt";
  std::string cmd = std::string(WALD_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int st = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, ss.str()};
}

std::string fixture_file(const char* name) {
  return write(std::string(name) + ".json", io::to_json(fixture(name)).dump()).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify") {
    Run r = run("--json classify " + fixture_file("L4Q3-A"));
    CHECK(r.code == 0);
    CHECK(io::json::parse(r.out)["value"]["exact"] == "16/7");

    Run dup = run("classify " + write("dup.json", R"({"points":[["1","0","0"],["2","0","0"]]})").string());
    CHECK(dup.code == 2);
    CHECK_FALSE(dup.out.empty());

    std::string col = R"({"points":[)";
    for (int i = 0; i < 9; ++i) col += std::string(i ? "," : "") + "[\"1\",\"" + std::to_string(i) + "\",\"0\"]";
    col += "]}";
    Run c = run("--json classify " + write("col.json", col).string());
    CHECK(c.code == 0);
    CHECK(io::json::parse(c.out)["value"]["exact"] == "1");

    CHECK(run("classify " + write("bad.json", "{\"points\": [").string()).code == 2);
    CHECK(run("classify " + (scratch() / "missing.json").string()).code == 2);
  }

  TEST_CASE("alpha and sweep") {
    Run d = run("--json alpha " + fixture_file("L4Q3-D") + " --m 2");
    CHECK(d.code == 0);
    CHECK(io::json::parse(d.out)["alpha"] == 5);
    Run one = run("--json alpha " + write("one.json", R"({"points":[["0","0","1"]],"m":3})").string());
    CHECK(io::json::parse(one.out)["alpha"] == 3);
    Run c5 = run("--json alpha " + fixture_file("CONIC5") + " --m 1");
    CHECK(io::json::parse(c5.out)["alpha"] == 2);
    Run sw = run("--json --m-max 3 sweep " + write("one1.json", R"({"points":[["0","0","1"]]})").string());
    CHECK(sw.code == 0);
    auto j = io::json::parse(sw.out)["sweep"];
    REQUIRE(j.size() == 3);
    for (const auto& e : j) CHECK(e[2] == "1");
  }

  TEST_CASE("lower and upper") {
    std::string aux = write("aux.json", R"([{"type":"line","through":[0,1]},{"type":"line","through":[4,5]},
      {"type":"line","through":[4,6]},{"type":"line","through":[5,6]},{"type":"line","through":[2,4]},
      {"type":"line","through":[2,5]},{"type":"line","through":[2,6]},{"type":"line","through":[3,4]},
      {"type":"line","through":[3,5]},{"type":"line","through":[3,6]}])").string();
    Run lo = run("--json lower " + fixture_file("L4Q3-B") + " --aux " + aux);
    CHECK(lo.code == 0);
    CHECK(io::json::parse(lo.out)["bound"] == "7/3");

    std::string d = fixture_file("L4Q3-D");
    std::string good = write("good.json", R"({"m":2,"terms":[{"line":[4,5],"coeff":1},{"line":[4,6],"coeff":1},
      {"line":[5,6],"coeff":1},{"line":[0,1],"coeff":2}]})").string();
    Run up = run("--json upper " + d + " " + good);
    CHECK(up.code == 0);
    CHECK(up.out.find("5/2") != std::string::npos);
    std::string bad = write("short.json", R"({"m":2,"terms":[{"line":[4,5],"coeff":1},{"line":[4,6],"coeff":1},
      {"line":[5,6],"coeff":1},{"line":[0,1],"coeff":1}]})").string();
    Run no = run("upper " + d + " " + bad);
    CHECK(no.code == 2);
    CHECK(no.out.find("multiplicity") != std::string::npos);
  }

  TEST_CASE("fixture and check") {
    Run list = run("fixture --list");
    CHECK(list.code == 0);
    CHECK(list.out.find("CUBIC9") != std::string::npos);
    Run f = run("fixture CONIC8-CONC4");
    CHECK(f.code == 0);
    CHECK(io::json::parse(f.out)["expected"]["exact"] == "5/2");
    CHECK(run("fixture NOPE").code == 2);
    Run chk = run("check " + fixture_file("L4Q3-B"));
    CHECK(chk.code == 0);
    CHECK(run("--primes 4,7 check " + fixture_file("L4Q3-B")).code == 2);
  }
}

#endif
