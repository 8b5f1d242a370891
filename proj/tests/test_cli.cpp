#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "monodromy/constants.hpp"
#include "monodromy/group.hpp"
#include "monodromy/matrix_io.hpp"

using namespace monodromy;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr interleaved
};

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qmirror-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  fs::path log = workdir() / "last-run.log";
  std::string cmd = std::string("'") + QMIRROR_BIN + "' " + args + " > '" +
                    log.string() + "' 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  fs::path p = workdir() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const MonodromyConstants& constants() {
  static const MonodromyConstants k = MonodromyConstants::standard();
  return k;
}

}  // namespace

TEST_CASE("verify runs every check and reports success") {
  RunResult r = run("verify all --samples 100 --seed 3");
  CHECK(r.code == 0);
  CHECK(r.output.find("all 9 checks passed") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify accepts a single target") {
  RunResult r = run("verify theorem");
  CHECK(r.code == 0);
  CHECK(r.output.find("theorem") != std::string::npos);
  CHECK(r.output.find("625") != std::string::npos);

  RunResult bad = run("verify bogus");
  CHECK(bad.code == 2);
}

TEST_CASE("verify JSON output is byte-identical for a fixed seed") {
  std::string f1 = (workdir() / "r1.json").string();
  std::string f2 = (workdir() / "r2.json").string();
  RunResult r1 = run("verify all --samples 100 --seed 5 --format json --out '" +
                     f1 + "'");
  RunResult r2 = run("verify all --samples 100 --seed 5 --format json --out '" +
                     f2 + "'");
  REQUIRE(r1.code == 0);
  REQUIRE(r2.code == 0);

  std::string j1 = read_file(f1);
  std::string j2 = read_file(f2);
  CHECK(!j1.empty());
  CHECK(j1 == j2);

  nlohmann::json parsed = nlohmann::json::parse(j1);
  CHECK(parsed.at("seed") == 5);
  CHECK(parsed.at("all_passed") == true);
  CHECK(parsed.at("checks").size() == 9);
}

TEST_CASE("closure computes the mod-5 group of the reduced generators") {
  const auto& k = constants();
  std::string gens =
      write_file("gens.txt", to_text(k.A_tilde) + to_text(k.T_tilde));
  std::string dump = (workdir() / "group.dump").string();

  RunResult r = run("closure '" + gens + "' --dump '" + dump + "'");
  CHECK(r.code == 0);
  CHECK(r.output.find("order: 625") != std::string::npos);

  FiniteMatrixGroup g = load_group_dump(read_file(dump));
  CHECK(g.order() == 625);
  CHECK(g.modulus == 5);

  SUBCASE("a starved cap is reported and exits nonzero") {
    RunResult capped = run("closure '" + gens + "' --cap 100");
    CHECK(capped.code == 1);
    CHECK(capped.output.find("cap exceeded") != std::string::npos);
  }

  SUBCASE("integer generators need --mod") {
    std::string int_gens = write_file("int_gens.txt", to_text(k.A));
    RunResult bare = run("closure '" + int_gens + "'");
    CHECK(bare.code == 2);
    RunResult reduced = run("closure '" + int_gens + "' --mod 5");
    CHECK(reduced.code == 0);
    CHECK(reduced.output.find("order: 5") != std::string::npos);
  }

  SUBCASE("membership against the dump") {
    std::string e1 = write_file("e1.txt", to_text(constants().E1));
    RunResult yes = run("member '" + dump + "' '" + e1 + "'");
    CHECK(yes.code == 0);
    CHECK(yes.output.find("member") != std::string::npos);

    ModMatrix lower = ModMatrix::identity(4, 5);
    lower.set(1, 0, 1);
    std::string low = write_file("lower.txt", to_text(lower));
    RunResult no = run("member '" + dump + "' '" + low + "'");
    CHECK(no.code == 1);
    CHECK(no.output.find("not a member") != std::string::npos);
  }
}

TEST_CASE("charpoly prints one polynomial per matrix") {
  const auto& k = constants();
  std::string file = write_file("a_and_t.txt", to_text(k.A) + to_text(k.T));
  RunResult r = run("charpoly '" + file + "'");
  CHECK(r.code == 0);
  CHECK(r.output == "x^4 + x^3 + x^2 + x + 1\n"
                    "x^4 - 4*x^3 + 6*x^2 - 4*x + 1\n");

  std::string modfile = write_file("mod.txt", to_text(k.A_tilde));
  RunResult bad = run("charpoly '" + modfile + "'");
  CHECK(bad.code == 2);
}

TEST_CASE("order reports finite orders and the cap otherwise") {
  const auto& k = constants();
  std::string a = write_file("a.txt", to_text(k.A));
  RunResult r = run("order '" + a + "'");
  CHECK(r.code == 0);
  CHECK(r.output == "5\n");

  std::string t = write_file("t.txt", to_text(k.T));
  RunResult inf = run("order '" + t + "' --cap 50");
  CHECK(inf.code == 0);
  CHECK(inf.output == "infinite (up to 50)\n");
}

TEST_CASE("sporder evaluates the group-order formula") {
  RunResult r = run("sporder 2 5 1");
  CHECK(r.code == 0);
  CHECK(r.output == "9360000\n");

  RunResult big = run("sporder 2 5 2");
  CHECK(big.output == "91406250000000\n");

  RunResult composite = run("sporder 1 4 1");
  CHECK(composite.code == 2);
  CHECK(composite.output.find("error") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("closure /no/such/file").code == 2);
  CHECK(run("member /no/such/dump /no/such/file").code == 2);
  CHECK(run("verify all --format yaml").code == 2);
}

TEST_CASE("--version prints the library version") {
  RunResult r = run("--version");
  CHECK(r.code == 0);
  CHECK(r.output.find("1.0.0") != std::string::npos);
}
