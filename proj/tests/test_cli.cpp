#include "catch_amalgamated.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(MZSV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string tmp_path(const char* name) {
  return std::string("cli_test_") + name + ".json";
}

}  // namespace

TEST_CASE("dual and hdual") {
  auto r = run("dual 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");

  r = run("hdual 2,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1,2\n");

  r = run("dual 2,1");  // not admissible
  CHECK(r.exit_code == 2);
}

TEST_CASE("product") {
  auto r = run("product --type harmonic 2 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "(1,2) + (2,1) - (3)\n");

  r = run("product --type shuffle 1 1");
  CHECK(r.out == "2*(1,1)\n");

  r = run("product --type nonsense 1 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("relation printing") {
  auto r = run("relation --family ohno_star --k 2 --m 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("lhs: 2*(3)") != std::string::npos);
  CHECK(r.out.find("rhs: (1,2)") != std::string::npos);

  r = run("relation --family harmonic_hom --k 2 --l 1");
  CHECK(r.out.find("rhs: (2) * (1)") != std::string::npos);

  r = run("relation --family ohno_star --k 2,1 --m 1");  // not admissible
  CHECK(r.exit_code == 2);
}

TEST_CASE("bernoulli-modp") {
  auto r = run("bernoulli-modp --n 4 --p 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");

  r = run("bernoulli-modp --n 6 --p 7");  // n > p-2
  CHECK(r.exit_code == 2);
}

TEST_CASE("diagnose-remark") {
  auto r = run("diagnose-remark --k 3 --pmin 5 --pmax 13");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p=5: zeta_A(1,2)=1  Z_A(3)=2") != std::string::npos);
  CHECK(r.out.find("p=7: zeta_A(1,2)=3  Z_A(3)=1") != std::string::npos);
  CHECK(r.out.find("ratio is the constant 3") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("verify-modp").exit_code == 2);  // --families missing
  CHECK(run("verify-modp --families no_such_family").exit_code == 2);
}

TEST_CASE("verify-modp exit codes and determinism") {
  std::string out1 = tmp_path("modp1"), out2 = tmp_path("modp2");
  auto r = run("verify-modp --families ohno_star_finite --max-total-weight 4 --pmin 5 --pmax 31 --out " + out1);
  CHECK(r.exit_code == 0);
  auto r2 = run("verify-modp --families ohno_star_finite --max-total-weight 4 --pmin 5 --pmax 31 --jobs 2 --out " + out2);
  CHECK(r2.exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));  // byte-identical across runs and job counts
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("verify-real runs and reports") {
  std::string out = tmp_path("real");
  auto r = run("verify-real --families duality_classical --max-total-weight 4 --N 10000 --tol 1e-2 --out " + out);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("summary").at("failed") == 0);
  CHECK(j.at("config").at("N") == 10000);
  std::remove(out.c_str());
}

TEST_CASE("golden report comparison") {
  std::string out = tmp_path("golden");
  auto r = run("verify-modp --families ohno_star_finite,duality_finite --max-total-weight 4 "
               "--pmin 5 --pmax 31 --out " + out);
  CHECK(r.exit_code == 0);
  auto fresh = nlohmann::json::parse(slurp(out));
  auto golden = nlohmann::json::parse(slurp(std::string(MZSV_GOLDEN_DIR) + "/verify_modp_w4.json"));
  CHECK(fresh == golden);  // reports carry no timestamps, so equality is exact
  std::remove(out.c_str());
}

TEST_CASE("config file mirrors flags") {
  std::string cfg = "cli_test_cfg.toml";
  {
    std::ofstream os(cfg);
    os << "[verify-modp]\nfamilies=\"duality_finite\"\nmax-total-weight=3\npmin=5\npmax=13\n";
  }
  auto r = run("--config " + cfg + " verify-modp");
  CHECK(r.exit_code == 0);
  std::remove(cfg.c_str());
}
