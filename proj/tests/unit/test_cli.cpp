#include <filesystem>
#include <fstream>
#include <sstream>

#include "bicoalg/cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using bicoalg::cli::run;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "bicoalg_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("example then verify passes") {
  const auto path = scratch("z3.json").string();
  REQUIRE(cli({"example", "group-hopf", "--group", "Z3", "-o", path}).code == 0);
  const Run r = cli({"verify", "bicoalgebroid", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("the conjugation gate exits 1") {
  const auto path = scratch("conj.json").string();
  REQUIRE(cli({"example", "conjugation-bcc", "--group", "Z3", "-o", path}).code == 0);
  CHECK(cli({"verify", "bcc", path}).code == 1);
  CHECK(cli({"construct", "scalar-extension", "--bcc", path}).code == 1);
}

TEST_CASE("malformed input exits 2") {
  const auto path = scratch("broken.json");
  std::ofstream(path) << R"({"bicoalgebroid": {"alpha": 3}})";
  const Run r = cli({"verify", "bicoalgebroid", path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("schema error") != std::string::npos);
  CHECK(cli({}).code == 2);
  CHECK(cli({"verify", "nonsense-kind", path.string()}).code == 2);
}

TEST_CASE("json report format") {
  const auto path = scratch("k.json").string();
  REQUIRE(cli({"example", "coalgebra", "--coalgebra", "dualS3", "-o", path}).code == 0);
  const Run r = cli({"verify", "coalgebra", path, "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"passed\": true") != std::string::npos);
}
