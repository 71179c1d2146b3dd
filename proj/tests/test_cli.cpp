#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kBinary = TANGENT_RADON_PATH;
const fs::path kData = TANGENT_TEST_DATA;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tangent-cli-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = kBinary.string() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string body(const std::string& name) { return "--body " + (kData / name).string(); }

}  // namespace

TEST_CASE("cli: demo-disk") {
  const auto out = scratch("demo");
  CHECK(run("demo-disk --out " + out.string()) == 0);
  CHECK(fs::exists(out / "sinogram.csv"));
  CHECK(fs::exists(out / "disk_moments.csv"));
  const auto report = nlohmann::json::parse(slurp(out / "demo_disk.json"));
  CHECK(report.at("verdict") == "pass");
}

TEST_CASE("cli: verify-identities and a corrupted table") {
  const auto out = scratch("verify");
  CHECK(run("verify-identities --m 4 --out " + out.string()) == 0);
  CHECK(run("verify-identities --m 4 --corrupt-ctable") == 1);
}

TEST_CASE("cli: reconstruct exit codes") {
  CHECK(run("reconstruct " + body("ellipse.json")) == 0);
  CHECK(run("reconstruct " + body("ellipse_exact.json") + " --exact") == 0);
  CHECK(run("reconstruct " + body("perturbed_disk.json")) == 1);
  CHECK(run("reconstruct " + body("ellipse.json") + " --window -0.4:0.4") == 0);
  CHECK(run("reconstruct " + body("mismatch.json")) == 64);
  CHECK(run("reconstruct " + body("ellipse.json") + " --m 2") == 64);
  CHECK(run("reconstruct --body /nonexistent.json") == 64);
  CHECK(run("reconstruct " + body("ellipse.json") + " --grid 100") == 64);
  CHECK(run("reconstruct " + body("ellipse.json") + " --bogus") == 64);
}

TEST_CASE("cli: range-check and perturbation-study") {
  CHECK(run("range-check " + body("ellipse.json")) == 0);
  CHECK(run("range-check " + body("perturbed_disk.json")) == 1);
  CHECK(run("perturbation-study") == 0);
}

TEST_CASE("cli: reruns are byte-identical") {
  const auto a = scratch("rerun-a");
  const auto b = scratch("rerun-b");
  REQUIRE(run("reconstruct " + body("ellipse.json") + " --out " + a.string()) == 0);
  REQUIRE(run("reconstruct " + body("ellipse.json") + " --out " + b.string()) == 0);
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const auto name = entry.path().filename();
    if (name == "run.meta.json") continue;
    CHECK_MESSAGE(slurp(entry.path()) == slurp(b / name), name.string());
    ++compared;
  }
  CHECK(compared >= 3);
}
