#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "golden_cases.hpp"
#include "eulerop_cli/io.hpp"

namespace fs = std::filesystem;
using namespace golden;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool updating() {
  const char* v = std::getenv("EULEROP_UPDATE_GOLDEN");
  return v != nullptr && std::string(v) == "1";
}

}  // namespace

TEST_CASE("golden CLI outputs and exit codes") {
  const auto cases = load_cases(EULEROP_GOLDEN_DIR "/cases.txt");
  REQUIRE(cases.size() > 20);
  for (const Case& c : cases) {
    CAPTURE(c.name);
    CAPTURE(c.args);
    const Result r = run_cli(EULEROP_CLI_PATH, c.args);
    CHECK(r.code == c.code);
    const fs::path file = fs::path(EULEROP_GOLDEN_DIR) / "out" / (c.name + ".out");
    if (updating()) {
      std::ofstream(file, std::ios::binary) << r.out;
      continue;
    }
    REQUIRE(fs::exists(file));
    CHECK(r.out == slurp(file));
    // failures report on stderr only
    if (c.code >= 2) CHECK(r.out.empty());
  }
}

TEST_CASE("golden JSON re-emits byte for byte") {
  long json = 0;
  for (const auto& entry : fs::directory_iterator(fs::path(EULEROP_GOLDEN_DIR) / "out")) {
    const std::string text = slurp(entry.path());
    if (text.empty() || text.front() != '{') continue;
    CAPTURE(entry.path().filename().string());
    CHECK(eulerop::cli::reemit(text) == text);
    ++json;
  }
  CHECK(json > 10);
}
