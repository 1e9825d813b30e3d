#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "su3/error.hpp"
#include "su3/report.hpp"

using namespace su3;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "su3_test_report";
  fs::create_directories(dir);
  const auto p = dir / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("doubles round-trip through 17 digits") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5, 0.14430369475789387, 5e-324}) {
    const auto s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("json keeps key order and quotes non-finite values") {
  Json j;
  j["z"] = 1;
  j["a"] = 0.1;
  j["inf"] = std::numeric_limits<double>::infinity();
  j["list"] = {1.5, false, "x"};
  CHECK(dump_json(j) == R"({"z":1,"a":0.10000000000000001,"inf":"inf","list":[1.5,false,"x"]})");
  CHECK(dump_json_pretty(Json::object()) == "{}");
  const auto doc = render_json("lp", {{"p", 4}}, j);
  CHECK(doc.rfind("{\n  \"command\": \"lp\",\n  \"config\": {\n    \"p\": 4\n  },", 0) == 0);
  CHECK(doc.back() == '\n');
  CHECK(Json::parse(doc)["result"]["a"].get<double>() == 0.1);
}

TEST_CASE("csv layout") {
  Table t{{"n", "x", "label"}, {{std::int64_t{1}, 0.5, std::string("plain")}, {std::int64_t{-2}, 1e300, std::string("a,\"b\"")}}};
  const auto csv = render_csv("sweep", {{"seed", 7}}, t);
  CHECK(csv == "# su3char sweep config={\"seed\":7}\nn,x,label\n1,0.5,plain\n-2,1.0000000000000001e+300,\"a,\"\"b\"\"\"\n");
}

TEST_CASE("csv rejects ragged rows and empty tables") {
  Table ragged{{"a", "b"}, {{std::int64_t{1}}}};
  CHECK_THROWS_AS(render_csv("x", {}, ragged), Error);
  const auto path = scratch("empty.csv");
  try {
    write_csv(path.string(), "x", {}, Table{{"a"}, {}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
  CHECK_FALSE(fs::exists(path));
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
}

TEST_CASE("writes are byte-identical and leave no temporary file") {
  Table t{{"i", "v"}, {}};
  for (std::int64_t i = 0; i < 50; ++i) t.rows.push_back({i, std::sqrt(static_cast<double>(i))});
  const auto a = scratch("a.csv"), b = scratch("b.csv");
  write_csv(a.string(), "eval", {{"k", 1}}, t);
  write_csv(b.string(), "eval", {{"k", 1}}, t);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(fs::exists(a.string() + ".tmp"));
  write_json(a.string(), "eval", {}, {{"x", 2.0}});
  CHECK(slurp(a) == render_json("eval", {}, {{"x", 2.0}}));
}

TEST_CASE("a million rows carry one header") {
  Table t{{"i", "x"}, {}};
  t.rows.reserve(1'000'000);
  for (std::int64_t i = 0; i < 1'000'000; ++i) t.rows.push_back({i, 0.25 * static_cast<double>(i)});
  const auto path = scratch("big.csv");
  write_csv(path.string(), "sweep", {}, t);
  std::ifstream f(path);
  std::string line;
  std::size_t lines = 0, comments = 0, headers = 0;
  while (std::getline(f, line)) {
    ++lines;
    if (line.rfind("# ", 0) == 0) ++comments;
    if (line == "i,x") ++headers;
  }
  CHECK(lines == 1'000'002);
  CHECK(comments == 1);
  CHECK(headers == 1);
  fs::remove(path);
}

TEST_CASE("unwritable destination reports io_failure") {
  try {
    write_file_atomic("/nonexistent-dir/x/out.csv", "data\n");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io_failure);
    CHECK(std::string(e.what()).find("/nonexistent-dir/x") != std::string::npos);
  }
}
