#include <doctest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "measmean/report.hpp"

using namespace measmean;

TEST_CASE("numbers print with 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(-1.5e-300) == "-1.5000000000000001e-300");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  for (double v : {1.0 / 3, std::exp(1.0), 6.02214076e23, 5e-324}) {
    const std::string text = format_number(v);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK(back == v);
  }
}

TEST_CASE("json dump keeps key order and full precision") {
  Json j{{"value", 0.1}, {"alpha", 2}, {"list", Json::array({1.0 / 3, 4})},
         {"nested", Json{{"x", std::numeric_limits<double>::infinity()}}}};
  const std::string text = dump_json(j);
  CHECK(text.find("\"value\": 0.10000000000000001") < text.find("\"alpha\""));
  CHECK(text.find("[0.33333333333333331, 4]") != std::string::npos);
  CHECK(text.find("\"x\": null") != std::string::npos);
  CHECK(text.back() == '\n');
  CHECK(Json::parse(text)["value"].get<double>() == 0.1);
  const std::string compact = dump_json(j, -1);
  CHECK(compact.find('\n') == compact.size() - 1);
}

TEST_CASE("csv uses '.' and line feeds") {
  const std::string csv = to_csv({"x", "y"}, {{0.5, 1e-20}, {2, -3.25}});
  CHECK(csv == "x,y\n0.5,9.9999999999999995e-21\n2,-3.25\n");
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("emit writes atomically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "measmean_report_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path target = dir / "out.csv";
  emit("a,b\n1,2\n", target.string());
  std::ifstream is(target);
  std::stringstream ss;
  ss << is.rdbuf();
  CHECK(ss.str() == "a,b\n1,2\n");
  CHECK_FALSE(fs::exists(dir / "out.csv.tmp"));

  const fs::path missing = dir / "no_such_dir" / "out.csv";
  CHECK_THROWS(emit("x", missing.string()));
  CHECK_FALSE(fs::exists(missing));
  fs::remove_all(dir);
}
