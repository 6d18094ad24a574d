#include <doctest.h>

#include <string>

#include "measmean/commands.hpp"
#include "measmean/errors.hpp"
#include "measmean/report.hpp"

using namespace measmean;

TEST_CASE("mean command reports value, mass, moment, err") {
  RunConfig cfg;
  cfg.measure = "geometric";
  cfg.set = "[1,4]";
  const auto r = cmd_mean(cfg);
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.output);
  CHECK(j["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(j.contains("mass"));
  CHECK(j.contains("moment"));
  CHECK(j.contains("err"));
  CHECK(r.output.rfind("{\n  \"value\"", 0) == 0);
}

TEST_CASE("mean command on a built measure") {
  RunConfig cfg;
  cfg.measure = "built:harmonic";
  cfg.set = "[2,6]";
  cfg.window_lo = 0.5;
  cfg.window_hi = 10;
  const Json j = Json::parse(cmd_mean(cfg).output);
  CHECK(j["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(j["measure"] == "built:harmonic");
}

TEST_CASE("sweep command emits the documented CSV") {
  RunConfig cfg;
  cfg.measure = "geometric";
  cfg.set = "[1,2]";
  cfg.shifts = {0, 100};
  const auto r = cmd_sweep(cfg);
  CHECK(r.output.rfind("x,mean,avg,abs_diff,ratio_bound\n0,1.4142135623730949,1.5,0.0857864376269050", 0) == 0);
  CHECK(r.output.find("\n100,101.49876846543509,101.5,0.0012315345649") != std::string::npos);
  CHECK(r.output.back() == '\n');

  cfg.format = "json";
  const Json j = Json::parse(cmd_sweep(cfg).output);
  CHECK(j.size() == 2);
  CHECK(j[1]["x"] == 100);
}

TEST_CASE("compare command exit codes follow the certificate") {
  RunConfig cfg;
  cfg.mu = "geometric";
  cfg.nu = "lebesgue";
  cfg.window_lo = 0.1;
  cfg.window_hi = 100;
  const auto ok = cmd_compare(cfg);
  CHECK(ok.exit_code == 0);
  CHECK(Json::parse(ok.output)["status"] == "certified");

  std::swap(cfg.mu, cfg.nu);
  const auto bad = cmd_compare(cfg);
  CHECK(bad.exit_code == 1);
  const Json j = Json::parse(bad.output);
  CHECK(j["status"] == "refuted");
  CHECK(j["witness"].is_array());
}

TEST_CASE("construct command summarizes the build") {
  RunConfig cfg;
  cfg.mean = "geometric";
  const Json j = Json::parse(cmd_construct(cfg).output);
  CHECK(j["roundtrip"]["max_rel_err"].get<double>() <= 1e-6);
  CHECK(j["grid"]["right"]["nodes"] == 2048);
  CHECK(j["shape"] == "decreasing");
  CHECK(j["density_probes"].size() == 9);
}

TEST_CASE("verify command") {
  RunConfig cfg;
  cfg.suites = {"am_gm", "internality"};
  cfg.cases = 50;
  const auto r = cmd_verify(cfg);
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.output);
  CHECK(j["pass"] == true);
  CHECK(j["suites"].size() == 2);
}

TEST_CASE("argument parsing helpers") {
  CHECK(parse_window("0.1, 1e2") == std::pair{0.1, 100.0});
  CHECK(parse_window("1/e,e").second == doctest::Approx(2.718281828459045));
  CHECK_THROWS_AS(parse_window("5"), ParseError);
  CHECK_THROWS_AS(parse_window("5,1"), InvalidInterval);
  CHECK_THROWS_AS(parse_window("1,x"), ParseError);
  CHECK(parse_list("0,10^2,1e4") == std::vector<double>{0, 100, 1e4});
  try {
    parse_list("1,2,?");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  RunConfig cfg;
  CHECK_THROWS_AS(resolve_measure("nope", cfg), UnknownMeasure);
  CHECK_THROWS_AS(resolve_measure("built:nope", cfg), UnknownMean);
}
