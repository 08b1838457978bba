#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PCF_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p))
    out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("eval emits the documented JSON record") {
  RunResult r = run_cli("eval --fn U --a \" -0.5,0\" --arg \"2,0\"");
  CHECK(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(o["function"] == "U");
  CHECK(o["a"]["re"] == -0.5);
  CHECK(o["arg"]["re"] == 2.0);
  CHECK(std::fabs(double(o["value"]["re"]) - std::exp(-1.0)) < 1e-10);
  CHECK(std::fabs(double(o["value"]["im"])) < 1e-12);
  CHECK(o["abs_err_estimate"].is_number());
  bool has_limit = false;
  for (const auto& f : o["path"]) has_limit |= (f == "limit");
  CHECK(has_limit);
}

TEST_CASE("eval of the oscillatory pair") {
  RunResult r = run_cli("eval --fn E+ --a \"0,0.5\" --arg \"2,0\"");
  CHECK(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(std::fabs(double(o["value"]["re"]) - std::cos(1.0)) < 1e-10);
  CHECK(std::fabs(double(o["value"]["im"]) - std::sin(1.0)) < 1e-10);

  RunResult rv = run_cli("eval --fn V --a \"0.5,0\" --arg \"1,0\"");
  json ov = json::parse(rv.out);
  CHECK(std::fabs(double(ov["value"]["re"]) - 1.0245040556536147) < 1e-10);
}

TEST_CASE("eval usage errors exit with 2") {
  CHECK(run_cli("eval --fn U --a \"0,0\"").exit_code == 2);
  CHECK(run_cli("eval --fn Q --a \"0,0\" --arg \"1,0\"").exit_code == 2);
  CHECK(run_cli("eval --fn U --a \"0;0\" --arg \"1,0\"").exit_code == 2);
}

TEST_CASE("evaluator failures exit with 1 and an error object") {
  // Gamma(1/2 + i a) sits at the pole for a = i/2; W cannot be formed
  RunResult r = run_cli("eval --fn W --a \"0,0.5\" --arg \"1,0\"");
  CHECK(r.exit_code == 1);
  json o = json::parse(r.out);
  CHECK(o.contains("error"));
}

TEST_CASE("table emits the exact header and 17-digit fields") {
  RunResult r = run_cli(
      "table --fn U --a \" -0.5,0\" --start \"1,0\" --end \"3,0\" --steps 3");
  CHECK(r.exit_code == 0);
  auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "re_arg,im_arg,re_value,im_value,abs_err");
  double want[3] = {std::exp(-0.25), std::exp(-1.0), std::exp(-2.25)};
  for (int i = 0; i < 3; ++i) {
    double re_arg, im_arg, re_v, im_v, err;
    REQUIRE(std::sscanf(lines[i + 1].c_str(), "%lf,%lf,%lf,%lf,%lf", &re_arg,
                        &im_arg, &re_v, &im_v, &err) == 5);
    CHECK(re_arg == doctest::Approx(1.0 + i).epsilon(1e-15));
    CHECK(std::fabs(re_v - want[i]) < 1e-10);
    CHECK(std::fabs(im_v) < 1e-12);
  }
}

TEST_CASE("single-step table equals eval bit for bit") {
  RunResult t = run_cli(
      "table --fn E+ --a \"0.3,0\" --start \"1.7,0\" --end \"9,9\" --steps 1");
  RunResult e = run_cli("eval --fn E+ --a \"0.3,0\" --arg \"1.7,0\"");
  auto lines = split_lines(t.out);
  REQUIRE(lines.size() == 2);
  double re_arg, im_arg, re_v, im_v, err;
  REQUIRE(std::sscanf(lines[1].c_str(), "%lf,%lf,%lf,%lf,%lf", &re_arg,
                      &im_arg, &re_v, &im_v, &err) == 5);
  json o = json::parse(e.out);
  CHECK(re_v == double(o["value"]["re"]));
  CHECK(im_v == double(o["value"]["im"]));
}

TEST_CASE("table rows match individual evals bit for bit") {
  RunResult t = run_cli(
      "table --fn E+ --a \"0,0\" --start \"1,0\" --end \"10,0\" --steps 10");
  auto lines = split_lines(t.out);
  REQUIRE(lines.size() == 11);
  for (int i : {0, 4, 9}) {
    double re_arg, im_arg, re_v, im_v, err;
    REQUIRE(std::sscanf(lines[i + 1].c_str(), "%lf,%lf,%lf,%lf,%lf", &re_arg,
                        &im_arg, &re_v, &im_v, &err) == 5);
    char argtxt[64];
    std::snprintf(argtxt, sizeof argtxt, "%.17g,%.17g", re_arg, im_arg);
    RunResult e = run_cli(std::string("eval --fn E+ --a \"0,0\" --arg \"") +
                          argtxt + "\"");
    json o = json::parse(e.out);
    CHECK(re_v == double(o["value"]["re"]));
    CHECK(im_v == double(o["value"]["im"]));
  }
}

TEST_CASE("table usage errors") {
  CHECK(run_cli("table --fn U --a \"0,0\" --start \"1,0\" --end \"2,0\" "
                "--steps 0")
            .exit_code == 2);
}

TEST_CASE("verify runs a suite and reports JSON") {
  RunResult r = run_cli("verify --suite lemma");
  CHECK(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(o["suite_id"] == "lemma");
  CHECK(o["pass"] == true);
  CHECK(o["cases"].is_array());
  CHECK(o["cases"].size() > 0);
  CHECK(double(o["worst_residual"]) <= 1e-8);
  for (const auto& c : o["cases"]) {
    CHECK(c["pass"] == true);
    CHECK(double(c["residual"]) <= double(c["tolerance"]));
  }
}

TEST_CASE("verify rejects unknown suites with exit 2") {
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
}

TEST_CASE("complex parsing tolerates spaces and round-trips") {
  RunResult r = run_cli("eval --fn U --a \" 0.125 , -0.25 \" --arg \"1.5,0\"");
  CHECK(r.exit_code == 0);
  json o = json::parse(r.out);
  CHECK(double(o["a"]["re"]) == 0.125);
  CHECK(double(o["a"]["im"]) == -0.25);
}

} // TEST_SUITE
