// pcf: evaluate parabolic cylinder functions, generate tables, and run the
// verification suites.
//
//   pcf eval   --fn U  --a "-0.5,0" --arg "2,0"
//   pcf table  --fn E+ --a "0,0"    --start "1,0" --end "10,0" --steps 10
//   pcf verify --suite all
//
// Exit codes: 0 success, 1 evaluation error or failed suite, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include "pcf/types.hpp"
#include "pcf/verify.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::json;
using pcf::Complex;

// complex numbers travel as "re,im" with optional spaces
bool parse_complex(const std::string& text, Complex& out) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto comma = s.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 >= s.size())
    return false;
  try {
    std::size_t used = 0;
    double re = std::stod(s.substr(0, comma), &used);
    if (used != comma) return false;
    std::string imtxt = s.substr(comma + 1);
    double im = std::stod(imtxt, &used);
    if (used != imtxt.size()) return false;
    out = Complex(re, im);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json flags_json(pcf::PathFlags flags) {
  json arr = json::array();
  if (flags & pcf::path_direct) arr.push_back("direct");
  if (flags & pcf::path_finite_part) arr.push_back("finite_part");
  if (flags & pcf::path_limit) arr.push_back("limit");
  if (flags & pcf::path_connection) arr.push_back("connection");
  if (flags & pcf::path_medianized) arr.push_back("medianized");
  return arr;
}

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw pcf::Error(pcf::ErrorCode::usage, "cannot open output file");
  f << payload;
}

json report_json(const pcf::SuiteReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases)
    cases.push_back(json{{"input", c.input},
                         {"residual", c.residual},
                         {"tolerance", c.tolerance},
                         {"pass", c.pass}});
  return json{{"suite_id", rep.suite_id},
              {"cases", cases},
              {"worst_residual", rep.worst_residual},
              {"pass", rep.all_pass()}};
}

struct Options {
  std::string fn_name;
  std::string a_text, arg_text, start_text, end_text;
  int steps = 1;
  double rel_tol = 1e-12;
  std::string suite_name;
  std::uint64_t seed = pcf::GridSpec{}.seed;
  std::string out_path;
  bool want_json = false, want_csv = false;
};

int run_eval(const Options& opt) {
  Complex a, arg;
  pcf::FunctionId fn;
  if (!pcf::function_from_string(opt.fn_name, fn)) {
    std::cerr << "pcf eval: unknown function '" << opt.fn_name << "'\n";
    return 2;
  }
  if (!parse_complex(opt.a_text, a) || !parse_complex(opt.arg_text, arg)) {
    std::cerr << "pcf eval: expected complex values as \"re,im\"\n";
    return 2;
  }
  pcf::EvalConfig cfg;
  cfg.rel_tol = opt.rel_tol;
  try {
    pcf::EvalResult r = pcf::eval_function_full(fn, a, arg, cfg);
    json o{{"function", opt.fn_name},
           {"a", complex_json(a)},
           {"arg", complex_json(arg)},
           {"value", complex_json(r.value)},
           {"abs_err_estimate", r.abs_err},
           {"path", flags_json(r.flags)}};
    write_output(opt.out_path, o.dump() + "\n");
    return 0;
  } catch (const pcf::Error& e) {
    json o{{"error", e.what()}};
    std::cout << o.dump() << "\n";
    return 1;
  }
}

int run_table(const Options& opt) {
  Complex a, start, end;
  pcf::FunctionId fn;
  if (!pcf::function_from_string(opt.fn_name, fn)) {
    std::cerr << "pcf table: unknown function '" << opt.fn_name << "'\n";
    return 2;
  }
  if (!parse_complex(opt.a_text, a) || !parse_complex(opt.start_text, start) ||
      !parse_complex(opt.end_text, end)) {
    std::cerr << "pcf table: expected complex values as \"re,im\"\n";
    return 2;
  }
  if (opt.steps < 1) {
    std::cerr << "pcf table: steps must be >= 1\n";
    return 2;
  }
  pcf::EvalConfig cfg;
  cfg.rel_tol = opt.rel_tol;
  std::ostringstream os;
  os << "re_arg,im_arg,re_value,im_value,abs_err\n";
  try {
    for (int k = 0; k < opt.steps; ++k) {
      Complex arg = opt.steps == 1
                        ? start
                        : start + (end - start) *
                                      (double(k) / double(opt.steps - 1));
      pcf::EvalResult r = pcf::eval_function_full(fn, a, arg, cfg);
      os << format17(arg.real()) << "," << format17(arg.imag()) << ","
         << format17(r.value.real()) << "," << format17(r.value.imag()) << ","
         << format17(r.abs_err) << "\n";
    }
  } catch (const pcf::Error& e) {
    json o{{"error", e.what()}};
    std::cout << o.dump() << "\n";
    return 1;
  }
  write_output(opt.out_path, os.str());
  return 0;
}

int run_verify(const Options& opt) {
  pcf::SuiteId suite;
  if (!pcf::suite_from_string(opt.suite_name, suite)) {
    std::cerr << "pcf verify: unknown suite '" << opt.suite_name << "'\n";
    return 2;
  }
  pcf::GridSpec grid;
  grid.seed = opt.seed;
  pcf::EvalConfig cfg;
  cfg.rel_tol = opt.rel_tol;
  try {
    pcf::SuiteReport rep = pcf::run_suite(suite, grid, cfg);
    write_output(opt.out_path, report_json(rep).dump(2) + "\n");
    return rep.all_pass() ? 0 : 1;
  } catch (const pcf::Error& e) {
    json o{{"error", e.what()}};
    std::cout << o.dump() << "\n";
    return 1;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"parabolic cylinder function evaluator"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function value");
  eval->add_option("--fn", opt.fn_name, "U, V, E+, E-, E, Estar, W")
      ->required();
  eval->add_option("--a", opt.a_text, "parameter a as \"re,im\"")->required();
  eval->add_option("--arg", opt.arg_text, "argument as \"re,im\"")
      ->required();
  eval->add_option("--rel-tol", opt.rel_tol, "relative tolerance")
      ->check(CLI::PositiveNumber);
  eval->add_option("--out", opt.out_path, "output file (default stdout)");
  eval->add_flag("--json", opt.want_json, "JSON output (default)");

  CLI::App* table = app.add_subcommand("table", "CSV table over a range");
  table->add_option("--fn", opt.fn_name, "U, V, E+, E-, E, Estar, W")
      ->required();
  table->add_option("--a", opt.a_text, "parameter a as \"re,im\"")
      ->required();
  table->add_option("--start", opt.start_text, "first argument")->required();
  table->add_option("--end", opt.end_text, "last argument")->required();
  table->add_option("--steps", opt.steps, "number of rows")->required();
  table->add_option("--rel-tol", opt.rel_tol, "relative tolerance")
      ->check(CLI::PositiveNumber);
  table->add_option("--out", opt.out_path, "output file (default stdout)");
  table->add_flag("--csv", opt.want_csv, "CSV output (default)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", opt.suite_name,
                     "lemma, connection_uv, connection_e, eestar, link, "
                     "asymptotic, ode, wronskian, all")
      ->required();
  verify->add_option("--seed", opt.seed, "seed for randomized grids");
  verify->add_option("--rel-tol", opt.rel_tol, "relative tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", opt.out_path, "output file (default stdout)");
  verify->add_flag("--json", opt.want_json, "JSON output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval->parsed()) return run_eval(opt);
  if (table->parsed()) return run_table(opt);
  if (verify->parsed()) return run_verify(opt);
  return 2;
}
