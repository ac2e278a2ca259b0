#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qumbral/errors.hpp"
#include "qumbral/identities.hpp"
#include "qumbral/output.hpp"

namespace {

using qumbral::BigRat;
using qumbral::Corruption;
using qumbral::OutputDocument;

std::optional<BigRat> parse_optional_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return qumbral::bigrat_from_string(text);
}

// --corrupt target:n[:coeff[:order]] plants a unit defect in one stored
// coefficient before verification; used to demonstrate the failure path.
Corruption parse_corruption(const std::string& spec) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = spec.find(':', start);
    fields.push_back(spec.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (fields.size() < 2 || fields.size() > 4) {
    throw qumbral::OutOfRange(
        "--corrupt expects target:n[:coeff[:order]], got '" + spec + "'");
  }
  Corruption c;
  using T = Corruption::Target;
  const std::string& name = fields[0];
  if (name == "euler-number") c.target = T::euler_number;
  else if (name == "euler-poly") c.target = T::euler_poly;
  else if (name == "bernoulli-number") c.target = T::bernoulli_number;
  else if (name == "bernoulli-poly") c.target = T::bernoulli_poly;
  else if (name == "euler-r-number") c.target = T::euler_r_number;
  else if (name == "euler-r-poly") c.target = T::euler_r_poly;
  else if (name == "bernoulli-r-number") c.target = T::bernoulli_r_number;
  else if (name == "bernoulli-r-poly") c.target = T::bernoulli_r_poly;
  else {
    throw qumbral::OutOfRange("unknown corruption target '" + name + "'");
  }
  try {
    c.n = std::stoi(fields[1]);
    c.coeff = fields.size() > 2 ? std::stoi(fields[2]) : 0;
    c.order_r = fields.size() > 3 ? std::stoi(fields[3]) : 1;
  } catch (const std::exception&) {
    throw qumbral::OutOfRange("--corrupt indices must be integers, got '" +
                              spec + "'");
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact q-umbral calculus: q-Euler and q-Bernoulli families over Q(q) "
      "with a machine-checked identity catalog"};
  app.require_subcommand(1);
  std::function<OutputDocument()> runner;

  // table ------------------------------------------------------------------
  auto* table = app.add_subcommand(
      "table", "Numbers and polynomials of one family up to --n");
  {
    static std::string family;
    static int n = 0;
    static int order = 1;
    static std::string at_q;
    static std::string format = "json";
    table->add_option("family", family, "euler or bernoulli")
        ->required()
        ->check(CLI::IsMember({"euler", "bernoulli"}));
    table->add_option("--n", n, "largest member index")->required();
    table->add_option("--order", order, "family order r (default 1)");
    table->add_option("--at-q", at_q, "evaluate entries at rational q (p/q)");
    table->add_option("--format", format, "json, csv or latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    table->callback([&runner] {
      runner = [] {
        return qumbral::cmd_table(
            family == "euler" ? qumbral::FamilyKind::euler
                              : qumbral::FamilyKind::bernoulli,
            n, order, qumbral::output_format_from_string(format),
            parse_optional_rational(at_q));
      };
    });
  }

  // expand -----------------------------------------------------------------
  auto* expand = app.add_subcommand(
      "expand", "Expand a polynomial in a q-Euler basis");
  {
    static std::string expression;
    static std::string basis = "euler";
    static int r = 0;
    static std::string format = "json";
    expand->add_option("expression", expression, "polynomial in x and q")
        ->required();
    expand->add_option("--basis", basis, "euler or euler_r")
        ->check(CLI::IsMember({"euler", "euler_r"}));
    expand->add_option("--r", r, "order for --basis euler_r");
    expand->add_option("--format", format, "json, csv or latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    expand->callback([&runner] {
      runner = [] {
        int order = 1;
        if (basis == "euler_r") {
          if (r < 1) {
            throw qumbral::OutOfRange("--basis euler_r requires --r >= 1");
          }
          order = r;
        } else if (r != 0 && r != 1) {
          throw qumbral::OutOfRange("--r needs --basis euler_r");
        }
        return qumbral::cmd_expand(
            expression, order, qumbral::output_format_from_string(format));
      };
    });
  }

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Check catalog identities by exact symbolic equality");
  {
    static std::string id = "all";
    static int n = 8;
    static int r = 2;
    static int jobs = 1;
    static bool numeric = false;
    static std::vector<std::string> points;
    static std::string corrupt;
    static bool timings = false;
    static std::string format = "json";
    verify->add_option("--id", id, "catalog id or 'all'");
    verify->add_option("--n", n, "largest member index (default 8)");
    verify->add_option("--r", r, "largest family order (default 2)");
    verify->add_option("--jobs", jobs, "worker threads (default 1)");
    verify->add_flag("--numeric", numeric,
                     "also specialize both sides at q = 1/2, 2/3, 5/7");
    verify->add_option("--point", points,
                       "extra rational q for the numeric cross-check "
                       "(repeatable)");
    verify->add_option("--corrupt", corrupt,
                       "plant a unit defect: target:n[:coeff[:order]]");
    verify->add_flag("--timings", timings,
                     "report measured times (output no longer byte-stable)");
    verify->add_option("--format", format, "json, csv or latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    verify->callback([&runner] {
      runner = [] {
        std::vector<BigRat> numeric_points;
        if (numeric) {
          numeric_points.push_back(BigRat(1, 2));
          numeric_points.push_back(BigRat(2, 3));
          numeric_points.push_back(BigRat(5, 7));
        }
        for (const std::string& point : points) {
          numeric_points.push_back(qumbral::bigrat_from_string(point));
        }
        std::optional<Corruption> corruption;
        if (!corrupt.empty()) corruption = parse_corruption(corrupt);
        return qumbral::cmd_verify(
            id, n, r, qumbral::output_format_from_string(format), jobs,
            numeric_points, corruption, timings);
      };
    });
  }

  // eval -------------------------------------------------------------------
  auto* eval = app.add_subcommand(
      "eval", "Parse a polynomial and optionally substitute x and q");
  {
    static std::string expression;
    static std::string at_x;
    static std::string at_q;
    static std::string format = "json";
    eval->add_option("expression", expression, "polynomial in x and q")
        ->required();
    eval->add_option("--at-x", at_x, "rational value for x (p/q)");
    eval->add_option("--at-q", at_q, "rational value for q (p/q)");
    eval->add_option("--format", format, "json, csv or latex")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    eval->callback([&runner] {
      runner = [] {
        return qumbral::cmd_eval(expression, parse_optional_rational(at_x),
                                 parse_optional_rational(at_q),
                                 qumbral::output_format_from_string(format));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const OutputDocument doc = runner();
    std::cout << doc.body;
    return doc.exit_code;
  } catch (const qumbral::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
