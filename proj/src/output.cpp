#include "qumbral/output.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <utility>

#include "qumbral/errors.hpp"
#include "qumbral/umbral.hpp"
#include "qumbral/xpoly.hpp"

namespace qumbral {

namespace {

using Json = nlohmann::ordered_json;

OutputDocument make_document(OutputFormat format, std::string body,
                             int exit_code = 0) {
  return OutputDocument{format, std::move(body), exit_code};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json qrat_json(const QRat& value) {
  Json num = Json::array();
  for (const BigRat& c : value.num().coeffs()) num.push_back(to_string(c));
  Json den = Json::array();
  for (const BigRat& c : value.den().coeffs()) den.push_back(to_string(c));
  if (value.num().is_zero()) num.push_back("0");
  if (value.den().is_zero()) den.push_back("0");  // unreachable; keeps shape
  return Json{{"num", num}, {"den", den}};
}

Json xpoly_json(const XPoly& p) {
  Json coeffs = Json::array();
  for (const QRat& c : p.coeffs()) coeffs.push_back(qrat_json(c));
  return coeffs;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

// Minimal math-mode conversion: braces exponents, turns * into \cdot.
std::string latexify(const std::string& text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '*') {
      out += " \\cdot ";
    } else if (c == '^') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      out += "^{" + text.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += c;
    }
  }
  return out;
}

PolyFamily build_family(FamilyKind kind, int n_max, int order_r) {
  if (order_r == 1) {
    return kind == FamilyKind::euler ? euler_polys(n_max)
                                     : bernoulli_polys(n_max);
  }
  return kind == FamilyKind::euler
             ? euler_r(n_max, order_r, BuildPath::series)
             : bernoulli_r(n_max, order_r, BuildPath::series);
}

}  // namespace

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "latex") return OutputFormat::latex;
  throw OutOfRange("unknown output format '" + name + "'");
}

OutputDocument cmd_table(FamilyKind kind, int n_max, int order_r,
                         OutputFormat format,
                         const std::optional<BigRat>& at_q) {
  if (n_max < 0) throw OutOfRange("table bound must be non-negative");
  if (order_r < 0) throw OutOfRange("family order must be non-negative");
  const PolyFamily family = build_family(kind, n_max, order_r);

  // Specialized views when --at-q is given; PoleError is annotated with the
  // row so the caller sees which member degenerates.
  std::vector<BigRat> numbers_at;
  std::vector<std::vector<BigRat>> polys_at;
  if (at_q) {
    for (int n = 0; n <= n_max; ++n) {
      try {
        numbers_at.push_back(
            family.numbers[static_cast<std::size_t>(n)].eval(*at_q));
        std::vector<BigRat> coeffs;
        for (const QRat& c :
             family.members[static_cast<std::size_t>(n)].coeffs()) {
          coeffs.push_back(c.eval(*at_q));
        }
        polys_at.push_back(std::move(coeffs));
      } catch (const PoleError& e) {
        throw PoleError("row n=" + std::to_string(n) + ": " + e.what());
      }
    }
  }

  const std::string family_name = to_string(kind);
  if (format == OutputFormat::json) {
    Json doc;
    doc["command"] = "table";
    doc["family"] = family_name;
    doc["order"] = order_r;
    doc["n_max"] = n_max;
    doc["at_q"] = at_q ? Json(to_string(*at_q)) : Json(nullptr);
    Json rows = Json::array();
    for (int n = 0; n <= n_max; ++n) {
      Json row;
      row["n"] = n;
      if (at_q) {
        row["number"] = to_string(numbers_at[static_cast<std::size_t>(n)]);
        Json coeffs = Json::array();
        for (const BigRat& c : polys_at[static_cast<std::size_t>(n)]) {
          coeffs.push_back(to_string(c));
        }
        row["polynomial"] = coeffs;
      } else {
        row["number"] = qrat_json(family.numbers[static_cast<std::size_t>(n)]);
        row["polynomial"] =
            xpoly_json(family.members[static_cast<std::size_t>(n)]);
        row["pretty"] =
            family.members[static_cast<std::size_t>(n)].to_string();
      }
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return make_document(format, dump(doc));
  }

  const auto number_text = [&](int n) {
    if (at_q) return to_string(numbers_at[static_cast<std::size_t>(n)]);
    return family.numbers[static_cast<std::size_t>(n)].to_string();
  };
  const auto poly_text = [&](int n) {
    if (!at_q) return family.members[static_cast<std::size_t>(n)].to_string();
    std::vector<QRat> lifted;
    for (const BigRat& c : polys_at[static_cast<std::size_t>(n)]) {
      lifted.emplace_back(c);
    }
    return XPoly(std::move(lifted)).to_string();
  };

  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "n,number,polynomial\n";
    for (int n = 0; n <= n_max; ++n) {
      out << n << "," << csv_escape(number_text(n)) << ","
          << csv_escape(poly_text(n)) << "\n";
    }
    return make_document(format, out.str());
  }

  std::ostringstream out;
  const std::string symbol = kind == FamilyKind::euler ? "E" : "B";
  out << "\\begin{tabular}{rll}\n";
  out << "$n$ & $" << symbol << "^{(" << order_r << ")}_{n,q}$ & $" << symbol
      << "^{(" << order_r << ")}_{n,q}(x)$ \\\\\n\\hline\n";
  for (int n = 0; n <= n_max; ++n) {
    out << n << " & $" << latexify(number_text(n)) << "$ & $"
        << latexify(poly_text(n)) << "$ \\\\\n";
  }
  out << "\\end{tabular}\n";
  return make_document(format, out.str());
}

OutputDocument cmd_expand(const std::string& expression, int r,
                          OutputFormat format) {
  if (r < 1) throw OutOfRange("expansion order must be >= 1");
  const XPoly p = parse_xpoly(expression);
  std::vector<QRat> coefficients;
  PolyFamily basis;
  if (p.degree() >= 0) {
    coefficients = r == 1 ? expand_in_euler(p) : expand_in_euler_r(p, r);
    basis = r == 1 ? euler_polys(p.degree())
                   : euler_r(p.degree(), r, BuildPath::series);
  }
  XPoly reconstruction;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    reconstruction += basis.members[k].scaled(coefficients[k]);
  }
  const bool verified = reconstruction == p;

  if (format == OutputFormat::json) {
    Json doc;
    doc["command"] = "expand";
    doc["input"] = expression;
    doc["basis"] = r == 1 ? "euler" : "euler_r";
    doc["r"] = r;
    Json coeffs = Json::array();
    for (const QRat& c : coefficients) coeffs.push_back(qrat_json(c));
    doc["coefficients"] = std::move(coeffs);
    doc["reconstruction_verified"] = verified;
    return make_document(format, dump(doc), verified ? 0 : 1);
  }
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "k,coefficient\n";
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
      out << k << "," << csv_escape(coefficients[k].to_string()) << "\n";
    }
    out << "reconstruction_verified," << (verified ? "true" : "false") << "\n";
    return make_document(format, out.str(), verified ? 0 : 1);
  }
  std::ostringstream out;
  out << "\\begin{tabular}{rl}\n$k$ & $b_k$ \\\\\n\\hline\n";
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    out << k << " & $" << latexify(coefficients[k].to_string()) << "$ \\\\\n";
  }
  out << "\\end{tabular}\n";
  return make_document(format, out.str(), verified ? 0 : 1);
}

OutputDocument cmd_eval(const std::string& expression,
                        const std::optional<BigRat>& at_x,
                        const std::optional<BigRat>& at_q,
                        OutputFormat format) {
  const XPoly p = parse_xpoly(expression);

  Json result;
  std::string pretty;
  if (at_x && at_q) {
    const BigRat value = p.eval(QRat(*at_x)).eval(*at_q);
    pretty = to_string(value);
    result = pretty;
  } else if (at_x) {
    const QRat value = p.eval(QRat(*at_x));
    pretty = value.to_string();
    result = qrat_json(value);
  } else if (at_q) {
    std::vector<QRat> lifted;
    for (const QRat& c : p.coeffs()) lifted.emplace_back(c.eval(*at_q));
    const XPoly specialized{std::move(lifted)};
    pretty = specialized.to_string();
    Json coeffs = Json::array();
    for (const QRat& c : specialized.coeffs()) {
      coeffs.push_back(to_string(c.num().coeff(0)));
    }
    result = std::move(coeffs);
  } else {
    pretty = p.to_string();
    result = xpoly_json(p);
  }

  if (format == OutputFormat::json) {
    Json doc;
    doc["command"] = "eval";
    doc["input"] = expression;
    doc["at_x"] = at_x ? Json(to_string(*at_x)) : Json(nullptr);
    doc["at_q"] = at_q ? Json(to_string(*at_q)) : Json(nullptr);
    doc["result"] = std::move(result);
    doc["pretty"] = pretty;
    return make_document(format, dump(doc));
  }
  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "input,at_x,at_q,result\n";
    out << csv_escape(expression) << "," << (at_x ? to_string(*at_x) : "")
        << "," << (at_q ? to_string(*at_q) : "") << "," << csv_escape(pretty)
        << "\n";
    return make_document(format, out.str());
  }
  std::ostringstream out;
  out << "$" << latexify(pretty) << "$\n";
  return make_document(format, out.str());
}

OutputDocument cmd_verify(const std::string& id, int n_max, int r_max,
                          OutputFormat format, int jobs,
                          const std::vector<BigRat>& numeric_points,
                          const std::optional<Corruption>& corruption,
                          bool include_timings) {
  VerifyContext ctx(n_max, r_max);
  if (corruption) ctx.corrupt(*corruption);
  VerifyOptions opts;
  opts.numeric_points = numeric_points;
  opts.jobs = jobs;

  std::vector<IdentityReport> reports;
  if (id == "all") {
    reports = verify_all(ctx, opts);
  } else {
    reports.push_back(verify(ctx, id, opts));
  }
  bool all_pass = true;
  for (const IdentityReport& report : reports) all_pass &= report.pass;
  const int exit_code = all_pass ? 0 : 1;

  if (format == OutputFormat::json) {
    Json doc;
    doc["command"] = "verify";
    doc["id"] = id;
    doc["n_max"] = n_max;
    doc["r_max"] = r_max;
    Json points = Json::array();
    for (const BigRat& point : numeric_points) points.push_back(to_string(point));
    doc["numeric_points"] = std::move(points);
    doc["status"] = all_pass ? "pass" : "fail";
    Json entries = Json::array();
    for (const IdentityReport& report : reports) {
      Json entry;
      entry["id"] = report.id;
      entry["n_max"] = report.n_max;
      entry["r_max"] = report.r_max;
      entry["status"] = report.pass ? "pass" : "fail";
      Json witnesses = Json::array();
      for (const IdentityWitness& w : report.witnesses) {
        witnesses.push_back(Json{{"n", w.n},
                                 {"k", w.k},
                                 {"r", w.r},
                                 {"lhs", w.lhs},
                                 {"rhs", w.rhs}});
      }
      entry["witnesses"] = std::move(witnesses);
      // Timings are suppressed by default so identical invocations stay
      // byte-identical; --timings restores the measurements.
      entry["elapsed_ms"] = include_timings ? report.elapsed_ms : 0.0;
      entries.push_back(std::move(entry));
    }
    doc["reports"] = std::move(entries);
    return make_document(format, dump(doc), exit_code);
  }

  if (format == OutputFormat::csv) {
    std::ostringstream out;
    out << "id,status,witnesses,elapsed_ms\n";
    for (const IdentityReport& report : reports) {
      out << report.id << "," << (report.pass ? "pass" : "fail") << ","
          << report.witnesses.size() << ","
          << (include_timings ? report.elapsed_ms : 0.0) << "\n";
    }
    return make_document(format, out.str(), exit_code);
  }

  std::ostringstream out;
  out << "\\begin{tabular}{lll}\nid & status & witnesses \\\\\n\\hline\n";
  for (const IdentityReport& report : reports) {
    out << report.id << " & " << (report.pass ? "pass" : "fail") << " & "
        << report.witnesses.size() << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return make_document(format, out.str(), exit_code);
}

}  // namespace qumbral
