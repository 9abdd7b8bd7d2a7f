#include "fanqec/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "fanqec/error.hpp"
#include "fanqec/graphs.hpp"
#include "fanqec/qec.hpp"
#include "fanqec/roots.hpp"
#include "parallel.hpp"

namespace fanqec {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

using Json = nlohmann::ordered_json;

// Shown in usage text; the value stays in the option binding.
constexpr int kDefaultRootsCap = 120;

std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "plain") return OutputFormat::PlainText;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string rat_text(const Rat& r) { return r.get_str(); }

Json certificate_json(const QecCertificate& cert) {
  Json j;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          j["kind"] = "none";
        } else if constexpr (std::is_same_v<T, ClosedFormCert>) {
          j["kind"] = "closed_form";
          j["n"] = c.n;
          j["angle"] = c.angle;
        } else if constexpr (std::is_same_v<T, ZeroCert>) {
          j["kind"] = "zero_bracket";
          j["zero"] = c.value;
          j["lo"] = rat_text(c.bracket.lo);
          j["hi"] = rat_text(c.bracket.hi);
          j["exact"] = c.exact();
          j["simple"] = c.simple;
        } else {
          j["kind"] = "eigen_residual";
          j["dim"] = c.dim;
          j["off_norm"] = c.off_norm;
          j["sweeps"] = c.sweeps;
        }
      },
      cert);
  return j;
}

std::string certificate_text(const QecCertificate& cert) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "none";
        } else if constexpr (std::is_same_v<T, ClosedFormCert>) {
          return "-4 sin^2(" + format_double(c.angle) + ")";
        } else if constexpr (std::is_same_v<T, ZeroCert>) {
          if (c.exact()) return "exact zero " + rat_text(c.bracket.lo);
          return "zero " + format_double(c.value) + " in [" + rat_text(c.bracket.lo) + ", " +
                 rat_text(c.bracket.hi) + "]";
        } else {
          return "jacobi dim " + std::to_string(c.dim) + ", off-norm " + format_double(c.off_norm) +
                 ", sweeps " + std::to_string(c.sweeps);
        }
      },
      cert);
}

int cmd_poly(const std::string& fam, int n, OutputFormat fmt, std::ostream& out, std::ostream& err) {
  const auto tag = parse_family(fam);
  if (!tag) {
    err << "poly: unknown family '" << fam << "'\n";
    return kExitBadArgs;
  }
  if (n < family_min_index(*tag)) {
    err << "poly: index " << n << " is below " << family_min_index(*tag) << " for family " << fam << "\n";
    return kExitBadArgs;
  }
  const Poly p = family(*tag, n);
  switch (fmt) {
    case OutputFormat::PlainText: out << to_text(p) << "\n"; break;
    case OutputFormat::Csv:
      out << "degree,coeff\n";
      for (int k = 0; k <= p.degree(); ++k) out << k << "," << p.coeff(k).get_str() << "\n";
      break;
    case OutputFormat::Json:
      out << "{\"family\":\"" << family_name(*tag) << "\",\"n\":" << n << ",\"coeffs\":" << to_json_array(p)
          << "}\n";
      break;
  }
  return kExitOk;
}

int cmd_verify(int max_n, int roots_max_n, double tol, unsigned threads, OutputFormat fmt,
               const FamilySource& source, std::ostream& out, std::ostream& err) {
  if (max_n < 0) {
    err << "verify: --max-n must be >= 0\n";
    return kExitBadArgs;
  }
  if (roots_max_n < 0) roots_max_n = std::min(max_n, kDefaultRootsCap);
  const IdentityReport ids = identity_suite(max_n, source, threads);
  const auto structure = root_structure_checks(roots_max_n, tol, threads);
  const auto id_failures = ids.failures();
  std::vector<StructureCheck> st_failures;
  std::copy_if(structure.begin(), structure.end(), std::back_inserter(st_failures),
               [](const StructureCheck& c) { return !c.pass; });
  const bool ok = id_failures.empty() && st_failures.empty();

  switch (fmt) {
    case OutputFormat::PlainText:
      out << "identities: " << ids.checked.size() << " checked, " << id_failures.size() << " failed (max_n "
          << max_n << ")\n";
      out << "root structure: " << structure.size() << " checked, " << st_failures.size()
          << " failed (max_n " << roots_max_n << ")\n";
      for (const auto& f : id_failures) {
        out << "FAIL " << f.identity << " n=" << f.n << " lhs=" << to_text(f.lhs) << " rhs=" << to_text(f.rhs)
            << "\n";
      }
      for (const auto& f : st_failures) {
        out << "FAIL " << f.check << " n=" << f.n;
        if (!f.detail.empty()) out << " (" << f.detail << ")";
        out << "\n";
      }
      out << (ok ? "PASS" : "FAIL") << "\n";
      break;
    case OutputFormat::Csv:
      out << "kind,check,n,pass\n";
      for (const auto& c : ids.checked) {
        out << "identity," << csv_field(c.identity) << "," << c.n << "," << (c.pass ? 1 : 0) << "\n";
      }
      for (const auto& c : structure) {
        out << "structure," << csv_field(c.check) << "," << c.n << "," << (c.pass ? 1 : 0) << "\n";
      }
      break;
    case OutputFormat::Json: {
      std::string s = ids.to_json();
      s.pop_back();
      Json st;
      st["max_n"] = roots_max_n;
      st["checked"] = structure.size();
      st["failures"] = Json::array();
      for (const auto& f : st_failures) st["failures"].push_back({{"check", f.check}, {"n", f.n}, {"detail", f.detail}});
      out << s << ",\"structure\":" << st.dump() << "}\n";
      break;
    }
  }
  if (!ok) {
    for (const auto& f : id_failures) err << "verify: identity failed: " << f.identity << " at n=" << f.n << "\n";
    for (const auto& f : st_failures) err << "verify: check failed: " << f.check << " at n=" << f.n << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

void print_qec(const std::string& target, const std::string& label, const QecResult& r, OutputFormat fmt,
               std::ostream& out) {
  switch (fmt) {
    case OutputFormat::PlainText:
      out << "value: " << format_double(r.value) << "\n"
          << "method: " << method_name(r.method) << "\n"
          << "certificate: " << certificate_text(r.certificate) << "\n";
      break;
    case OutputFormat::Csv:
      out << "target,value,method\n"
          << csv_field(target + " " + label) << "," << format_double(r.value) << "," << method_name(r.method)
          << "\n";
      break;
    case OutputFormat::Json: {
      Json j;
      j["target"] = target;
      j[target == "fan" ? "n" : "file"] = target == "fan" ? Json(std::stoi(label)) : Json(label);
      j["value"] = r.value;
      j["method"] = method_name(r.method);
      j["certificate"] = certificate_json(r.certificate);
      out << j.dump() << "\n";
      break;
    }
  }
}

int cmd_qec(const std::string& target, const std::string& arg, const std::string& method, double tol,
            OutputFormat fmt, std::ostream& out, std::ostream& err) {
  const auto request = parse_request(method);
  if (!request) {
    err << "qec: unknown method '" << method << "'\n";
    return kExitBadArgs;
  }
  if (target == "fan") {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      err << "qec fan: '" << arg << "' is not an integer\n";
      return kExitBadArgs;
    }
    if (n < 1) {
      err << "qec fan: n must be >= 1\n";
      return kExitBadArgs;
    }
    print_qec("fan", std::to_string(n), qec_fan(n, *request, tol), fmt, out);
    return kExitOk;
  }
  if (target == "graph") {
    if (*request != QecRequest::Auto && *request != QecRequest::Numeric) {
      err << "qec graph: only the numeric method applies to arbitrary graphs\n";
      return kExitBadArgs;
    }
    const Graph g = read_edge_list_file(arg);
    print_qec("graph", arg, qec_numeric(g, tol), fmt, out);
    return kExitOk;
  }
  err << "qec: target must be 'fan' or 'graph'\n";
  return kExitBadArgs;
}

struct TableRow {
  int n = 0;
  QecResult result;
  std::optional<std::pair<double, double>> bounds;
  std::string error;
};

int cmd_table(const std::string& target, int from, int to, const std::string& method, double tol,
              unsigned threads, OutputFormat fmt, std::ostream& out, std::ostream& err) {
  if (target != "fan") {
    err << "table: only 'fan' tables are supported\n";
    return kExitBadArgs;
  }
  if (from < 1 || from > to) {
    err << "table: need 1 <= from <= to, got " << from << " " << to << "\n";
    return kExitBadArgs;
  }
  const auto request = parse_request(method);
  if (!request) {
    err << "table: unknown method '" << method << "'\n";
    return kExitBadArgs;
  }
  std::vector<TableRow> rows(to - from + 1);
  detail::parallel_for(
      from, to + 1,
      [&](int n) {
        TableRow& row = rows[n - from];
        row.n = n;
        try {
          row.result = qec_fan(n, *request, tol);
          if (n >= 3 && n % 2 == 1) row.bounds = fan_odd_bounds(n);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
      },
      threads);
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      err << "table: n=" << row.n << ": " << row.error << "\n";
      return kExitBadArgs;
    }
  }

  switch (fmt) {
    case OutputFormat::PlainText: {
      char line[160];
      std::snprintf(line, sizeof line, "%-6s %-24s %-18s %-24s %-24s\n", "n", "qec", "method", "lower", "upper");
      out << line;
      for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-6d %-24s %-18s %-24s %-24s\n", r.n,
                      format_double(r.result.value).c_str(), std::string(method_name(r.result.method)).c_str(),
                      r.bounds ? format_double(r.bounds->first).c_str() : "-",
                      r.bounds ? format_double(r.bounds->second).c_str() : "-");
        out << line;
      }
      break;
    }
    case OutputFormat::Csv:
      out << "n,qec,method,lower,upper\n";
      for (const auto& r : rows) {
        out << r.n << "," << format_double(r.result.value) << "," << method_name(r.result.method) << ",";
        if (r.bounds) out << format_double(r.bounds->first) << "," << format_double(r.bounds->second);
        else out << ",";
        out << "\n";
      }
      break;
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json j;
        j["n"] = r.n;
        j["qec"] = r.result.value;
        j["method"] = method_name(r.result.method);
        j["lower"] = r.bounds ? Json(r.bounds->first) : Json(nullptr);
        j["upper"] = r.bounds ? Json(r.bounds->second) : Json(nullptr);
        arr.push_back(std::move(j));
      }
      out << Json{{"rows", std::move(arr)}}.dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_dist(const std::string& file, OutputFormat fmt, std::ostream& out) {
  const DistMatrix d = distance_matrix(read_edge_list_file(file));
  const int n = d.size();
  switch (fmt) {
    case OutputFormat::PlainText:
    case OutputFormat::Csv: {
      const char* sep = fmt == OutputFormat::Csv ? "," : " ";
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out << (j ? sep : "") << d(i, j);
        out << "\n";
      }
      break;
    }
    case OutputFormat::Json: {
      Json rows = Json::array();
      for (int i = 0; i < n; ++i) {
        Json r = Json::array();
        for (int j = 0; j < n; ++j) r.push_back(d(i, j));
        rows.push_back(std::move(r));
      }
      out << Json{{"n", n}, {"d", std::move(rows)}}.dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const FamilySource& source) {
  CLI::App app{"Partial Chebyshev polynomials and the quadratic embedding constant of fan graphs", "fanqec"};
  app.require_subcommand(1);

  std::string format = "plain";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
  };
  double tol = 1e-12;
  unsigned threads = 0;
  std::string method = "auto";

  auto* poly = app.add_subcommand("poly", "Print the ascending coefficient list of a polynomial");
  std::string fam;
  int poly_n = 0;
  poly->add_option("family", fam, "u t v w ue uo ucomp uecomp uocomp s phi")->required();
  poly->add_option("n", poly_n, "Index")->required();
  add_format(poly);

  auto* verify = app.add_subcommand("verify", "Run the exact identity battery and the zero-structure checks");
  int max_n = 0;
  int roots_max_n = -1;
  verify->add_option("--max-n", max_n, "Largest index for the identity battery")->required();
  verify->add_option("--roots-max-n", roots_max_n,
                     "Largest index for the zero-structure checks (default min(max-n, " +
                         std::to_string(kDefaultRootsCap) + "))");
  verify->add_option("--tol", tol, "Bracket width for zero localization")->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads, 0 = hardware count")->capture_default_str();
  add_format(verify);

  auto* qec = app.add_subcommand("qec", "Quadratic embedding constant of a fan or an edge-list graph");
  std::string qec_target, qec_arg;
  qec->add_option("target", qec_target, "fan | graph")->required()->check(CLI::IsMember({"fan", "graph"}));
  qec->add_option("arg", qec_arg, "n for fan, edge-list file for graph")->required();
  qec->add_option("--method", method, "auto | closed | root | numeric")->capture_default_str();
  qec->add_option("--tol", tol, "Root bracket width / Jacobi relative tolerance")->capture_default_str();
  add_format(qec);

  auto* table = app.add_subcommand("table", "QEC table of fan graphs over a range of n");
  std::string table_target;
  int from = 0, to = 0;
  table->add_option("target", table_target, "fan")->required();
  table->add_option("from", from, "First n")->required();
  table->add_option("to", to, "Last n")->required();
  table->add_option("--method", method, "auto | closed | root | numeric")->capture_default_str();
  table->add_option("--tol", tol, "Root bracket width")->capture_default_str();
  table->add_option("--threads", threads, "Worker threads, 0 = hardware count")->capture_default_str();
  add_format(table);

  auto* dist = app.add_subcommand("dist", "Distance matrix of an edge-list graph");
  std::string dist_file;
  dist->add_option("file", dist_file, "Edge-list file")->required();
  add_format(dist);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  const OutputFormat fmt = *parse_format(format);
  try {
    if (*poly) return cmd_poly(fam, poly_n, fmt, out, err);
    if (*verify) return cmd_verify(max_n, roots_max_n, tol, threads, fmt, source, out, err);
    if (*qec) return cmd_qec(qec_target, qec_arg, method, tol, fmt, out, err);
    if (*table) return cmd_table(table_target, from, to, method, tol, threads, fmt, out, err);
    if (*dist) return cmd_dist(dist_file, fmt, out);
  } catch (const Disconnected& e) {
    err << "error: " << e.what() << "\n";
    return kExitDisconnected;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}

}  // namespace fanqec
