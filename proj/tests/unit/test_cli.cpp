#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "fanqec/cli.hpp"
#include "fanqec/qec.hpp"

using namespace fanqec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const FamilySource& source = family) {
  args.insert(args.begin(), "fanqec");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, source);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<std::string> lines(const std::string& s) {
  auto v = split(s, '\n');
  if (!v.empty() && v.back().empty()) v.pop_back();
  return v;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::ofstream(name) << body;
  return name;
}

}  // namespace

TEST_CASE("poly subcommand") {
  auto r = run({"poly", "phi", "0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"family\":\"phi\",\"n\":0,\"coeffs\":[1,-2,1]}\n");
  CHECK(r.err.empty());

  r = run({"poly", "ue", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "[1, 2]\n");

  r = run({"poly", "u", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "[]\n");

  r = run({"poly", "s", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "degree,coeff\n0,-2\n1,-2\n2,4\n");

  r = run({"poly", "u", "200", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coeffs"].size() == 201);
}

TEST_CASE("poly rejects bad arguments") {
  CHECK(run({"poly", "zz", "3"}).code == kExitBadArgs);
  CHECK(run({"poly", "u", "-3"}).code == kExitBadArgs);
  CHECK(run({"poly", "s", "-1"}).code == kExitBadArgs);
  CHECK(run({"poly", "u", "abc"}).code == kExitBadArgs);
  CHECK(run({"poly", "u", "2", "--format", "xml"}).code == kExitBadArgs);
  CHECK(run({"poly"}).code == kExitBadArgs);
  CHECK(run({}).code == kExitBadArgs);
  const auto r = run({"poly", "zz", "3"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", "--max-n", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);
  CHECK(lines(r.out).back() == "PASS");

  CHECK(run({"verify", "--max-n", "0"}).code == 0);
  CHECK(run({"verify", "--max-n", "-1"}).code == kExitBadArgs);
  CHECK(run({"verify"}).code == kExitBadArgs);

  r = run({"verify", "--max-n", "8", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["max_n"] == 8);
  CHECK(j["failures"].empty());
  CHECK(j["structure"]["failures"].empty());

  r = run({"verify", "--max-n", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).front() == "kind,check,n,pass");
  for (const auto& l : lines(r.out)) CHECK(l.back() != '0');
}

TEST_CASE("verify on a corrupted family exits 1 and names the identity") {
  FamilySource corrupted = [](FamilyTag tag, int n) {
    Poly p = family(tag, n);
    if (tag == FamilyTag::Ue && n == 4) p += Poly{1};
    return p;
  };
  auto r = run({"verify", "--max-n", "10"}, corrupted);
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.out.find("FAIL U[n] = Ue[n] Uo[n] n=4") != std::string::npos);
  CHECK(r.err.find("U[n] = Ue[n] Uo[n]") != std::string::npos);

  r = run({"verify", "--max-n", "10", "--format", "json"}, corrupted);
  CHECK(r.code == kExitCheckFailed);
  const auto j = nlohmann::json::parse(r.out);
  bool named = false;
  for (const auto& f : j["failures"]) named = named || (f["identity"] == "U[n] = Ue[n] Uo[n]" && f["n"] == 4);
  CHECK(named);
}

TEST_CASE("qec subcommand") {
  auto r = run({"qec", "fan", "3"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).front() == "value: -0.5");

  r = run({"qec", "fan", "4", "--method", "numeric", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "numeric_oracle");
  CHECK(std::abs(j["value"].get<double>() + 0.3819660113) <= 1e-9);
  CHECK(j["certificate"]["kind"] == "eigen_residual");

  r = run({"qec", "fan", "7", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "root_based");
  CHECK(j["certificate"]["kind"] == "zero_bracket");
  CHECK(j["value"].get<double>() == qec_fan(7).value);

  r = run({"qec", "fan", "6", "--method", "closed", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).front() == "target,value,method");

  CHECK(run({"qec", "fan", "5", "--method", "closed"}).code == kExitBadArgs);
  CHECK(run({"qec", "fan", "0"}).code == kExitBadArgs);
  CHECK(run({"qec", "fan", "x"}).code == kExitBadArgs);
  CHECK(run({"qec", "fan", "3", "--method", "magic"}).code == kExitBadArgs);
  CHECK(run({"qec", "tree", "3"}).code == kExitBadArgs);
}

TEST_CASE("qec graph subcommand") {
  const auto p5 = write_temp("cli_path5.edges", "# P_5\n0 1\n1 2\n2 3\n3 4\n");
  auto r = run({"qec", "graph", p5, "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(qec_numeric(path(5)).value).epsilon(1e-15));
  CHECK(run({"qec", "graph", p5, "--method", "root"}).code == kExitBadArgs);

  const auto disc = write_temp("cli_disconnected.edges", "0 1\n2 3\n");
  r = run({"qec", "graph", disc});
  CHECK(r.code == kExitDisconnected);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());

  const auto bad = write_temp("cli_bad.edges", "0 1\nfoo\n");
  CHECK(run({"qec", "graph", bad}).code == kExitBadArgs);
  CHECK(run({"qec", "graph", "/nonexistent.edges"}).code == kExitBadArgs);
  for (const auto& f : {p5, disc, bad}) std::remove(f.c_str());
}

TEST_CASE("table subcommand") {
  auto r = run({"table", "fan", "1", "5", "--format", "csv"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == "n,qec,method,lower,upper");
  const auto row3 = split(ls[3], ',');
  CHECK(row3[0] == "3");
  CHECK(std::stod(row3[1]) == -0.5);
  CHECK(split(ls[1], ',')[3].empty());
  CHECK_FALSE(row3[3].empty());

  r = run({"table", "fan", "2", "2"});
  CHECK(r.code == 0);
  REQUIRE(lines(r.out).size() == 2);
  CHECK(lines(r.out)[1].find("known_small") != std::string::npos);

  r = run({"table", "fan", "4", "4", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["qec"].get<double>() == fan_even_closed_form(4));
  CHECK(j["rows"][0]["lower"].is_null());

  CHECK(run({"table", "fan", "5", "4"}).code == kExitBadArgs);
  CHECK(run({"table", "fan", "0", "4"}).code == kExitBadArgs);
  CHECK(run({"table", "star", "1", "4"}).code == kExitBadArgs);
  CHECK(run({"table", "fan", "3", "5", "--method", "closed"}).code == kExitBadArgs);
}

TEST_CASE("table output round-trips bit-exactly") {
  const auto csv = run({"table", "fan", "1", "60", "--format", "csv"});
  const auto json = run({"table", "fan", "1", "60", "--format", "json"});
  REQUIRE(csv.code == 0);
  REQUIRE(json.code == 0);
  const auto ls = lines(csv.out);
  const auto j = nlohmann::json::parse(json.out);
  REQUIRE(ls.size() == 61);
  REQUIRE(j["rows"].size() == 60);
  for (int n = 1; n <= 60; ++n) {
    const double v = qec_fan(n).value;
    const auto f = split(ls[n], ',');
    CHECK(std::stoi(f[0]) == n);
    CHECK(std::strtod(f[1].c_str(), nullptr) == v);
    CHECK(j["rows"][n - 1]["qec"].get<double>() == v);
    CHECK(f[2] == std::string(method_name(qec_fan(n).method)));
    if (n >= 3 && n % 2 == 1) {
      const auto [lo, hi] = fan_odd_bounds(n);
      CHECK(std::strtod(f[3].c_str(), nullptr) == lo);
      CHECK(std::strtod(f[4].c_str(), nullptr) == hi);
      CHECK(j["rows"][n - 1]["lower"].get<double>() == lo);
      CHECK(j["rows"][n - 1]["upper"].get<double>() == hi);
    }
  }
}

TEST_CASE("dist subcommand") {
  const auto p3 = write_temp("cli_path3.edges", "0 1\n1 2\n");
  auto r = run({"dist", p3, "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "0,1,2\n1,0,1\n2,1,0\n");
  r = run({"dist", p3, "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["d"][0][2] == 2);
  std::remove(p3.c_str());
}

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(format_double(-0.5) == "-0.5");
  CHECK(std::strtod(format_double(0.1).c_str(), nullptr) == 0.1);
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("the installed binary uses the same exit codes") {
  const std::string bin = FANQEC_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("poly ue 2") == 0);
  CHECK(status("table fan 5 4") == 2);
  CHECK(status("verify --max-n 3") == 0);
  CHECK(status("--help") == 0);
}
