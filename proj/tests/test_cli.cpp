#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "relexp/cli.hpp"

using relexp::cli::run;
using doctest::Approx;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 41.998495647329432, 1e-300, -2.5e17}) {
    const std::string s = relexp::cli::format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("compute text output") {
  const Outcome o = call({"compute", "--Z", "1", "--n", "1", "--kappa", "-1", "--k", "1"});
  CHECK(o.code == 0);
  CHECK(o.out.find("1.4999733739682") != std::string::npos);
}

TEST_CASE("compute json round-trip") {
  const Outcome o =
      call({"compute", "--Z", "1", "--n", "2", "--kappa", "-1", "--k", "2", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["params"]["n_r"] == 1);
  CHECK(j["params"]["gamma"].get<double>() == Approx(0.99997337396827).epsilon(1e-12));
  REQUIRE(j["results"].size() >= 4);
  for (const auto& r : j["results"]) CHECK(r["value"].get<double>() == Approx(41.998495647329432).epsilon(1e-11));
  bool pochhammer_skipped = false;
  for (const auto& s : j["skipped"])
    if (s["method"] == "pochhammer") pochhammer_skipped = s["reason"] == "n_r != 0";
  CHECK(pochhammer_skipped);
  CHECK(j["max_rel_dev"].get<double>() <= 1e-9);
}

TEST_CASE("compute csv") {
  const Outcome o = call({"compute", "--Z", "80", "--n", "2", "--kappa", "1", "--k", "2", "--method", "oracle",
                          "--method", "cg", "--format", "csv"});
  REQUIRE(o.code == 0);
  const auto lines = split_lines(o.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "Z,n,kappa,k,alpha,method,value,skip_reason,max_rel_dev");
  CHECK(lines[1].find(",cg,") != std::string::npos);
  CHECK(lines[2].find(",oracle,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({}).code == 1);
  CHECK(call({"compute", "--Z", "1"}).code == 1);
  CHECK(call({"compute", "--Z", "1", "--n", "1", "--kappa", "-1", "--k", "1", "--method", "bogus"}).code == 1);
  // explicitly requested but inapplicable
  CHECK(call({"compute", "--Z", "1", "--n", "2", "--kappa", "-1", "--k", "1", "--method", "pochhammer"}).code == 1);
  // divergent moment
  CHECK(call({"compute", "--Z", "1", "--n", "2", "--kappa", "-1", "--k", "-3"}).code == 1);
  const Outcome bad = call({"compute", "--Z", "200", "--n", "1", "--kappa", "-1", "--k", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("alpha*Z < |kappa| violated") != std::string::npos);
  CHECK(call({"compute", "--Z", "80", "--n", "5", "--kappa", "-3", "--k", "4", "--tol", "1e-18"}).code == 2);
}

TEST_CASE("alpha precedence") {
  const std::vector<std::string> base{"compute", "--Z", "1", "--n", "1", "--kappa", "-1", "--k", "1",
                                      "--method", "oracle", "--format", "json"};
  auto value_of = [](const Outcome& o) { return nlohmann::json::parse(o.out)["params"]["alpha"].get<double>(); };
  ::unsetenv("RELEXP_ALPHA");
  CHECK(value_of(call(base)) == Approx(1.0 / 137.035999084).epsilon(1e-15));
  ::setenv("RELEXP_ALPHA", "0.01", 1);
  CHECK(value_of(call(base)) == 0.01);
  auto with_flag = base;
  with_flag.insert(with_flag.end(), {"--alpha", "0.001"});
  CHECK(value_of(call(with_flag)) == 0.001);
  ::setenv("RELEXP_ALPHA", "abc", 1);
  CHECK(call(base).code == 1);
  ::unsetenv("RELEXP_ALPHA");
}

TEST_CASE("table is deterministic and thread-independent") {
  const std::vector<std::string> args{"table", "--Z", "80", "1", "20", "--n-max", "3", "--k", "-3", "-1", "0", "2",
                                      "--method", "all"};
  const Outcome a = call(args);
  REQUIRE(a.code == 0);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "4"});
  CHECK(call(args).out == a.out);
  CHECK(call(threaded).out == a.out);

  const auto lines = split_lines(a.out);
  CHECK(lines[0] == "Z,n,kappa,n_r,gamma,N,k,method,value,rel_dev_vs_oracle,skip_reason");
  // 3 charges · 9 orbitals · 4 powers · 6 methods
  CHECK(lines.size() == 1 + 3 * 9 * 4 * 6);
  CHECK(lines[1].rfind("1,1,-1,", 0) == 0);
  bool pole_row = false;
  for (const auto& l : lines)
    if (l.rfind("1,2,-1,", 0) == 0 && l.find(",-3,closed,") != std::string::npos)
      pole_row = l.find("gamma<=1 pole") != std::string::npos;
  CHECK(pole_row);
}

TEST_CASE("table json") {
  const Outcome o = call({"table", "--Z", "1", "--n-max", "1", "--k", "1", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  REQUIRE(j.size() == 6);
  CHECK(j[0]["method"] == "hyp3f2");
  CHECK(j[0]["value"].get<double>() == Approx(1.499973373968267).epsilon(1e-13));
}

TEST_CASE("verify") {
  const Outcome a = call({"verify", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out.find("verify: all suites passed") != std::string::npos);
  CHECK(call({"verify", "--seed", "7"}).out == a.out);
  CHECK(call({"verify", "--tol", "1e-15"}).code == 2);
}

}  // TEST_SUITE
