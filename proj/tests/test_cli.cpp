// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qgraph/cli.hpp"
#include "qgraph/io.hpp"

using namespace qgraph;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = (fs::temp_directory_path() /
             ("qgraph_cli_test_" + std::to_string(++counter) + ".json"))
                .string();
    std::ofstream f(path_, std::ios::binary);
    f << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string dirichlet_doc(std::size_t n) {
  Coupling c;
  c.n = n;
  c.A = CMatrix::identity(n);
  c.B = CMatrix(n, n);
  return coupling_to_json(c).dump();
}

}  // namespace

TEST_CASE("validate subcommand exit codes") {
  TempFile good(dirichlet_doc(3));
  const CliResult ok = run({"validate", good.path()});
  CHECK(ok.code == 0);
  const json rep = json::parse(ok.out);
  CHECK(rep.at("admissible").get<bool>());
  CHECK(rep.at("rank_found").get<std::size_t>() == 3);

  Coupling zero;
  zero.n = 2;
  zero.A = CMatrix(2, 2);
  zero.B = CMatrix(2, 2);
  TempFile bad(coupling_to_json(zero).dump());
  const CliResult rejected = run({"validate", bad.path()});
  CHECK(rejected.code == 1);
  CHECK(json::parse(rejected.out).at("rank_found").get<std::size_t>() == 0);

  TempFile malformed("{ this is not json");
  CHECK(run({"validate", malformed.path()}).code == 2);
  CHECK(run({"validate", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("normalize matches the delta constructor and is deterministic") {
  TempFile input(coupling_to_json(st_to_coupling(delta_coupling(3, 2.0))).dump());
  const CliResult first = run({"normalize", input.path()});
  REQUIRE(first.code == 0);
  const json doc = json::parse(first.out);
  CHECK(doc.at("m").get<std::size_t>() == 1);
  CHECK(doc.at("n").get<std::size_t>() == 3);
  CHECK(doc.at("perm") == json::array({1, 2, 3}));
  CHECK(doc.at("S") == json::parse("[[[2.0,0.0]]]"));
  CHECK(doc.at("T") == json::parse("[[[1.0,0.0],[1.0,0.0]]]"));

  const CliResult second = run({"normalize", input.path()});
  CHECK(second.out == first.out);

  // Normalizing the expansion of a canonical form returns it unchanged.
  const STForm f = st_form_from_json(doc);
  TempFile again(coupling_to_json(st_to_coupling(f)).dump());
  const CliResult third = run({"normalize", again.path()});
  CHECK(json::parse(third.out) == doc);

  // Inadmissible input is a domain failure.
  Coupling zero;
  zero.n = 2;
  zero.A = CMatrix(2, 2);
  zero.B = CMatrix(2, 2);
  TempFile bad(coupling_to_json(zero).dump());
  CHECK(run({"normalize", bad.path()}).code == 1);
}

TEST_CASE("build emits the network design") {
  TempFile input(coupling_to_json(st_to_coupling(delta_coupling(3, 2.0))).dump());
  const CliResult res = run({"build", input.path(), "--d", "0.05"});
  REQUIRE(res.code == 0);
  const json doc = json::parse(res.out);
  CHECK(doc.at("d").get<double>() == 0.05);
  CHECK(doc.at("edges") == json::parse("[[1,2],[1,3]]"));
  CHECK(doc.at("v")[1].get<double>() == doctest::Approx(20.0));
  CHECK(doc.at("w").at("1,2").get<double>() == doctest::Approx(-20.0));
  CHECK(doc.at("a").at("1,2").get<double>() == 0.0);
}

TEST_CASE("kernel emits CSV for both systems") {
  TempFile input(coupling_to_json(st_to_coupling(delta_coupling(2, 1.0))).dump());
  const CliResult star = run({"kernel", input.path()});
  REQUIRE(star.code == 0);
  CHECK(star.out.rfind("row_index,col_index,x,y,re,im\n", 0) == 0);
  // 2 x 2 index pairs, 4 x 4 sample points each.
  CHECK(std::count(star.out.begin(), star.out.end(), '\n') == 1 + 4 * 16);

  const CliResult net = run({"kernel", input.path(), "--d", "0.05"});
  REQUIRE(net.code == 0);
  CHECK(net.out.find("1:2,") != std::string::npos);
  // (2 halflines + 2 segment halves)^2 pairs, 16 points each.
  CHECK(std::count(net.out.begin(), net.out.end(), '\n') == 1 + 16 * 16);
}

TEST_CASE("converge reports the sweep and the envelope verdict") {
  TempFile input(coupling_to_json(st_to_coupling(delta_coupling(2, 1.0))).dump());
  const CliResult res =
      run({"converge", input.path(), "--d-list", "0.1,0.05,0.025"});
  // The CSV is emitted either way; the exit code mirrors the envelope check.
  std::istringstream lines(res.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "d,hs_norm,nn,nJ,Jn,JJ");
  std::vector<double> d, hs;
  std::string line;
  while (std::getline(lines, line) && line.rfind("#", 0) != 0) {
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    d.push_back(std::stod(cell));
    std::getline(cells, cell, ',');
    hs.push_back(std::stod(cell));
  }
  REQUIRE(d.size() == 3);
  CHECK(line.rfind("# slope=", 0) == 0);
  const double c_env = hs[0] / std::sqrt(d[0]);
  bool envelope = true;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (hs[i] > c_env * std::sqrt(d[i]) * (1.0 + 1e-12)) envelope = false;
  }
  CHECK(res.code == (envelope ? 0 : 1));

  CHECK(run({"converge", input.path(), "--d-list", "0.1,0.05"}).code == 2);

  const CliResult as_json = run(
      {"converge", input.path(), "--d-list", "0.1,0.05,0.025", "--json"});
  const json doc = json::parse(as_json.out);
  CHECK(doc.at("hs_norms").size() == 3);
  CHECK(doc.at("d_values") == json::parse("[0.1,0.05,0.025]"));
  CHECK(doc.contains("slope"));
  CHECK(doc.contains("envelope_ok"));
  CHECK(doc.at("hs_norms")[0].get<double>() == doctest::Approx(hs[0]));
}

TEST_CASE("converge names the degenerate d") {
  // S_12 tuned so the pair denominator cancels exactly at d = 0.05.
  STForm f;
  f.n = 3;
  f.m = 2;
  f.perm = {0, 1, 2};
  f.S = CMatrix(2, 2);
  f.S(0, 1) = 20.0;
  f.S(1, 0) = 20.0;
  f.T = CMatrix(2, 1);
  f.T(0, 0) = 1.0;
  f.T(1, 0) = -1.0;
  TempFile input(st_form_to_json(f).dump());
  const CliResult res =
      run({"converge", input.path(), "--d-list", "0.1,0.05,0.025"});
  CHECK(res.code == 2);
  CHECK(res.err.find("0.05") != std::string::npos);
}
