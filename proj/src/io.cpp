// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "qgraph/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace qgraph {

using nlohmann::json;

json complex_to_json(Complex z) {
  // + 0.0 folds negative zeros away so canonical output stays tidy.
  return json::array({z.real() + 0.0, z.imag() + 0.0});
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ParseError("complex entries must be [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t nr = rows != SIZE_MAX ? rows : j.size();
  if (j.size() != nr) throw ParseError("matrix has the wrong number of rows");
  std::size_t nc = cols;
  if (nc == SIZE_MAX) {
    nc = nr == 0 ? 0 : j[0].size();
  }
  CMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (!j[i].is_array() || j[i].size() != nc) {
      throw ParseError("matrix row has the wrong length");
    }
    for (std::size_t c = 0; c < nc; ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

json coupling_to_json(const Coupling& c) {
  return json{{"n", c.n}, {"A", matrix_to_json(c.A)}, {"B", matrix_to_json(c.B)}};
}

Coupling coupling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("A") ||
      !j.contains("B")) {
    throw ParseError("coupling document needs fields n, A, B");
  }
  Coupling c;
  c.n = j.at("n").get<std::size_t>();
  c.A = matrix_from_json(j.at("A"), c.n, c.n);
  c.B = matrix_from_json(j.at("B"), c.n, c.n);
  if (!c.A.all_finite() || !c.B.all_finite()) {
    throw ParseError("coupling matrices contain non-finite entries");
  }
  return c;
}

json st_form_to_json(const STForm& f) {
  json perm = json::array();
  for (std::size_t p : f.perm) perm.push_back(p + 1);
  return json{{"n", f.n},
              {"m", f.m},
              {"perm", perm},
              {"S", matrix_to_json(f.S)},
              {"T", matrix_to_json(f.T)}};
}

STForm st_form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") ||
      !j.contains("perm") || !j.contains("S") || !j.contains("T")) {
    throw ParseError("canonical-form document needs fields n, m, perm, S, T");
  }
  STForm f;
  f.n = j.at("n").get<std::size_t>();
  f.m = j.at("m").get<std::size_t>();
  if (f.m > f.n) throw ParseError("m may not exceed n");
  const json& perm = j.at("perm");
  if (!perm.is_array() || perm.size() != f.n) {
    throw ParseError("perm must list all n edges");
  }
  std::vector<bool> seen(f.n, false);
  for (const json& e : perm) {
    const std::size_t p = e.get<std::size_t>();
    if (p < 1 || p > f.n || seen[p - 1]) {
      throw ParseError("perm must be a bijection on 1..n");
    }
    seen[p - 1] = true;
    f.perm.push_back(p - 1);
  }
  f.S = matrix_from_json(j.at("S"), f.m, f.m);
  f.T = matrix_from_json(j.at("T"), f.m, f.n - f.m);
  if (!f.S.all_finite() || !f.T.all_finite()) {
    throw ParseError("canonical-form matrices contain non-finite entries");
  }
  if (!is_hermitian(f.S)) {
    throw ParseError("S must be Hermitian");
  }
  return f;
}

namespace {

std::string pair_key(std::size_t j, std::size_t k) {
  return std::to_string(j + 1) + "," + std::to_string(k + 1);
}

}  // namespace

json approx_params_to_json(const ApproxParams& p) {
  json edges = json::array();
  for (const auto& [j, k] : p.topology.edges) {
    edges.push_back(json::array({j + 1, k + 1}));
  }
  json v = json::array();
  for (double x : p.v) v.push_back(x);
  json w = json::object();
  for (const auto& [key, val] : p.w) w[pair_key(key.first, key.second)] = val;
  json a = json::object();
  for (const auto& [key, val] : p.a) a[pair_key(key.first, key.second)] = val;
  return json{{"d", p.d}, {"edges", edges}, {"v", v}, {"w", w}, {"a", a}};
}

json admissibility_to_json(const AdmissibilityReport& rep) {
  return json{{"rank_ok", rep.rank_ok},
              {"hermitian_ok", rep.hermitian_ok},
              {"rank_found", rep.rank_found},
              {"hermiticity_defect", rep.hermiticity_defect},
              {"admissible", rep.admissible()}};
}

void write_convergence_csv(const ConvergenceReport& rep, std::ostream& out) {
  out << "d,hs_norm,nn,nJ,Jn,JJ\n";
  std::ostringstream line;
  line.precision(17);
  for (std::size_t i = 0; i < rep.d_values.size(); ++i) {
    line.str("");
    line << rep.d_values[i] << "," << rep.hs_norms[i] << ","
         << rep.blocks[i].nn << "," << rep.blocks[i].nj << ","
         << rep.blocks[i].jn << "," << rep.blocks[i].jj << "\n";
    out << line.str();
  }
  line.str("");
  line << "# slope=" << rep.slope << " intercept=" << rep.intercept << "\n";
  out << line.str();
}

json convergence_to_json(const ConvergenceReport& rep) {
  json blocks = json::array();
  for (const auto& b : rep.blocks) {
    blocks.push_back(json{{"nn", b.nn}, {"nJ", b.nj}, {"Jn", b.jn}, {"JJ", b.jj}});
  }
  return json{{"kappa", complex_to_json(rep.kappa)},
              {"d_values", rep.d_values},
              {"hs_norms", rep.hs_norms},
              {"blocks", blocks},
              {"slope", rep.slope},
              {"intercept", rep.intercept},
              {"envelope_c", rep.envelope_c},
              {"envelope_ok", rep.envelope_ok}};
}

STForm st_form_from_document(const json& j) {
  if (j.is_object() && j.contains("A") && j.contains("B")) {
    return to_st_form(coupling_from_json(j));
  }
  if (j.is_object() && j.contains("S") && j.contains("m")) {
    return st_form_from_json(j);
  }
  throw ParseError("document is neither a coupling nor a canonical form");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qgraph
