// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qgraph/approximation.hpp"
#include "qgraph/convergence.hpp"
#include "qgraph/coupling.hpp"

namespace qgraph {

// Complex numbers serialize as [re, im]; matrices as row-major nested arrays
// of such pairs. All indices in documents are 1-based.

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const CMatrix& m);
/// Parses a nested-array matrix; `rows`/`cols` pin degenerate shapes (pass
/// SIZE_MAX to infer both from the data).
CMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows,
                         std::size_t cols);

/// {"n": int, "A": [[[re,im],...],...], "B": ...}
nlohmann::json coupling_to_json(const Coupling& c);
Coupling coupling_from_json(const nlohmann::json& j);

/// {"n": int, "m": int, "perm": [int...], "S": ..., "T": ...}
nlohmann::json st_form_to_json(const STForm& f);
STForm st_form_from_json(const nlohmann::json& j);

/// {"d": real, "edges": [[j,k],...], "v": [real...],
///  "w": {"j,k": real,...}, "a": {"j,k": real,...}}  with j < k.
nlohmann::json approx_params_to_json(const ApproxParams& p);

nlohmann::json admissibility_to_json(const AdmissibilityReport& rep);

/// CSV with header d,hs_norm,nn,nJ,Jn,JJ and a trailing
/// "# slope=... intercept=..." line.
void write_convergence_csv(const ConvergenceReport& rep, std::ostream& out);
nlohmann::json convergence_to_json(const ConvergenceReport& rep);

/// Parses a document as either a coupling ("A"/"B" keys) or a canonical form
/// ("S"/"m" keys), normalizing couplings on the way. Throws ParseError.
STForm st_form_from_document(const nlohmann::json& j);

/// Reads a whole file; throws ParseError when unreadable.
std::string read_file(const std::string& path);

}  // namespace qgraph
