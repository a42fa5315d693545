// Copyright 2026 The qgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgraph {

/// Runs the command-line front end on the given arguments (without the
/// program name). Exit codes: 0 success, 1 domain failure (inadmissible
/// coupling, violated envelope), 2 input or numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qgraph
