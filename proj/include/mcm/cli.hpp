#pragma once

// The `mcm` command line: check, enumerate, crosscheck, rootinfo, tables.
//
// Exit status: 0 MCM / success, 1 not MCM, 2 input error, 3 internal
// disagreement (a bug).

#include "mcm/families.hpp"

#include <ostream>
#include <string_view>

namespace mcm {

enum ExitCode : int { kExitMcm = 0, kExitNotMcm = 1, kExitInput = 2, kExitInternal = 3 };

/// Weight grammar. A and B/D: "lambda;lambda_1,...", C: "lambda_0;lambda_1,...",
/// exceptional: "a_1,a_2,...". An omitted Levi part means all zeros; halves
/// are written "1/2" and select the Spin sublattice (as does `spin`).
StabilizerWeight parse_weight(const SimpleType& kind, std::string_view text, bool spin = false);

/// "A" with rank 3, "E6" with no rank, "G" (rank implied). Throws
/// InvalidArgument.
SimpleType parse_type(std::string_view type, int rank);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcm
