#pragma once

// Verification commands shared by the command-line tool and the tests.

#include "qflag/cartan.hpp"
#include "qflag/report.hpp"

#include <optional>

namespace qflag {

/// Name of the environment variable that caps the rank used by `tables` and `verify-all`.
inline constexpr const char* kMaxRankEnv = "QFLAG_MAX_RANK";

/// min(requested, cap from the environment). Invalid or non-positive caps are ignored.
int effective_max_rank(int requested);

Report cmd_tables(int max_rank);
Report cmd_curvature(int n, int k_max);
Report cmd_sl2(int n_max);
Report cmd_hodge(int n);
Report cmd_classify(Series series, int rank, int node, int k);
/// i = 0 gives dim H^0 of E_k; i >= 1 gives the higher dbar-cohomology dimension.
Report cmd_bw(Series series, int rank, int node, int k, int i);
Report cmd_verify_all(int max_rank);

}  // namespace qflag
