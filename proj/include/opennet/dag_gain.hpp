#pragma once

#include <cstddef>
#include <vector>

#include "opennet/network.hpp"

namespace opennet {

/// One directed path from input to output with its gain/leak term:
/// -(prod over edges k->l of A_lk / |A_kk|) / |A_jj| for path end j.
/// Non-positive whenever edge weights are non-negative and the diagonal
/// is negative.
struct PathGainTerm {
    std::vector<int> path;  // node indices, input first
    double term_value = 0.0;
};

/// DC-gain entry of a DAG with its per-path decomposition.
struct DagDcEntry {
    double value = 0.0;  // [A^-1]_{out,in} = sum of term values
    std::vector<PathGainTerm> terms;
};

inline constexpr std::size_t kDefaultMaxPaths = 1000000;

/// All simple directed paths from `from` to `to`, in lexicographic order
/// by node index. `from == to` yields the single zero-length path.
/// Throws CyclicityError when the graph (self-loops ignored) has a cycle,
/// PathExplosionError past max_paths.
std::vector<std::vector<int>> enumerate_paths(const NetworkSpec& spec, int from,
                                              int to,
                                              std::size_t max_paths = kDefaultMaxPaths);

/// [A^-1]_{out,in} for an acyclic system by explicit path enumeration over
/// the off-diagonal structure of sys.a_matrix. Requires every diagonal
/// entry strictly negative (LeakError otherwise). For input == output the
/// zero-length path contributes the bare leak term -1/|A_jj|.
DagDcEntry dag_dc_entry(const StableSystem& sys, int input_node, int output_node,
                        std::size_t max_paths = kDefaultMaxPaths);

/// Top-k terms by |term_value|, ties broken by lexicographic path order.
std::vector<PathGainTerm> dominant_paths(const std::vector<PathGainTerm>& terms,
                                         std::size_t k);

}  // namespace opennet
