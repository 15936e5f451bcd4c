#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace opennet {

/// A weighted directed edge, endpoints given as node indices.
struct Edge {
    int source = 0;
    int target = 0;
    double weight = 1.0;
};

/// A directed weighted network together with its designated input and
/// output node sets. This is the raw triplet before stabilization: the
/// adjacency matrix, and the index sets that define B and C.
struct NetworkSpec {
    std::vector<std::string> node_ids;  // unique labels, index order
    std::vector<Edge> edges;            // weights must be >= 0
    std::vector<int> input_set;         // ordered, duplicate-free
    std::vector<int> output_set;        // ordered, duplicate-free

    int size() const { return static_cast<int>(node_ids.size()); }

    /// Throws ValidationError on duplicate labels, dangling endpoints,
    /// negative weights, or empty/duplicated input/output sets.
    void validate() const;

    /// Index of a label, or ValidationError naming the unknown label.
    int index_of(const std::string& label) const;
};

/// How the stabilizing spectral shift is chosen. The shift is always
/// c = max_i Re(lambda_i(A0)) + margin, placing the spectral abscissa of
/// the shifted matrix at exactly -margin. The default margin of 1
/// normalizes the abscissa to -1.
struct ShiftPolicy {
    double margin = 1.0;

    static ShiftPolicy normalize() { return ShiftPolicy{1.0}; }
    static ShiftPolicy with_margin(double margin) { return ShiftPolicy{margin}; }
};

/// The stabilized LTI system: shifted Hurwitz state matrix plus versor
/// input/output matrices. Node labels are carried along for reporting.
struct StableSystem {
    Eigen::MatrixXd a_matrix;  // N x N, all eigenvalues in the open left half-plane
    Eigen::MatrixXd b_matrix;  // N x m, versor columns
    Eigen::MatrixXd c_matrix;  // p x N, versor rows
    double shift_c = 0.0;
    double spectral_abscissa = 0.0;  // max_i Re(lambda_i(a_matrix)) < 0
    std::vector<int> input_set;
    std::vector<int> output_set;
    std::vector<std::string> node_ids;

    int n() const { return static_cast<int>(a_matrix.rows()); }
    int m() const { return static_cast<int>(b_matrix.cols()); }
    int p() const { return static_cast<int>(c_matrix.rows()); }
};

/// Result of applying the spectral shift to a raw adjacency matrix.
struct ShiftResult {
    Eigen::MatrixXd a_matrix;
    double shift_c = 0.0;
    double spectral_abscissa = 0.0;
};

/// Purely structural summary of a network.
struct StructuralReport {
    bool is_dag = false;
    std::vector<int> topological_order;  // empty when not a DAG
    double henrici_index = 0.0;
    Eigen::MatrixXi shortest_paths;  // p x m hop counts, kUnreachable sentinel
};

/// Sentinel for "no directed path" in hop-count results.
inline constexpr int kUnreachable = -1;

/// Builds the N x N adjacency matrix A0 with A0(i, j) = total weight of
/// edges from node j to node i. Parallel edges are summed; self-loops land
/// on the diagonal.
Eigen::MatrixXd build_adjacency(const NetworkSpec& spec);

/// Applies the spectral shift A = A0 - c I with c = abscissa(A0) + margin.
ShiftResult stabilize(const Eigen::MatrixXd& a0, const ShiftPolicy& policy = {});

/// Builds the full stabilized system (adjacency, shift, versor B and C).
StableSystem make_system(const NetworkSpec& spec, const ShiftPolicy& policy = {});

/// Normalized departure from normality,
/// sqrt(||A||_F^2 - sum_i |lambda_i|^2) / ||A||_F, in [0, 1].
/// 0 for normal matrices, 1 when every eigenvalue is zero.
/// Throws ValidationError for the zero matrix.
double henrici_index(const Eigen::MatrixXd& a);

/// Topological order of the graph with self-loops ignored, or nullopt if
/// the graph has a directed cycle.
std::optional<std::vector<int>> topological_order(const NetworkSpec& spec);

/// True iff the graph (self-loops ignored) has no directed cycle.
bool detect_dag(const NetworkSpec& spec);

/// Minimum number of edges over directed paths from `from` to `to`,
/// ignoring self-loops and weights. Returns kUnreachable when no path
/// exists; `from == to` gives 0.
int shortest_unweighted_path(const NetworkSpec& spec, int from, int to);

/// Hop counts for every (output, input) pair: entry (i, j) is the
/// shortest path from input_set[j] to output_set[i].
Eigen::MatrixXi shortest_path_matrix(const NetworkSpec& spec);

/// DAG flag, topological order, Henrici index of A0, and the hop-count
/// matrix, in one pass.
StructuralReport structural_report(const NetworkSpec& spec);

}  // namespace opennet
