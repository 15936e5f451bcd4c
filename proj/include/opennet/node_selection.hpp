#pragma once

#include <Eigen/Dense>
#include <vector>

#include "opennet/network.hpp"

namespace opennet {

enum class RankedSide { kInput, kOutput };
enum class RankDirection { kMaximize, kMinimize };

/// Per-node H2^2 contributions for one side of the system while the other
/// side's node set stays fixed. values[i] is the H2^2 obtained with node i
/// alone on the ranked side; by additivity, any subset's H2^2 is the sum
/// of its entries.
struct ContributionVector {
    Eigen::VectorXd values;     // length N, all >= 0
    RankedSide basis = RankedSide::kInput;
    std::vector<int> fixed_set;
};

/// Contribution of every node as a single input, for the fixed output set:
/// the diagonal of the observability Gramian (one dual solve).
ContributionVector input_contributions(const StableSystem& sys);

/// Contribution of every node as a single output, for the fixed input set:
/// the diagonal of the controllability Gramian (one solve).
ContributionVector output_contributions(const StableSystem& sys);

/// The exact k-subset optimizer (modularity makes sorting optimal).
/// Ties broken by ascending node index.
std::vector<int> top_k(const ContributionVector& contrib, int k,
                       RankDirection direction);

}  // namespace opennet
