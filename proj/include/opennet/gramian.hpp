#pragma once

#include <Eigen/Dense>
#include <vector>

#include "opennet/network.hpp"

namespace opennet {

enum class GramianKind { kControllability, kObservability };

/// Solution of a continuous-time Lyapunov equation, symmetrized, together
/// with the Frobenius norm of the equation residual.
struct Gramian {
    Eigen::MatrixXd matrix;
    double residual_norm = 0.0;
    GramianKind kind = GramianKind::kControllability;
};

/// H2-norm of the system plus the per-pair decomposition:
/// per_pair(o, i) is the contribution of input node input_set[i] and
/// output node output_set[o]; the entries sum to h2_squared.
struct H2Report {
    double h2_squared = 0.0;
    double h2 = 0.0;
    Eigen::MatrixXd per_pair;  // p x m
};

/// Linear approximation Tr(Wc) ~ m / (2 |a|) and its relative deviation
/// from the exact trace.
struct TraceLinearApproximation {
    double approx_trace = 0.0;
    double actual_trace = 0.0;
    double relative_deviation = 0.0;
};

/// Solves A W + W A' + Q = 0 for W by real Schur reduction of A and block
/// back-substitution. A must be Hurwitz and Q symmetric. The result is
/// explicitly symmetrized and its residual recorded.
///
/// Throws StabilityError when A has an eigenvalue with non-negative real
/// part, ConditioningError when the Lyapunov operator is near singular
/// (some lambda_i + conj(lambda_j) ~ 0) or the residual check fails.
Gramian solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& q,
                       GramianKind kind = GramianKind::kControllability);

/// W solving A W + W A' + B B' = 0.
Gramian controllability_gramian(const StableSystem& sys);

/// W solving A' W + W A + C' C = 0.
Gramian observability_gramian(const StableSystem& sys);

/// h2_squared = Tr(C Wc C') with the per-pair decomposition from
/// single-input (or, when cheaper, single-output) sub-solves.
H2Report h2_norm(const StableSystem& sys);

/// Minimum input energy steering the state from the origin to x_f:
/// x_f' Wc^{-1} x_f, via a symmetric factorization solve. Throws
/// ControllabilityError when the Gramian condition number exceeds 1e12,
/// naming the near-null state directions.
double min_steering_energy(const Gramian& gramian, const Eigen::VectorXd& x_f);

/// Eigenvalues of the (symmetric PSD) Gramian in descending order.
Eigen::VectorXd gramian_spectrum(const Gramian& gramian);

/// Evaluates Tr(Wc) ~ m / (2 |a|) against the exact trace.
TraceLinearApproximation trace_linear_approximation(const StableSystem& sys);

}  // namespace opennet
