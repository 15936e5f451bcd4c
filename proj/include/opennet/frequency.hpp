#pragma once

#include <Eigen/Dense>
#include <complex>

#include "opennet/network.hpp"

namespace opennet {

/// Magnitude drop (dB) below the DC plateau that defines the cornering
/// frequency: the half-power point, 10 log10(2) ~ 3.0103 dB.
inline constexpr double kCorneringDropDb = 3.0102999566398120;

/// Frequency response of one input-output node pair over a log-spaced
/// grid. Phase is unwrapped so adjacent samples never jump more than 180
/// degrees. cornering_omega is NaN when the magnitude never crosses the
/// half-power level inside the sweep (or the pair is unreachable).
struct BodeSweep {
    int input_node = 0;
    int output_node = 0;
    Eigen::VectorXd omegas;        // strictly increasing, rad/s
    Eigen::VectorXd magnitude_db;  // 20 log10 |G(j w)|
    Eigen::VectorXd phase_deg;     // unwrapped
    double cornering_omega = 0.0;
    bool reachable = true;
};

/// DC gain of a single pair: the matrix-inverse entry [A^-1]_{out,in},
/// its magnitude in dB and the phase of -[A^-1]_{out,in} in (-180, 180].
struct DcGain {
    double inverse_entry = 0.0;
    double gain_db = 0.0;  // -inf when the entry is exactly zero
    double phase_deg = 0.0;
};

/// High-frequency law for one pair: predicted slope -20(d+1) dB/decade and
/// final phase -90(d+1) degrees, where d is the unweighted shortest path,
/// against the values measured from a sweep.
struct AsymptoticPrediction {
    int d = 0;
    double predicted_slope_db_per_decade = 0.0;
    double predicted_final_phase_deg = 0.0;
    double measured_slope_db_per_decade = 0.0;
    double measured_final_phase_deg = 0.0;
    bool slope_within_tol = false;  // within 5% of predicted
    bool phase_within_tol = false;
};

/// G(s) = C (sI - A)^{-1} B, evaluated by a linear solve (never an
/// explicit inverse). Throws ResolventError when sI - A is numerically
/// singular (reciprocal condition below 1e-12).
Eigen::MatrixXcd transfer_function(const StableSystem& sys, std::complex<double> s);

/// Single entry e_out' (sI - A)^{-1} e_in of the resolvent.
std::complex<double> transfer_pair(const Eigen::MatrixXd& a, int input_node,
                                   int output_node, std::complex<double> s);

/// Log-spaced sweep of one pair with unwrapped phase and the bisection-
/// refined cornering frequency. Unreachable pairs still produce a sweep,
/// flagged reachable = false.
BodeSweep bode_sweep(const StableSystem& sys, int input_node, int output_node,
                     double omega_min, double omega_max, int points);

/// DC gain from the linear solve A x = e_in.
DcGain dc_gain(const StableSystem& sys, int input_node, int output_node);

/// [A^-1]_{out,in} by the cofactor route: (-1)^{in+out} det(M) / det(A)
/// with M the submatrix of A lacking row `in` and column `out`.
/// A verification path only; guarded to N <= 64.
double cofactor_dc_gain(const Eigen::MatrixXd& a, int input_node, int output_node);

/// Compares the measured high-frequency slope (least-squares fit over the
/// sweep's top decade) and final phase against -20(d+1) / -90(d+1).
/// Refuses unreachable pairs, and sweeps that stop short of
/// 100 |spectral abscissa|.
AsymptoticPrediction asymptotic_prediction(const StableSystem& sys,
                                           const NetworkSpec& spec,
                                           int input_node, int output_node,
                                           const BodeSweep& sweep);

}  // namespace opennet
