#pragma once

#include <Eigen/Dense>

#include "oscnet/gaussian.hpp"

namespace oscnet {

enum class InteractionPattern { pairwise, one_to_all };

// Two macroscopic objects, each made of N identical oscillators of mass M and
// on-site frequency Omega. K couples constituents within an object and must
// annihilate the uniform vector (difference-only potential); G couples object
// one to object two bilinearly, H_I = sum_ij G_ij x_i^(1) x_j^(2).
struct TwoObjectModel {
    Eigen::Index n{0};
    double mass{1.0};
    double omega{1.0};
    Eigen::MatrixXd internal_coupling;  // K
    Eigen::MatrixXd interaction;        // G

    TwoObjectModel(Eigen::Index n_constituents, double constituent_mass,
                   double on_site_frequency, Eigen::MatrixXd k, Eigen::MatrixXd g);

    // G = g0 * I
    static TwoObjectModel pairwise(Eigen::Index n, double g0, double mass = 1.0,
                                   double omega = 1.0);
    static TwoObjectModel pairwise(Eigen::Index n, double g0, double mass, double omega,
                                   Eigen::MatrixXd k);
    // G = g0 * (all ones)
    static TwoObjectModel one_to_all(Eigen::Index n, double g0, double mass = 1.0,
                                     double omega = 1.0);
    static TwoObjectModel one_to_all(Eigen::Index n, double g0, double mass, double omega,
                                     Eigen::MatrixXd k);
};

bool matches_pattern(const TwoObjectModel& m, InteractionPattern pattern, double tol = 1e-12);

// Transformation X = T x, P = T^-T p to collective coordinates; row 1 of T is
// the center of mass (1/N, ..., 1/N), the remaining rows come from the
// Householder reflection taking e_1 to the normalized uniform vector.
// Effective masses: M~_1 = N M, M~_i = M.
struct ComTransform {
    Eigen::MatrixXd t;
    Eigen::VectorXd masses;

    // T T^T = diag(1/N, 1, ..., 1) analytically
    Eigen::VectorXd gram_diagonal() const;
    Eigen::MatrixXd inverse() const;  // T^-1 = T^T diag(N, 1, ..., 1)
};

ComTransform com_transform(Eigen::Index n, double mass = 1.0);

// 2N-mode Hamiltonian, modes ordered (object 1: 0..N-1, object 2: N..2N-1).
QuadraticHamiltonian build_hamiltonian(const TwoObjectModel& m);

// Interaction in collective coordinates: G^ = T^-T G T^-1, so that
// H_I = sum_ij G^_ij X_i^(1) X_j^(2).
Eigen::MatrixXd transformed_interaction(const TwoObjectModel& m);

// Full 2N x 2N potential in collective coordinates (both objects).
Eigen::MatrixXd collective_potential(const TwoObjectModel& m);

// Map a 2N-mode state from constituent to collective coordinates.
GaussianState to_collective(const TwoObjectModel& m, const GaussianState& s);

// Gibbs state of the full Hamiltonian, expressed in collective coordinates.
GaussianState collective_thermal_state(const TwoObjectModel& m, double temperature);

// Two-mode Hamiltonian (masses M, coupling N g0) whose ground/thermal state
// reproduces the reduced COM pair after local scaling by sqrt(N).
QuadraticHamiltonian com_effective_hamiltonian(const TwoObjectModel& m);

// Log-negativity between the two COM variables at temperature T, computed
// from the full 2N-mode Gibbs state.
double com_negativity(const TwoObjectModel& m, double temperature);

// Log-negativity between collective pair (X_i^(1), X_i^(2)); pairwise pattern only.
double pair_negativity(const TwoObjectModel& m, double temperature, Eigen::Index pair_index);

// Temperature where the COM-pair negativity vanishes, located by doubling
// from T = Omega and bisecting to the given relative tolerance.
double critical_temperature(const TwoObjectModel& m, InteractionPattern pattern,
                            double rel_tol = 1e-6);

}  // namespace oscnet
