#pragma once

#include <Eigen/Dense>

#include <vector>

#include "oscnet/hamiltonian.hpp"

namespace oscnet {

// Zero-mean Gaussian state over n modes, hbar = 1: sigma_xx = <x x^T>,
// sigma_pp = <p p^T>, sigma_xp = (1/2)<{x, p^T}>. Vacuum symplectic
// eigenvalue is 1/2. Every state produced here has sigma_xp = 0.
struct GaussianState {
    Eigen::Index n_modes{0};
    Eigen::MatrixXd sigma_xx;
    Eigen::MatrixXd sigma_pp;
    Eigen::MatrixXd sigma_xp;

    GaussianState(Eigen::MatrixXd xx, Eigen::MatrixXd pp, Eigen::MatrixXd xp);
    GaussianState(Eigen::MatrixXd xx, Eigen::MatrixXd pp);

    // 2n x 2n covariance in (x_1..x_n, p_1..p_n) ordering
    Eigen::MatrixXd full_covariance() const;

  private:
    void validate() const;
};

// Symplectic eigenvalues, ascending. Physical states satisfy nu_j >= 1/2.
struct SymplecticSpectrum {
    std::vector<double> values;

    double min() const { return values.front(); }
    bool is_pure(double tol = 1e-9) const;
};

enum class EntropyUnit { nats, bits };

GaussianState ground_state(const QuadraticHamiltonian& h);
GaussianState thermal_state(const QuadraticHamiltonian& h, double temperature);

GaussianState reduce(const GaussianState& s, const std::vector<Eigen::Index>& modes);

// Fast path for sigma_xp = 0 (sqrt of eig(sigma_xx sigma_pp)); falls back to
// the general Omega*sigma eigensolve otherwise. The two routes agree to 1e-10.
SymplecticSpectrum symplectic_spectrum(const GaussianState& s);
SymplecticSpectrum symplectic_spectrum_general(const GaussianState& s);

double entropy(const GaussianState& s, EntropyUnit unit = EntropyUnit::nats);
double entropy(const SymplecticSpectrum& spec, EntropyUnit unit = EntropyUnit::nats);

// I(A|A^c) = S_A + S_A^c - S_total
double mutual_information(const GaussianState& s, const std::vector<Eigen::Index>& subset);

// Momentum-sign flip on the modes in `subset`. The result need not satisfy
// the uncertainty bound; a violation signals entanglement across the cut.
GaussianState partial_transpose(const GaussianState& s, const std::vector<Eigen::Index>& subset);

// E_N = sum_j max(0, -ln 2 nu~_j) over the partial-transpose spectrum.
double log_negativity(const GaussianState& s, const std::vector<Eigen::Index>& subset);

// x_i -> s_i x_i, p_i -> p_i / s_i (local symplectic map)
GaussianState local_scaling(const GaussianState& s, const Eigen::VectorXd& factors);

// Entropy of a single symplectic eigenvalue:
// f(nu) = (nu+1/2)ln(nu+1/2) - (nu-1/2)ln(nu-1/2), f(1/2) = 0.
double mode_entropy(double nu);

}  // namespace oscnet
