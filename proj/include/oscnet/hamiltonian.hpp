#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>

#include "oscnet/spectral.hpp"

namespace oscnet {

// H = 1/2 p^T M^-1 p + 1/2 x^T V x with M = diag(masses), hbar = 1.
struct QuadraticHamiltonian {
    Eigen::Index n_modes{0};
    Eigen::VectorXd masses;    // strictly positive
    Eigen::MatrixXd potential; // symmetric

    QuadraticHamiltonian(Eigen::VectorXd m, Eigen::MatrixXd v)
        : masses(std::move(m)), potential(std::move(v)) {
        n_modes = masses.size();
        validate();
    }

    // Unit masses
    explicit QuadraticHamiltonian(Eigen::MatrixXd v) : potential(std::move(v)) {
        n_modes = potential.rows();
        masses = Eigen::VectorXd::Ones(n_modes);
        validate();
    }

    // Mass-weighted potential M^-1/2 V M^-1/2
    Eigen::MatrixXd weighted_potential() const {
        Eigen::VectorXd inv_sqrt_m = masses.array().rsqrt();
        Eigen::MatrixXd vp = inv_sqrt_m.asDiagonal() * potential * inv_sqrt_m.asDiagonal();
        return 0.5 * (vp + vp.transpose());
    }

  private:
    void validate() const {
        if (n_modes < 1) {
            throw std::invalid_argument("QuadraticHamiltonian: need at least one mode");
        }
        if (potential.rows() != n_modes || potential.cols() != n_modes) {
            throw std::invalid_argument("QuadraticHamiltonian: potential dimension mismatch");
        }
        if ((masses.array() <= 0.0).any()) {
            throw std::invalid_argument("QuadraticHamiltonian: masses must be positive");
        }
        if (!is_symmetric(potential)) {
            throw std::invalid_argument("QuadraticHamiltonian: potential must be symmetric");
        }
    }
};

}  // namespace oscnet
