#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace oscnet {

struct SymmetricEigen {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // columns
};

inline SymmetricEigen sym_eig(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("sym_eig: eigendecomposition failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

// f applied to a symmetric matrix through its spectral decomposition.
// Result is re-symmetrized to absorb roundoff.
template <typename F>
Eigen::MatrixXd sym_function(const SymmetricEigen& es, F&& f) {
    Eigen::VectorXd fv = es.values;
    for (Eigen::Index i = 0; i < fv.size(); ++i) fv[i] = f(es.values[i]);
    Eigen::MatrixXd out = es.vectors * fv.asDiagonal() * es.vectors.transpose();
    return 0.5 * (out + out.transpose());
}

template <typename F>
Eigen::MatrixXd sym_function(const Eigen::MatrixXd& m, F&& f) {
    return sym_function(sym_eig(m), std::forward<F>(f));
}

inline bool is_symmetric(const Eigen::MatrixXd& m, double rel_tol = 1e-12) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

// coth(y) for y > 0, with the T -> 0 limit handled by the caller.
inline double coth(double y) {
    return 1.0 / std::tanh(y);
}

}  // namespace oscnet
