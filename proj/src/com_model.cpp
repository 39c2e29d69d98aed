#include "oscnet/com_model.hpp"

#include <cmath>
#include <sstream>

#include "oscnet/errors.hpp"

namespace oscnet {

namespace {

double matrix_scale(const Eigen::MatrixXd& m) {
    return std::max(1.0, m.cwiseAbs().maxCoeff());
}

Eigen::MatrixXd block_diag2(const Eigen::MatrixXd& a) {
    const Eigen::Index n = a.rows();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    out.topLeftCorner(n, n) = a;
    out.bottomRightCorner(n, n) = a;
    return out;
}

void check_stability(const Eigen::MatrixXd& v, double mass) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(v / mass, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()[0];
    const double hi = es.eigenvalues()[es.eigenvalues().size() - 1];
    if (lo <= 1e-12 * std::max(hi, 0.0)) {
        std::ostringstream msg;
        msg << "two-object potential not positive definite (lambda_min = " << lo << ")";
        throw NonPositivePotential(msg.str());
    }
}

}  // namespace

TwoObjectModel::TwoObjectModel(Eigen::Index n_constituents, double constituent_mass,
                               double on_site_frequency, Eigen::MatrixXd k, Eigen::MatrixXd g)
    : n(n_constituents),
      mass(constituent_mass),
      omega(on_site_frequency),
      internal_coupling(std::move(k)),
      interaction(std::move(g)) {
    if (n < 1) throw InvalidParameter("TwoObjectModel: need N >= 1");
    if (mass <= 0.0) throw InvalidParameter("TwoObjectModel: mass must be positive");
    if (omega <= 0.0) throw InvalidParameter("TwoObjectModel: omega must be positive");
    if (internal_coupling.rows() != n || internal_coupling.cols() != n ||
        interaction.rows() != n || interaction.cols() != n) {
        throw InvalidParameter("TwoObjectModel: K and G must be N x N");
    }
    if (!is_symmetric(internal_coupling)) {
        throw InvalidParameter("TwoObjectModel: K must be symmetric");
    }
    const double kick = (internal_coupling * Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff();
    if (kick > 1e-12 * matrix_scale(internal_coupling)) {
        throw InvalidParameter("TwoObjectModel: K must annihilate the uniform vector");
    }
}

TwoObjectModel TwoObjectModel::pairwise(Eigen::Index n, double g0, double mass, double omega) {
    return pairwise(n, g0, mass, omega, Eigen::MatrixXd::Zero(n, n));
}

TwoObjectModel TwoObjectModel::pairwise(Eigen::Index n, double g0, double mass, double omega,
                                        Eigen::MatrixXd k) {
    return TwoObjectModel(n, mass, omega, std::move(k),
                          g0 * Eigen::MatrixXd::Identity(n, n));
}

TwoObjectModel TwoObjectModel::one_to_all(Eigen::Index n, double g0, double mass, double omega) {
    return one_to_all(n, g0, mass, omega, Eigen::MatrixXd::Zero(n, n));
}

TwoObjectModel TwoObjectModel::one_to_all(Eigen::Index n, double g0, double mass, double omega,
                                          Eigen::MatrixXd k) {
    return TwoObjectModel(n, mass, omega, std::move(k), g0 * Eigen::MatrixXd::Ones(n, n));
}

bool matches_pattern(const TwoObjectModel& m, InteractionPattern pattern, double tol) {
    const double scale = matrix_scale(m.interaction);
    const double g0 = m.interaction(0, 0);
    Eigen::MatrixXd expected;
    if (pattern == InteractionPattern::pairwise) {
        expected = g0 * Eigen::MatrixXd::Identity(m.n, m.n);
    } else {
        expected = g0 * Eigen::MatrixXd::Ones(m.n, m.n);
    }
    return (m.interaction - expected).cwiseAbs().maxCoeff() <= tol * scale;
}

Eigen::VectorXd ComTransform::gram_diagonal() const {
    const Eigen::Index n = t.rows();
    Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
    d[0] = 1.0 / static_cast<double>(n);
    return d;
}

Eigen::MatrixXd ComTransform::inverse() const {
    return t.transpose() * gram_diagonal().cwiseInverse().asDiagonal();
}

ComTransform com_transform(Eigen::Index n, double mass) {
    if (n < 1) throw InvalidParameter("com_transform: need N >= 1");
    Eigen::MatrixXd t(n, n);
    t.row(0).setConstant(1.0 / static_cast<double>(n));
    if (n > 1) {
        // Householder reflection H mapping e_1 to the normalized uniform
        // vector; its columns 2..N span the complement of (1,...,1).
        Eigen::VectorXd u = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
        Eigen::VectorXd v = Eigen::VectorXd::Unit(n, 0) - u;
        Eigen::MatrixXd h =
            Eigen::MatrixXd::Identity(n, n) - (2.0 / v.squaredNorm()) * v * v.transpose();
        t.bottomRows(n - 1) = h.rightCols(n - 1).transpose();
    }
    Eigen::VectorXd masses = Eigen::VectorXd::Constant(n, mass);
    masses[0] = static_cast<double>(n) * mass;
    return {std::move(t), std::move(masses)};
}

QuadraticHamiltonian build_hamiltonian(const TwoObjectModel& m) {
    const Eigen::Index n = m.n;
    const Eigen::MatrixXd on_site = m.mass * m.omega * m.omega * Eigen::MatrixXd::Identity(n, n) +
                                    m.internal_coupling;
    Eigen::MatrixXd v(2 * n, 2 * n);
    v.topLeftCorner(n, n) = on_site;
    v.bottomRightCorner(n, n) = on_site;
    v.topRightCorner(n, n) = m.interaction;
    v.bottomLeftCorner(n, n) = m.interaction.transpose();
    check_stability(v, m.mass);
    return QuadraticHamiltonian(Eigen::VectorXd::Constant(2 * n, m.mass), std::move(v));
}

Eigen::MatrixXd transformed_interaction(const TwoObjectModel& m) {
    const ComTransform ct = com_transform(m.n, m.mass);
    const Eigen::MatrixXd t_inv = ct.inverse();
    return t_inv.transpose() * m.interaction * t_inv;
}

Eigen::MatrixXd collective_potential(const TwoObjectModel& m) {
    const ComTransform ct = com_transform(m.n, m.mass);
    const Eigen::MatrixXd t_inv2 = block_diag2(ct.inverse());
    const Eigen::MatrixXd v = build_hamiltonian(m).potential;
    Eigen::MatrixXd out = t_inv2.transpose() * v * t_inv2;
    return 0.5 * (out + out.transpose());
}

GaussianState to_collective(const TwoObjectModel& m, const GaussianState& s) {
    if (s.n_modes != 2 * m.n) {
        throw DimensionMismatch("to_collective: state must have 2N modes");
    }
    const ComTransform ct = com_transform(m.n, m.mass);
    const Eigen::MatrixXd fwd = block_diag2(ct.t);                      // X = T x
    const Eigen::MatrixXd inv = block_diag2(ct.inverse());              // x = T^-1 X
    Eigen::MatrixXd xx = fwd * s.sigma_xx * fwd.transpose();
    Eigen::MatrixXd pp = inv.transpose() * s.sigma_pp * inv;            // P = T^-T p
    Eigen::MatrixXd xp = fwd * s.sigma_xp * inv;
    return GaussianState(0.5 * (xx + xx.transpose()), 0.5 * (pp + pp.transpose()),
                         std::move(xp));
}

GaussianState collective_thermal_state(const TwoObjectModel& m, double temperature) {
    return to_collective(m, thermal_state(build_hamiltonian(m), temperature));
}

QuadraticHamiltonian com_effective_hamiltonian(const TwoObjectModel& m) {
    if (!matches_pattern(m, InteractionPattern::one_to_all)) {
        throw PatternMismatch("com_effective_hamiltonian: interaction is not one-to-all");
    }
    const double g0 = m.interaction(0, 0);
    const double eff = static_cast<double>(m.n) * g0;
    const double on_site = m.mass * m.omega * m.omega;
    if (std::abs(eff) >= on_site) {
        std::ostringstream msg;
        msg << "com_effective_hamiltonian: |N G0| = " << std::abs(eff)
            << " >= M Omega^2 = " << on_site << " (unstable)";
        throw NonPositivePotential(msg.str());
    }
    Eigen::MatrixXd v(2, 2);
    v << on_site, eff, eff, on_site;
    return QuadraticHamiltonian(Eigen::VectorXd::Constant(2, m.mass), std::move(v));
}

double com_negativity(const TwoObjectModel& m, double temperature) {
    const GaussianState collective = collective_thermal_state(m, temperature);
    const GaussianState com_pair = reduce(collective, {0, m.n});
    return log_negativity(com_pair, {1});
}

double pair_negativity(const TwoObjectModel& m, double temperature, Eigen::Index pair_index) {
    if (!matches_pattern(m, InteractionPattern::pairwise)) {
        throw PatternMismatch("pair_negativity: interaction is not pairwise");
    }
    if (pair_index < 0 || pair_index >= m.n) {
        throw InvalidModeSet("pair_negativity: pair index out of range");
    }
    const GaussianState collective = collective_thermal_state(m, temperature);
    const GaussianState pair = reduce(collective, {pair_index, m.n + pair_index});
    return log_negativity(pair, {1});
}

double critical_temperature(const TwoObjectModel& m, InteractionPattern pattern,
                            double rel_tol) {
    if (!matches_pattern(m, pattern)) {
        throw PatternMismatch("critical_temperature: interaction does not match pattern");
    }
    if (rel_tol <= 0.0) throw InvalidParameter("critical_temperature: tolerance must be positive");
    if (com_negativity(m, 0.0) <= 0.0) {
        throw NoEntanglementAtZeroT("critical_temperature: state is PPT already at T = 0");
    }
    double lo = 0.0;
    double hi = m.omega;
    int doublings = 0;
    while (com_negativity(m, hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 60) {
            throw Error("critical_temperature: no separable phase found while doubling T");
        }
    }
    while (hi - lo > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (com_negativity(m, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oscnet
