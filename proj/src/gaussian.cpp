#include "oscnet/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <sstream>

#include "oscnet/errors.hpp"

namespace oscnet {

namespace {

// Relative floor below which the mass-weighted potential counts as singular.
constexpr double kPositivityTol = 1e-12;

void check_modes(const GaussianState& s, const std::vector<Eigen::Index>& modes,
                 bool require_proper, const char* op) {
    if (modes.empty()) {
        throw InvalidModeSet(std::string(op) + ": empty mode set");
    }
    std::set<Eigen::Index> seen;
    for (Eigen::Index m : modes) {
        if (m < 0 || m >= s.n_modes) {
            std::ostringstream msg;
            msg << op << ": mode index " << m << " out of range [0, " << s.n_modes << ")";
            throw InvalidModeSet(msg.str());
        }
        if (!seen.insert(m).second) {
            std::ostringstream msg;
            msg << op << ": duplicate mode index " << m;
            throw InvalidModeSet(msg.str());
        }
    }
    if (require_proper && static_cast<Eigen::Index>(modes.size()) == s.n_modes) {
        throw InvalidModeSet(std::string(op) + ": subset must be proper");
    }
}

std::vector<Eigen::Index> complement_of(const std::vector<Eigen::Index>& modes,
                                        Eigen::Index n) {
    std::vector<bool> in(n, false);
    for (Eigen::Index m : modes) in[static_cast<std::size_t>(m)] = true;
    std::vector<Eigen::Index> out;
    out.reserve(static_cast<std::size_t>(n) - modes.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

// Checked spectral decomposition of the mass-weighted potential.
SymmetricEigen decompose_weighted(const QuadraticHamiltonian& h) {
    SymmetricEigen es = sym_eig(h.weighted_potential());
    const double lambda_max = es.values[es.values.size() - 1];
    if (es.values[0] <= kPositivityTol * std::max(lambda_max, 0.0)) {
        std::ostringstream msg;
        msg << "potential not positive definite: lambda_min = " << es.values[0]
            << ", lambda_max = " << lambda_max;
        throw NonPositivePotential(msg.str());
    }
    return es;
}

GaussianState state_from_weighted(const QuadraticHamiltonian& h, const SymmetricEigen& es,
                                  double temperature) {
    // sigma'_xx = 1/2 V'^-1/2 coth(V'^1/2 / 2T), sigma'_pp = 1/2 V'^1/2 coth(V'^1/2 / 2T);
    // the coth factor degenerates to 1 at T = 0 (ground state).
    auto occupancy = [temperature](double lambda) {
        if (temperature <= 0.0) return 1.0;
        return coth(std::sqrt(lambda) / (2.0 * temperature));
    };
    Eigen::MatrixXd xx_w =
        sym_function(es, [&](double lam) { return 0.5 * occupancy(lam) / std::sqrt(lam); });
    Eigen::MatrixXd pp_w =
        sym_function(es, [&](double lam) { return 0.5 * occupancy(lam) * std::sqrt(lam); });

    // Undo the mass weighting: x = M^-1/2 x', p = M^1/2 p'.
    Eigen::VectorXd inv_sqrt_m = h.masses.array().rsqrt();
    Eigen::VectorXd sqrt_m = h.masses.array().sqrt();
    Eigen::MatrixXd xx = inv_sqrt_m.asDiagonal() * xx_w * inv_sqrt_m.asDiagonal();
    Eigen::MatrixXd pp = sqrt_m.asDiagonal() * pp_w * sqrt_m.asDiagonal();
    return GaussianState(0.5 * (xx + xx.transpose()), 0.5 * (pp + pp.transpose()));
}

}  // namespace

GaussianState::GaussianState(Eigen::MatrixXd xx, Eigen::MatrixXd pp, Eigen::MatrixXd xp)
    : n_modes(xx.rows()),
      sigma_xx(std::move(xx)),
      sigma_pp(std::move(pp)),
      sigma_xp(std::move(xp)) {
    validate();
}

GaussianState::GaussianState(Eigen::MatrixXd xx, Eigen::MatrixXd pp)
    : n_modes(xx.rows()), sigma_xx(std::move(xx)), sigma_pp(std::move(pp)) {
    sigma_xp = Eigen::MatrixXd::Zero(n_modes, n_modes);
    validate();
}

void GaussianState::validate() const {
    if (n_modes < 1) {
        throw DimensionMismatch("GaussianState: need at least one mode");
    }
    if (sigma_pp.rows() != n_modes || sigma_pp.cols() != n_modes ||
        sigma_xx.cols() != n_modes || sigma_xp.rows() != n_modes ||
        sigma_xp.cols() != n_modes) {
        throw DimensionMismatch("GaussianState: covariance block dimensions disagree");
    }
    if (!is_symmetric(sigma_xx) || !is_symmetric(sigma_pp)) {
        throw DimensionMismatch("GaussianState: sigma_xx and sigma_pp must be symmetric");
    }
}

Eigen::MatrixXd GaussianState::full_covariance() const {
    Eigen::MatrixXd cov(2 * n_modes, 2 * n_modes);
    cov.topLeftCorner(n_modes, n_modes) = sigma_xx;
    cov.topRightCorner(n_modes, n_modes) = sigma_xp;
    cov.bottomLeftCorner(n_modes, n_modes) = sigma_xp.transpose();
    cov.bottomRightCorner(n_modes, n_modes) = sigma_pp;
    return cov;
}

bool SymplecticSpectrum::is_pure(double tol) const {
    return std::all_of(values.begin(), values.end(),
                       [tol](double nu) { return std::abs(nu - 0.5) <= tol; });
}

GaussianState ground_state(const QuadraticHamiltonian& h) {
    return state_from_weighted(h, decompose_weighted(h), 0.0);
}

GaussianState thermal_state(const QuadraticHamiltonian& h, double temperature) {
    if (temperature < 0.0) {
        throw InvalidParameter("thermal_state: temperature must be nonnegative");
    }
    return state_from_weighted(h, decompose_weighted(h), temperature);
}

GaussianState reduce(const GaussianState& s, const std::vector<Eigen::Index>& modes) {
    check_modes(s, modes, /*require_proper=*/false, "reduce");
    const Eigen::Index k = static_cast<Eigen::Index>(modes.size());
    Eigen::MatrixXd xx(k, k), pp(k, k), xp(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b) {
            xx(a, b) = s.sigma_xx(modes[a], modes[b]);
            pp(a, b) = s.sigma_pp(modes[a], modes[b]);
            xp(a, b) = s.sigma_xp(modes[a], modes[b]);
        }
    }
    return GaussianState(std::move(xx), std::move(pp), std::move(xp));
}

SymplecticSpectrum symplectic_spectrum(const GaussianState& s) {
    const double scale = std::max({1.0, s.sigma_xx.cwiseAbs().maxCoeff(),
                                   s.sigma_pp.cwiseAbs().maxCoeff()});
    if (s.sigma_xp.cwiseAbs().maxCoeff() > 1e-14 * scale) {
        return symplectic_spectrum_general(s);
    }
    // nu_j = sqrt(eig(sigma_xx sigma_pp)), evaluated on the similar symmetric
    // matrix S sigma_pp S with S = sigma_xx^1/2.
    Eigen::MatrixXd sqrt_xx = sym_function(s.sigma_xx, [](double lam) {
        return std::sqrt(std::max(lam, 0.0));
    });
    SymmetricEigen es = sym_eig(sqrt_xx * s.sigma_pp * sqrt_xx);
    SymplecticSpectrum out;
    out.values.reserve(static_cast<std::size_t>(s.n_modes));
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        out.values.push_back(std::sqrt(std::max(es.values[i], 0.0)));
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

SymplecticSpectrum symplectic_spectrum_general(const GaussianState& s) {
    const Eigen::Index n = s.n_modes;
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    omega.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    omega.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(omega * s.full_covariance());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symplectic_spectrum: eigensolver failed");
    }
    std::vector<double> moduli(static_cast<std::size_t>(2 * n));
    for (Eigen::Index i = 0; i < 2 * n; ++i) {
        moduli[static_cast<std::size_t>(i)] = std::abs(solver.eigenvalues()[i]);
    }
    // Eigenvalues of Omega*sigma come in +-i nu pairs: sorted moduli pair up.
    std::sort(moduli.begin(), moduli.end());
    SymplecticSpectrum out;
    out.values.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        const double a = moduli[static_cast<std::size_t>(2 * j)];
        const double b = moduli[static_cast<std::size_t>(2 * j + 1)];
        if (std::abs(a - b) > 1e-8 * std::max(1.0, b)) {
            throw std::runtime_error("symplectic_spectrum: +-i nu pairing broke down");
        }
        out.values.push_back(0.5 * (a + b));
    }
    return out;
}

double mode_entropy(double nu) {
    if (nu < 0.5 - 1e-6) {
        std::ostringstream msg;
        msg << "entropy: symplectic eigenvalue " << nu << " below 1/2";
        throw UnphysicalState(msg.str());
    }
    const double up = nu + 0.5;
    const double dn = nu - 0.5;
    double out = up * std::log(up);
    if (dn > 1e-12) out -= dn * std::log(dn);
    return out;
}

double entropy(const SymplecticSpectrum& spec, EntropyUnit unit) {
    double s = 0.0;
    for (double nu : spec.values) s += mode_entropy(nu);
    return unit == EntropyUnit::bits ? s / std::log(2.0) : s;
}

double entropy(const GaussianState& s, EntropyUnit unit) {
    return entropy(symplectic_spectrum(s), unit);
}

double mutual_information(const GaussianState& s, const std::vector<Eigen::Index>& subset) {
    check_modes(s, subset, /*require_proper=*/true, "mutual_information");
    const double s_a = entropy(reduce(s, subset));
    const double s_ac = entropy(reduce(s, complement_of(subset, s.n_modes)));
    const double s_tot = entropy(s);
    return std::max(0.0, s_a + s_ac - s_tot);
}

GaussianState partial_transpose(const GaussianState& s, const std::vector<Eigen::Index>& subset) {
    check_modes(s, subset, /*require_proper=*/false, "partial_transpose");
    Eigen::VectorXd flip = Eigen::VectorXd::Ones(s.n_modes);
    for (Eigen::Index m : subset) flip[m] = -1.0;
    Eigen::MatrixXd pp = flip.asDiagonal() * s.sigma_pp * flip.asDiagonal();
    Eigen::MatrixXd xp = s.sigma_xp * flip.asDiagonal();
    return GaussianState(s.sigma_xx, std::move(pp), std::move(xp));
}

double log_negativity(const GaussianState& s, const std::vector<Eigen::Index>& subset) {
    check_modes(s, subset, /*require_proper=*/true, "log_negativity");
    SymplecticSpectrum spec = symplectic_spectrum(partial_transpose(s, subset));
    double e_n = 0.0;
    for (double nu : spec.values) {
        if (2.0 * nu < 1.0) e_n -= std::log(2.0 * nu);
    }
    return e_n;
}

GaussianState local_scaling(const GaussianState& s, const Eigen::VectorXd& factors) {
    if (factors.size() != s.n_modes) {
        throw DimensionMismatch("local_scaling: one factor per mode required");
    }
    if ((factors.array() <= 0.0).any()) {
        throw NonPositiveFactor("local_scaling: factors must be positive");
    }
    Eigen::VectorXd inv = factors.cwiseInverse();
    Eigen::MatrixXd xx = factors.asDiagonal() * s.sigma_xx * factors.asDiagonal();
    Eigen::MatrixXd pp = inv.asDiagonal() * s.sigma_pp * inv.asDiagonal();
    Eigen::MatrixXd xp = factors.asDiagonal() * s.sigma_xp * inv.asDiagonal();
    return GaussianState(std::move(xx), std::move(pp), std::move(xp));
}

}  // namespace oscnet
