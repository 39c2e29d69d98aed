#pragma once

// Fixture set shared by the oracle cross-check tests and the acceptance
// suite: small Hamiltonians at mixed temperatures whose Gaussian observables
// are certified against truncated number-basis diagonalization.

#include <string>
#include <vector>

#include "oscnet/graph.hpp"
#include "oscnet/network.hpp"

namespace oscnet::testing {

struct OracleFixture {
    std::string name;
    QuadraticHamiltonian hamiltonian;
    double temperature;
    std::vector<int> entropy_subset;     // single-party reduction to compare (empty: skip)
    std::vector<int> negativity_subset;  // bipartition cut to compare (empty: skip)
};

inline std::vector<OracleFixture> oracle_fixtures() {
    std::vector<OracleFixture> out;

    out.push_back({"single vacuum mode", QuadraticHamiltonian(Eigen::MatrixXd::Ones(1, 1)),
                   0.0, {}, {}});
    out.push_back({"single thermal mode", QuadraticHamiltonian(Eigen::MatrixXd::Ones(1, 1)),
                   1.0, {}, {}});

    Eigen::MatrixXd pair(2, 2);
    pair << 1.0, 0.5, 0.5, 1.0;
    out.push_back({"coupled pair ground", QuadraticHamiltonian(pair), 0.0, {0}, {1}});
    out.push_back({"coupled pair thermal", QuadraticHamiltonian(pair), 0.3, {0}, {1}});

    Eigen::MatrixXd lopsided(2, 2);
    lopsided << 2.0, 0.4, 0.4, 1.0;
    Eigen::VectorXd masses(2);
    masses << 1.0, 2.0;
    out.push_back({"unequal masses thermal", QuadraticHamiltonian(masses, lopsided),
                   0.2, {0}, {1}});

    out.push_back({"three-site chain ground", network_hamiltonian(path(3), 0.4),
                   0.0, {1}, {0}});

    return out;
}

inline std::vector<Eigen::Index> to_modes(const std::vector<int>& v) {
    return {v.begin(), v.end()};
}

}  // namespace oscnet::testing
