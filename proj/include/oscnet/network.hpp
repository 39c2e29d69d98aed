#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "oscnet/gaussian.hpp"
#include "oscnet/graph.hpp"

namespace oscnet {

// Unit masses, V = I + 2cL. Positive definite for c >= 0 and for
// c > -1/(2 lambda_max(L)); outside that range ground_state throws.
QuadraticHamiltonian network_hamiltonian(const Graph& g, double coupling);

struct NodeEntropy {
    Eigen::Index node;
    Eigen::Index degree;
    double entropy;  // nats
};

// Entanglement entropy of every node against the rest of the network,
// evaluated on the ground state of network_hamiltonian(g, c).
std::vector<NodeEntropy> node_entropy_profile(const Graph& g, double coupling);

struct DegreeStats {
    double mean{0.0};
    double stddev{0.0};
    std::uint64_t count{0};
};

// degree -> (mean node entropy, stddev, sample count), pooled over all nodes
// of that exact degree across realizations.
using DegreeProfile = std::map<Eigen::Index, DegreeStats>;

struct ErdosRenyiSpec {
    Eigen::Index n;
    double mean_degree;
};
struct RandomRegularSpec {
    Eigen::Index n;
    Eigen::Index k;
};
struct BarabasiAlbertSpec {
    Eigen::Index n;
    Eigen::Index m;
};
struct SfConfigurationSpec {
    Eigen::Index n;
    Eigen::Index k_min;
};

using EnsembleSpec =
    std::variant<ErdosRenyiSpec, RandomRegularSpec, BarabasiAlbertSpec, SfConfigurationSpec>;

Graph generate(const EnsembleSpec& spec, std::uint64_t seed);

// Aggregates node_entropy_profile over seeded realizations. Realization r
// uses seed mix_seed(master_seed, r), so the ensemble is reproducible and
// order-insensitive.
DegreeProfile degree_profile(const EnsembleSpec& spec, double coupling, int realizations,
                             std::uint64_t master_seed);

}  // namespace oscnet
