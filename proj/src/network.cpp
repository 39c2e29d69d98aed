#include "oscnet/network.hpp"

#include <cmath>

#include "oscnet/errors.hpp"
#include "oscnet/rng.hpp"

namespace oscnet {

QuadraticHamiltonian network_hamiltonian(const Graph& g, double coupling) {
    Eigen::MatrixXd v =
        Eigen::MatrixXd::Identity(g.n_nodes, g.n_nodes) + 2.0 * coupling * laplacian(g);
    return QuadraticHamiltonian(std::move(v));
}

std::vector<NodeEntropy> node_entropy_profile(const Graph& g, double coupling) {
    const GaussianState state = ground_state(network_hamiltonian(g, coupling));
    const auto deg = g.degrees();
    std::vector<NodeEntropy> out;
    out.reserve(static_cast<std::size_t>(g.n_nodes));
    for (Eigen::Index i = 0; i < g.n_nodes; ++i) {
        // single-mode reduction: nu_i = sqrt(<x_i^2><p_i^2>) since sigma_xp = 0
        const double nu = std::sqrt(state.sigma_xx(i, i) * state.sigma_pp(i, i));
        out.push_back({i, deg[static_cast<std::size_t>(i)], mode_entropy(nu)});
    }
    return out;
}

Graph generate(const EnsembleSpec& spec, std::uint64_t seed) {
    return std::visit(
        [seed](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ErdosRenyiSpec>) {
                return erdos_renyi(s.n, s.mean_degree, seed);
            } else if constexpr (std::is_same_v<T, RandomRegularSpec>) {
                return random_regular(s.n, s.k, seed);
            } else if constexpr (std::is_same_v<T, BarabasiAlbertSpec>) {
                return barabasi_albert(s.n, s.m, seed);
            } else {
                return sf_configuration(s.n, s.k_min, seed);
            }
        },
        spec);
}

DegreeProfile degree_profile(const EnsembleSpec& spec, double coupling, int realizations,
                             std::uint64_t master_seed) {
    if (realizations < 1) {
        throw InvalidParameter("degree_profile: realizations must be >= 1");
    }
    struct Accum {
        double sum{0.0};
        double sum_sq{0.0};
        std::uint64_t count{0};
    };
    std::map<Eigen::Index, Accum> acc;
    for (int r = 0; r < realizations; ++r) {
        const Graph g = generate(spec, mix_seed(master_seed, static_cast<std::uint64_t>(r)));
        for (const NodeEntropy& ne : node_entropy_profile(g, coupling)) {
            Accum& a = acc[ne.degree];
            a.sum += ne.entropy;
            a.sum_sq += ne.entropy * ne.entropy;
            ++a.count;
        }
    }
    DegreeProfile profile;
    for (const auto& [degree, a] : acc) {
        const double n = static_cast<double>(a.count);
        const double mean = a.sum / n;
        const double var = std::max(0.0, a.sum_sq / n - mean * mean);
        profile[degree] = {mean, std::sqrt(var), a.count};
    }
    return profile;
}

}  // namespace oscnet
