#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace oscnet {

// Undirected simple graph: no self-loops, no multi-edges. Edges are stored
// canonically as (u, v) with u < v, sorted lexicographically.
struct Graph {
    Eigen::Index n_nodes{0};
    std::vector<std::pair<Eigen::Index, Eigen::Index>> edges;

    Graph(Eigen::Index n, std::vector<std::pair<Eigen::Index, Eigen::Index>> e);
    explicit Graph(Eigen::Index n) : Graph(n, {}) {}

    std::vector<Eigen::Index> degrees() const;
    bool has_edge(Eigen::Index u, Eigen::Index v) const;
};

Eigen::MatrixXd laplacian(const Graph& g);
Eigen::MatrixXd adjacency(const Graph& g);

// G(n, p) with p = mean_degree / (n - 1)
Graph erdos_renyi(Eigen::Index n, double mean_degree, std::uint64_t seed);

// Pairing model, restarted on deadlock; every node ends with degree k.
Graph random_regular(Eigen::Index n, Eigen::Index k, std::uint64_t seed);

// Preferential attachment from an m-clique seed; E = m(n-m) + m(m-1)/2.
Graph barabasi_albert(Eigen::Index n, Eigen::Index m, std::uint64_t seed);

// Stub matching of an explicit degree sequence (the configuration model).
Graph configuration_model(const std::vector<Eigen::Index>& degrees, std::uint64_t seed);

// Configuration model with degrees drawn from P(k) ~ k^-3 on [k_min, sqrt(n)].
Graph sf_configuration(Eigen::Index n, Eigen::Index k_min, std::uint64_t seed);

Graph ring(Eigen::Index n);
Graph path(Eigen::Index n);

// Edge-list text exchange format: header "# nodes=<n>", then one "u v" per line.
void write_edge_list(const Graph& g, std::ostream& os);
Graph read_edge_list(std::istream& is);
void write_edge_list_file(const Graph& g, const std::string& filename);
Graph read_edge_list_file(const std::string& filename);

}  // namespace oscnet
