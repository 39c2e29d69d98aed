#include "oscnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "oscnet/errors.hpp"
#include "oscnet/rng.hpp"

namespace oscnet {

namespace {

constexpr int kMatchingAttempts = 500;

using Edge = std::pair<Eigen::Index, Eigen::Index>;

Edge canonical(Eigen::Index u, Eigen::Index v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// One full stub-matching attempt. Clashing stubs are carried into the next
// round; a round with no progress means deadlock and the attempt fails.
bool try_stub_matching(const std::vector<Eigen::Index>& degrees, std::mt19937_64& rng,
                       std::set<Edge>& out) {
    std::vector<Eigen::Index> stubs;
    for (Eigen::Index v = 0; v < static_cast<Eigen::Index>(degrees.size()); ++v) {
        for (Eigen::Index j = 0; j < degrees[static_cast<std::size_t>(v)]; ++j) {
            stubs.push_back(v);
        }
    }
    out.clear();
    while (!stubs.empty()) {
        shuffle_vec(stubs, rng);
        std::vector<Eigen::Index> leftover;
        bool progress = false;
        for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
            const Eigen::Index u = stubs[t];
            const Eigen::Index v = stubs[t + 1];
            if (u == v || out.count(canonical(u, v)) != 0) {
                leftover.push_back(u);
                leftover.push_back(v);
            } else {
                out.insert(canonical(u, v));
                progress = true;
            }
        }
        if (!progress) return false;
        stubs = std::move(leftover);
    }
    return true;
}

}  // namespace

Graph::Graph(Eigen::Index n, std::vector<Edge> e) : n_nodes(n), edges(std::move(e)) {
    if (n_nodes < 1) {
        throw InvalidParameter("Graph: need at least one node");
    }
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_nodes) {
            throw InvalidParameter("Graph: edge endpoint out of range");
        }
        if (u == v) {
            throw InvalidParameter("Graph: self-loops are not allowed");
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InvalidParameter("Graph: duplicate edge");
    }
}

std::vector<Eigen::Index> Graph::degrees() const {
    std::vector<Eigen::Index> deg(static_cast<std::size_t>(n_nodes), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

bool Graph::has_edge(Eigen::Index u, Eigen::Index v) const {
    return std::binary_search(edges.begin(), edges.end(), canonical(u, v));
}

Eigen::MatrixXd adjacency(const Graph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n_nodes, g.n_nodes);
    for (const auto& [u, v] : g.edges) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Eigen::MatrixXd laplacian(const Graph& g) {
    // L_ij = k_i delta_ij - A_ij
    Eigen::MatrixXd l = -adjacency(g);
    const auto deg = g.degrees();
    for (Eigen::Index i = 0; i < g.n_nodes; ++i) {
        l(i, i) = static_cast<double>(deg[static_cast<std::size_t>(i)]);
    }
    return l;
}

Graph erdos_renyi(Eigen::Index n, double mean_degree, std::uint64_t seed) {
    if (n < 1) throw InvalidParameter("erdos_renyi: n must be positive");
    if (mean_degree < 0.0 || (n > 1 && mean_degree > static_cast<double>(n - 1))) {
        throw InvalidParameter("erdos_renyi: mean degree must lie in [0, n-1]");
    }
    const double p = n > 1 ? mean_degree / static_cast<double>(n - 1) : 0.0;
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Eigen::Index u = 0; u < n; ++u) {
        for (Eigen::Index v = u + 1; v < n; ++v) {
            if (uniform01(rng) < p) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph random_regular(Eigen::Index n, Eigen::Index k, std::uint64_t seed) {
    if (n < 1 || k < 0 || k >= n) {
        throw InvalidParameter("random_regular: need 0 <= k < n");
    }
    if ((n * k) % 2 != 0) {
        throw InvalidParameter("random_regular: n*k must be even");
    }
    if (k == 0) return Graph(n);

    std::mt19937_64 rng(seed);
    const std::vector<Eigen::Index> degrees(static_cast<std::size_t>(n), k);
    std::set<Edge> matched;
    for (int attempt = 0; attempt < kMatchingAttempts; ++attempt) {
        if (try_stub_matching(degrees, rng, matched)) {
            return Graph(n, {matched.begin(), matched.end()});
        }
    }
    throw GenerationFailure("random_regular: stub matching exhausted its retry budget");
}

Graph barabasi_albert(Eigen::Index n, Eigen::Index m, std::uint64_t seed) {
    if (m < 1 || m >= n) {
        throw InvalidParameter("barabasi_albert: need 1 <= m < n");
    }
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<Eigen::Index> repeated;  // node v appears deg(v) times

    // m-clique seed
    for (Eigen::Index u = 0; u < m; ++u) {
        for (Eigen::Index v = u + 1; v < m; ++v) {
            edges.emplace_back(u, v);
            repeated.push_back(u);
            repeated.push_back(v);
        }
    }
    for (Eigen::Index node = m; node < n; ++node) {
        std::set<Eigen::Index> targets;
        while (static_cast<Eigen::Index>(targets.size()) < m) {
            if (repeated.empty()) {
                // m = 1 bootstrap: the lone seed node has degree 0
                targets.insert(static_cast<Eigen::Index>(uniform_below(rng, node)));
            } else {
                targets.insert(repeated[uniform_below(rng, repeated.size())]);
            }
        }
        for (Eigen::Index t : targets) {
            edges.emplace_back(t, node);
            repeated.push_back(t);
            repeated.push_back(node);
        }
    }
    return Graph(n, std::move(edges));
}

Graph configuration_model(const std::vector<Eigen::Index>& degrees, std::uint64_t seed) {
    const Eigen::Index n = static_cast<Eigen::Index>(degrees.size());
    if (n < 1) throw InvalidParameter("configuration_model: empty degree sequence");
    Eigen::Index total = 0;
    for (Eigen::Index v = 0; v < n; ++v) {
        const Eigen::Index d = degrees[static_cast<std::size_t>(v)];
        if (d < 0 || d >= n) {
            throw InvalidParameter("configuration_model: degree out of range for a simple graph");
        }
        total += d;
    }
    if (total % 2 != 0) {
        throw InvalidParameter("configuration_model: degree sum must be even");
    }

    std::mt19937_64 rng(seed);
    std::set<Edge> matched;
    for (int attempt = 0; attempt < kMatchingAttempts; ++attempt) {
        if (try_stub_matching(degrees, rng, matched)) {
            return Graph(n, {matched.begin(), matched.end()});
        }
    }
    throw GenerationFailure("configuration_model: stub matching exhausted its retry budget");
}

Graph sf_configuration(Eigen::Index n, Eigen::Index k_min, std::uint64_t seed) {
    if (k_min < 1) throw InvalidParameter("sf_configuration: k_min must be >= 1");
    const auto k_max = static_cast<Eigen::Index>(std::sqrt(static_cast<double>(n)));
    if (k_max < k_min) {
        throw InvalidParameter("sf_configuration: n too small for k_min (structural cutoff sqrt(n))");
    }

    // Cumulative weights of P(k) ~ k^-3 on [k_min, k_max]
    std::vector<double> cumulative;
    double total = 0.0;
    for (Eigen::Index k = k_min; k <= k_max; ++k) {
        total += 1.0 / (static_cast<double>(k) * k * k);
        cumulative.push_back(total);
    }
    std::mt19937_64 rng(seed);
    auto sample_degree = [&]() {
        const double u = uniform01(rng) * total;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        return k_min + static_cast<Eigen::Index>(it - cumulative.begin());
    };

    for (int attempt = 0; attempt < kMatchingAttempts; ++attempt) {
        std::vector<Eigen::Index> degrees(static_cast<std::size_t>(n));
        Eigen::Index sum = 0;
        for (auto& d : degrees) {
            d = sample_degree();
            sum += d;
        }
        while (sum % 2 != 0) {
            // resample one degree until the stub count is even
            const std::size_t i = static_cast<std::size_t>(uniform_below(rng, degrees.size()));
            sum -= degrees[i];
            degrees[i] = sample_degree();
            sum += degrees[i];
        }
        std::set<Edge> matched;
        if (try_stub_matching(degrees, rng, matched)) {
            return Graph(n, {matched.begin(), matched.end()});
        }
    }
    throw GenerationFailure("sf_configuration: stub matching exhausted its retry budget");
}

Graph ring(Eigen::Index n) {
    if (n < 3) throw InvalidParameter("ring: need n >= 3");
    std::vector<Edge> edges;
    for (Eigen::Index i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph path(Eigen::Index n) {
    if (n < 2) throw InvalidParameter("path: need n >= 2");
    std::vector<Edge> edges;
    for (Eigen::Index i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& os) {
    os << "# nodes=" << g.n_nodes << "\n";
    for (const auto& [u, v] : g.edges) os << u << " " << v << "\n";
}

Graph read_edge_list(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("# nodes=", 0) != 0) {
        throw InvalidParameter("read_edge_list: missing '# nodes=<n>' header");
    }
    const Eigen::Index n = std::stoll(header.substr(8));
    std::vector<Edge> edges;
    Eigen::Index u, v;
    while (is >> u >> v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

void write_edge_list_file(const Graph& g, const std::string& filename) {
    std::ofstream os(filename);
    if (!os) throw InvalidParameter("write_edge_list_file: cannot open " + filename);
    write_edge_list(g, os);
}

Graph read_edge_list_file(const std::string& filename) {
    std::ifstream is(filename);
    if (!is) throw InvalidParameter("read_edge_list_file: cannot open " + filename);
    return read_edge_list(is);
}

}  // namespace oscnet
