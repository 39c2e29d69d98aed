#include "oscnet/experiments.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oscnet/com_model.hpp"
#include "oscnet/errors.hpp"

namespace oscnet {

namespace {

using nlohmann::ordered_json;

ordered_json cell_to_json(const Table::Cell& cell) {
    if (std::holds_alternative<std::int64_t>(cell)) return std::get<std::int64_t>(cell);
    if (std::holds_alternative<double>(cell)) return std::get<double>(cell);
    return std::get<std::string>(cell);
}

std::string cell_to_csv(const Table::Cell& cell) {
    if (std::holds_alternative<std::int64_t>(cell)) {
        return std::to_string(std::get<std::int64_t>(cell));
    }
    if (std::holds_alternative<double>(cell)) {
        return format_number(std::get<double>(cell));
    }
    return std::get<std::string>(cell);
}

InteractionPattern parse_pattern(const std::string& name) {
    if (name == "pairwise") return InteractionPattern::pairwise;
    if (name == "one-to-all") return InteractionPattern::one_to_all;
    throw InvalidParameter("unknown pattern '" + name + "' (expected pairwise | one-to-all)");
}

TwoObjectModel make_model(const ComScalingConfig& config, Eigen::Index n) {
    if (parse_pattern(config.pattern) == InteractionPattern::pairwise) {
        return TwoObjectModel::pairwise(n, config.g0, config.mass, config.omega);
    }
    return TwoObjectModel::one_to_all(n, config.g0, config.mass, config.omega);
}

Graph chain_graph(const ChainConfig& config) {
    if (config.topology == "ring") return ring(config.length);
    if (config.topology == "path") return path(config.length);
    throw InvalidParameter("unknown topology '" + config.topology + "' (expected ring | path)");
}

// Pair of sites at the given separation: translation-invariant (0, d) on the
// ring, centered on the path to stay clear of the ends.
std::pair<Eigen::Index, Eigen::Index> chain_pair(const ChainConfig& config, Eigen::Index d) {
    if (config.topology == "ring") return {0, d};
    const Eigen::Index lo = (config.length - d) / 2;
    return {lo, lo + d};
}

double max_chain_negativity(const ChainConfig& config, const Graph& g, double temperature) {
    const GaussianState state =
        thermal_state(network_hamiltonian(g, config.coupling), temperature);
    double best = 0.0;
    for (Eigen::Index d = 1; d <= config.max_separation; ++d) {
        const auto [a, b] = chain_pair(config, d);
        best = std::max(best, log_negativity(reduce(state, {a, b}), {1}));
    }
    return best;
}

}  // namespace

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", x);
    return buf;
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        os << (c ? "," : "") << t.columns[c];
    }
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c ? "," : "") << cell_to_csv(row[c]);
        }
        os << "\n";
    }
    return os.str();
}

std::string to_json(const Table& t, const ordered_json& meta) {
    ordered_json doc;
    doc["meta"] = meta;
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json rec;
        for (std::size_t c = 0; c < row.size(); ++c) {
            rec[t.columns[c]] = cell_to_json(row[c]);
        }
        rows.push_back(std::move(rec));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_output(const Table& t, const ordered_json& meta, const std::string& path,
                  OutputFormat format) {
    std::ofstream os(path, std::ios::binary);  // LF line endings everywhere
    if (!os) throw InvalidParameter("cannot open output file " + path);
    os << (format == OutputFormat::csv ? to_csv(t) : to_json(t, meta));
}

EnsembleSpec parse_ensemble(const NetworkProfileConfig& config) {
    if (config.model == "er") return ErdosRenyiSpec{config.nodes, config.mean_degree};
    if (config.model == "rrg") return RandomRegularSpec{config.nodes, config.degree};
    if (config.model == "sf-ba") return BarabasiAlbertSpec{config.nodes, config.m};
    if (config.model == "sf-conf") return SfConfigurationSpec{config.nodes, config.k_min};
    throw InvalidParameter("unknown model '" + config.model +
                           "' (expected er | rrg | sf-conf | sf-ba)");
}

Table run_network_profile(const NetworkProfileConfig& config) {
    const DegreeProfile profile =
        degree_profile(parse_ensemble(config), config.coupling, config.realizations, config.seed);
    Table t;
    t.columns = {"degree", "mean_entropy_nats", "std", "count"};
    for (const auto& [degree, stats] : profile) {
        t.rows.push_back({static_cast<std::int64_t>(degree), stats.mean, stats.stddev,
                          static_cast<std::int64_t>(stats.count)});
    }
    return t;
}

Table run_com_scaling(const ComScalingConfig& config) {
    const InteractionPattern pattern = parse_pattern(config.pattern);
    Table t;
    t.columns = {"N", "pattern", "G0", "T", "log_negativity"};
    if (config.critical) t.columns.push_back("T_c");
    for (Eigen::Index n : config.n_list) {
        try {
            const TwoObjectModel model = make_model(config, n);
            std::vector<Table::Cell> row{static_cast<std::int64_t>(n), config.pattern,
                                         config.g0, config.temperature,
                                         com_negativity(model, config.temperature)};
            if (config.critical) {
                row.push_back(critical_temperature(model, pattern, config.tol));
            }
            t.rows.push_back(std::move(row));
        } catch (const NonPositivePotential& e) {
            throw NonPositivePotential("N=" + std::to_string(n) + ": " + e.what());
        }
    }
    return t;
}

ChainResult run_chain(const ChainConfig& config) {
    if (config.max_separation < 1) {
        throw InvalidParameter("chain: max separation must be >= 1");
    }
    const Graph g = chain_graph(config);
    const Eigen::Index half = config.topology == "ring" ? config.length / 2 : config.length - 1;
    if (config.max_separation > half) {
        throw InvalidParameter("chain: max separation too large for this length");
    }

    ChainResult result;
    result.table.columns = {"separation", "log_negativity"};
    const GaussianState state =
        thermal_state(network_hamiltonian(g, config.coupling), config.temperature);
    for (Eigen::Index d = 1; d <= config.max_separation; ++d) {
        const auto [a, b] = chain_pair(config, d);
        result.table.rows.push_back(
            {static_cast<std::int64_t>(d), log_negativity(reduce(state, {a, b}), {1})});
    }

    // Onset temperature: bisect the point where the last surviving pair
    // negativity dies. Undefined when nothing is entangled at T = 0.
    if (max_chain_negativity(config, g, 0.0) > 0.0) {
        double lo = 0.0;
        double hi = 1.0;
        int doublings = 0;
        bool bracketed = true;
        while (max_chain_negativity(config, g, hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
            if (++doublings > 60) {
                bracketed = false;
                break;
            }
        }
        if (bracketed) {
            while (hi - lo > 1e-6 * hi) {
                const double mid = 0.5 * (lo + hi);
                (max_chain_negativity(config, g, mid) > 0.0 ? lo : hi) = mid;
            }
            result.onset_temperature = 0.5 * (lo + hi);
        }
    }
    return result;
}

ordered_json meta_record(const NetworkProfileConfig& config) {
    ordered_json meta;
    meta["command"] = "network-profile";
    meta["model"] = config.model;
    meta["nodes"] = config.nodes;
    if (config.model == "er") meta["mean_degree"] = config.mean_degree;
    if (config.model == "rrg") meta["degree"] = config.degree;
    if (config.model == "sf-ba") meta["m"] = config.m;
    if (config.model == "sf-conf") meta["kmin"] = config.k_min;
    meta["coupling"] = config.coupling;
    meta["realizations"] = config.realizations;
    meta["seed"] = config.seed;
    meta["version"] = kVersion;
    return meta;
}

ordered_json meta_record(const ComScalingConfig& config) {
    ordered_json meta;
    meta["command"] = "com-scaling";
    meta["pattern"] = config.pattern;
    ordered_json ns = ordered_json::array();
    for (Eigen::Index n : config.n_list) ns.push_back(n);
    meta["n_list"] = std::move(ns);
    meta["g0"] = config.g0;
    meta["omega"] = config.omega;
    meta["mass"] = config.mass;
    meta["temperature"] = config.temperature;
    meta["critical"] = config.critical;
    if (config.critical) meta["tol"] = config.tol;
    meta["version"] = kVersion;
    return meta;
}

ordered_json meta_record(const ChainConfig& config, const ChainResult& result) {
    ordered_json meta;
    meta["command"] = "chain";
    meta["topology"] = config.topology;
    meta["length"] = config.length;
    meta["coupling"] = config.coupling;
    meta["temperature"] = config.temperature;
    meta["max_separation"] = config.max_separation;
    if (result.onset_temperature) {
        meta["onset_temperature"] = *result.onset_temperature;
    } else {
        meta["onset_temperature"] = nullptr;
    }
    meta["version"] = kVersion;
    return meta;
}

}  // namespace oscnet
