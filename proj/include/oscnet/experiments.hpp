#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "oscnet/network.hpp"

namespace oscnet {

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { csv, json };

// Plot-ready tabular result. Cells are integers, reals, or labels.
struct Table {
    using Cell = std::variant<std::int64_t, double, std::string>;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Reals are rendered with 12 fractional digits in scientific notation so that
// every emitted number parses back to well within 1e-12 relative error.
std::string format_number(double x);

std::string to_csv(const Table& t);
// Rows as an array of records plus a `meta` record (config echo, seed, version).
std::string to_json(const Table& t, const nlohmann::ordered_json& meta);

void write_output(const Table& t, const nlohmann::ordered_json& meta,
                  const std::string& path, OutputFormat format);

struct NetworkProfileConfig {
    std::string model;  // er | rrg | sf-conf | sf-ba
    Eigen::Index nodes{0};
    double mean_degree{0.0};  // er
    Eigen::Index degree{0};   // rrg
    Eigen::Index m{0};        // sf-ba
    Eigen::Index k_min{0};    // sf-conf
    double coupling{0.0};
    int realizations{1};
    std::uint64_t seed{0};
};

struct ComScalingConfig {
    std::string pattern;  // pairwise | one-to-all
    std::vector<Eigen::Index> n_list;
    double g0{0.0};
    double omega{1.0};
    double mass{1.0};
    double temperature{0.0};
    bool critical{false};
    double tol{1e-6};
};

struct ChainConfig {
    std::string topology;  // ring | path
    Eigen::Index length{0};
    double coupling{0.0};
    double temperature{0.0};
    Eigen::Index max_separation{1};
};

EnsembleSpec parse_ensemble(const NetworkProfileConfig& config);

// degree, mean_entropy_nats, std, count; sorted by degree
Table run_network_profile(const NetworkProfileConfig& config);

// N, pattern, G0, T, log_negativity[, T_c]
Table run_com_scaling(const ComScalingConfig& config);

struct ChainResult {
    Table table;  // separation, log_negativity
    // Temperature above which every sampled separation is separable;
    // absent when there is no entanglement to lose at T = 0.
    std::optional<double> onset_temperature;
};

ChainResult run_chain(const ChainConfig& config);

nlohmann::ordered_json meta_record(const NetworkProfileConfig& config);
nlohmann::ordered_json meta_record(const ComScalingConfig& config);
nlohmann::ordered_json meta_record(const ChainConfig& config, const ChainResult& result);

}  // namespace oscnet
