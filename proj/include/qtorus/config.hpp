#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtorus/lattice.hpp"

namespace qtorus {

/// Strict JSON configuration:
///   {"n": 3, "r": 1, "mode": "generic" | "root", "m": 4,
///    "E": [[[...], ...], ...], "split": {"basis": [[...], ...], "t": 3}, "seed": 7}
/// "m" is required exactly in root mode, "r" defaults to the number of
/// matrices, split.t is 1-based and names the column of the basis that
/// becomes t. Unknown keys are rejected.
struct AlgebraConfig {
    std::string name;
    ExponentSystem sys;
    IntMatrix basis;  // identity when no split is given
    int t = 0;        // 0-based
    std::optional<std::uint64_t> seed;
    nlohmann::json echo;

    /// The system in coordinates where t is last.
    ExponentSystem split_system() const;
};

/// Throws Error(Config) naming the offending key, or InvalidExponentSystem
/// naming the first antisymmetry violation. allow_name admits a "name" key.
AlgebraConfig parse_config(const nlohmann::json& j, bool allow_name = false);
nlohmann::json read_json_file(const std::string& path);
AlgebraConfig load_config(const std::string& path);

/// {"corpus": [config, ...]}, each entry optionally carrying "name".
std::vector<AlgebraConfig> load_corpus(const std::string& path);

}  // namespace qtorus
