/// @file checks.hpp
/// @brief Property suites behind `monopole-ledger check`.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace monopole {

struct PropertyResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t skipped = 0;  ///< grid points where a side is undefined
    std::optional<std::string> counterexample;
    bool pass() const { return !counterexample; }
};

struct SuiteResult {
    std::string suite;
    std::int64_t grid_bound = 0;  ///< the value actually used
    std::vector<PropertyResult> properties;
    bool pass() const;
};

struct CheckOptions {
    /// Meaning depends on the suite; see suite_grid_help(). nullopt = suite default.
    std::optional<std::int64_t> grid_bound;
    /// Sum the Segre closed form from j = 1 instead of j = 0 (segre suite).
    bool literal_segre = false;
    std::uint64_t seed = 20240607;
};

std::vector<std::string> suite_names();
/// One line per suite describing what --grid-bound controls.
std::string suite_grid_help();

/// Throws InputError for an unknown suite or a bad bound.
SuiteResult run_suite(const std::string& name, const CheckOptions& opts);

}  // namespace monopole
