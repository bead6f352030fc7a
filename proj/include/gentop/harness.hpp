#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gentop/generators.hpp"
#include "gentop/report.hpp"

namespace gentop {

// Every GT on the ground "0".."n-1", canonical order. n <= 3.
std::vector<Gts> enumerate_gts(int n);

struct InstanceSpec {
    int min_ground = 0;
    int max_ground = 4;
    double density = 3.0; // expected base size
    std::uint64_t seed = 0;
    std::vector<std::string> filters; // axiom names, "strong", "nonstrong"
    int reject_budget = 10000;
};

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

class InstanceStream {
public:
    explicit InstanceStream(InstanceSpec spec);
    Gts next(); // Resource error naming the filter when the budget runs out

private:
    InstanceSpec spec_;
    std::uint64_t index_ = 0;
};

Gts random_gts(const InstanceSpec& spec);
Gts random_base_gts(std::mt19937_64& rng, int min_ground, int max_ground, double density);
bool passes_filter(const Gts& g, const std::string& filter);

struct RunOptions {
    std::uint64_t seed = 1;
    long long trials = -1;  // per-property default when negative
    int exhaustive = -1;    // per-property default when negative
};

std::vector<std::string> property_ids();
PropertyReport check_property(const std::string& id, const RunOptions& opts = {});

std::vector<std::string> hunt_ids();
PropertyReport search_counterexample(const std::string& id, int max_ground);

// Re-runs the check named in a counterexample; true when it still fails.
bool recheck_counterexample(const std::string& counterexample_json);

} // namespace gentop
