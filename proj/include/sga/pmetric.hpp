#ifndef SGA_PMETRIC_HPP
#define SGA_PMETRIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sga/stats.hpp"

namespace sga {

enum class CloudMode { exhaustive, sampled };

// One achievable colored statistic: the stack of colored type distributions
// for radii 1..r_max, with a witness coloring that realizes it.
struct CloudPoint {
    std::vector<TypeDistribution> stack;
    Coloring witness;
    std::string key; // exact serialization of the stack, for dedup
};

// Finite approximation of the global k-type: the set of colored statistics
// achievable by k-colorings of one graph.
struct GlobalKType {
    int k = 1;
    int r_max = 1;
    CloudMode mode = CloudMode::exhaustive;
    std::int64_t budget = 0;
    std::uint64_t seed = 0;
    std::vector<CloudPoint> points;
};

struct HausdorffResult {
    double value = 0.0;
    double a_to_b = 0.0; // sup over A of inf over B
    double b_to_a = 0.0;
    std::size_t witness_a = 0; // index in A attaining a_to_b
    std::size_t witness_b = 0; // index in B attaining b_to_a
};

struct PdReport {
    int k_max = 2;
    int r_max = 1;
    CloudMode mode = CloudMode::exhaustive;
    std::int64_t budget = 0;
    std::uint64_t seed = 0;
    std::vector<double> pd_k;            // for k = 2..k_max
    std::vector<HausdorffResult> per_k;  // parallel to pd_k
    std::vector<Coloring> witness_a;     // extremal coloring of A per k
    std::vector<Coloring> witness_b;     // extremal coloring of B per k
    double pd = 0.0;
    double tail_bound = 0.0; // 2^{-k_max}
    std::optional<double> pd_1; // diagnostic; not part of pd
};

GlobalKType global_k_type(const LabeledSchreierGraph& g, int k, int r_max, CloudMode mode,
                          std::int64_t budget, std::uint64_t seed,
                          const std::vector<std::vector<TypeDistribution>>& targets = {});

// Two-sided Hausdorff distance between clouds under the stack metric
// sum_r 2^{-r} TV_r. In sampled mode one-sided values are upper-bound
// estimates: under-sampling the source cloud biases them down, the
// destination cloud up.
HausdorffResult hausdorff(const GlobalKType& a, const GlobalKType& b);

double stack_distance(const CloudPoint& a, const CloudPoint& b);

PdReport partition_distance(const LabeledSchreierGraph& g1, const LabeledSchreierGraph& g2,
                            int k_max, int r_max, CloudMode mode, std::int64_t budget,
                            std::uint64_t seed, bool include_pd1 = false);

struct SimulationResult {
    Coloring coloring;
    double deviation = 0.0;
    std::int64_t evals = 0;
};

// Best-effort statistic matching: search for a coloring whose correlation
// profile (max-entry deviation) or colored type distribution (weak metric)
// approaches the target. Heuristic upper bound, no success guarantee.
SimulationResult simulate_profile(const LabeledSchreierGraph& g, const ProfileMatrix& target,
                                  std::int64_t budget, std::uint64_t seed);
SimulationResult simulate_profile(const LabeledSchreierGraph& g, const TypeDistribution& target,
                                  std::int64_t budget, std::uint64_t seed);

} // namespace sga

#endif
