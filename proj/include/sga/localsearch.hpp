#ifndef SGA_LOCALSEARCH_HPP
#define SGA_LOCALSEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "sga/schreier.hpp"

namespace sga {

struct SearchResult {
    Coloring best;
    double value = 0.0;
    std::int64_t evals = 0;
};

// Seeded coloring minimizer shared by the cloud sampler, the statistic
// matcher and the rule search. Move set: single-vertex recolor. Annealing
// with geometric cooling (ratio 0.97 per sweep); the initial temperature is
// the standard deviation of the objective over 100 random colorings. A
// steepest-descent pass with sideways moves finishes each restart. Results
// depend only on (seed, budget), never on thread scheduling: restarts carry
// derived seeds and are merged in restart order.
SearchResult minimize_coloring(int n, int k,
                               const std::function<double(const Coloring&)>& objective,
                               std::int64_t budget, std::uint64_t seed,
                               std::optional<Coloring> initial = std::nullopt,
                               int restarts = 6);

} // namespace sga

#endif
