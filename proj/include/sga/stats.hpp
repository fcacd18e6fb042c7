#ifndef SGA_STATS_HPP
#define SGA_STATS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sga/balls.hpp"
#include "sga/rational.hpp"
#include "sga/schreier.hpp"

namespace sga {

// Empirical distribution over serialized ball codes. Weights are exact
// counts over a common denominator (the vertex or sample count), which
// keeps marginal-consistency checks exact.
struct TypeDistribution {
    int r = 0;
    int k = 0; // 0 = uncolored
    int s_size = 1;
    std::int64_t denominator = 1;
    std::map<std::string, std::int64_t> counts;

    Rational weight(const std::string& code) const {
        auto it = counts.find(code);
        return it == counts.end() ? Rational(0) : Rational(it->second, denominator);
    }

    // Pushforward under code truncation to radius new_r.
    TypeDistribution truncate(int new_r) const;

    std::string serialize() const;

    friend bool operator==(const TypeDistribution& a, const TypeDistribution& b);
};

// Correlation profile mu(f_gamma C_i ∩ C_j) for gamma in F, colors i, j.
struct ProfileMatrix {
    std::vector<ReducedWord> words;
    int k = 0;
    // entries[g][ (i-1)*k + (j-1) ]
    std::vector<std::vector<Rational>> entries;

    Rational entry(std::size_t g, int i, int j) const {
        return entries[g][(std::size_t)(i - 1) * k + (j - 1)];
    }
};

TypeDistribution type_dist(const LabeledSchreierGraph& g, int r);
TypeDistribution colored_type_dist(const LabeledSchreierGraph& g, int r, const Coloring& c);

// Half the L1 distance between the weight maps.
Rational tv_distance(const TypeDistribution& p, const TypeDistribution& q);

// Metric on type stacks: sum over r = 1..r_max of 2^{-r} * TV at radius r.
// Values lie in [0, 1 - 2^{-r_max}]; the truncation tail is 2^{-r_max}.
Rational weak_metric(const LabeledSchreierGraph& g1, const LabeledSchreierGraph& g2, int r_max);
Rational weak_metric_stacks(const std::vector<TypeDistribution>& a,
                            const std::vector<TypeDistribution>& b);

ProfileMatrix correlation_profile(const LabeledSchreierGraph& g, const Coloring& c,
                                  const std::vector<ReducedWord>& words);

// All w in W^{r,S} with w(x) = x; radius-r stabilizer sample.
std::vector<ReducedWord> returning_words(const LabeledSchreierGraph& g, int x, int r);

// Ball codes at `count` independently seeded uniform random vertices.
std::vector<BallCode> irs_sample(const LabeledSchreierGraph& g, int r, int count,
                                 std::uint64_t seed);

} // namespace sga

#endif
