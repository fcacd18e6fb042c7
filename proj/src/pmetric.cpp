#include "sga/pmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "sga/error.hpp"
#include "sga/localsearch.hpp"
#include "sga/parallel.hpp"
#include "sga/rng.hpp"

namespace sga {

namespace {

// k^n, saturating at INT64_MAX.
std::int64_t pow_sat(std::int64_t k, int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > INT64_MAX / k) return INT64_MAX;
        v *= k;
    }
    return v;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

CloudPoint make_point(const LabeledSchreierGraph& g, Coloring c, int r_max) {
    CloudPoint p;
    for (int r = 1; r <= r_max; ++r) p.stack.push_back(colored_type_dist(g, r, c));
    for (const auto& d : p.stack) {
        p.key += d.serialize();
        p.key += '#';
    }
    p.witness = std::move(c);
    return p;
}

Coloring coloring_from_index(std::int64_t idx, int n, int k) {
    Coloring c;
    c.k = k;
    c.colors.resize(n);
    for (int v = 0; v < n; ++v) {
        c.colors[v] = 1 + (int)(idx % k);
        idx /= k;
    }
    return c;
}

void dedup_append(GlobalKType& cloud, std::unordered_set<std::string>& seen, CloudPoint p) {
    if (seen.insert(p.key).second) cloud.points.push_back(std::move(p));
}

// Signed coefficient in [-1,1] for one code string under one direction.
double direction_coef(std::uint64_t dir_seed, const std::string& code) {
    std::uint64_t h = mix64(dir_seed ^ fnv1a(code));
    return (double)(h >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

double direction_score(const CloudPoint& p, std::uint64_t dir_seed) {
    double score = 0.0;
    double w = 1.0;
    for (const auto& dist : p.stack) {
        w *= 0.5;
        for (const auto& [code, count] : dist.counts)
            score += w * ((double)count / (double)dist.denominator) * direction_coef(dir_seed, code);
    }
    return score;
}

} // namespace

double stack_distance(const CloudPoint& a, const CloudPoint& b) {
    return weak_metric_stacks(a.stack, b.stack).to_double();
}

GlobalKType global_k_type(const LabeledSchreierGraph& g, int k, int r_max, CloudMode mode,
                          std::int64_t budget, std::uint64_t seed,
                          const std::vector<std::vector<TypeDistribution>>& targets) {
    if (k < 1) throw bad_parameter("global_k_type: k must be >= 1");
    if (r_max < 1) throw bad_parameter("global_k_type: r_max must be >= 1");
    int n = g.vertex_count();
    GlobalKType cloud;
    cloud.k = k;
    cloud.r_max = r_max;
    cloud.mode = mode;
    cloud.budget = budget;
    cloud.seed = seed;
    std::unordered_set<std::string> seen;

    if (k == 1) {
        Coloring c{std::vector<int>(n, 1), 1};
        dedup_append(cloud, seen, make_point(g, std::move(c), r_max));
        return cloud;
    }

    if (mode == CloudMode::exhaustive) {
        std::int64_t total = pow_sat(k, n);
        if (total > budget)
            throw budget_exceeded("exhaustive cloud needs " + std::to_string(total) +
                                  " colorings, budget is " + std::to_string(budget));
        auto points = parallel_map<CloudPoint>((std::size_t)total, [&](std::size_t i) {
            return make_point(g, coloring_from_index((std::int64_t)i, n, k), r_max);
        });
        for (auto& p : points) dedup_append(cloud, seen, std::move(p));
        return cloud;
    }

    // Sampled: (i) uniform random colorings, (ii) hill climbs maximizing
    // random linear functionals over code-weight coordinates, (iii) descent
    // toward caller-supplied target statistics.
    std::int64_t random_budget = budget * 3 / 5;
    std::int64_t rest = budget - random_budget;

    auto random_points = parallel_map<CloudPoint>((std::size_t)std::max<std::int64_t>(random_budget, 1),
                                                  [&](std::size_t i) {
        std::mt19937_64 rng(derive_seed(seed, 1000 + i));
        Coloring c;
        c.k = k;
        c.colors.resize(n);
        for (int v = 0; v < n; ++v) c.colors[v] = 1 + (int)rand_below(rng, (std::uint64_t)k);
        return make_point(g, std::move(c), r_max);
    });
    for (auto& p : random_points) dedup_append(cloud, seen, std::move(p));

    int directions = 8;
    std::int64_t target_share = targets.empty() ? 0 : rest / 2;
    std::int64_t dir_budget = std::max<std::int64_t>(1, (rest - target_share) / directions);
    auto dir_results = parallel_map<std::vector<CloudPoint>>((std::size_t)directions,
                                                             [&](std::size_t d) {
        std::uint64_t dir_seed = derive_seed(seed, 2000 + d);
        std::mt19937_64 rng(derive_seed(seed, 3000 + d));
        Coloring cur;
        cur.k = k;
        cur.colors.resize(n);
        for (int v = 0; v < n; ++v) cur.colors[v] = 1 + (int)rand_below(rng, (std::uint64_t)k);
        CloudPoint cur_pt = make_point(g, cur, r_max);
        double cur_score = direction_score(cur_pt, dir_seed);
        std::vector<CloudPoint> visited{cur_pt};
        std::int64_t evals = 1;
        bool improved = true;
        while (improved && evals < dir_budget) {
            improved = false;
            for (int v = 0; v < n && evals < dir_budget; ++v) {
                int old = cur.colors[v];
                for (int c = 1; c <= k && evals < dir_budget; ++c) {
                    if (c == old) continue;
                    cur.colors[v] = c;
                    CloudPoint p = make_point(g, cur, r_max);
                    ++evals;
                    double s = direction_score(p, dir_seed);
                    if (s > cur_score) {
                        cur_score = s;
                        old = c;
                        visited.push_back(std::move(p));
                        improved = true;
                    } else {
                        cur.colors[v] = old;
                    }
                }
                cur.colors[v] = old;
            }
        }
        return visited;
    });
    for (auto& vec : dir_results)
        for (auto& p : vec) dedup_append(cloud, seen, std::move(p));

    if (!targets.empty()) {
        std::int64_t per_target = std::max<std::int64_t>(1, target_share / (std::int64_t)targets.size());
        for (std::size_t t = 0; t < targets.size(); ++t) {
            const auto& target = targets[t];
            auto objective = [&](const Coloring& c) {
                CloudPoint p = make_point(g, c, r_max);
                return weak_metric_stacks(p.stack, target).to_double();
            };
            SearchResult sr = minimize_coloring(n, k, objective, per_target,
                                                derive_seed(seed, 4000 + t));
            dedup_append(cloud, seen, make_point(g, sr.best, r_max));
        }
    }
    return cloud;
}

HausdorffResult hausdorff(const GlobalKType& a, const GlobalKType& b) {
    if (a.k != b.k || a.r_max != b.r_max)
        throw shape_mismatch("hausdorff: clouds have different (k, r_max)");
    if (a.points.empty() || b.points.empty())
        throw shape_mismatch("hausdorff: empty cloud");
    HausdorffResult res;
    auto one_sided = [](const GlobalKType& from, const GlobalKType& to, std::size_t& witness) {
        auto mins = parallel_map<double>(from.points.size(), [&](std::size_t i) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : to.points)
                best = std::min(best, stack_distance(from.points[i], q));
            return best;
        });
        double sup = -1.0;
        for (std::size_t i = 0; i < mins.size(); ++i)
            if (mins[i] > sup) { sup = mins[i]; witness = i; }
        return sup;
    };
    res.a_to_b = one_sided(a, b, res.witness_a);
    res.b_to_a = one_sided(b, a, res.witness_b);
    res.value = std::max(res.a_to_b, res.b_to_a);
    return res;
}

PdReport partition_distance(const LabeledSchreierGraph& g1, const LabeledSchreierGraph& g2,
                            int k_max, int r_max, CloudMode mode, std::int64_t budget,
                            std::uint64_t seed, bool include_pd1) {
    if (k_max < 2) throw bad_parameter("partition_distance: k_max must be >= 2");
    PdReport report;
    report.k_max = k_max;
    report.r_max = r_max;
    report.mode = mode;
    report.budget = budget;
    report.seed = seed;
    report.tail_bound = std::ldexp(1.0, -k_max);
    double pd = 0.0;
    for (int k = 2; k <= k_max; ++k) {
        GlobalKType a = global_k_type(g1, k, r_max, mode, budget, derive_seed(seed, 2 * k));
        GlobalKType b = global_k_type(g2, k, r_max, mode, budget, derive_seed(seed, 2 * k + 1));
        HausdorffResult h = hausdorff(a, b);
        report.pd_k.push_back(h.value);
        report.witness_a.push_back(a.points[h.witness_a].witness);
        report.witness_b.push_back(b.points[h.witness_b].witness);
        report.per_k.push_back(h);
        pd += std::ldexp(1.0, -k) * h.value;
    }
    report.pd = pd;
    if (include_pd1) {
        GlobalKType a = global_k_type(g1, 1, r_max, mode, budget, seed);
        GlobalKType b = global_k_type(g2, 1, r_max, mode, budget, seed);
        report.pd_1 = hausdorff(a, b).value;
    }
    return report;
}

SimulationResult simulate_profile(const LabeledSchreierGraph& g, const ProfileMatrix& target,
                                  std::int64_t budget, std::uint64_t seed) {
    int n = g.vertex_count();
    int k = target.k;
    if (k < 1) throw shape_mismatch("simulate_profile: target has no colors");
    auto objective = [&](const Coloring& c) {
        ProfileMatrix prof = correlation_profile(g, c, target.words);
        double worst = 0.0;
        for (std::size_t w = 0; w < prof.entries.size(); ++w)
            for (std::size_t e = 0; e < prof.entries[w].size(); ++e)
                worst = std::max(worst,
                                 (prof.entries[w][e] - target.entries[w][e]).abs().to_double());
        return worst;
    };
    std::int64_t total = pow_sat(k, n);
    SimulationResult res;
    if (budget > 0 && total <= budget) {
        double best = std::numeric_limits<double>::infinity();
        Coloring best_c;
        for (std::int64_t i = 0; i < total; ++i) {
            Coloring c = coloring_from_index(i, n, k);
            double v = objective(c);
            if (v < best) { best = v; best_c = c; }
        }
        res.coloring = best_c;
        res.deviation = best;
        res.evals = total;
        return res;
    }
    SearchResult sr = minimize_coloring(n, k, objective, budget, seed);
    res.coloring = sr.best;
    res.deviation = sr.value;
    res.evals = sr.evals;
    return res;
}

SimulationResult simulate_profile(const LabeledSchreierGraph& g, const TypeDistribution& target,
                                  std::int64_t budget, std::uint64_t seed) {
    int n = g.vertex_count();
    int k = target.k;
    if (k < 1) throw shape_mismatch("simulate_profile: target must be colored");
    if (target.s_size != g.generator_count())
        throw shape_mismatch("simulate_profile: generator count mismatch");
    std::vector<TypeDistribution> target_stack;
    for (int r = 1; r <= target.r; ++r) target_stack.push_back(target.truncate(r));
    auto objective = [&](const Coloring& c) {
        std::vector<TypeDistribution> stack;
        for (int r = 1; r <= target.r; ++r) stack.push_back(colored_type_dist(g, r, c));
        return weak_metric_stacks(stack, target_stack).to_double();
    };
    std::int64_t total = pow_sat(k, n);
    SimulationResult res;
    if (budget > 0 && total <= budget) {
        double best = std::numeric_limits<double>::infinity();
        Coloring best_c;
        for (std::int64_t i = 0; i < total; ++i) {
            Coloring c = coloring_from_index(i, n, k);
            double v = objective(c);
            if (v < best) { best = v; best_c = c; }
        }
        res.coloring = best_c;
        res.deviation = best;
        res.evals = total;
        return res;
    }
    SearchResult sr = minimize_coloring(n, k, objective, budget, seed);
    res.coloring = sr.best;
    res.deviation = sr.value;
    res.evals = sr.evals;
    return res;
}

} // namespace sga
