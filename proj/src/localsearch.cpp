#include "sga/localsearch.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sga/parallel.hpp"
#include "sga/rng.hpp"

namespace sga {

namespace {

Coloring random_coloring(int n, int k, std::mt19937_64& rng) {
    Coloring c;
    c.k = k;
    c.colors.resize(n);
    for (int i = 0; i < n; ++i) c.colors[i] = 1 + (int)rand_below(rng, (std::uint64_t)k);
    return c;
}

struct RestartOutcome {
    Coloring best;
    double value;
    std::int64_t evals;
};

RestartOutcome run_restart(int n, int k, const std::function<double(const Coloring&)>& objective,
                           std::int64_t budget, std::uint64_t seed, double init_temp,
                           const std::optional<Coloring>& initial) {
    std::mt19937_64 rng(seed);
    Coloring cur = initial ? *initial : random_coloring(n, k, rng);
    double cur_val = objective(cur);
    std::int64_t evals = 1;
    Coloring best = cur;
    double best_val = cur_val;

    double temp = init_temp;
    std::int64_t anneal_budget = budget * 3 / 4;
    while (evals < anneal_budget && temp > 1e-12) {
        for (int sweep = 0; sweep < n && evals < anneal_budget; ++sweep) {
            int v = (int)rand_below(rng, (std::uint64_t)n);
            int old = cur.colors[v];
            int nc = 1 + (int)rand_below(rng, (std::uint64_t)k);
            if (nc == old) continue;
            cur.colors[v] = nc;
            double val = objective(cur);
            ++evals;
            double delta = val - cur_val;
            if (delta <= 0.0 || rand_unit(rng) < std::exp(-delta / temp)) {
                cur_val = val;
                if (val < best_val) { best_val = val; best = cur; }
            } else {
                cur.colors[v] = old;
            }
        }
        temp *= 0.97;
    }

    // Steepest descent from the annealing best, sideways moves allowed once
    // per plateau.
    cur = best;
    cur_val = best_val;
    int sideways_left = n;
    bool moved = true;
    while (moved && evals < budget) {
        moved = false;
        int arg_v = -1, arg_c = -1;
        double arg_val = cur_val;
        bool sideways = false;
        for (int v = 0; v < n && evals < budget; ++v) {
            int old = cur.colors[v];
            for (int c = 1; c <= k && evals < budget; ++c) {
                if (c == old) continue;
                cur.colors[v] = c;
                double val = objective(cur);
                ++evals;
                if (val < arg_val || (val == arg_val && arg_v < 0 && sideways_left > 0)) {
                    sideways = !(val < arg_val);
                    arg_val = val;
                    arg_v = v;
                    arg_c = c;
                }
            }
            cur.colors[v] = old;
        }
        if (arg_v >= 0) {
            if (sideways) --sideways_left;
            cur.colors[arg_v] = arg_c;
            cur_val = arg_val;
            moved = true;
            if (cur_val < best_val) { best_val = cur_val; best = cur; }
        }
    }
    return {best, best_val, evals};
}

} // namespace

SearchResult minimize_coloring(int n, int k,
                               const std::function<double(const Coloring&)>& objective,
                               std::int64_t budget, std::uint64_t seed,
                               std::optional<Coloring> initial, int restarts) {
    SearchResult result;
    if (budget <= 0) {
        Coloring c = initial ? *initial : Coloring{std::vector<int>(n, 1), k};
        result.best = c;
        result.value = objective(c);
        result.evals = 1;
        return result;
    }

    // Temperature calibration over random colorings.
    std::int64_t calib = std::min<std::int64_t>(100, budget / 4 + 1);
    std::mt19937_64 calib_rng(derive_seed(seed, 0));
    double sum = 0.0, sum2 = 0.0;
    for (std::int64_t i = 0; i < calib; ++i) {
        double v = objective(random_coloring(n, k, calib_rng));
        sum += v;
        sum2 += v * v;
    }
    double mean = sum / calib;
    double var = sum2 / calib - mean * mean;
    double init_temp = var > 0 ? std::sqrt(var) : 1e-3;
    std::int64_t remaining = budget - calib;
    if (remaining <= 0) remaining = 1;
    if (restarts < 1) restarts = 1;
    std::int64_t per_restart = std::max<std::int64_t>(1, remaining / restarts);

    auto outcomes = parallel_map<RestartOutcome>((std::size_t)restarts, [&](std::size_t i) {
        std::optional<Coloring> init = (i == 0) ? initial : std::nullopt;
        return run_restart(n, k, objective, per_restart, derive_seed(seed, i + 1), init_temp,
                           init);
    });
    std::size_t arg = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i)
        if (outcomes[i].value < outcomes[arg].value) arg = i;
    result.best = outcomes[arg].best;
    result.value = outcomes[arg].value;
    result.evals = calib;
    for (const auto& o : outcomes) result.evals += o.evals;
    return result;
}

} // namespace sga
