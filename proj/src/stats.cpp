#include "sga/stats.hpp"

#include <set>
#include <sstream>

#include "sga/error.hpp"
#include "sga/parallel.hpp"
#include "sga/rng.hpp"

namespace sga {

bool operator==(const TypeDistribution& a, const TypeDistribution& b) {
    if (a.r != b.r || a.k != b.k || a.s_size != b.s_size) return false;
    std::set<std::string> keys;
    for (const auto& [c, _] : a.counts) keys.insert(c);
    for (const auto& [c, _] : b.counts) keys.insert(c);
    for (const auto& c : keys)
        if (a.weight(c) != b.weight(c)) return false;
    return true;
}

TypeDistribution TypeDistribution::truncate(int new_r) const {
    TypeDistribution out;
    out.r = new_r;
    out.k = k;
    out.s_size = s_size;
    out.denominator = denominator;
    for (const auto& [code_str, count] : counts) {
        BallCode code = parse_ball_code(code_str, s_size, r);
        out.counts[code.truncate(new_r).serialize()] += count;
    }
    return out;
}

std::string TypeDistribution::serialize() const {
    std::ostringstream os;
    os << r << ';' << k << ';' << s_size << ';' << denominator;
    for (const auto& [code, count] : counts) os << ';' << code << '=' << count;
    return os.str();
}

TypeDistribution type_dist(const LabeledSchreierGraph& g, int r) {
    int n = g.vertex_count();
    auto codes = parallel_map<std::string>(
        (std::size_t)n, [&](std::size_t x) { return ball_code(g, (int)x, r).serialize(); });
    TypeDistribution dist;
    dist.r = r;
    dist.s_size = g.generator_count();
    dist.denominator = n;
    for (const auto& code : codes) dist.counts[code]++;
    return dist;
}

TypeDistribution colored_type_dist(const LabeledSchreierGraph& g, int r, const Coloring& c) {
    c.validate(g.vertex_count());
    int n = g.vertex_count();
    auto codes = parallel_map<std::string>((std::size_t)n, [&](std::size_t x) {
        return colored_ball_code(g, (int)x, r, c).serialize();
    });
    TypeDistribution dist;
    dist.r = r;
    dist.k = c.k;
    dist.s_size = g.generator_count();
    dist.denominator = n;
    for (const auto& code : codes) dist.counts[code]++;
    return dist;
}

Rational tv_distance(const TypeDistribution& p, const TypeDistribution& q) {
    if (p.r != q.r || p.k != q.k || p.s_size != q.s_size)
        throw shape_mismatch("tv_distance: distributions have different (r, k, S_size)");
    std::set<std::string> keys;
    for (const auto& [c, _] : p.counts) keys.insert(c);
    for (const auto& [c, _] : q.counts) keys.insert(c);
    Rational total(0);
    for (const auto& c : keys) total += (p.weight(c) - q.weight(c)).abs();
    return total * Rational(1, 2);
}

Rational weak_metric_stacks(const std::vector<TypeDistribution>& a,
                            const std::vector<TypeDistribution>& b) {
    if (a.size() != b.size())
        throw shape_mismatch("weak_metric: stacks have different r_max");
    Rational total(0);
    std::int64_t pow2 = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        pow2 *= 2;
        total += Rational(1, pow2) * tv_distance(a[i], b[i]);
    }
    return total;
}

Rational weak_metric(const LabeledSchreierGraph& g1, const LabeledSchreierGraph& g2, int r_max) {
    if (r_max < 1) throw bad_parameter("weak_metric: r_max must be >= 1");
    std::vector<TypeDistribution> a, b;
    for (int r = 1; r <= r_max; ++r) {
        a.push_back(type_dist(g1, r));
        b.push_back(type_dist(g2, r));
    }
    return weak_metric_stacks(a, b);
}

ProfileMatrix correlation_profile(const LabeledSchreierGraph& g, const Coloring& c,
                                  const std::vector<ReducedWord>& words) {
    c.validate(g.vertex_count());
    int n = g.vertex_count();
    int k = c.k;
    ProfileMatrix prof;
    prof.words = words;
    prof.k = k;
    prof.entries.resize(words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::vector<std::int64_t> counts((std::size_t)k * k, 0);
        ReducedWord inv = words[w].inverse();
        for (int x = 0; x < n; ++x) {
            int i = c.colors[g.evaluate(inv, x)];
            int j = c.colors[x];
            counts[(std::size_t)(i - 1) * k + (j - 1)]++;
        }
        prof.entries[w].reserve(counts.size());
        for (std::int64_t cnt : counts) prof.entries[w].push_back(Rational(cnt, n));
    }
    return prof;
}

std::vector<ReducedWord> returning_words(const LabeledSchreierGraph& g, int x, int r) {
    if (x < 0 || x >= g.vertex_count())
        throw vertex_out_of_range("vertex " + std::to_string(x));
    std::vector<ReducedWord> out;
    for (const ReducedWord& w : word_table(g.generator_count(), r))
        if (g.evaluate(w, x) == x) out.push_back(w);
    return out;
}

std::vector<BallCode> irs_sample(const LabeledSchreierGraph& g, int r, int count,
                                 std::uint64_t seed) {
    if (count < 1) throw bad_parameter("irs_sample: count must be >= 1");
    return parallel_map<BallCode>((std::size_t)count, [&](std::size_t i) {
        std::mt19937_64 rng(derive_seed(seed, i));
        int x = (int)rand_below(rng, (std::uint64_t)g.vertex_count());
        return ball_code(g, x, r);
    });
}

} // namespace sga
