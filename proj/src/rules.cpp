#include "sga/rules.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sga/error.hpp"
#include "sga/localsearch.hpp"
#include "sga/parallel.hpp"

namespace sga {

namespace {

std::int64_t pow_sat(std::int64_t k, int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > INT64_MAX / k) return INT64_MAX;
        v *= k;
    }
    return v;
}

// Letter l in 0..2m-1: generator l/2, inverted when l is odd. Matches the
// a < A < b < B letter order.
Generator letter(int l) { return {l / 2, l % 2 == 1}; }

std::int64_t count_violators(const LabeledSchreierGraph& g, const Coloring& c, const Rule& rule) {
    std::int64_t count = 0;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (violates(g, c, rule, x)) ++count;
    return count;
}

Coloring greedy_coloring(const LabeledSchreierGraph& g, const Rule& rule) {
    int n = g.vertex_count();
    int m = g.generator_count();
    Coloring c{std::vector<int>(n, 1), rule.k};
    switch (rule.builtin) {
    case Rule::Builtin::proper_coloring: {
        // Sequential greedy: avoid the colors of already-processed distinct
        // neighbors. Degree <= 2m, so 2m+1 colors always suffice.
        std::vector<bool> done(n, false);
        for (int x = 0; x < n; ++x) {
            std::vector<bool> used(rule.k + 1, false);
            for (int l = 0; l < 2 * m; ++l) {
                int y = g.step(letter(l), x);
                if (y != x && done[y]) used[c.colors[y]] = true;
            }
            int pick = 1;
            while (pick <= rule.k && used[pick]) ++pick;
            c.colors[x] = pick <= rule.k ? pick : 1;
            done[x] = true;
        }
        return c;
    }
    case Rule::Builtin::independent_set: {
        int fill = rule.marked_color == 1 ? 2 : 1;
        std::fill(c.colors.begin(), c.colors.end(), fill);
        // Grow a maximal independent set greedily.
        for (int x = 0; x < n; ++x) {
            bool ok = true;
            for (int l = 0; l < 2 * m && ok; ++l) {
                int y = g.step(letter(l), x);
                if (y != x && c.colors[y] == rule.marked_color) ok = false;
            }
            if (ok) c.colors[x] = rule.marked_color;
        }
        return c;
    }
    case Rule::Builtin::perfect_matching: {
        // Greedy matching: color 2+l means matched along letter l.
        for (int x = 0; x < n; ++x) {
            if (c.colors[x] != 1) continue;
            for (int l = 0; l < 2 * m; ++l) {
                int y = g.step(letter(l), x);
                if (y != x && c.colors[y] == 1) {
                    c.colors[x] = 2 + l;
                    c.colors[y] = 2 + (l ^ 1);
                    break;
                }
            }
        }
        return c;
    }
    case Rule::Builtin::none:
        return c;
    }
    return c;
}

} // namespace

Rule proper_coloring_rule(int k) {
    if (k < 1) throw bad_parameter("proper_coloring: k must be >= 1");
    Rule r;
    r.r = 1;
    r.k = k;
    r.builtin = Rule::Builtin::proper_coloring;
    return r;
}

Rule independent_set_rule(int k, int marked_color) {
    if (k < 2) throw bad_parameter("independent_set: k must be >= 2");
    if (marked_color < 1 || marked_color > k)
        throw bad_parameter("independent_set: marked color out of range");
    Rule r;
    r.r = 1;
    r.k = k;
    r.builtin = Rule::Builtin::independent_set;
    r.marked_color = marked_color;
    return r;
}

Rule perfect_matching_rule(int m) {
    if (m < 1) throw bad_parameter("perfect_matching: m must be >= 1");
    Rule r;
    r.r = 1;
    r.k = 1 + 2 * m;
    r.builtin = Rule::Builtin::perfect_matching;
    return r;
}

Rule explicit_rule(BallCode template_code, std::set<std::string> accepted, int k) {
    Rule r;
    r.r = template_code.r;
    r.k = k;
    r.template_code = std::move(template_code);
    r.accepted = std::move(accepted);
    return r;
}

bool violates(const LabeledSchreierGraph& g, const Coloring& c, const Rule& rule, int x) {
    int m = g.generator_count();
    switch (rule.builtin) {
    case Rule::Builtin::proper_coloring: {
        for (int l = 0; l < 2 * m; ++l) {
            int y = g.step(letter(l), x);
            if (y != x && c.colors[y] == c.colors[x]) return true;
        }
        return false;
    }
    case Rule::Builtin::independent_set: {
        if (c.colors[x] != rule.marked_color) return false;
        for (int l = 0; l < 2 * m; ++l) {
            int y = g.step(letter(l), x);
            if (y != x && c.colors[y] == rule.marked_color) return true;
        }
        return false;
    }
    case Rule::Builtin::perfect_matching: {
        if (c.colors[x] == 1) return true; // root must be matched
        int l = c.colors[x] - 2;
        if (l < 0 || l >= 2 * m) return true;
        int y = g.step(letter(l), x);
        if (y == x) return true; // cannot match along a self-loop
        return c.colors[y] != 2 + (l ^ 1);
    }
    case Rule::Builtin::none: {
        // Non-free vertices cannot match a free template and count as
        // violating.
        BallCode ball = ball_code(g, x, rule.r);
        if (!(ball == *rule.template_code)) return true;
        BallCode colored = colored_ball_code(g, x, rule.r, c);
        return rule.accepted.find(colored.serialize()) == rule.accepted.end();
    }
    }
    return true;
}

RuleReport check_rule(const LabeledSchreierGraph& g, const Coloring& c, const Rule& rule,
                      std::size_t violator_cap) {
    if (c.k != rule.k)
        throw color_count_mismatch("coloring has k=" + std::to_string(c.k) + ", rule has k=" +
                                   std::to_string(rule.k));
    c.validate(g.vertex_count());
    int n = g.vertex_count();
    auto flags = parallel_map<char>((std::size_t)n,
                                    [&](std::size_t x) { return (char)violates(g, c, rule, (int)x); });
    RuleReport report;
    report.coloring = c;
    report.method = "check";
    std::int64_t count = 0;
    for (int x = 0; x < n; ++x)
        if (flags[x]) {
            ++count;
            if (report.violators.size() < violator_cap) report.violators.push_back(x);
        }
    report.violating_fraction = Rational(count, n);
    report.certified = count == 0;
    return report;
}

RuleReport search_rule(const LabeledSchreierGraph& g, const Rule& rule, std::int64_t budget,
                       std::uint64_t seed) {
    if (budget < 0) throw bad_parameter("search_rule: budget must be >= 0");
    int n = g.vertex_count();
    int k = rule.k;
    std::int64_t total = pow_sat(k, n);

    if (budget > 0 && total <= budget) {
        // Certified optimum by exhaustive scan, parallel over coloring blocks.
        auto counts = parallel_map<std::int64_t>((std::size_t)total, [&](std::size_t i) {
            Coloring c{std::vector<int>(n, 1), k};
            std::int64_t idx = (std::int64_t)i;
            for (int v = 0; v < n; ++v) {
                c.colors[v] = 1 + (int)(idx % k);
                idx /= k;
            }
            return count_violators(g, c, rule);
        });
        std::size_t arg = 0;
        for (std::size_t i = 1; i < counts.size(); ++i)
            if (counts[i] < counts[arg]) arg = i;
        Coloring best{std::vector<int>(n, 1), k};
        std::int64_t idx = (std::int64_t)arg;
        for (int v = 0; v < n; ++v) {
            best.colors[v] = 1 + (int)(idx % k);
            idx /= k;
        }
        RuleReport report = check_rule(g, best, rule);
        report.method = "exhaustive";
        report.certified = true;
        report.evals = total;
        return report;
    }

    Coloring greedy = greedy_coloring(g, rule);
    auto objective = [&](const Coloring& c) { return (double)count_violators(g, c, rule); };
    SearchResult sr = minimize_coloring(n, k, objective, budget, seed, greedy);
    RuleReport report = check_rule(g, sr.best, rule);
    report.method = "heuristic";
    report.certified = report.violating_fraction == Rational(0);
    report.evals = sr.evals;
    return report;
}

Rule load_rule(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("FileNotFound", "cannot open rule file " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("rule file: ") + e.what());
    }
    if (j.contains("builtin")) {
        std::string name = j["builtin"].get<std::string>();
        auto params = j.value("params", nlohmann::json::object());
        if (name == "proper_coloring") return proper_coloring_rule(params.value("k", 2));
        if (name == "independent_set")
            return independent_set_rule(params.value("k", 2), params.value("marked", 1));
        if (name == "perfect_matching") return perfect_matching_rule(params.value("m", 1));
        throw bad_parameter("unknown builtin rule " + name);
    }
    int r = j.at("r").get<int>();
    int s_size = j.at("s_size").get<int>();
    int k = j.at("k").get<int>();
    BallCode tmpl = parse_ball_code(j.at("template").get<std::string>(), s_size, r);
    std::set<std::string> accepted;
    for (const auto& code : j.at("accepted")) {
        // Round-trip through the parser to normalize block order.
        accepted.insert(parse_ball_code(code.get<std::string>(), s_size, r).serialize());
    }
    return explicit_rule(std::move(tmpl), std::move(accepted), k);
}

Rule parse_builtin_spec(const std::string& spec) {
    // builtin:name[:key=value,...]
    std::string body = spec;
    const std::string prefix = "builtin:";
    if (body.rfind(prefix, 0) == 0) body = body.substr(prefix.size());
    std::string name = body;
    std::string params;
    auto colon = body.find(':');
    if (colon != std::string::npos) {
        name = body.substr(0, colon);
        params = body.substr(colon + 1);
    }
    int k = 2, marked = 1, m = 1;
    std::istringstream ps(params);
    std::string kv;
    while (std::getline(ps, kv, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw bad_parameter("bad rule parameter " + kv);
        std::string key = kv.substr(0, eq);
        int value = std::stoi(kv.substr(eq + 1));
        if (key == "k") k = value;
        else if (key == "marked") marked = value;
        else if (key == "m") m = value;
        else throw bad_parameter("unknown rule parameter " + key);
    }
    if (name == "proper_coloring") return proper_coloring_rule(k);
    if (name == "independent_set") return independent_set_rule(k, marked);
    if (name == "perfect_matching") return perfect_matching_rule(m);
    throw bad_parameter("unknown builtin rule " + name);
}

} // namespace sga
