#ifndef SGA_RULES_HPP
#define SGA_RULES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sga/balls.hpp"
#include "sga/rational.hpp"
#include "sga/schreier.hpp"

namespace sga {

// An (r,k)-rule: a set of accepted colorings of a radius-r ball template.
// Builtin rules are intensional predicates, total over any local structure;
// self-loop neighbors (letters fixing the root) impose no adjacency
// constraint for proper_coloring / independent_set.
struct Rule {
    enum class Builtin { none, proper_coloring, independent_set, perfect_matching };

    int r = 1;
    int k = 2;
    Builtin builtin = Builtin::none;
    int marked_color = 1; // independent_set only
    std::optional<BallCode> template_code; // extensional rules
    std::set<std::string> accepted;        // colored code strings over the template

    bool is_builtin() const { return builtin != Builtin::none; }
};

struct RuleReport {
    Coloring coloring;
    Rational violating_fraction;
    std::vector<int> violators; // capped
    bool certified = false;     // exhaustive optimum, or fraction is zero
    std::string method;         // "exhaustive" | "heuristic" | "check"
    std::int64_t evals = 0;
};

// Root color must differ from the color of every neighbor distinct from the
// root; radius 1.
Rule proper_coloring_rule(int k);
// If the root carries the marked color, no distinct neighbor may.
Rule independent_set_rule(int k, int marked_color);
// Colors 1..1+2m: 1 = unmatched (always violating at the root), color 2+l
// = matched along letter l; the partner must carry the inverse letter.
Rule perfect_matching_rule(int m);

// Extensional rule over an explicit template.
Rule explicit_rule(BallCode template_code, std::set<std::string> accepted, int k);

bool violates(const LabeledSchreierGraph& g, const Coloring& c, const Rule& rule, int x);

RuleReport check_rule(const LabeledSchreierGraph& g, const Coloring& c, const Rule& rule,
                      std::size_t violator_cap = 64);

// Minimizes the violating fraction: exhaustive scan when k^n fits the
// budget (certified), otherwise greedy + seeded local search.
RuleReport search_rule(const LabeledSchreierGraph& g, const Rule& rule, std::int64_t budget,
                       std::uint64_t seed);

// Rule files: {"builtin": name, "params": {...}} or
// {"template": code, "r": r, "s_size": m, "k": k, "accepted": [codes]}.
Rule load_rule(const std::string& path);
// "builtin:proper_coloring:k=2" style CLI specifier.
Rule parse_builtin_spec(const std::string& spec);

} // namespace sga

#endif
