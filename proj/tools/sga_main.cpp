#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sga/balls.hpp"
#include "sga/error.hpp"
#include "sga/parallel.hpp"
#include "sga/pmetric.hpp"
#include "sga/repspectra.hpp"
#include "sga/rules.hpp"
#include "sga/schreier.hpp"
#include "sga/stats.hpp"

using nlohmann::json;

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw sga::error("FileError", "cannot write " + out_path);
    f << text;
}

std::vector<sga::ReducedWord> parse_word_list(const std::string& csv) {
    std::vector<sga::ReducedWord> words;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) words.push_back(sga::word_from_string(tok));
    if (words.empty()) throw sga::bad_parameter("empty word list");
    return words;
}

json dist_json(const sga::TypeDistribution& d) {
    json weights = json::object();
    for (const auto& [code, count] : d.counts) weights[code] = count;
    return json{{"r", d.r},
                {"k", d.k},
                {"s_size", d.s_size},
                {"weights", weights},
                {"denominator", d.denominator}};
}

json coloring_json(const sga::Coloring& c) {
    return json{{"k", c.k}, {"colors", c.colors}};
}

sga::Rule resolve_rule(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return sga::parse_builtin_spec(spec);
    return sga::load_rule(spec);
}

json rule_report_json(const sga::RuleReport& r) {
    return json{{"violating_fraction", r.violating_fraction.to_double()},
                {"violating_fraction_exact", r.violating_fraction.str()},
                {"violators", r.violators},
                {"certified", r.certified},
                {"method", r.method},
                {"evals", r.evals},
                {"coloring", coloring_json(r.coloring)}};
}

json gram_point_json(const sga::GramPoint& p) {
    json blocks = json::array();
    for (std::size_t g = 0; g < p.coords.size(); ++g) {
        json block = json::array();
        for (const auto& z : p.coords[g]) block.push_back({z.real(), z.imag()});
        blocks.push_back(std::move(block));
    }
    json words = json::array();
    for (const auto& w : p.words) words.push_back(sga::word_to_string(w));
    return json{{"words", words}, {"n", p.n}, {"coords", blocks}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local-global statistics of finite edge-labeled Schreier graphs"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: hardware concurrency)");

    std::string out_path;
    std::string format = "json";

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_kind;
    std::vector<int> gen_args;
    std::uint64_t gen_seed = 0;
    bool gen_has_seed = false;
    gen->add_option("kind", gen_kind, "cycle | torus | random")->required();
    gen->add_option("args", gen_args, "cycle: n; torus: p q; random: n m");
    gen->add_option("--seed", gen_seed, "seed (random only)")->each([&](const std::string&) {
        gen_has_seed = true;
    });
    gen->add_option("-o,--out", out_path, "output graph file")->required();

    // balls
    auto* balls_cmd = app.add_subcommand("balls", "per-vertex canonical ball codes");
    std::string graph_path, graph_path_b, coloring_path;
    int opt_r = 1, opt_k = 2, opt_rmax = 2, opt_kmax = 3, opt_x = 0, opt_n = 1, opt_count = 1;
    std::int64_t opt_budget = 100000;
    std::uint64_t opt_seed = 0;
    balls_cmd->add_option("graph", graph_path)->required();
    balls_cmd->add_option("--r", opt_r, "ball radius")->required();
    balls_cmd->add_option("-o,--out", out_path);

    // typedist
    auto* typedist_cmd = app.add_subcommand("typedist", "empirical type distribution");
    typedist_cmd->add_option("graph", graph_path)->required();
    typedist_cmd->add_option("--r", opt_r)->required();
    typedist_cmd->add_option("--coloring", coloring_path, "coloring file (colored statistics)");
    typedist_cmd->add_option("--k", opt_k, "colors in the coloring file");
    typedist_cmd->add_option("-o,--out", out_path);

    // weakdist
    auto* weakdist_cmd = app.add_subcommand("weakdist", "weak-topology distance of type stacks");
    weakdist_cmd->add_option("graphA", graph_path)->required();
    weakdist_cmd->add_option("graphB", graph_path_b)->required();
    weakdist_cmd->add_option("--rmax", opt_rmax)->required();
    weakdist_cmd->add_option("-o,--out", out_path);

    // corr-profile
    auto* corr_cmd = app.add_subcommand("corr-profile", "correlation profile of a coloring");
    std::string words_csv;
    corr_cmd->add_option("graph", graph_path)->required();
    corr_cmd->add_option("--coloring", coloring_path)->required();
    corr_cmd->add_option("--k", opt_k)->required();
    corr_cmd->add_option("--words", words_csv, "comma-separated words, e.g. a,b,AB")->required();
    corr_cmd->add_option("-o,--out", out_path);

    // pd
    auto* pd_cmd = app.add_subcommand("pd", "partition pseudometric report");
    std::string mode_str = "exhaustive";
    bool pd1_flag = false;
    pd_cmd->add_option("graphA", graph_path)->required();
    pd_cmd->add_option("graphB", graph_path_b)->required();
    pd_cmd->add_option("--kmax", opt_kmax)->required();
    pd_cmd->add_option("--rmax", opt_rmax)->required();
    pd_cmd->add_option("--mode", mode_str)->check(CLI::IsMember({"exhaustive", "sampled"}));
    pd_cmd->add_option("--budget", opt_budget)->required();
    pd_cmd->add_option("--seed", opt_seed)->required();
    pd_cmd->add_flag("--pd1", pd1_flag, "also report the k=1 diagnostic");
    pd_cmd->add_option("-o,--out", out_path);

    // rule-check
    auto* rc_cmd = app.add_subcommand("rule-check", "violating fraction of a coloring");
    std::string rule_spec;
    rc_cmd->add_option("graph", graph_path)->required();
    rc_cmd->add_option("--coloring", coloring_path)->required();
    rc_cmd->add_option("--rule", rule_spec, "rule file or builtin:name[:k=...,...]")->required();
    rc_cmd->add_option("-o,--out", out_path);

    // rule-search
    auto* rs_cmd = app.add_subcommand("rule-search", "minimize the violating fraction");
    rs_cmd->add_option("graph", graph_path)->required();
    rs_cmd->add_option("--rule", rule_spec)->required();
    rs_cmd->add_option("--budget", opt_budget)->required();
    rs_cmd->add_option("--seed", opt_seed)->required();
    rs_cmd->add_option("-o,--out", out_path);

    // irs-sample
    auto* irs_cmd = app.add_subcommand("irs-sample", "ball codes at random vertices");
    irs_cmd->add_option("graph", graph_path)->required();
    irs_cmd->add_option("--r", opt_r)->required();
    irs_cmd->add_option("--count", opt_count)->required();
    irs_cmd->add_option("--seed", opt_seed)->required();
    irs_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    irs_cmd->add_option("-o,--out", out_path);

    // returning-words
    auto* ret_cmd = app.add_subcommand("returning-words", "radius-r stabilizer sample");
    ret_cmd->add_option("graph", graph_path)->required();
    ret_cmd->add_option("--x", opt_x)->required();
    ret_cmd->add_option("--r", opt_r)->required();
    ret_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    ret_cmd->add_option("-o,--out", out_path);

    // rep-k
    auto* repk_cmd = app.add_subcommand("rep-k", "sample the Gram-point cloud of a representation");
    std::string rep_path, rep_path_b;
    repk_cmd->add_option("rep", rep_path)->required();
    repk_cmd->add_option("--words", words_csv)->required();
    repk_cmd->add_option("--n", opt_n)->required();
    repk_cmd->add_option("--budget", opt_budget)->required();
    repk_cmd->add_option("--seed", opt_seed)->required();
    repk_cmd->add_option("-o,--out", out_path);

    // rep-contain
    auto* repc_cmd = app.add_subcommand("rep-contain", "one-sided weak-containment score");
    repc_cmd->add_option("repA", rep_path)->required();
    repc_cmd->add_option("repB", rep_path_b)->required();
    repc_cmd->add_option("--words", words_csv)->required();
    repc_cmd->add_option("--n", opt_n)->required();
    repc_cmd->add_option("--budget", opt_budget)->required();
    repc_cmd->add_option("--seed", opt_seed)->required();
    repc_cmd->add_option("-o,--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: usage: " << e.what() << "\n";
        return 1;
    }

    if (threads > 0) sga::set_thread_count(threads);

    auto base_config = [&](const std::string& sub) {
        json cfg{{"subcommand", sub}, {"format", format}};
        return cfg;
    };

    try {
        if (*gen) {
            sga::LabeledSchreierGraph g = [&] {
                if (gen_kind == "cycle") {
                    if (gen_args.size() != 1) throw sga::bad_parameter("gen cycle needs n");
                    return sga::gen_cycle(gen_args[0]);
                }
                if (gen_kind == "torus") {
                    if (gen_args.size() != 2) throw sga::bad_parameter("gen torus needs p q");
                    return sga::gen_torus(gen_args[0], gen_args[1]);
                }
                if (gen_kind == "random") {
                    if (gen_args.size() != 2) throw sga::bad_parameter("gen random needs n m");
                    if (!gen_has_seed) {
                        std::cerr << "error: usage: gen random requires --seed\n";
                        std::exit(1);
                    }
                    return sga::gen_random_action(gen_args[0], gen_args[1], gen_seed);
                }
                throw sga::bad_parameter("unknown gen kind " + gen_kind);
            }();
            sga::save_graph(out_path, g);
        } else if (*balls_cmd) {
            auto g = sga::load_graph(graph_path);
            std::ostringstream os;
            for (int x = 0; x < g.vertex_count(); ++x)
                os << x << '\t' << sga::ball_code(g, x, opt_r).serialize() << '\n';
            emit(out_path, os.str());
        } else if (*typedist_cmd) {
            auto g = sga::load_graph(graph_path);
            sga::TypeDistribution dist;
            json cfg = base_config("typedist");
            cfg["graph"] = graph_path;
            cfg["r"] = opt_r;
            if (!coloring_path.empty()) {
                auto c = sga::load_coloring(coloring_path, opt_k);
                dist = sga::colored_type_dist(g, opt_r, c);
                cfg["coloring"] = coloring_path;
                cfg["k"] = opt_k;
            } else {
                dist = sga::type_dist(g, opt_r);
            }
            json j = dist_json(dist);
            j["config"] = cfg;
            emit(out_path, j.dump(2) + "\n");
        } else if (*weakdist_cmd) {
            auto a = sga::load_graph(graph_path);
            auto b = sga::load_graph(graph_path_b);
            sga::Rational d = sga::weak_metric(a, b, opt_rmax);
            json cfg = base_config("weakdist");
            cfg["graphA"] = graph_path;
            cfg["graphB"] = graph_path_b;
            cfg["rmax"] = opt_rmax;
            json j{{"value", d.to_double()},
                   {"value_exact", d.str()},
                   {"tail_bound", std::ldexp(1.0, -opt_rmax)},
                   {"config", cfg}};
            emit(out_path, j.dump(2) + "\n");
        } else if (*corr_cmd) {
            auto g = sga::load_graph(graph_path);
            auto c = sga::load_coloring(coloring_path, opt_k);
            auto words = parse_word_list(words_csv);
            auto prof = sga::correlation_profile(g, c, words);
            json entries = json::array();
            for (std::size_t w = 0; w < words.size(); ++w) {
                json mat = json::array();
                for (int i = 1; i <= prof.k; ++i) {
                    json row = json::array();
                    for (int j2 = 1; j2 <= prof.k; ++j2)
                        row.push_back(prof.entry(w, i, j2).to_double());
                    mat.push_back(std::move(row));
                }
                entries.push_back(json{{"word", sga::word_to_string(words[w])},
                                       {"matrix", std::move(mat)}});
            }
            json cfg = base_config("corr-profile");
            cfg["graph"] = graph_path;
            cfg["coloring"] = coloring_path;
            cfg["k"] = opt_k;
            cfg["words"] = words_csv;
            json j{{"entries", entries}, {"config", cfg}};
            emit(out_path, j.dump(2) + "\n");
        } else if (*pd_cmd) {
            auto a = sga::load_graph(graph_path);
            auto b = sga::load_graph(graph_path_b);
            auto mode = mode_str == "exhaustive" ? sga::CloudMode::exhaustive
                                                 : sga::CloudMode::sampled;
            auto report = sga::partition_distance(a, b, opt_kmax, opt_rmax, mode, opt_budget,
                                                  opt_seed, pd1_flag);
            json per_k = json::array();
            for (std::size_t i = 0; i < report.pd_k.size(); ++i) {
                per_k.push_back(json{{"k", (int)i + 2},
                                     {"pd_k", report.pd_k[i]},
                                     {"a_to_b", report.per_k[i].a_to_b},
                                     {"b_to_a", report.per_k[i].b_to_a},
                                     {"witness_a", coloring_json(report.witness_a[i])},
                                     {"witness_b", coloring_json(report.witness_b[i])}});
            }
            json cfg = base_config("pd");
            cfg["graphA"] = graph_path;
            cfg["graphB"] = graph_path_b;
            cfg["kmax"] = opt_kmax;
            cfg["rmax"] = opt_rmax;
            cfg["mode"] = mode_str;
            cfg["budget"] = opt_budget;
            cfg["seed"] = opt_seed;
            json j{{"pd", report.pd},
                   {"tail_bound", report.tail_bound},
                   {"per_k", per_k},
                   {"provenance", mode_str},
                   {"config", cfg}};
            if (report.pd_1) j["pd_1"] = *report.pd_1;
            emit(out_path, j.dump(2) + "\n");
        } else if (*rc_cmd) {
            auto g = sga::load_graph(graph_path);
            sga::Rule rule = resolve_rule(rule_spec);
            auto c = sga::load_coloring(coloring_path, rule.k);
            auto report = sga::check_rule(g, c, rule);
            json cfg = base_config("rule-check");
            cfg["graph"] = graph_path;
            cfg["coloring"] = coloring_path;
            cfg["rule"] = rule_spec;
            json j = rule_report_json(report);
            j["config"] = cfg;
            emit(out_path, j.dump(2) + "\n");
        } else if (*rs_cmd) {
            auto g = sga::load_graph(graph_path);
            sga::Rule rule = resolve_rule(rule_spec);
            auto report = sga::search_rule(g, rule, opt_budget, opt_seed);
            json cfg = base_config("rule-search");
            cfg["graph"] = graph_path;
            cfg["rule"] = rule_spec;
            cfg["budget"] = opt_budget;
            cfg["seed"] = opt_seed;
            json j = rule_report_json(report);
            j["config"] = cfg;
            emit(out_path, j.dump(2) + "\n");
        } else if (*irs_cmd) {
            auto g = sga::load_graph(graph_path);
            auto samples = sga::irs_sample(g, opt_r, opt_count, opt_seed);
            if (format == "tsv") {
                std::ostringstream os;
                for (std::size_t i = 0; i < samples.size(); ++i)
                    os << i << '\t' << samples[i].serialize() << '\n';
                emit(out_path, os.str());
            } else {
                json codes = json::array();
                for (const auto& s : samples) codes.push_back(s.serialize());
                json cfg = base_config("irs-sample");
                cfg["graph"] = graph_path;
                cfg["r"] = opt_r;
                cfg["count"] = opt_count;
                cfg["seed"] = opt_seed;
                json j{{"samples", codes}, {"config", cfg}};
                emit(out_path, j.dump(2) + "\n");
            }
        } else if (*ret_cmd) {
            auto g = sga::load_graph(graph_path);
            auto words = sga::returning_words(g, opt_x, opt_r);
            if (format == "tsv") {
                std::ostringstream os;
                for (const auto& w : words) os << sga::word_to_string(w) << '\n';
                emit(out_path, os.str());
            } else {
                json list = json::array();
                for (const auto& w : words) list.push_back(sga::word_to_string(w));
                json cfg = base_config("returning-words");
                cfg["graph"] = graph_path;
                cfg["x"] = opt_x;
                cfg["r"] = opt_r;
                json j{{"words", list}, {"config", cfg}};
                emit(out_path, j.dump(2) + "\n");
            }
        } else if (*repk_cmd) {
            auto rep = sga::load_rep(rep_path);
            auto words = parse_word_list(words_csv);
            auto cloud = sga::sample_K(rep, words, opt_n, opt_budget, opt_seed);
            json points = json::array();
            for (const auto& s : cloud) points.push_back(gram_point_json(s.point));
            json cfg = base_config("rep-k");
            cfg["rep"] = rep_path;
            cfg["words"] = words_csv;
            cfg["n"] = opt_n;
            cfg["budget"] = opt_budget;
            cfg["seed"] = opt_seed;
            json j{{"points", points}, {"provenance", "sampled"}, {"config", cfg}};
            emit(out_path, j.dump(2) + "\n");
        } else if (*repc_cmd) {
            auto rep_a = sga::load_rep(rep_path);
            auto rep_b = sga::load_rep(rep_path_b);
            auto words = parse_word_list(words_csv);
            auto res = sga::containment_score(rep_a, rep_b, words, opt_n, opt_budget, opt_seed);
            json cfg = base_config("rep-contain");
            cfg["repA"] = rep_path;
            cfg["repB"] = rep_path_b;
            cfg["words"] = words_csv;
            cfg["n"] = opt_n;
            cfg["budget"] = opt_budget;
            cfg["seed"] = opt_seed;
            json j{{"score", res.score},
                   {"worst_point", gram_point_json(res.worst_point)},
                   {"provenance", "sampled"},
                   {"config", cfg}};
            emit(out_path, j.dump(2) + "\n");
        }
    } catch (const sga::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
