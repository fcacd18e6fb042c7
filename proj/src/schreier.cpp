#include "sga/schreier.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "sga/error.hpp"
#include "sga/rng.hpp"

namespace sga {

LabeledSchreierGraph::LabeledSchreierGraph(int n, std::vector<std::vector<int>> perms)
    : n_(n), perms_(std::move(perms)) {
    if (n_ < 1) throw bad_parameter("graph must have at least one vertex");
    inv_perms_.resize(perms_.size());
    for (std::size_t i = 0; i < perms_.size(); ++i) {
        const auto& p = perms_[i];
        if ((int)p.size() != n_)
            throw length_mismatch("permutation " + std::to_string(i) + " has length " +
                                  std::to_string(p.size()) + ", expected " + std::to_string(n_));
        std::vector<int> inv(n_, -1);
        for (int x = 0; x < n_; ++x) {
            if (p[x] < 0 || p[x] >= n_ || inv[p[x]] != -1)
                throw not_a_permutation("generator " + std::to_string(i) +
                                        " is not a bijection on {0.." + std::to_string(n_ - 1) + "}");
            inv[p[x]] = x;
        }
        inv_perms_[i] = std::move(inv);
    }
}

int LabeledSchreierGraph::evaluate(const ReducedWord& w, int x) const {
    if (x < 0 || x >= n_)
        throw vertex_out_of_range("vertex " + std::to_string(x) + " not in {0.." +
                                  std::to_string(n_ - 1) + "}");
    for (const Generator& g : w.letters) {
        if (g.index >= generator_count())
            throw shape_mismatch("word uses generator " + std::to_string(g.index) +
                                 " but graph has " + std::to_string(generator_count()));
        x = step(g, x);
    }
    return x;
}

void Coloring::validate(int n) const {
    if ((int)colors.size() != n)
        throw length_mismatch("coloring has length " + std::to_string(colors.size()) +
                              ", graph has " + std::to_string(n) + " vertices");
    for (int c : colors)
        if (c < 1 || c > k)
            throw color_count_mismatch("color " + std::to_string(c) + " not in 1.." +
                                       std::to_string(k));
}

LabeledSchreierGraph from_permutations(int n, std::vector<std::vector<int>> perms) {
    return LabeledSchreierGraph(n, std::move(perms));
}

LabeledSchreierGraph gen_cycle(int n) {
    std::vector<int> shift(n);
    for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
    return LabeledSchreierGraph(n, {std::move(shift)});
}

LabeledSchreierGraph gen_torus(int p, int q) {
    int n = p * q;
    std::vector<int> a(n), b(n);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            a[i * q + j] = ((i + 1) % p) * q + j;
            b[i * q + j] = i * q + (j + 1) % q;
        }
    return LabeledSchreierGraph(n, {std::move(a), std::move(b)});
}

LabeledSchreierGraph gen_random_action(int n, int m, std::uint64_t seed) {
    if (m < 1) throw bad_parameter("gen_random_action: m must be >= 1");
    std::vector<std::vector<int>> perms(m);
    for (int i = 0; i < m; ++i) {
        std::mt19937_64 rng(derive_seed(seed, (std::uint64_t)i));
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        rand_shuffle(rng, p);
        perms[i] = std::move(p);
    }
    return LabeledSchreierGraph(n, std::move(perms));
}

void write_graph(std::ostream& os, const LabeledSchreierGraph& g) {
    os << g.vertex_count() << ' ' << g.generator_count() << '\n';
    for (const auto& p : g.permutations()) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) os << ' ';
            os << p[j];
        }
        os << '\n';
    }
}

LabeledSchreierGraph read_graph(std::istream& is) {
    int n = 0, m = 0;
    if (!(is >> n >> m)) throw parse_error("graph header: expected 'n m'");
    if (n < 1 || m < 1) throw parse_error("graph header: n and m must be positive");
    std::vector<std::vector<int>> perms(m, std::vector<int>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (!(is >> perms[i][j]))
                throw parse_error("graph body: expected " + std::to_string((std::size_t)n * m) +
                                  " integers");
    return LabeledSchreierGraph(n, std::move(perms));
}

LabeledSchreierGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("FileNotFound", "cannot open graph file " + path);
    return read_graph(f);
}

void save_graph(const std::string& path, const LabeledSchreierGraph& g) {
    std::ofstream f(path);
    if (!f) throw error("FileError", "cannot write graph file " + path);
    write_graph(f, g);
}

void write_coloring(std::ostream& os, const Coloring& c) {
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        if (i) os << ' ';
        os << c.colors[i];
    }
    os << '\n';
}

Coloring read_coloring(std::istream& is, int k) {
    Coloring c;
    c.k = k;
    std::string line;
    while (std::getline(is, line) && line.empty()) {}
    std::istringstream ls(line);
    int v;
    while (ls >> v) c.colors.push_back(v);
    if (c.colors.empty()) throw parse_error("coloring file is empty");
    return c;
}

Coloring load_coloring(const std::string& path, int k) {
    std::ifstream f(path);
    if (!f) throw error("FileNotFound", "cannot open coloring file " + path);
    return read_coloring(f, k);
}

} // namespace sga
