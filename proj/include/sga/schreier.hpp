#ifndef SGA_SCHREIER_HPP
#define SGA_SCHREIER_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sga/words.hpp"

namespace sga {

// Finite edge-labeled Schreier graph: one permutation of {0..n-1} per
// generator. Only the forward permutation is stored; the s⁻¹-edges are the
// inverse permutation by construction. Immutable after construction.
class LabeledSchreierGraph {
public:
    LabeledSchreierGraph(int n, std::vector<std::vector<int>> perms);

    int vertex_count() const { return n_; }
    int generator_count() const { return (int)perms_.size(); }

    // Image of x under one letter.
    int step(Generator g, int x) const {
        return g.inverted ? inv_perms_[g.index][x] : perms_[g.index][x];
    }

    // Image of x under the word, letters applied left to right.
    int evaluate(const ReducedWord& w, int x) const;

    const std::vector<std::vector<int>>& permutations() const { return perms_; }

private:
    int n_;
    std::vector<std::vector<int>> perms_;
    std::vector<std::vector<int>> inv_perms_;
};

// Vertex k-coloring; values in {1..k}.
struct Coloring {
    std::vector<int> colors;
    int k = 1;

    void validate(int n) const;
};

LabeledSchreierGraph from_permutations(int n, std::vector<std::vector<int>> perms);

// C_n with one generator shifting by 1 (models a circle rotation).
LabeledSchreierGraph gen_cycle(int n);
// p x q torus with two commuting coordinate shifts (models a Z^2 action).
LabeledSchreierGraph gen_torus(int p, int q);
// m independent uniform permutations, reproducible per (n, m, seed).
LabeledSchreierGraph gen_random_action(int n, int m, std::uint64_t seed);

// Text format: first line "n m", then m lines of n images.
void write_graph(std::ostream& os, const LabeledSchreierGraph& g);
LabeledSchreierGraph read_graph(std::istream& is);
LabeledSchreierGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const LabeledSchreierGraph& g);

// Coloring file: one line of n space-separated integers in 1..k.
void write_coloring(std::ostream& os, const Coloring& c);
Coloring read_coloring(std::istream& is, int k);
Coloring load_coloring(const std::string& path, int k);

} // namespace sga

#endif
