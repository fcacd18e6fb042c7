#ifndef SGA_BALLS_HPP
#define SGA_BALLS_HPP

#include <string>
#include <vector>

#include "sga/schreier.hpp"
#include "sga/words.hpp"

namespace sga {

// Canonical code of a rooted r-ball: the partition of W^{r,S} into fibers of
// w -> w(root). This partition is a complete invariant of the rooted labeled
// ball, so no isomorphism search is needed. Blocks hold word indices into
// enumerate_words(s_size, r); blocks are sorted by minimal word index and
// words inside a block are increasing, which makes the serialization
// bit-stable. The identity word has index 0, so blocks.front() is always the
// root class.
struct BallCode {
    int r = 0;
    int s_size = 1;
    std::vector<std::vector<int>> blocks;
    std::vector<int> colors; // one color per block; empty if uncolored

    bool is_colored() const { return !colors.empty(); }

    std::string serialize() const;

    // Restriction of the partition to words of length <= new_r.
    BallCode truncate(int new_r) const;

    BallCode uncolored() const;

    friend bool operator==(const BallCode& a, const BallCode& b) {
        return a.r == b.r && a.s_size == b.s_size && a.blocks == b.blocks &&
               a.colors == b.colors;
    }
};

// Shared word table per (s_size, r); memoized, thread-safe.
const std::vector<ReducedWord>& word_table(int s_size, int r);
// Index of a word in word_table(s_size, r); throws if not present.
int word_index(int s_size, int r, const ReducedWord& w);

BallCode ball_code(const LabeledSchreierGraph& g, int x, int r);
BallCode colored_ball_code(const LabeledSchreierGraph& g, int x, int r, const Coloring& c);

// Parse of the "e:1|a,A:2" serialization (colors optional).
BallCode parse_ball_code(const std::string& s, int s_size, int r);

// True iff every block of p lies inside some block of q. Partial order on
// uncolored codes of equal shape; finest partitions are minimal.
bool refines(const BallCode& p, const BallCode& q);

struct TypePoset {
    std::vector<BallCode> codes;
    std::vector<int> heights;                 // parallel to codes
    std::vector<std::vector<bool>> below;     // below[i][j] = refines(codes[i], codes[j])
};

// Heights by iteratively stripping minimal elements of the refinement order,
// over the supplied codes only.
TypePoset height_poset(int s_size, int r, const std::vector<BallCode>& observed);

} // namespace sga

#endif
