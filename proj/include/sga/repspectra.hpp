#ifndef SGA_REPSPECTRA_HPP
#define SGA_REPSPECTRA_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sga/words.hpp"

namespace sga {

// Finite-dimensional unitary representation of the free group: one unitary
// matrix per generator, extended to words multiplicatively (inverse letters
// act by the adjoint).
struct FiniteUnitaryRep {
    int dim = 1;
    std::vector<Eigen::MatrixXcd> generators;

    void validate() const; // each matrix unitary within 1e-10

    Eigen::MatrixXcd word_matrix(const ReducedWord& w) const;
};

// The point ⊕_{γ∈F} ⊕_{i,j} <α(γ)v_i, v_j> in the cube D^{n²×|F|}.
// coords[g] is the n×n block for words[g], row-major over (i, j).
struct GramPoint {
    std::vector<ReducedWord> words;
    int n = 1;
    std::vector<std::vector<std::complex<double>>> coords;

    // Max over coordinates of the modulus of the difference; matches the
    // coordinate-wise epsilon bound of weak containment.
    double distance(const GramPoint& other) const;
};

struct GramSample {
    GramPoint point;
    Eigen::MatrixXcd frame; // dim x n orthonormal witness
};

// V holds n orthonormal columns; checked within 1e-8.
GramPoint gram_point(const FiniteUnitaryRep& rep, const Eigen::MatrixXcd& frame,
                     const std::vector<ReducedWord>& words);

// Cloud approximating K_{F,n}: random orthonormal frames (orthonormalized
// complex Gaussians) plus descent toward each supplied target. The result is
// a finite sample; no closure is claimed. Deterministic per seed.
std::vector<GramSample> sample_K(const FiniteUnitaryRep& rep,
                                 const std::vector<ReducedWord>& words, int n,
                                 std::int64_t budget, std::uint64_t seed,
                                 const std::vector<GramPoint>& targets = {});

struct ContainmentResult {
    double score = 0.0; // sup over A-points of the achieved matching minimum
    GramPoint worst_point;        // A-point attaining the sup
    Eigen::MatrixXcd worst_frame; // best B-frame found for it
};

// One-sided numerical evidence for Zimmer weak containment of rep_a in
// rep_b at this (F, n): near zero means every sampled A-statistic was
// matched in B.
ContainmentResult containment_score(const FiniteUnitaryRep& rep_a,
                                    const FiniteUnitaryRep& rep_b,
                                    const std::vector<ReducedWord>& words, int n,
                                    std::int64_t budget, std::uint64_t seed);

FiniteUnitaryRep direct_sum(const FiniteUnitaryRep& a, const FiniteUnitaryRep& b);

// Rep files: {"dim": d, "generators": [flat row-major [re, im] pairs, ...]}.
FiniteUnitaryRep load_rep(const std::string& path);
void save_rep(const std::string& path, const FiniteUnitaryRep& rep);

// Haar-ish random unitary from orthonormalized complex Gaussians.
Eigen::MatrixXcd random_unitary(int dim, std::uint64_t seed);

} // namespace sga

#endif
