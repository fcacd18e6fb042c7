#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>

#include "sga/error.hpp"
#include "sga/repspectra.hpp"

using namespace sga;
using namespace std::complex_literals;

namespace {

FiniteUnitaryRep trivial_rep(int dim, int m) {
    FiniteUnitaryRep rep;
    rep.dim = dim;
    for (int i = 0; i < m; ++i) rep.generators.push_back(Eigen::MatrixXcd::Identity(dim, dim));
    return rep;
}

FiniteUnitaryRep scalar_rep(std::complex<double> z) {
    FiniteUnitaryRep rep;
    rep.dim = 1;
    rep.generators.push_back(Eigen::MatrixXcd::Constant(1, 1, z));
    return rep;
}

std::vector<ReducedWord> short_words(int m, int r) { return enumerate_words(m, r); }

} // namespace

TEST_CASE("validate accepts unitaries and rejects the rest") {
    CHECK_NOTHROW(trivial_rep(3, 2).validate());
    CHECK_NOTHROW(scalar_rep(std::exp(0.7i)).validate());
    FiniteUnitaryRep bad;
    bad.dim = 2;
    bad.generators.push_back(Eigen::MatrixXcd::Identity(2, 2) * 2.0);
    CHECK_THROWS_AS(bad.validate(), bad_parameter);
    FiniteUnitaryRep wrong_shape;
    wrong_shape.dim = 2;
    wrong_shape.generators.push_back(Eigen::MatrixXcd::Identity(3, 3));
    CHECK_THROWS_AS(wrong_shape.validate(), shape_mismatch);
}

TEST_CASE("word_matrix multiplies letters and adjoints inverses") {
    FiniteUnitaryRep rep = scalar_rep(std::exp(0.3i));
    auto m = rep.word_matrix(word_from_string("aaa"));
    CHECK(std::abs(m(0, 0) - std::exp(0.9i)) < 1e-12);
    auto inv = rep.word_matrix(word_from_string("A"));
    CHECK(std::abs(inv(0, 0) - std::exp(-0.3i)) < 1e-12);
    CHECK(rep.word_matrix(ReducedWord{})(0, 0) == 1.0);

    // Two-generator check against explicit matrices.
    FiniteUnitaryRep rep2;
    rep2.dim = 2;
    Eigen::MatrixXcd a(2, 2), b(2, 2);
    a << 0, 1, 1, 0;
    b << 1i, 0, 0, -1i;
    rep2.generators = {a, b};
    auto ab = rep2.word_matrix(word_from_string("aB"));
    Eigen::MatrixXcd expect = a * b.adjoint();
    CHECK((ab - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("gram_point in the standard basis reads off matrix entries") {
    FiniteUnitaryRep rep;
    rep.dim = 2;
    Eigen::MatrixXcd a(2, 2);
    a << 0, 1, 1, 0;
    rep.generators = {a};
    auto words = short_words(1, 1);
    auto p = gram_point(rep, Eigen::MatrixXcd::Identity(2, 2), words);
    REQUIRE(p.n == 2);
    for (std::size_t g = 0; g < words.size(); ++g) {
        auto mat = rep.word_matrix(words[g]);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                // <alpha(g) v_i, v_j> = mat(j, i) for standard basis vectors.
                CHECK(std::abs(p.coords[g][i * 2 + j] - mat(j, i)) < 1e-12);
            }
    }
}

TEST_CASE("gram coordinates live in the unit disc") {
    auto rep = trivial_rep(4, 2);
    rep.generators[0] = random_unitary(4, 5);
    rep.generators[1] = random_unitary(4, 6);
    rep.validate();
    auto samples = sample_K(rep, short_words(2, 2), 2, 200, 11);
    CHECK(samples.size() >= 2);
    for (const auto& s : samples)
        for (const auto& block : s.point.coords)
            for (auto z : block) CHECK(std::abs(z) <= 1.0 + 1e-9);
}

TEST_CASE("gram_point validates its inputs") {
    auto rep = trivial_rep(2, 1);
    auto words = short_words(1, 1);
    Eigen::MatrixXcd skew(2, 2);
    skew << 1, 1, 0, 1; // not orthonormal
    CHECK_THROWS_AS(gram_point(rep, skew, words), not_orthonormal);
    // n cannot exceed dim.
    FiniteUnitaryRep one = scalar_rep(1.0);
    CHECK_THROWS_AS(sample_K(one, words, 2, 50, 1), dimension_too_small);
}

TEST_CASE("distance is invariant under unitary conjugation of the rep") {
    FiniteUnitaryRep rep;
    rep.dim = 3;
    rep.generators = {random_unitary(3, 21), random_unitary(3, 22)};
    auto u = random_unitary(3, 23);
    FiniteUnitaryRep conj;
    conj.dim = 3;
    for (const auto& g : rep.generators) conj.generators.push_back(u * g * u.adjoint());
    conj.validate();
    auto words = short_words(2, 2);
    auto frame = Eigen::MatrixXcd::Identity(3, 2).eval();
    auto p = gram_point(rep, frame, words);
    // Conjugated rep on the rotated frame gives the identical point.
    auto q = gram_point(conj, (u * frame).eval(), words);
    CHECK(p.distance(q) < 1e-10);
}

TEST_CASE("self containment and direct sums score near zero") {
    FiniteUnitaryRep rep;
    rep.dim = 2;
    rep.generators = {random_unitary(2, 31)};
    auto words = short_words(1, 2);
    auto self = containment_score(rep, rep, words, 1, 400, 3);
    CHECK(self.score <= 1e-6);
    auto other = scalar_rep(std::exp(1.1i));
    auto sum = direct_sum(rep, other);
    CHECK(sum.dim == 3);
    sum.validate();
    auto in_sum = containment_score(rep, sum, words, 1, 400, 3);
    CHECK(in_sum.score <= 1e-6);
}

TEST_CASE("the sign rep is far from the trivial rep") {
    auto plus = scalar_rep(1.0);
    auto minus = scalar_rep(-1.0);
    auto words = short_words(1, 1);
    auto res = containment_score(minus, plus, words, 1, 200, 5);
    // The unique A-point has coordinate -1 at "a"; B only offers +1.
    CHECK(res.score == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("containment_score is deterministic per seed") {
    FiniteUnitaryRep a;
    a.dim = 2;
    a.generators = {random_unitary(2, 41)};
    FiniteUnitaryRep b;
    b.dim = 2;
    b.generators = {random_unitary(2, 42)};
    auto words = short_words(1, 2);
    auto r1 = containment_score(a, b, words, 1, 300, 9);
    auto r2 = containment_score(a, b, words, 1, 300, 9);
    CHECK(r1.score == r2.score);
}

TEST_CASE("rep files round-trip") {
    FiniteUnitaryRep rep;
    rep.dim = 2;
    rep.generators = {random_unitary(2, 51), random_unitary(2, 52)};
    std::string path = "test_rep_roundtrip.json";
    save_rep(path, rep);
    auto loaded = load_rep(path);
    std::remove(path.c_str());
    REQUIRE(loaded.dim == 2);
    REQUIRE(loaded.generators.size() == 2);
    for (int g = 0; g < 2; ++g)
        CHECK((loaded.generators[g] - rep.generators[g]).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("random_unitary is unitary and seed-stable") {
    auto u = random_unitary(5, 77);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((random_unitary(5, 77) - u).cwiseAbs().maxCoeff() == 0.0);
    CHECK((random_unitary(5, 78) - u).cwiseAbs().maxCoeff() > 1e-3);
}
