#include "sga/repspectra.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "sga/error.hpp"
#include "sga/parallel.hpp"
#include "sga/rng.hpp"

namespace sga {

namespace {

Eigen::MatrixXcd gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = std::complex<double>(rand_gauss(rng), rand_gauss(rng));
    return m;
}

// Thin Q factor: orthonormal columns spanning the input columns.
Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& m) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
}

Eigen::MatrixXcd random_frame(int dim, int n, std::mt19937_64& rng) {
    return orthonormalize(gaussian_matrix(dim, n, rng));
}

// Local refinement on the frame manifold: random skew-Hermitian nudges with
// re-orthonormalization and step halving. Returns the improved frame.
template <typename Objective>
Eigen::MatrixXcd refine_frame(Eigen::MatrixXcd frame, const Objective& objective,
                              std::int64_t budget, std::mt19937_64& rng) {
    int dim = (int)frame.rows();
    double best = objective(frame);
    double step = 0.5;
    std::int64_t used = 0;
    while (used < budget && step >= 1e-10) {
        Eigen::MatrixXcd gauss = gaussian_matrix(dim, dim, rng);
        Eigen::MatrixXcd skew = (gauss - gauss.adjoint()) * 0.5;
        Eigen::MatrixXcd candidate = orthonormalize(
            (Eigen::MatrixXcd::Identity(dim, dim) + step * skew) * frame);
        double val = objective(candidate);
        ++used;
        if (val < best) {
            best = val;
            frame = std::move(candidate);
        } else {
            step *= 0.5;
        }
    }
    return frame;
}

} // namespace

void FiniteUnitaryRep::validate() const {
    if (dim < 1) throw bad_parameter("representation dimension must be >= 1");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& u = generators[i];
        if (u.rows() != dim || u.cols() != dim)
            throw shape_mismatch("generator matrix " + std::to_string(i) + " is not " +
                                 std::to_string(dim) + "x" + std::to_string(dim));
        double dev = (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
        if (dev > 1e-10)
            throw bad_parameter("generator matrix " + std::to_string(i) +
                                " is not unitary (deviation " + std::to_string(dev) + ")");
    }
}

Eigen::MatrixXcd FiniteUnitaryRep::word_matrix(const ReducedWord& w) const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
    for (const Generator& g : w.letters) {
        if (g.index >= (int)generators.size())
            throw shape_mismatch("word uses generator " + std::to_string(g.index) +
                                 " but representation has " + std::to_string(generators.size()));
        if (g.inverted)
            m = m * generators[g.index].adjoint();
        else
            m = m * generators[g.index];
    }
    return m;
}

double GramPoint::distance(const GramPoint& other) const {
    if (n != other.n || coords.size() != other.coords.size())
        throw shape_mismatch("gram points have different (F, n)");
    double worst = 0.0;
    for (std::size_t g = 0; g < coords.size(); ++g)
        for (std::size_t e = 0; e < coords[g].size(); ++e)
            worst = std::max(worst, std::abs(coords[g][e] - other.coords[g][e]));
    return worst;
}

GramPoint gram_point(const FiniteUnitaryRep& rep, const Eigen::MatrixXcd& frame,
                     const std::vector<ReducedWord>& words) {
    int n = (int)frame.cols();
    if (n > rep.dim)
        throw dimension_too_small("frame has " + std::to_string(n) +
                                  " vectors, representation dimension is " +
                                  std::to_string(rep.dim));
    double dev =
        (frame.adjoint() * frame - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (dev > 1e-8)
        throw not_orthonormal("frame deviates from orthonormality by " + std::to_string(dev));
    GramPoint p;
    p.words = words;
    p.n = n;
    p.coords.reserve(words.size());
    for (const ReducedWord& w : words) {
        Eigen::MatrixXcd gram = frame.adjoint() * (rep.word_matrix(w) * frame);
        std::vector<std::complex<double>> block((std::size_t)n * n);
        // <α(γ)v_i, v_j> = (V† α(γ) V)(j, i)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) block[(std::size_t)i * n + j] = gram(j, i);
        p.coords.push_back(std::move(block));
    }
    return p;
}

std::vector<GramSample> sample_K(const FiniteUnitaryRep& rep,
                                 const std::vector<ReducedWord>& words, int n,
                                 std::int64_t budget, std::uint64_t seed,
                                 const std::vector<GramPoint>& targets) {
    rep.validate();
    if (n > rep.dim)
        throw dimension_too_small("n exceeds representation dimension");
    if (budget < 1) throw bad_parameter("sample_K: budget must be >= 1");

    std::int64_t random_budget = targets.empty() ? budget : std::max<std::int64_t>(1, budget / 2);
    auto samples = parallel_map<GramSample>((std::size_t)random_budget, [&](std::size_t i) {
        std::mt19937_64 rng(derive_seed(seed, i));
        GramSample s;
        s.frame = random_frame(rep.dim, n, rng);
        s.point = gram_point(rep, s.frame, words);
        return s;
    });

    if (!targets.empty()) {
        std::int64_t per_target =
            std::max<std::int64_t>(1, (budget - random_budget) / (std::int64_t)targets.size());
        auto refined = parallel_map<GramSample>(targets.size(), [&](std::size_t t) {
            const GramPoint& target = targets[t];
            std::size_t start = 0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < samples.size(); ++i) {
                double d = samples[i].point.distance(target);
                if (d < best) { best = d; start = i; }
            }
            std::mt19937_64 rng(derive_seed(seed, 500000 + t));
            auto objective = [&](const Eigen::MatrixXcd& frame) {
                return gram_point(rep, frame, words).distance(target);
            };
            GramSample s;
            s.frame = refine_frame(samples[start].frame, objective, per_target, rng);
            s.point = gram_point(rep, s.frame, words);
            return s;
        });
        for (auto& s : refined) samples.push_back(std::move(s));
    }
    return samples;
}

ContainmentResult containment_score(const FiniteUnitaryRep& rep_a,
                                    const FiniteUnitaryRep& rep_b,
                                    const std::vector<ReducedWord>& words, int n,
                                    std::int64_t budget, std::uint64_t seed) {
    rep_a.validate();
    rep_b.validate();
    if (n > rep_a.dim || n > rep_b.dim)
        throw dimension_too_small("n exceeds a representation dimension");
    std::int64_t cloud_budget = std::max<std::int64_t>(1, budget / 4);
    auto cloud_a = sample_K(rep_a, words, n, cloud_budget, derive_seed(seed, 1));
    std::int64_t per_point =
        std::max<std::int64_t>(1, (budget - cloud_budget) / (std::int64_t)cloud_a.size());

    struct Match {
        double achieved;
        Eigen::MatrixXcd frame;
    };
    auto matches = parallel_map<Match>(cloud_a.size(), [&](std::size_t i) {
        const GramPoint& target = cloud_a[i].point;
        auto objective = [&](const Eigen::MatrixXcd& frame) {
            return gram_point(rep_b, frame, words).distance(target);
        };
        std::mt19937_64 rng(derive_seed(seed, 700000 + i));
        // Candidate starts: the A-frame zero-padded into B's space (exact
        // for block embeddings), plus random B-frames.
        std::vector<Eigen::MatrixXcd> starts;
        if (rep_b.dim >= rep_a.dim) {
            Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(rep_b.dim, n);
            padded.topRows(rep_a.dim) = cloud_a[i].frame;
            starts.push_back(std::move(padded));
        }
        for (int s = 0; s < 4; ++s) starts.push_back(random_frame(rep_b.dim, n, rng));
        std::size_t arg = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < starts.size(); ++s) {
            double v = objective(starts[s]);
            if (v < best) { best = v; arg = s; }
        }
        Eigen::MatrixXcd frame = starts[arg];
        if (best > 1e-12)
            frame = refine_frame(std::move(frame), objective, per_point, rng);
        return Match{objective(frame), std::move(frame)};
    });

    ContainmentResult res;
    std::size_t worst = 0;
    double sup = -1.0;
    for (std::size_t i = 0; i < matches.size(); ++i)
        if (matches[i].achieved > sup) { sup = matches[i].achieved; worst = i; }
    res.score = sup;
    res.worst_point = cloud_a[worst].point;
    res.worst_frame = matches[worst].frame;
    return res;
}

FiniteUnitaryRep direct_sum(const FiniteUnitaryRep& a, const FiniteUnitaryRep& b) {
    if (a.generators.size() != b.generators.size())
        throw shape_mismatch("direct_sum: generator counts differ");
    FiniteUnitaryRep s;
    s.dim = a.dim + b.dim;
    for (std::size_t i = 0; i < a.generators.size(); ++i) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(s.dim, s.dim);
        m.topLeftCorner(a.dim, a.dim) = a.generators[i];
        m.bottomRightCorner(b.dim, b.dim) = b.generators[i];
        s.generators.push_back(std::move(m));
    }
    return s;
}

FiniteUnitaryRep load_rep(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("FileNotFound", "cannot open rep file " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("rep file: ") + e.what());
    }
    FiniteUnitaryRep rep;
    rep.dim = j.at("dim").get<int>();
    for (const auto& mat : j.at("generators")) {
        if ((int)mat.size() != rep.dim * rep.dim)
            throw parse_error("generator matrix has wrong size");
        Eigen::MatrixXcd m(rep.dim, rep.dim);
        for (int i = 0; i < rep.dim; ++i)
            for (int k = 0; k < rep.dim; ++k) {
                const auto& pair = mat[(std::size_t)i * rep.dim + k];
                m(i, k) = std::complex<double>(pair.at(0).get<double>(), pair.at(1).get<double>());
            }
        rep.generators.push_back(std::move(m));
    }
    rep.validate();
    return rep;
}

void save_rep(const std::string& path, const FiniteUnitaryRep& rep) {
    nlohmann::json j;
    j["dim"] = rep.dim;
    auto gens = nlohmann::json::array();
    for (const auto& m : rep.generators) {
        auto mat = nlohmann::json::array();
        for (int i = 0; i < rep.dim; ++i)
            for (int k = 0; k < rep.dim; ++k)
                mat.push_back({m(i, k).real(), m(i, k).imag()});
        gens.push_back(std::move(mat));
    }
    j["generators"] = std::move(gens);
    std::ofstream f(path);
    if (!f) throw error("FileError", "cannot write rep file " + path);
    f << j.dump(2) << '\n';
}

Eigen::MatrixXcd random_unitary(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return orthonormalize(gaussian_matrix(dim, dim, rng));
}

} // namespace sga
