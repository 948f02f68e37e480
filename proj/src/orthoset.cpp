#include "qsd/orthoset.hpp"

#include <cmath>
#include <string>

#include "qsd/errors.hpp"

namespace qsd {

namespace {

bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(size_t n) {
    int k = 0;
    while ((size_t{1} << k) < n) ++k;
    return k;
}

void check_amplitude_pair(double alpha, double beta) {
    const double dev = std::abs(alpha * alpha + beta * beta - 1.0);
    if (dev > 1e-10)
        throw NotNormalized("alpha^2 + beta^2 = " + std::to_string(alpha * alpha + beta * beta) +
                            ", expected 1");
}

}  // namespace

OrthoSet make_ortho_set(const std::vector<CVec>& vectors) {
    if (vectors.empty() || !is_power_of_two(vectors.size()))
        throw BadCardinality("state count " + std::to_string(vectors.size()) +
                             " is not a power of two");
    const Eigen::Index dim = vectors.front().size();
    for (const CVec& v : vectors)
        if (v.size() != dim) throw BadCardinality("states have mixed dimensions");
    if (static_cast<size_t>(dim) != vectors.size())
        throw BadCardinality("got " + std::to_string(vectors.size()) + " states of dimension " +
                             std::to_string(dim) + "; a full orthonormal set needs dim == count");

    const int n = log2_exact(vectors.size());
    CMat v(dim, dim);
    for (size_t i = 0; i < vectors.size(); ++i) v.col(static_cast<Eigen::Index>(i)) = vectors[i];

    // Report the first offending pair rather than just failing the matrix test.
    const CMat gram = v.adjoint() * v;
    for (Eigen::Index i = 0; i < gram.rows(); ++i) {
        for (Eigen::Index j = i; j < gram.cols(); ++j) {
            const double expected = (i == j) ? 1.0 : 0.0;
            const double dev = std::abs(gram(i, j) - expected);
            if (dev > 1e-10)
                throw NotOrthonormal(static_cast<int>(i), static_cast<int>(j),
                                     i == j ? dev : std::abs(gram(i, j)));
        }
    }
    return OrthoSet(n, vectors, std::move(v));
}

OrthoSet single_qubit_family(double alpha, double beta) {
    check_amplitude_pair(alpha, beta);
    CVec a(2), b(2);
    a << alpha, beta;
    b << beta, -alpha;
    return make_ortho_set({a, b});
}

OrthoSet family_s(double alpha, double beta) {
    check_amplitude_pair(alpha, beta);
    CVec s1(4), s2(4), s3(4), s4(4);
    s1 << alpha, beta, 0, 0;
    s2 << 0, 0, alpha, beta;
    s3 << 0, 0, beta, -alpha;
    s4 << beta, -alpha, 0, 0;
    return make_ortho_set({s1, s2, s3, s4});
}

OrthoSet bell_set() {
    const double r = 1.0 / std::sqrt(2.0);
    CVec b1(4), b2(4), b3(4), b4(4);
    b1 << r, 0, 0, r;
    b2 << r, 0, 0, -r;
    b3 << 0, r, r, 0;
    b4 << 0, -r, r, 0;
    return make_ortho_set({b1, b2, b3, b4});
}

OrthoSet ghz_set(int k) {
    if (k < 2) throw BadCardinality("ghz_set requires k >= 2");
    const Eigen::Index dim = Eigen::Index{1} << k;
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<CVec> states;
    states.reserve(static_cast<size_t>(dim));
    // Flip-classes {x, xbar} enumerated by their smaller label, i.e. all x
    // with the leading bit 0.
    for (Eigen::Index x = 0; x < dim / 2; ++x) {
        const Eigen::Index xbar = (dim - 1) ^ x;
        CVec plus = CVec::Zero(dim), minus = CVec::Zero(dim);
        plus(x) = r;
        plus(xbar) = r;
        minus(x) = r;
        minus(xbar) = -r;
        states.push_back(plus);
        states.push_back(minus);
    }
    return make_ortho_set(states);
}

}  // namespace qsd
