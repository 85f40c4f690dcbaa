#pragma once

#include "element.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace braidnc {

/// Documented PRNG (splitmix64) so oracle verdicts are reproducible across
/// platforms for a fixed seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

/// Box-Muller on splitmix64 draws; avoids the stdlib distributions, whose
/// output is not pinned down by the standard.
inline double gaussian(std::uint64_t& state) {
    double u1 = uniform01(state);
    double u2 = uniform01(state);
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// A concrete point of the classical variety underlying a presentation:
/// one complex value per generator, star pairs conjugate.
struct SamplePoint {
    std::vector<std::complex<double>> values;
    std::uint64_t seed = 0;
};

/// Uniform-ish point of the unit 7-sphere in C^4.
inline SamplePoint sample_s7(std::uint64_t seed, std::size_t num_gens = 8) {
    std::uint64_t st = seed;
    std::array<std::complex<double>, 4> z;
    double norm2 = 0;
    for (auto& v : z) {
        v = {gaussian(st), gaussian(st)};
        norm2 += std::norm(v);
    }
    if (norm2 < 1e-12) throw DegenerateSample("sample_s7: vanishing draw");
    double inv = 1.0 / std::sqrt(norm2);
    SamplePoint p;
    p.seed = seed;
    p.values.resize(num_gens);
    for (int a = 0; a < 4; ++a) {
        p.values[a] = z[a] * inv;
        p.values[a + 4] = std::conj(z[a] * inv);
    }
    if (num_gens >= 12) {
        // Central SU(2) coordinates for the coaction extension.
        std::complex<double> w1{gaussian(st), gaussian(st)}, w2{gaussian(st), gaussian(st)};
        double n = std::sqrt(std::norm(w1) + std::norm(w2));
        if (n < 1e-12) throw DegenerateSample("sample_s7: vanishing group draw");
        p.values[8] = w1 / n;
        p.values[9] = w2 / n;
        p.values[10] = std::conj(w1 / n);
        p.values[11] = std::conj(w2 / n);
    }
    return p;
}

namespace detail {

// Q-metric of the orthogonal presentation: Q_{IJ} = delta_{I,J'} with
// 1'=3, 2'=4, 5'=5 (0-based primes: 0<->2, 1<->3, 4 fixed).
inline int prime5(int i) { return i == 4 ? 4 : (i + 2) % 4; }

} // namespace detail

/// Special-orthogonal sample in the paired complex basis: a real rotation R
/// conjugated by the unitary change of basis u_j = (y_{2j-1} + i y_{2j})/sqrt2,
/// so that N^t Q N = Q, det N = 1, and conj(n_IJ) = n_{I'J'} hold by
/// construction.
inline SamplePoint sample_so5(std::uint64_t seed) {
    std::uint64_t st = seed ^ 0x5051525354555657ull;
    double g[5][5];
    for (auto& row : g)
        for (auto& v : row) v = gaussian(st);
    // Gram-Schmidt on columns.
    double r[5][5];
    for (int c = 0; c < 5; ++c) {
        for (int i = 0; i < 5; ++i) r[i][c] = g[i][c];
        for (int c2 = 0; c2 < c; ++c2) {
            double dot = 0;
            for (int i = 0; i < 5; ++i) dot += r[i][c2] * r[i][c];
            for (int i = 0; i < 5; ++i) r[i][c] -= dot * r[i][c2];
        }
        double n2 = 0;
        for (int i = 0; i < 5; ++i) n2 += r[i][c] * r[i][c];
        if (n2 < 1e-16) throw DegenerateSample("sample_so5: near-singular draw");
        double inv = 1.0 / std::sqrt(n2);
        for (int i = 0; i < 5; ++i) r[i][c] *= inv;
    }
    // det sign via the full 120-term expansion; n=5 keeps this cheap.
    double det = 0;
    {
        int perm[5] = {0, 1, 2, 3, 4};
        do {
            int sign = 1;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            double prod = 1;
            for (int i = 0; i < 5; ++i) prod *= r[i][perm[i]];
            det += sign * prod;
        } while (std::next_permutation(perm, perm + 5));
    }
    if (det < 0)
        for (int i = 0; i < 5; ++i) r[i][4] = -r[i][4];

    // N = V R V^dagger with V the paired-basis unitary.
    std::complex<double> v[5][5] = {};
    const double s = 1.0 / std::sqrt(2.0);
    v[0][0] = s;
    v[0][1] = {0, s};
    v[1][2] = s;
    v[1][3] = {0, s};
    v[2][0] = s;
    v[2][1] = {0, -s};
    v[3][2] = s;
    v[3][3] = {0, -s};
    v[4][4] = 1;
    std::complex<double> n[5][5] = {};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            std::complex<double> acc = 0;
            for (int k = 0; k < 5; ++k)
                for (int l = 0; l < 5; ++l) acc += v[i][k] * r[k][l] * std::conj(v[j][l]);
            n[i][j] = acc;
        }
    // Constraint residuals.
    double worst = 0;
    for (int j = 0; j < 5; ++j)
        for (int l = 0; l < 5; ++l) {
            std::complex<double> acc = 0;
            for (int k = 0; k < 5; ++k) acc += n[detail::prime5(k)][j] * n[k][l];
            double expect = (detail::prime5(j) == l) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(acc - expect));
        }
    if (worst > 1e-9) throw DegenerateSample("sample_so5: orthogonality residual");

    SamplePoint p;
    p.seed = seed;
    p.values.resize(25);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) p.values[5 * i + j] = n[i][j];
    return p;
}

/// Point sampler keyed off the presentation's name.
inline SamplePoint sample_point(const Presentation& p, std::uint64_t seed) {
    const std::string& n = p.name();
    if (n.rfind("so5", 0) == 0) return sample_so5(seed);
    if (n.rfind("s7ext", 0) == 0) return sample_s7(seed, p.num_generators());
    if (n.rfind("s7", 0) == 0) return sample_s7(seed, p.num_generators());
    throw DegenerateSample("no sampler for presentation " + n);
}

/// Evaluates at a classical point with q = e^{i pi theta / 2}.  The deformed
/// product of sorted generators corresponds to the q^{B/2}-rescaled classical
/// monomial, so each monomial carries the exact phase exponent sum/2.
inline std::complex<double> eval_element(const Element& x, const SamplePoint& pt,
                                         double theta) {
    const Presentation& p = *x.presentation();
    std::complex<double> out = 0;
    for (auto& [m, c] : x.terms()) {
        int bsum = 0;
        std::complex<double> prod = 1;
        for (std::size_t i = 0; i < m.idx.size(); ++i) {
            prod *= pt.values.at(m.idx[i]);
            for (std::size_t j = i + 1; j < m.idx.size(); ++j)
                bsum += p.swap_phase(p.grade_of_gen(m.idx[i]), p.grade_of_gen(m.idx[j]));
        }
        double ph = std::numbers::pi * theta * 0.25 * static_cast<double>(bsum);
        out += c.eval(theta) * std::complex<double>(std::cos(ph), std::sin(ph)) * prod;
    }
    return out;
}

struct OracleOptions {
    int points = 20;
    double tol = 1e-9;
    std::uint64_t seed = 0xb1aadedc0ffee123ull;
    std::vector<double> thetas = {0.0, 0.3, 0.5, 0.7, 1.1};
};

struct OracleVerdict {
    bool equal = false;
    double max_residual = 0;
    std::uint64_t witness_seed = 0;
    double witness_theta = 0;
};

/// Falsifier: Equal when the max residual over points x thetas stays below
/// tol, otherwise Distinct with the witnessing point.
inline OracleVerdict numeric_identity_check(const Element& lhs, const Element& rhs,
                                            const OracleOptions& opt = {}) {
    const Presentation& p = *(lhs.presentation() ? lhs.presentation() : rhs.presentation());
    OracleVerdict v;
    v.equal = true;
    for (int k = 0; k < opt.points; ++k) {
        SamplePoint pt = sample_point(p, opt.seed + static_cast<std::uint64_t>(k));
        for (double theta : opt.thetas) {
            double r = std::abs(eval_element(lhs, pt, theta) - eval_element(rhs, pt, theta));
            if (r > v.max_residual) {
                v.max_residual = r;
                v.witness_seed = pt.seed;
                v.witness_theta = theta;
            }
        }
    }
    v.equal = v.max_residual < opt.tol;
    return v;
}

} // namespace braidnc
