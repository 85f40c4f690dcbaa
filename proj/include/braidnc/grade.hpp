#pragma once

#include <array>
#include <string>

namespace braidnc {

/// Doubled torus weight: a pair of Z^2 vectors (left torus, right torus).
/// Weights are stored doubled so the half-integer eigenvalues of the
/// 7-sphere coordinates become integers.
struct Grade {
    int l1 = 0, l2 = 0, r1 = 0, r2 = 0;

    friend Grade operator+(const Grade& a, const Grade& b) {
        return {a.l1 + b.l1, a.l2 + b.l2, a.r1 + b.r1, a.r2 + b.r2};
    }
    friend Grade operator-(const Grade& a, const Grade& b) {
        return {a.l1 - b.l1, a.l2 - b.l2, a.r1 - b.r1, a.r2 - b.r2};
    }
    Grade operator-() const { return {-l1, -l2, -r1, -r2}; }
    friend bool operator==(const Grade&, const Grade&) = default;

    bool is_zero() const { return l1 == 0 && l2 == 0 && r1 == 0 && r2 == 0; }

    std::string render() const {
        auto p = [](int a, int b) {
            return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        };
        return p(l1, l2) + p(r1, r2);
    }
};

/// Antisymmetric integer form B(g,h) = cl*(gL ^ hL) + cr*(gR ^ hR) with
/// u ^ v = u1 v2 - u2 v1.  Every braiding phase of the engine is q^B.
struct PhaseForm {
    int cl = 0, cr = 0;

    int bform(const Grade& g, const Grade& h) const {
        return cl * (g.l1 * h.l2 - g.l2 * h.l1) + cr * (g.r1 * h.r2 - g.r2 * h.r1);
    }
    bool is_trivial() const { return cl == 0 && cr == 0; }
    friend bool operator==(const PhaseForm&, const PhaseForm&) = default;
};

} // namespace braidnc
