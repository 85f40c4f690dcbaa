#pragma once

#include "report.hpp"
#include "so5_roots.hpp"

namespace braidnc {

/// 5x5 matrix of Laurent scalars with a torus weight, the finite-dimensional
/// braided picture of the deformed so(5).  All deformation enters through
/// lambda = q^-4.
struct PhasedMatrix {
    std::array<std::array<Scalar, 5>, 5> m{};
    Root weight{0, 0};

    static PhasedMatrix zero(Root w = {0, 0}) {
        PhasedMatrix out;
        out.weight = w;
        return out;
    }

    friend PhasedMatrix operator*(const PhasedMatrix& a, const PhasedMatrix& b) {
        PhasedMatrix out;
        out.weight = {a.weight.first + b.weight.first, a.weight.second + b.weight.second};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                Scalar acc;
                for (int k = 0; k < 5; ++k) acc += a.m[i][k] * b.m[k][j];
                out.m[i][j] = std::move(acc);
            }
        return out;
    }
    friend PhasedMatrix operator*(const Scalar& c, const PhasedMatrix& a) {
        PhasedMatrix out = a;
        for (auto& row : out.m)
            for (auto& e : row) e = c * e;
        return out;
    }
    friend PhasedMatrix operator-(const PhasedMatrix& a, const PhasedMatrix& b) {
        PhasedMatrix out = a;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) out.m[i][j] -= b.m[i][j];
        return out;
    }
    friend PhasedMatrix operator+(const PhasedMatrix& a, const PhasedMatrix& b) {
        PhasedMatrix out = a;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) out.m[i][j] += b.m[i][j];
        return out;
    }
    bool is_zero() const {
        for (auto& row : m)
            for (auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    }
    friend bool operator==(const PhasedMatrix& a, const PhasedMatrix& b) {
        return a.m == b.m;
    }
    Scalar trace() const {
        Scalar t;
        for (int i = 0; i < 5; ++i) t += m[i][i];
        return t;
    }
};

namespace matrixrep {

/// Weight attached to each row/column slot: (1,0),(0,1),(-1,0),(0,-1),(0,0).
inline Root slot_weight(int i) {
    static const std::array<Root, 5> w = {Root{1, 0}, Root{0, 1}, Root{-1, 0}, Root{0, -1},
                                          Root{0, 0}};
    return w.at(i);
}
inline int slot_prime(int i) { return i == 4 ? 4 : (i + 2) % 4; }

/// lambda^k as a scalar.  The bracket identities below are homogeneous in
/// lambda; matching the deformed so(5) structure constants pins lambda to
/// q^-2 (the braided bracket phase lambda^{2 r^s} is then exactly the
/// R-matrix phase between doubled weights).  The q^-4 candidate is rejected
/// by measurement in the verification report.
inline Scalar lambda_pow(int k) { return Scalar::q_power(-2 * k); }

/// Single-entry matrix with entry lambda^{mu ^ nu} at (mu, nu).
inline PhasedMatrix e_matrix(int mu, int nu) {
    PhasedMatrix out;
    out.weight = {slot_weight(mu).first - slot_weight(nu).first,
                  slot_weight(mu).second - slot_weight(nu).second};
    out.m[mu][nu] = lambda_pow(wedge(slot_weight(mu), slot_weight(nu)));
    return out;
}

/// K_{mu,nu} = E_{mu nu*} - E_{nu mu*}, of weight mu + nu.
inline PhasedMatrix k_pair(int mu, int nu) {
    PhasedMatrix out = e_matrix(mu, slot_prime(nu)) - e_matrix(nu, slot_prime(mu));
    out.weight = {slot_weight(mu).first + slot_weight(nu).first,
                  slot_weight(mu).second + slot_weight(nu).second};
    return out;
}

/// The (mu, nu) slots of the ten generators in gauge order (K1, K2, roots).
inline std::pair<int, int> k_slots(int gauge_index) {
    switch (gauge_index) {
        case 0: return {0, 2};  // Cartan 1
        case 1: return {1, 3};  // Cartan 2
        default: break;
    }
    static const std::map<Root, std::pair<int, int>> slots = {
        {{1, 0}, {0, 4}},  {{-1, 0}, {4, 2}}, {{0, 1}, {1, 4}},   {{0, -1}, {4, 3}},
        {{1, 1}, {0, 1}},  {{-1, -1}, {3, 2}}, {{1, -1}, {0, 3}}, {{-1, 1}, {1, 2}}};
    return slots.at(root_list()[gauge_index - 2]);
}

inline PhasedMatrix k_matrix(int gauge_index) {
    auto [mu, nu] = k_slots(gauge_index);
    return k_pair(mu, nu);
}

/// Braided commutator of weighted matrices: AB - lambda^{2 rA ^ rB} BA.
inline PhasedMatrix braided_matrix_bracket(const PhasedMatrix& a, const PhasedMatrix& b) {
    PhasedMatrix out = a * b - lambda_pow(2 * wedge(a.weight, b.weight)) * (b * a);
    out.weight = {a.weight.first + b.weight.first, a.weight.second + b.weight.second};
    return out;
}

} // namespace matrixrep

/// Appendix-level verification of the matrix picture: the product law of the
/// single-entry matrices, the structure-constant match with the deformed
/// so(5), the four-term bracket formula on all slot pairs, the classical
/// Q-antisymmetry at q = 1, and the measurement of the one entry whose listed
/// form breaks the star pattern.
inline Report verify_matrixrep(const std::array<std::array<int, 8>, 8>& n_struct,
                               unsigned jobs = 0) {
    using namespace matrixrep;
    std::vector<Check> checks;
    auto add = [&](std::string id, std::function<CheckRecord()> f) {
        checks.push_back({std::move(id), std::move(f)});
    };

    add("matrixrep.product_law", [] {
        for (int mu = 0; mu < 5; ++mu)
            for (int nu = 0; nu < 5; ++nu)
                for (int tau = 0; tau < 5; ++tau)
                    for (int sigma = 0; sigma < 5; ++sigma) {
                        PhasedMatrix lhs = e_matrix(mu, nu) * e_matrix(tau, sigma);
                        PhasedMatrix rhs = PhasedMatrix::zero();
                        if (nu == tau) {
                            Root d1{slot_weight(mu).first - slot_weight(nu).first,
                                    slot_weight(mu).second - slot_weight(nu).second};
                            Root d2{slot_weight(tau).first - slot_weight(sigma).first,
                                    slot_weight(tau).second - slot_weight(sigma).second};
                            rhs = lambda_pow(wedge(d1, d2)) * e_matrix(mu, sigma);
                        }
                        if (!(lhs == rhs)) return fact_check(false, "mismatch", "product law");
                    }
        return fact_check(true, "625 pairs", "625 pairs");
    });
    add("matrixrep.entry", [] {
        // (E_{12})_{12} = lambda for the first two weights.
        PhasedMatrix e = e_matrix(0, 1);
        bool ok = e.m[0][1] == lambda_pow(1);
        // Equal weights give wedge zero: E_{15} E_{53} = E_{13}.
        PhasedMatrix prod = e_matrix(0, 4) * e_matrix(4, 2);
        ok = ok && (prod == e_matrix(0, 2));
        // Mismatched middle slots annihilate.
        ok = ok && (e_matrix(0, 1) * e_matrix(2, 3)).is_zero();
        return fact_check(ok, ok ? "entries" : "mismatch", "entries");
    });
    add("matrixrep.cartan_traceless", [] {
        return fact_check(k_matrix(0).trace().is_zero() && k_matrix(1).trace().is_zero(),
                          "traceless", "traceless");
    });

    // Structure constants against the deformed so(5).  The listed matrix
    // table realizes the vector-field copy after negating the four long-root
    // matrices (measured sign character: +1 on short roots, -1 on long
    // ones); with that identification every pair matches sotheta-style
    // brackets with identical phase exponents.
    auto long_root = [](const Root& r) { return r.first != 0 && r.second != 0; };
    auto k_ident = [long_root](int i) {
        PhasedMatrix m = k_matrix(i);
        if (i >= 2 && long_root(root_list()[i - 2])) m = Scalar(BaseNumber(-1)) * m;
        return m;
    };
    add("matrixrep.structure", [n_struct, k_ident] {
        auto root_of = [](int k) { return k < 2 ? Root{0, 0} : root_list()[k - 2]; };
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                if (i == j) continue;
                PhasedMatrix lhs = braided_matrix_bracket(k_ident(i), k_ident(j));
                PhasedMatrix rhs = PhasedMatrix::zero();
                if (i < 2 && j < 2) {
                    // Cartan pair commutes.
                } else if (i < 2) {
                    Root r = root_of(j);
                    int rj = i == 0 ? r.first : r.second;
                    rhs = Scalar(BaseNumber(rj)) * k_ident(j);
                } else if (j < 2) {
                    Root r = root_of(i);
                    int rj = j == 0 ? r.first : r.second;
                    rhs = Scalar(BaseNumber(-rj)) * k_ident(i);
                } else {
                    Root r = root_of(i), s = root_of(j);
                    if (r.first == -s.first && r.second == -s.second) {
                        rhs = Scalar(BaseNumber(r.first)) * k_ident(0) +
                              Scalar(BaseNumber(r.second)) * k_ident(1);
                    } else {
                        Root sum{r.first + s.first, r.second + s.second};
                        bool is_root = false;
                        for (auto& t : root_list()) is_root |= (t == sum);
                        if (is_root) {
                            int n = n_struct[root_position(r)][root_position(s)];
                            rhs = (Scalar::q_power(-2 * wedge(r, s)) * Scalar(BaseNumber(n))) *
                                  k_ident(2 + root_position(sum));
                        }
                    }
                }
                if (!(lhs == rhs))
                    return fact_check(false, gauge_name(i) + "," + gauge_name(j),
                                      "structure constants");
            }
        return fact_check(true, "45 pairs", "45 pairs");
    });
    add("matrixrep.measured.lambda", [] {
        // With entries and bracket phase built from lambda' = lambda^2
        // (q^-4), the root-sum constants double their phase exponents and the
        // match with the deformed so(5) fails; measured on one witness pair.
        auto e4 = [](int mu, int nu) {
            PhasedMatrix out;
            out.weight = {slot_weight(mu).first - slot_weight(nu).first,
                          slot_weight(mu).second - slot_weight(nu).second};
            out.m[mu][nu] = Scalar::q_power(-4 * wedge(slot_weight(mu), slot_weight(nu)));
            return out;
        };
        auto k4 = [&](const Root& r) {
            static const std::map<Root, std::pair<int, int>> slots = {
                {{1, 0}, {0, 4}}, {{0, 1}, {1, 4}}, {{1, 1}, {0, 1}}};
            auto [mu, nu] = slots.at(r);
            PhasedMatrix out = e4(mu, slot_prime(nu)) - e4(nu, slot_prime(mu));
            out.weight = r;
            return out;
        };
        PhasedMatrix a = k4({1, 0}), b = k4({0, 1});
        PhasedMatrix br = a * b - Scalar::q_power(-8 * wedge(a.weight, b.weight)) * (b * a);
        // candidate phases e^{+-i pi theta}: neither fits the q^-4 variant.
        PhasedMatrix t = k4({1, 1});
        bool fits = false;
        for (int n : {1, -1})
            for (int ph : {-2, 2})
                if (br.m == ((Scalar::q_power(ph) * Scalar(BaseNumber(n))) * t).m) fits = true;
        return fact_check(!fits, fits ? "q^-4 fits" : "q^-4 rejected", "q^-4 rejected");
    });

    // The closed four-term formula on all slot pairs of the ten generators.
    add("matrixrep.four_term", [] {
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                auto [mu, nu] = k_slots(i);
                auto [tau, sigma] = k_slots(j);
                PhasedMatrix lhs = braided_matrix_bracket(k_pair(mu, nu), k_pair(tau, sigma));
                Root wmn{slot_weight(mu).first + slot_weight(nu).first,
                         slot_weight(mu).second + slot_weight(nu).second};
                Root wts{slot_weight(tau).first + slot_weight(sigma).first,
                         slot_weight(tau).second + slot_weight(sigma).second};
                PhasedMatrix rhs = PhasedMatrix::zero(
                    {wmn.first + wts.first, wmn.second + wts.second});
                auto addterm = [&](bool cond, int a, int b, int sign) {
                    if (!cond) return;
                    PhasedMatrix t = k_pair(a, b);
                    rhs = sign > 0 ? rhs + t : rhs - t;
                };
                addterm(slot_prime(nu) == tau, mu, sigma, +1);
                addterm(slot_prime(mu) == tau, nu, sigma, -1);
                addterm(slot_prime(nu) == sigma, mu, tau, -1);
                addterm(slot_prime(sigma) == mu, nu, tau, +1);
                rhs = lambda_pow(wedge(wmn, wts)) * rhs;
                if (!(lhs.m == rhs.m))
                    return fact_check(false,
                                      "slots (" + std::to_string(mu) + "," + std::to_string(nu) +
                                          ")x(" + std::to_string(tau) + "," +
                                          std::to_string(sigma) + ")",
                                      "four-term law");
            }
        return fact_check(true, "100 slot pairs", "100 slot pairs");
    });

    // Classical limit: X^t Q + Q X = 0 at q = 1 for all ten matrices.
    add("matrixrep.classical_limit", [] {
        for (int i = 0; i < 10; ++i) {
            PhasedMatrix k = k_matrix(i);
            for (int a = 0; a < 5; ++a)
                for (int b = 0; b < 5; ++b) {
                    // (X^t Q)_{ab} = X_{b', a... } with Q_{ij} = delta_{i j'}:
                    // (X^t Q + Q X)_{ab} = X_{b' a} + X_{a' b}.
                    BaseNumber v =
                        k.m[slot_prime(b)][a].at_q_one() + k.m[slot_prime(a)][b].at_q_one();
                    if (!v.is_zero())
                        return fact_check(false, gauge_name(i), "Q-antisymmetric at q=1");
                }
        }
        return fact_check(true, "10 matrices", "10 matrices");
    });

    // The listed K_{-11} = E_{21} - E_{44} breaks the star pattern; measure
    // both candidates against the braided structure constants.
    add("matrixrep.measured.Km11", [n_struct] {
        PhasedMatrix listed = e_matrix(1, 0) - e_matrix(3, 3);
        listed.weight = {-1, 1};
        PhasedMatrix pattern = k_pair(1, 2);  // E_{21} - E_{34}
        auto probe = [&](const PhasedMatrix& cand) {
            // [K_{1-1}, cand] should be N_{(1,-1),(-1,1)}-free: their sum is
            // zero, so expect the Cartan combination r1 K1 + r2 K2 with
            // r = (1,-1).
            PhasedMatrix br = braided_matrix_bracket(k_matrix(2 + root_position({1, -1})), cand);
            PhasedMatrix want = Scalar(BaseNumber(1)) * k_matrix(0) -
                                Scalar(BaseNumber(1)) * k_matrix(1);
            bool ok = (br.m == want.m);
            // and the Cartan grading: [K1, cand] = -cand.
            PhasedMatrix c1 = braided_matrix_bracket(k_matrix(0), cand);
            PhasedMatrix mneg = Scalar(BaseNumber(-1)) * cand;
            ok = ok && (c1.m == mneg.m);
            return ok;
        };
        bool pattern_ok = probe(pattern);
        bool listed_ok = probe(listed);
        return fact_check(pattern_ok && !listed_ok,
                          std::string("pattern=") + (pattern_ok ? "fits" : "breaks") +
                              " listed=" + (listed_ok ? "fits" : "breaks"),
                          "pattern=fits listed=breaks");
    });

    return run_checks("matrixrep", checks, jobs);
}

} // namespace braidnc
