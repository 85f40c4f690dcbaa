#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidnc/instanton.hpp>
#include <braidnc/matrixrep.hpp>

using namespace braidnc;
using namespace braidnc::matrixrep;

namespace {
std::array<std::array<int, 8>, 8> struct_constants() {
    std::array<std::array<int, 8>, 8> n{};
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            n[i][j] = instanton().structure_constant(root_list()[i], root_list()[j]);
    return n;
}
} // namespace

TEST_CASE("single-entry matrices") {
    // Entry value lambda at the first off-diagonal pair.
    CHECK(e_matrix(0, 1).m[0][1] == Scalar::q_power(-2));
    // Product with matching middle slots and equal weights: no phase.
    CHECK(e_matrix(0, 4) * e_matrix(4, 2) == e_matrix(0, 2));
    // Mismatch annihilates.
    CHECK((e_matrix(0, 1) * e_matrix(2, 3)).is_zero());
}

TEST_CASE("named generator matrices") {
    CHECK(k_matrix(0).trace().is_zero());
    // K_{10} = E_{15} - E_{53}.
    CHECK(k_matrix(2 + root_position({1, 0})) == (e_matrix(0, 4) - e_matrix(4, 2)));
    // Classical limit of K_{11} is the elementary difference E14 - E23.
    PhasedMatrix k11 = k_matrix(2 + root_position({1, 1}));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            BaseNumber want;
            if (i == 0 && j == 3) want = BaseNumber(1);
            if (i == 1 && j == 2) want = BaseNumber(-1);
            CHECK(k11.m[i][j].at_q_one() == want);
        }
}

TEST_CASE("Cartan action and self-bracket") {
    // [K1, K10] = K10.
    PhasedMatrix br = braided_matrix_bracket(k_matrix(0), k_matrix(2 + root_position({1, 0})));
    CHECK(br.m == k_matrix(2 + root_position({1, 0})).m);
    // [K_r, K_r] = 0.
    for (int i = 0; i < 10; ++i)
        CHECK(braided_matrix_bracket(k_matrix(i), k_matrix(i)).is_zero());
}

TEST_CASE("braided antisymmetry and Jacobi for matrices") {
    auto lam = [](int k) { return lambda_pow(k); };
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            PhasedMatrix ab = braided_matrix_bracket(k_matrix(i), k_matrix(j));
            PhasedMatrix ba = braided_matrix_bracket(k_matrix(j), k_matrix(i));
            PhasedMatrix want =
                (Scalar(BaseNumber(-1)) * lam(2 * wedge(k_matrix(i).weight, k_matrix(j).weight))) *
                ba;
            CHECK(ab.m == want.m);
        }
    std::uint64_t st = 3;
    for (int n = 0; n < 60; ++n) {
        int i = splitmix64(st) % 10, j = splitmix64(st) % 10, k = splitmix64(st) % 10;
        PhasedMatrix P = k_matrix(i), Q = k_matrix(j), R = k_matrix(k);
        PhasedMatrix lhs = braided_matrix_bracket(P, braided_matrix_bracket(Q, R));
        PhasedMatrix rhs1 = braided_matrix_bracket(braided_matrix_bracket(P, Q), R);
        PhasedMatrix rhs2 = braided_matrix_bracket(Q, braided_matrix_bracket(P, R));
        PhasedMatrix rhs = rhs1 + lam(2 * wedge(P.weight, Q.weight)) * rhs2;
        CHECK(lhs.m == rhs.m);
    }
}

TEST_CASE("appendix verification report") {
    Report rep = verify_matrixrep(struct_constants());
    for (auto& r : rep.records) {
        CAPTURE(r.id);
        CAPTURE(r.lhs_nf);
        CHECK(r.passed());
    }
    CHECK(rep.records.size() >= 7);
}
