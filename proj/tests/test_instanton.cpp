#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidnc/instanton_suite.hpp>

using namespace braidnc;

namespace {
const InstantonInstance& I() { return instanton(); }
} // namespace

TEST_CASE("structure constants close so(5) with unit coefficients") {
    for (auto& r : root_list())
        for (auto& s : root_list()) {
            Root sum{r.first + s.first, r.second + s.second};
            bool is_root = false;
            for (auto& t : root_list()) is_root |= (t == sum);
            int n = I().structure_constant(r, s);
            if (is_root)
                CHECK((n == 1 || n == -1));
            else
                CHECK(n == 0);
        }
}

TEST_CASE("verticality residuals") {
    // residuals(K1) vanish; residuals(E10) has base component -(1/sqrt2) alpha
    // in the x slot.
    auto res = I().verticality_residuals(I().K(1));
    for (auto& e : res) CHECK(e.is_zero());
    auto rese = I().verticality_residuals(OperatorExpr(I().E.at({1, 0})));
    Element want = normal_form(Scalar(-BaseNumber::inv_sqrt2()) * I().alpha);
    CHECK(rese[4] == want);
    CHECK(!rese[4].is_zero());
    // Module closure: scaled gauge fields stay vertical.
    auto resb = I().verticality_residuals(module_scale(I().beta, I().W({1, 1})));
    for (auto& e : resb) CHECK(e.is_zero());
}

TEST_CASE("restriction matrices reproduce the field action") {
    std::uint64_t st = 91;
    const Presentation& p = I().cl();
    std::vector<Element> pool = {I().alpha, I().beta, I().alpha_s, I().beta_s, I().xx,
                                 Element::unit(p)};
    for (int trial = 0; trial < 6; ++trial) {
        std::array<Element, 10> b;
        for (auto& e : b) e = pool[splitmix64(st) % pool.size()];
        OperatorExpr X = I().equivariant_field(b);
        auto M = I().restriction_matrix_total(b);
        for (int i = 0; i < 4; ++i) {
            Element want(&p);
            for (int j = 0; j < 4; ++j) want += M[i][j] * Element::gen(p, j);
            CHECK(equals(apply_gen(X, i), want).equal());
        }
        auto Mpi = I().restriction_matrix_base(b);
        auto base = I().base_elements(false);
        for (int i = 0; i < 5; ++i) {
            Element want(&p);
            for (int j = 0; j < 5; ++j) want += Mpi[i][j] * base[j];
            CHECK(equals(apply(X, base[i]), want).equal());
        }
    }
    // Zero coefficients give zero matrices.
    std::array<Element, 10> zero;
    for (auto& e : zero) e = Element::zero(p);
    for (auto& row : I().restriction_matrix_total(zero))
        for (auto& entry : row) CHECK(entry.is_zero());
    // Pure H1: base row of the restriction starts with the (1,0) coordinate.
    std::array<Element, 10> bh1;
    for (auto& e : bh1) e = Element::zero(p);
    bh1[0] = Element::unit(p);
    auto Mpi = I().restriction_matrix_base(bh1);
    CHECK(Mpi[0][0] == Element::unit(p));
    CHECK(equals(apply(I().equivariant_field(bh1), I().alpha), I().alpha).equal());
}

TEST_CASE("express_vertical certificates") {
    const Presentation& p = I().cl();
    Scalar two{BaseNumber(2)}, sq2{BaseNumber::sqrt2()};
    auto mkb = [&](std::initializer_list<std::pair<int, Element>> entries) {
        std::array<Element, 10> b;
        for (auto& e : b) e = Element::zero(p);
        for (auto& [i, v] : entries) b[i] = v;
        return b;
    };
    // K1 = 2x H2 + sqrt2 beta* E01 + sqrt2 beta E0-1.
    auto bK1 = mkb({{1, two * I().xx},
                    {2 + InstantonInstance::root_pos({0, 1}), sq2 * I().beta_s},
                    {2 + InstantonInstance::root_pos({0, -1}), sq2 * I().beta}});
    auto c = I().express_vertical(bK1);
    OperatorExpr recombined;
    for (int i = 0; i < 10; ++i) recombined = recombined + module_scale(c[i], I().KW[i]);
    CHECK(op_equals(I().equivariant_field(bK1), recombined).equal());

    // W11 = 2x E11 + sqrt2 alpha E01 - sqrt2 beta E10.
    auto bW11 = mkb({{2 + InstantonInstance::root_pos({1, 1}), two * I().xx},
                     {2 + InstantonInstance::root_pos({0, 1}), sq2 * I().alpha},
                     {2 + InstantonInstance::root_pos({1, 0}), -(sq2 * I().beta)}});
    auto cw = I().express_vertical(bW11);
    OperatorExpr rw;
    for (int i = 0; i < 10; ++i) rw = rw + module_scale(cw[i], I().KW[i]);
    CHECK(op_equals(I().equivariant_field(bW11), rw).equal());

    // b = 0 gives c = 0.
    std::array<Element, 10> zero;
    for (auto& e : zero) e = Element::zero(p);
    for (auto& e : I().express_vertical(zero)) CHECK(e.is_zero());

    // A non-vertical field is rejected.
    auto bbad = mkb({{0, Element::unit(p)}});
    CHECK_THROWS_AS(I().express_vertical(bbad), NotVertical);
}

TEST_CASE("coaction checks") {
    CHECK(I().coaction_check(OperatorExpr(I().H1)));
    CHECK(I().coaction_check(I().K(1)));
    CHECK(I().coaction_check(I().W({1, 1})));
    // The raw partial derivative z1 -> 1 is not equivariant.
    Derivation d1("d/dz1", Grade{-1, 1, 0, 0}, I().cl());
    d1.values[0] = Element::unit(I().cl());
    CHECK(!I().coaction_check(as_op(d1)));
}

TEST_CASE("full instanton suite passes") {
    Report rep = run_instanton_suite();
    int fails = 0;
    for (auto& r : rep.records)
        if (!r.passed()) {
            ++fails;
            if (fails <= 10)
                MESSAGE(r.id, ": ", r.status, " [", r.path, "] ", r.detail, " lhs=", r.lhs_nf,
                        " rhs=", r.rhs_nf);
        }
    CHECK(fails == 0);
    CHECK(rep.records.size() > 200);
    // Everything at desk scale should close symbolically or by exact rank.
    for (auto& r : rep.records) CHECK(r.path != "numeric");
}
