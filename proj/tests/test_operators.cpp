#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <braidnc/instanton.hpp>
#include <braidnc/report.hpp>

using namespace braidnc;

namespace {

const InstantonInstance& I() { return instanton(); }

Element random_homogeneous(const Presentation& p, std::uint64_t& st, int max_deg = 2) {
    Monomial m;
    int d = 1 + static_cast<int>(splitmix64(st) % max_deg);
    for (int k = 0; k < d; ++k)
        m.idx.push_back(static_cast<std::uint8_t>(splitmix64(st) % p.num_generators()));
    std::sort(m.idx.begin(), m.idx.end());
    Element e(&p);
    e.add_term(m, Scalar::q_power(static_cast<int>(splitmix64(st) % 3) - 1,
                                  BaseNumber(1 + static_cast<long>(splitmix64(st) % 4))));
    return e;
}

OperatorExpr pick_operator(std::uint64_t& st, bool twisted) {
    int i = static_cast<int>(splitmix64(st) % 10);
    return twisted ? I().KWt[i] : I().KW[i];
}

} // namespace

TEST_CASE("application agrees with hand values") {
    const Presentation& p = I().cl();
    // K1(z1) = -x z1 + beta* z4
    Element want = normal_form(-(I().xx * Element::gen(p, 0)) +
                               I().beta_s * Element::gen(p, 3));
    CHECK(apply_gen(I().K(1), 0) == want);
    // W[1,1](z4) = 0
    CHECK(apply_gen(I().W({1, 1}), 3).is_zero());
    // H1 kills z1 z2 (weights cancel).
    Element z1z2 = Element::gen(p, 0) * Element::gen(p, 1);
    CHECK(apply(OperatorExpr(I().H1), z1z2).is_zero());
}

TEST_CASE("braided Leibniz rule for base derivations") {
    std::uint64_t st = 7;
    std::vector<std::pair<const Presentation*, bool>> cases = {{&I().cl(), false},
                                                               {&I().tw(), true}};
    for (auto [p, twisted] : cases) {
        for (int k = 0; k < 120; ++k) {
            DerivationPtr X;
            int pick = static_cast<int>(splitmix64(st) % 10);
            if (pick == 0)
                X = twisted ? I().H1t : I().H1;
            else if (pick == 1)
                X = twisted ? I().H2t : I().H2;
            else {
                Root r = root_list()[pick - 2];
                X = twisted ? I().Et.at(r) : I().E.at(r);
            }
            Element a = random_homogeneous(*p, st);
            Element b = random_homogeneous(*p, st);
            Grade ga = *a.grade();
            Element lhs = normal_form(apply_raw(*X, a * b));
            Element rhs = normal_form(apply_raw(*X, a) * b +
                                      Scalar::q_power(p->swap_phase(X->grade, ga)) *
                                          (a * apply_raw(*X, b)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("module scaling") {
    const Presentation& t = I().tw();
    Element z3 = Element::gen(t, 2);
    OperatorExpr scaled = module_scale(I().alpha_h, I().W({1, 1}, true));
    CHECK(apply(scaled, z3) == normal_form(I().alpha_h * apply(I().W({1, 1}, true), z3)));
    // Unit and zero scalings.
    OperatorExpr unit_scaled = module_scale(Element::unit(t), I().W({1, 0}, true));
    CHECK(op_equals(unit_scaled, I().W({1, 0}, true)).equal());
    OperatorExpr zero_scaled = module_scale(Element::zero(t), I().W({1, 0}, true));
    CHECK(apply(zero_scaled, z3).is_zero());
}

TEST_CASE("braided antisymmetry of the bracket") {
    std::uint64_t st = 15;
    for (bool twisted : {false, true}) {
        const Presentation& p = twisted ? I().tw() : I().cl();
        for (int k = 0; k < 60; ++k) {
            OperatorExpr P = pick_operator(st, twisted);
            OperatorExpr Q = pick_operator(st, twisted);
            Grade gp = *P.grade(), gq = *Q.grade();
            Derivation pq = bracket(P, Q);
            Derivation qp = bracket(Q, P);
            Scalar ph = Scalar::q_power(p.swap_phase(gp, gq));
            for (std::size_t g = 0; g < p.num_generators(); ++g)
                CHECK(pq.values[g] == normal_form(-(ph * qp.values[g])));
        }
    }
}

TEST_CASE("braided Jacobi identity") {
    std::uint64_t st = 19;
    auto jacobi_case = [&](const OperatorExpr& P, const OperatorExpr& Q,
                           const OperatorExpr& R, const Presentation& p) {
        Grade gp = *P.grade(), gq = *Q.grade();
        OperatorExpr qr = as_op(bracket(Q, R));
        OperatorExpr pq = as_op(bracket(P, Q));
        OperatorExpr pr = as_op(bracket(P, R));
        Derivation lhs = bracket(P, qr);
        Derivation rhs1 = bracket(pq, R);
        Derivation rhs2 = bracket(Q, pr);
        Scalar ph = Scalar::q_power(p.swap_phase(gp, gq));
        for (std::size_t g = 0; g < p.num_generators(); ++g) {
            Element want = normal_form(rhs1.values[g] + ph * rhs2.values[g]);
            CHECK(lhs.values[g] == want);
        }
    };
    // Base so(5) triples, classical and deformed.
    for (bool twisted : {false, true}) {
        const Presentation& p = twisted ? I().tw() : I().cl();
        std::vector<OperatorExpr> basis;
        basis.emplace_back(twisted ? I().H1t : I().H1);
        basis.emplace_back(twisted ? I().H2t : I().H2);
        for (auto& r : root_list()) basis.emplace_back(twisted ? I().Et.at(r) : I().E.at(r));
        for (int k = 0; k < 60; ++k) {
            auto& P = basis[splitmix64(st) % basis.size()];
            auto& Q = basis[splitmix64(st) % basis.size()];
            auto& R = basis[splitmix64(st) % basis.size()];
            jacobi_case(P, Q, R, p);
        }
    }
    // Gauge triples.
    for (bool twisted : {false, true}) {
        const Presentation& p = twisted ? I().tw() : I().cl();
        for (int k = 0; k < 25; ++k) {
            OperatorExpr P = pick_operator(st, twisted);
            OperatorExpr Q = pick_operator(st, twisted);
            OperatorExpr R = pick_operator(st, twisted);
            jacobi_case(P, Q, R, p);
        }
    }
}

TEST_CASE("Cartan weight bookkeeping on gauge generators") {
    for (bool twisted : {false, true}) {
        auto H1op = OperatorExpr(twisted ? I().H1t : I().H1);
        auto H2op = OperatorExpr(twisted ? I().H2t : I().H2);
        for (int j = 1; j <= 2; ++j) {
            Derivation d = bracket(j == 1 ? H1op : H2op, I().K(j == 1 ? 2 : 1, twisted));
            CHECK(d.values_all_zero());
        }
        for (auto& r : root_list()) {
            const OperatorExpr& W = I().W(r, twisted);
            Derivation d1 = bracket(H1op, W);
            Derivation d2 = bracket(H2op, W);
            CHECK(op_equals(as_op(d1), Scalar(BaseNumber(r.first)) * W).equal());
            CHECK(op_equals(as_op(d2), Scalar(BaseNumber(r.second)) * W).equal());
        }
    }
}

TEST_CASE("star fixes the Cartan gauge pair and swaps the root vectors") {
    for (bool twisted : {false, true}) {
        CHECK(op_equals(star_op(I().K(1, twisted)), I().K(1, twisted)).equal());
        CHECK(op_equals(star_op(I().K(2, twisted)), I().K(2, twisted)).equal());
        for (auto& r : root_list()) {
            Root mr{-r.first, -r.second};
            CHECK(op_equals(star_op(I().W(r, twisted)), I().W(mr, twisted)).equal());
        }
    }
    // Base derivations: E_r* = E_{-r}, H_j* = H_j.
    for (auto& r : root_list()) {
        Root mr{-r.first, -r.second};
        CHECK(op_equals(as_op(star_derivation(*I().E.at(r))), OperatorExpr(I().E.at(mr)))
                  .equal());
        CHECK(op_equals(as_op(star_derivation(*I().Et.at(r))), OperatorExpr(I().Et.at(mr)))
                  .equal());
    }
}

TEST_CASE("star is involutive on module expressions") {
    std::uint64_t st = 23;
    for (bool twisted : {false, true}) {
        const Presentation& p = twisted ? I().tw() : I().cl();
        for (int k = 0; k < 60; ++k) {
            OperatorExpr P = pick_operator(st, twisted);
            Element b = random_homogeneous(p, st);
            OperatorExpr bP = module_scale(b, P);
            CHECK(op_equals(star_op(star_op(bP)), bP).equal());
        }
    }
}

TEST_CASE("star is a bracket antihomomorphism") {
    std::uint64_t st = 27;
    for (bool twisted : {false, true}) {
        for (int k = 0; k < 45; ++k) {
            OperatorExpr P = pick_operator(st, twisted);
            OperatorExpr Q = pick_operator(st, twisted);
            Derivation lhs_table = bracket(P, Q);
            OperatorExpr lhs = star_op(as_op(lhs_table));
            Derivation rhs = bracket(star_op(Q), star_op(P));
            CHECK(op_equals(lhs, as_op(rhs)).equal());
        }
    }
}

TEST_CASE("twist transport of base derivations") {
    // Grade-zero fields transport unchanged.
    Derivation h1t = twist_derivation(*I().H1, I().tw());
    for (int g = 0; g < 8; ++g)
        CHECK(h1t.values[g] == normal_form(transport(I().H1->values[g], I().tw())));
    // E[1,1] on z3: the phase vanishes.
    CHECK(apply_gen(OperatorExpr(I().Et.at({1, 1})), 2) ==
          Element::gen(I().tw(), 3, Scalar(-1)));
    // E[1,0] on z2 picks up q^-1.
    CHECK(apply_gen(OperatorExpr(I().Et.at({1, 0})), 1) ==
          Element::gen(I().tw(), 3, Scalar::q_power(-1, -BaseNumber::inv_sqrt2())));
}

TEST_CASE("deformed action law on homogeneous elements") {
    // W~_r(a_s) = q^{B(g_r, g_s)/2} W_r(a_s) through the identification.
    std::uint64_t st = 33;
    const Presentation& t = I().tw();
    for (int k = 0; k < 80; ++k) {
        int i = static_cast<int>(splitmix64(st) % 10);
        Element a = random_homogeneous(t, st);
        Grade ga = *a.grade();
        Grade gw = *I().KWt[i].grade();
        int b = t.swap_phase(gw, ga);
        REQUIRE(b % 2 == 0);
        Element lhs = transport(apply(I().KWt[i], a), I().cl());
        Element rhs = normal_form(Scalar::q_power(b / 2) *
                                  apply(I().KW[i], transport(a, I().cl())));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("twist transport commutes with star") {
    for (auto& r : root_list()) {
        Derivation lhs = twist_derivation(star_derivation(*I().E.at(r)), I().tw());
        Derivation rhs = star_derivation(*I().Et.at(r));
        CHECK(op_equals(as_op(lhs), as_op(rhs)).equal());
    }
    Derivation lhs = twist_derivation(star_derivation(*I().H1), I().tw());
    CHECK(op_equals(as_op(lhs), as_op(star_derivation(*I().H1t))).equal());
}

TEST_CASE("module compatibility of the bracket") {
    std::uint64_t st = 37;
    // Classical: [a psi, b psi'] = a psi(b) psi' + a b [psi, psi']
    //                              - b psi'(a) psi.
    const Presentation& p = I().cl();
    for (int k = 0; k < 25; ++k) {
        OperatorExpr P = pick_operator(st, false);
        OperatorExpr Q = pick_operator(st, false);
        Element a = random_homogeneous(p, st, 1);
        Element b = random_homogeneous(p, st, 1);
        Derivation lhs = bracket(module_scale(a, P), module_scale(b, Q));
        OperatorExpr rhs = module_scale(normal_form(a * apply(P, b)), Q) +
                           module_scale(a * b, as_op(bracket(P, Q))) -
                           module_scale(normal_form(b * apply(Q, a)), P);
        CHECK(op_equals(as_op(lhs), rhs).equal());
    }
    // Deformed general law on homogeneous coefficients:
    // [a P, b Q] = (a P(b)) Q + q^{B(gP,gb)} (a b) [P,Q]
    //              - q^{B(ga+gP, gb+gQ)} (b Q(a)) P.
    const Presentation& t = I().tw();
    for (int k = 0; k < 25; ++k) {
        OperatorExpr P = pick_operator(st, true);
        OperatorExpr Q = pick_operator(st, true);
        Element a = random_homogeneous(t, st, 1);
        Element b = random_homogeneous(t, st, 1);
        Grade gp = *P.grade(), gq = *Q.grade();
        Grade ga = *a.grade(), gb = *b.grade();
        Derivation lhs = bracket(module_scale(a, P), module_scale(b, Q));
        Scalar ph_mid = Scalar::q_power(t.swap_phase(gp, gb));
        Scalar ph_last = Scalar::q_power(t.swap_phase(ga + gp, gb + gq));
        OperatorExpr rhs = module_scale(normal_form(a * apply(P, b)), Q) +
                           module_scale(ph_mid * (a * b), as_op(bracket(P, Q))) -
                           module_scale(ph_last * (b * apply(Q, a)), P);
        CHECK(op_equals(as_op(lhs), rhs).equal());
    }
    // On base coefficients the vertical operators kill the outer terms and
    // the compatibility collapses to [a P, b Q] = q^{B(gP,gb)} (a b) [P,Q].
    std::vector<Element> base_t = {I().alpha_h, I().beta_h, I().alpha_h_s, I().beta_h_s,
                                   I().xx_t};
    for (int k = 0; k < 25; ++k) {
        OperatorExpr P = pick_operator(st, true);
        OperatorExpr Q = pick_operator(st, true);
        const Element& a = base_t[splitmix64(st) % base_t.size()];
        const Element& b = base_t[splitmix64(st) % base_t.size()];
        Grade gp = *P.grade(), gb = *b.grade();
        Derivation lhs = bracket(module_scale(a, P), module_scale(b, Q));
        Scalar ph = Scalar::q_power(t.swap_phase(gp, gb));
        OperatorExpr rhs = module_scale(ph * (a * b), as_op(bracket(P, Q)));
        CHECK(op_equals(as_op(lhs), rhs).equal());
    }
}

TEST_CASE("report helpers") {
    auto rec = op_check(I().W({1, 1}), I().W({1, 1}));
    CHECK(rec.status == "pass");
    CHECK(std::string(rec.path) == "symbolic");
    auto bad = op_check(I().W({1, 1}), I().W({1, 0}));
    CHECK(bad.status == "fail");
}
