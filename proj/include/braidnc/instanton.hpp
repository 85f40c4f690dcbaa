#pragma once

#include "equality.hpp"
#include "so5_roots.hpp"

#include <array>
#include <map>
#include <memory>
#include <vector>

namespace braidnc {

/// Orients a vanishing combination into a rewrite rule that eliminates its
/// largest monomial; the leading coefficient must be a unit.
inline void add_oriented_rule(Presentation& p, const Element& eq) {
    if (eq.is_zero()) throw ValidationError(p.name() + ": empty relation");
    const Monomial& lead = eq.leading_monomial();
    Scalar inv = eq.leading_coeff().inverse_single();
    Element::TermMap rhs;
    for (auto& [m, c] : eq.terms()) {
        if (m == lead) continue;
        rhs.emplace(m, -(inv * c));
    }
    std::map<Monomial, Scalar, MonomialLess> rhs_map(rhs.begin(), rhs.end());
    p.add_rule_raw(lead, std::move(rhs_map));
}

/// Gaussian elimination of quadratic relations: repeatedly pivot on the
/// globally largest leading monomial, reduce the rest, and orient.  Pivot
/// coefficients must be units of the scalar ring (they are, for both sphere
/// presentations).
inline void install_rules(Presentation& p, std::vector<Element> eqs) {
    for (;;) {
        int best = -1;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (eqs[i].is_zero()) continue;
            if (best < 0 ||
                MonomialLess{}(eqs[best].leading_monomial(), eqs[i].leading_monomial()))
                best = static_cast<int>(i);
        }
        if (best < 0) break;
        Element pivot = eqs[best];
        const Monomial lead = pivot.leading_monomial();
        Scalar inv = pivot.leading_coeff().inverse_single();
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (static_cast<int>(i) == best || eqs[i].is_zero()) continue;
            auto it = eqs[i].terms().find(lead);
            if (it != eqs[i].terms().end()) eqs[i] -= (it->second * inv) * pivot;
        }
        add_oriented_rule(p, pivot);
        eqs[best] = Element(&p);
    }
}

/// The SU(2) Hopf fibration instance over the deformed 4-sphere: classical
/// and twisted 7-sphere presentations, the embedded base, the equivariant
/// derivations, the vertical (gauge) generators, and the verified bracket
/// catalogs.
class InstantonInstance {
public:
    InstantonInstance() { build(); }

    // --- presentations -----------------------------------------------------
    const Presentation& cl() const { return *cl_; }
    const Presentation& tw() const { return *tw_; }
    const Presentation& ext() const { return *ext_; }

    // --- embedded base -----------------------------------------------------
    Element alpha, beta, xx, alpha_s, beta_s;       // classical
    Element alpha_h, beta_h, xx_t, alpha_h_s, beta_h_s;  // twisted

    // --- base derivations --------------------------------------------------
    DerivationPtr H1, H2, H1t, H2t;
    std::map<Root, DerivationPtr> E, Et;

    // --- gauge generators, indices via gauge_name --------------------------
    // KW/KWt are module combinations over the base so(5) fields; G/Gt are
    // the same operators collapsed to named value tables (extensionally
    // equal, cheaper to apply, and renderable by name).
    std::array<OperatorExpr, 10> KW, KWt;
    std::array<DerivationPtr, 10> G, Gt;

    const OperatorExpr& K(int j, bool twisted = false) const {
        return twisted ? KWt[j - 1] : KW[j - 1];
    }
    const OperatorExpr& W(const Root& r, bool twisted = false) const {
        return (twisted ? KWt : KW)[2 + root_pos(r)];
    }
    OperatorExpr gauge_op(int i, bool twisted = false) const {
        return OperatorExpr((twisted ? Gt : G)[i]);
    }

    static int root_pos(const Root& r) { return root_position(r); }

    /// so(5) structure constants N_rs (0 when r+s is not a root), computed
    /// from the classical fields and cross-validated during the build.
    int structure_constant(const Root& r, const Root& s) const {
        return n_struct_[root_pos(r)][root_pos(s)];
    }

    // --- verified bracket catalogs ------------------------------------------
    // appc_[i][j] (i<j) is the classical bracket [G_i, G_j] as a module
    // expression; table2_ holds the deformed counterparts.  `pinned` marks
    // entries transcribed from the source tables, the rest are star-derived.
    struct CatalogEntry {
        OperatorExpr rhs;
        bool pinned = false;
    };
    const CatalogEntry& appc(int i, int j) const { return appc_.at({i, j}); }
    const CatalogEntry& table2(int i, int j) const { return table2_.at({i, j}); }

    // Extra bracket identities worked out in prose (beyond the tables).
    struct WorkedBracket {
        std::string id;
        int i, j;
        OperatorExpr rhs;
        bool twisted;
    };
    const std::vector<WorkedBracket>& worked_brackets() const { return worked_; }

    // Catalog rows whose listed form disagrees with the transport recipe:
    // each records the variant as listed and the recipe-consistent value, so
    // the suite can re-measure the discrepancy instead of hiding it.
    struct MeasuredRow {
        std::string id;
        int i, j;
        OperatorExpr listed;
        OperatorExpr derived;
        bool twisted;
    };
    const std::vector<MeasuredRow>& measured_rows() const { return measured_; }

    // --- action table of the ten gauge generators on z1..z4 -----------------
    const Element& action_table(int op, int gen) const { return table1_.at(op * 4 + gen); }
    /// Inline simplifications attached to four of the table entries.
    const std::map<std::pair<int, int>, Element>& action_table_simplified() const {
        return table1_simpl_;
    }

    // --- named special vectors ----------------------------------------------
    OperatorExpr X10, Y11;       // classical weight vectors of the module split
    std::array<OperatorExpr, 5> relations;  // the five vanishing combinations

    // --- coaction -----------------------------------------------------------
    const Element& coaction_of(int gen) const { return coaction_.at(gen); }

    /// Lifts a classical element across the index-identical embedding into
    /// the coaction extension.
    Element embed_ext(const Element& x) const {
        Element out(ext_.get());
        for (auto& [m, c] : x.terms()) out.add_term(m, c);
        return out;
    }

    /// Multiplicative extension of the coaction to polynomials (classical
    /// instance, so no reordering phases arise).
    Element coact(const Element& x) const {
        Element out(ext_.get());
        for (auto& [m, c] : x.terms()) {
            Element prod = Element::unit(*ext_, c);
            for (auto idx : m.idx) prod = prod * coaction_.at(idx);
            out += prod;
        }
        return normal_form(out);
    }

    /// True when delta(P(z)) == (P (x) id)(delta(z)) on every generator.
    bool coaction_check(const OperatorExpr& P, const OracleOptions& opt = {}) const {
        OperatorExpr pe = extend_operator(P);
        for (int a = 0; a < 8; ++a) {
            Element lhs = coact(apply_gen(P, a));
            Element rhs = apply(pe, coaction_.at(a));
            if (!equals(lhs, rhs, opt).equal()) return false;
        }
        return true;
    }

    /// Extends an operator on the 7-sphere to the coaction extension by zero
    /// on the structure-group coordinates.
    OperatorExpr extend_operator(const OperatorExpr& P) const {
        OperatorExpr out;
        for (auto& t : P.terms()) {
            auto d = std::make_shared<Derivation>(t.base->name + "^ext", t.base->grade, *ext_);
            for (int a = 0; a < 8; ++a) d->values[a] = embed_ext(t.base->values[a]);
            out = out + OperatorExpr(embed_ext(t.coeff), d);
        }
        return out;
    }

    // --- vertical algebra helpers -------------------------------------------
    std::array<Element, 5> base_elements(bool twisted = false) const {
        if (twisted) return {alpha_h, beta_h, alpha_h_s, beta_h_s, xx_t};
        return {alpha, beta, alpha_s, beta_s, xx};
    }

    std::array<Element, 5> verticality_residuals(const OperatorExpr& P,
                                                 bool twisted = false) const {
        auto base = base_elements(twisted);
        std::array<Element, 5> out;
        for (int k = 0; k < 5; ++k) out[k] = apply(P, base[k]);
        return out;
    }

    /// The equivariant field with the given coefficients: b1 H1 + b2 H2 +
    /// sum_r b_r E_r (classical).
    OperatorExpr equivariant_field(const std::array<Element, 10>& b) const {
        OperatorExpr X(b[0], H1);
        X = X + OperatorExpr(b[1], H2);
        for (int k = 0; k < 8; ++k) X = X + OperatorExpr(b[2 + k], E.at(root_list()[k]));
        return X;
    }

    /// 4x4 matrix of the field on the z-column, and the 5x5 matrix of its
    /// restriction to the base column (alpha, beta, alpha*, beta*, x).
    std::array<std::array<Element, 4>, 4> restriction_matrix_total(
        const std::array<Element, 10>& b) const;
    std::array<std::array<Element, 5>, 5> restriction_matrix_base(
        const std::array<Element, 10>& b) const;

    /// Closed-form coefficients expressing a vertical field over the gauge
    /// generators, with an extensional certificate left to the caller.
    std::array<Element, 10> express_vertical(const std::array<Element, 10>& b) const;

    const Element& one_cl() const { return one_cl_; }

private:
    std::shared_ptr<Presentation> cl_, tw_, ext_;
    std::array<int, 8> star_root_;  // index of -r per root position
    int n_struct_[8][8] = {};
    std::map<std::pair<int, int>, CatalogEntry> appc_, table2_;
    std::vector<WorkedBracket> worked_;
    std::vector<MeasuredRow> measured_;
    std::vector<Element> table1_;
    std::map<std::pair<int, int>, Element> table1_simpl_;
    std::vector<Element> coaction_;
    Element one_cl_;

    void build();
    void build_presentations();
    void build_derivations();
    void build_gauge();
    void build_table1();
    void build_appc_catalog();
    void build_table2_catalog();
    void build_coaction();
    void validate();

    static int star_gauge_index(int i) {
        if (i < 2) return i;
        Root r = root_list()[i - 2];
        return 2 + root_pos({-r.first, -r.second});
    }

    /// Star of a module expression over the named gauge tables, with the
    /// result again over named tables:  (c . G)* = q^{-B(g_c,g_G)} c* . G*.
    OperatorExpr star_gauge_expr(const OperatorExpr& P, bool twisted) const {
        const auto& gens = twisted ? Gt : G;
        OperatorExpr out;
        for (auto& t : P.terms()) {
            if (t.coeff.is_zero()) continue;
            int k = -1;
            for (int i = 0; i < 10; ++i)
                if (t.base == gens[i]) k = i;
            if (k < 0) throw ValidationError("star_gauge_expr: unnamed base");
            DerivationPtr target = gens[star_gauge_index(k)];
            const Presentation& p = *t.base->pres;
            std::map<std::array<int, 4>, Element> parts;
            for (auto& [m, c] : t.coeff.terms()) {
                Grade g = p.grade_of_monomial(m);
                auto& e = parts[{g.l1, g.l2, g.r1, g.r2}];
                if (!e.presentation()) e = Element(&p);
                e.add_term(m, c);
            }
            for (auto& [key, b] : parts) {
                Grade gb{key[0], key[1], key[2], key[3]};
                int phi = -p.swap_phase(gb, t.base->grade);
                out = out + OperatorExpr(Scalar::q_power(phi) * b.star(), target);
            }
        }
        return out;
    }

    Element g(const Presentation& p, int i) const { return Element::gen(p, i); }
};

// ---------------------------------------------------------------------------

inline void InstantonInstance::build_presentations() {
    // Doubled left-torus weights of z1..z4; conjugates carry the negatives.
    const std::array<Grade, 4> gz = {Grade{1, -1, 0, 0}, Grade{-1, 1, 0, 0},
                                     Grade{-1, -1, 0, 0}, Grade{1, 1, 0, 0}};
    auto gens = [&](bool extended) {
        std::vector<GeneratorInfo> v;
        for (int a = 0; a < 4; ++a)
            v.push_back({"z" + std::to_string(a + 1), gz[a], a + 4});
        for (int a = 0; a < 4; ++a)
            v.push_back({"z" + std::to_string(a + 1) + "c", -gz[a], a});
        if (extended) {
            v.push_back({"w1", Grade{}, 10});
            v.push_back({"w2", Grade{}, 11});
            v.push_back({"w1c", Grade{}, 8});
            v.push_back({"w2c", Grade{}, 9});
        }
        return v;
    };
    cl_ = std::make_shared<Presentation>("s7", gens(false), PhaseForm{0, 0});
    tw_ = std::make_shared<Presentation>("s7t", gens(false), PhaseForm{-1, 0});
    ext_ = std::make_shared<Presentation>("s7ext", gens(true), PhaseForm{0, 0});

    for (Presentation* p : {cl_.get(), tw_.get(), ext_.get()}) {
        Element sphere(p);
        for (int a = 0; a < 4; ++a)
            sphere += Element::gen(*p, a) * Element::gen(*p, a + 4);
        sphere -= Element::unit(*p);
        install_rules(*p, {sphere});
    }
    {   // unit length of the structure-group coordinates
        Element wrel(ext_.get());
        wrel += Element::gen(*ext_, 8) * Element::gen(*ext_, 10);
        wrel += Element::gen(*ext_, 9) * Element::gen(*ext_, 11);
        wrel -= Element::unit(*ext_);
        install_rules(*ext_, {wrel});
    }
}

inline void InstantonInstance::build_derivations() {
    auto mk = [&](const Presentation& p, const std::string& name, Grade gr,
                  std::initializer_list<std::pair<int, Element>> vals) {
        auto d = std::make_shared<Derivation>(name, gr, p);
        for (auto& [i, v] : vals) d->values[i] = v;
        return d;
    };
    const Presentation& p = *cl_;
    Scalar half{BaseNumber::half()};
    Scalar isq{BaseNumber::inv_sqrt2()};
    auto zg = [&](int i, Scalar c) { return Element::gen(p, i, std::move(c)); };

    H1 = mk(p, "H1", Grade{},
            {{0, zg(0, half)}, {1, zg(1, -half)}, {2, zg(2, -half)}, {3, zg(3, half)},
             {4, zg(4, -half)}, {5, zg(5, half)}, {6, zg(6, half)}, {7, zg(7, -half)}});
    H2 = mk(p, "H2", Grade{},
            {{0, zg(0, -half)}, {1, zg(1, half)}, {2, zg(2, -half)}, {3, zg(3, half)},
             {4, zg(4, half)}, {5, zg(5, -half)}, {6, zg(6, half)}, {7, zg(7, -half)}});

    auto rg = [](const Root& r) { return Grade{2 * r.first, 2 * r.second, 0, 0}; };
    E[{1, 0}] = mk(p, "E[1,0]", rg({1, 0}),
                   {{2, zg(0, isq)}, {4, zg(6, -isq)}, {1, zg(3, -isq)}, {7, zg(5, isq)}});
    E[{-1, 0}] = mk(p, "E[-1,0]", rg({-1, 0}),
                    {{0, zg(2, isq)}, {6, zg(4, -isq)}, {3, zg(1, -isq)}, {5, zg(7, isq)}});
    E[{0, 1}] = mk(p, "E[0,1]", rg({0, 1}),
                   {{2, zg(1, isq)}, {5, zg(6, -isq)}, {0, zg(3, isq)}, {7, zg(4, -isq)}});
    E[{0, -1}] = mk(p, "E[0,-1]", rg({0, -1}),
                    {{3, zg(0, isq)}, {4, zg(7, -isq)}, {1, zg(2, isq)}, {6, zg(5, -isq)}});
    E[{1, 1}] = mk(p, "E[1,1]", rg({1, 1}), {{2, zg(3, Scalar(-1))}, {7, zg(6, Scalar(1))}});
    E[{-1, -1}] =
        mk(p, "E[-1,-1]", rg({-1, -1}), {{6, zg(7, Scalar(1))}, {3, zg(2, Scalar(-1))}});
    E[{1, -1}] = mk(p, "E[1,-1]", rg({1, -1}), {{1, zg(0, Scalar(-1))}, {4, zg(5, Scalar(1))}});
    E[{-1, 1}] = mk(p, "E[-1,1]", rg({-1, 1}), {{0, zg(1, Scalar(-1))}, {5, zg(4, Scalar(1))}});

    // Deformed images along the twist.
    H1t = std::make_shared<Derivation>(twist_derivation(*H1, *tw_));
    H2t = std::make_shared<Derivation>(twist_derivation(*H2, *tw_));
    for (auto& r : root_list())
        Et[r] = std::make_shared<Derivation>(twist_derivation(*E.at(r), *tw_));
}

inline void InstantonInstance::build_gauge() {
    const Presentation& p = *cl_;
    // Coinvariant base, embedded in the z-polynomials.
    alpha = Element(&p);
    alpha.add_term(Monomial{{0, 6}}, Scalar(2));
    alpha.add_term(Monomial{{3, 5}}, Scalar(2));
    beta = Element(&p);
    beta.add_term(Monomial{{1, 6}}, Scalar(2));
    beta.add_term(Monomial{{3, 4}}, Scalar(-2));
    xx = Element(&p);
    xx.add_term(Monomial{{0, 4}}, Scalar(1));
    xx.add_term(Monomial{{1, 5}}, Scalar(1));
    xx.add_term(Monomial{{2, 6}}, Scalar(-1));
    xx.add_term(Monomial{{3, 7}}, Scalar(-1));
    alpha_s = alpha.star();
    beta_s = beta.star();
    one_cl_ = Element::unit(p);

    // Deformed base: the same coordinate formulas multiplied with the
    // deformed product.
    const Presentation& t = *tw_;
    alpha_h = Scalar(2) * (g(t, 0) * g(t, 6) + g(t, 5) * g(t, 3));
    beta_h = Scalar(2) * (g(t, 1) * g(t, 6) - g(t, 4) * g(t, 3));
    xx_t = g(t, 0) * g(t, 4) + g(t, 1) * g(t, 5) - g(t, 2) * g(t, 6) - g(t, 3) * g(t, 7);
    alpha_h_s = alpha_h.star();
    beta_h_s = beta_h.star();

    Scalar two{BaseNumber(2)}, sq2{BaseNumber::sqrt2()};
    auto Wexp = [&](std::initializer_list<std::pair<Element, DerivationPtr>> terms) {
        OperatorExpr o;
        for (auto& [c, d] : terms) o = o + OperatorExpr(c, d);
        return o;
    };

    KW[0] = Wexp({{two * xx, H2}, {sq2 * beta_s, E.at({0, 1})}, {sq2 * beta, E.at({0, -1})}});
    KW[1] = Wexp({{two * xx, H1}, {sq2 * alpha_s, E.at({1, 0})}, {sq2 * alpha, E.at({-1, 0})}});
    auto setW = [&](const Root& r, OperatorExpr o) { KW[2 + root_pos(r)] = std::move(o); };
    setW({0, 1}, Wexp({{sq2 * beta, H1}, {sq2 * alpha_s, E.at({1, 1})}, {sq2 * alpha, E.at({-1, 1})}}));
    setW({0, -1}, Wexp({{sq2 * beta_s, H1}, {sq2 * alpha_s, E.at({1, -1})}, {sq2 * alpha, E.at({-1, -1})}}));
    setW({1, 0}, Wexp({{sq2 * alpha, H2}, {-(sq2 * beta_s), E.at({1, 1})}, {sq2 * beta, E.at({1, -1})}}));
    setW({-1, 0}, Wexp({{sq2 * alpha_s, H2}, {sq2 * beta_s, E.at({-1, 1})}, {-(sq2 * beta), E.at({-1, -1})}}));
    setW({1, 1}, Wexp({{two * xx, E.at({1, 1})}, {sq2 * alpha, E.at({0, 1})}, {-(sq2 * beta), E.at({1, 0})}}));
    setW({-1, -1}, Wexp({{two * xx, E.at({-1, -1})}, {sq2 * alpha_s, E.at({0, -1})}, {-(sq2 * beta_s), E.at({-1, 0})}}));
    setW({1, -1}, Wexp({{-(two * xx), E.at({1, -1})}, {sq2 * beta_s, E.at({1, 0})}, {sq2 * alpha, E.at({0, -1})}}));
    setW({-1, 1}, Wexp({{-(two * xx), E.at({-1, 1})}, {sq2 * beta, E.at({-1, 0})}, {sq2 * alpha_s, E.at({0, 1})}}));

    for (int i = 0; i < 10; ++i) KWt[i] = twist_op(KW[i], *tw_);

    auto collapse = [](const OperatorExpr& P, std::string nm) {
        auto d = std::make_shared<Derivation>(std::move(nm), *P.grade(), *P.presentation());
        for (std::size_t g = 0; g < d->values.size(); ++g)
            d->values[g] = apply_gen(P, static_cast<int>(g));
        return d;
    };
    for (int i = 0; i < 10; ++i) {
        G[i] = collapse(KW[i], gauge_name(i));
        Gt[i] = collapse(KWt[i], gauge_name(i, true));
    }

    // Weight vectors of the degree-one module split and the five vanishing
    // combinations among the gauge generators.
    auto Wc = [&](const Root& r) { return OperatorExpr(G[2 + root_pos(r)]); };
    OperatorExpr K1o(G[0]), K2o(G[1]);
    X10 = module_scale(beta_s, Wc({1, 1})) + module_scale(beta, Wc({1, -1})) -
          module_scale(alpha, K1o) + module_scale(sq2 * xx, Wc({1, 0}));
    Y11 = module_scale(sq2 * xx, Wc({1, 1})) + module_scale(alpha, Wc({0, 1})) -
          module_scale(beta, Wc({1, 0}));

    relations[0] = module_scale(beta, Wc({0, -1})) - module_scale(beta_s, Wc({0, 1})) +
                   module_scale(alpha, Wc({-1, 0})) - module_scale(alpha_s, Wc({1, 0}));
    relations[1] = -module_scale(beta, K2o) + module_scale(sq2 * xx, Wc({0, 1})) -
                   module_scale(alpha_s, Wc({1, 1})) + module_scale(alpha, Wc({-1, 1}));
    relations[2] = -module_scale(beta_s, K2o) + module_scale(sq2 * xx, Wc({0, -1})) -
                   module_scale(alpha, Wc({-1, -1})) + module_scale(alpha_s, Wc({1, -1}));
    relations[3] = -module_scale(alpha, K1o) + module_scale(sq2 * xx, Wc({1, 0})) +
                   module_scale(beta_s, Wc({1, 1})) + module_scale(beta, Wc({1, -1}));
    relations[4] = -module_scale(alpha_s, K1o) + module_scale(sq2 * xx, Wc({-1, 0})) +
                   module_scale(beta, Wc({-1, -1})) + module_scale(beta_s, Wc({-1, 1}));
}

inline void InstantonInstance::build_table1() {
    const Presentation& p = *cl_;
    auto zc = [&](int i) { return g(p, i); };
    Scalar isq{BaseNumber::inv_sqrt2()}, sq2{BaseNumber::sqrt2()}, two{BaseNumber(2)};
    auto row = [&](std::array<Element, 4> vals) {
        for (auto& v : vals) table1_.push_back(normal_form(v));
    };
    // K1
    row({-(xx * zc(0)) + beta_s * zc(3), xx * zc(1) + beta * zc(2),
         -(xx * zc(2)) + beta_s * zc(1), xx * zc(3) + beta * zc(0)});
    // K2
    row({xx * zc(0) + alpha * zc(2), -(xx * zc(1)) - alpha_s * zc(3),
         -(xx * zc(2)) + alpha_s * zc(0), xx * zc(3) - alpha * zc(1)});
    // W[1,0]
    row({-(isq * (alpha * zc(0))), isq * (alpha * zc(1)) - sq2 * (beta * zc(0)),
         -(isq * (alpha * zc(2))) + sq2 * (beta_s * zc(3)), isq * (alpha * zc(3))});
    // W[-1,0]
    row({-(isq * (alpha_s * zc(0))) - sq2 * (beta_s * zc(1)), isq * (alpha_s * zc(1)),
         -(isq * (alpha_s * zc(2))), isq * (alpha_s * zc(3)) + sq2 * (beta * zc(2))});
    // W[0,1]
    row({isq * (beta * zc(0)) - sq2 * (alpha * zc(1)), -(isq * (beta * zc(1))),
         -(isq * (beta * zc(2))) - sq2 * (alpha_s * zc(3)), isq * (beta * zc(3))});
    // W[0,-1]
    row({isq * (beta_s * zc(0)), -(isq * (beta_s * zc(1))) - sq2 * (alpha_s * zc(0)),
         -(isq * (beta_s * zc(2))), isq * (beta_s * zc(3)) - sq2 * (alpha * zc(2))});
    // W[1,1]
    row({alpha * zc(3), beta * zc(3), -(two * (xx * zc(3))) + alpha * zc(1) - beta * zc(0),
         Element(&p)});
    // W[-1,-1]
    row({-(beta_s * zc(2)), alpha_s * zc(2), Element(&p),
         -(two * (xx * zc(2))) + alpha_s * zc(0) + beta_s * zc(1)});
    // W[1,-1]
    row({Element(&p), two * (xx * zc(0)) - beta_s * zc(3) + alpha * zc(2), beta_s * zc(0),
         alpha * zc(0)});
    // W[-1,1]
    row({two * (xx * zc(1)) + beta * zc(2) + alpha_s * zc(3), Element(&p), alpha_s * zc(1),
         -(beta * zc(1))});

    // Inline simplifications printed alongside four of the entries.
    Element one = Element::unit(p);
    table1_simpl_[{2 + root_pos({1, 1}), 2}] = normal_form((one - xx) * zc(3));
    table1_simpl_[{2 + root_pos({-1, -1}), 3}] = normal_form((one - xx) * zc(2));
    table1_simpl_[{2 + root_pos({1, -1}), 1}] = normal_form((one + xx) * zc(0));
    table1_simpl_[{2 + root_pos({-1, 1}), 0}] = normal_form((one + xx) * zc(1));
}

inline void InstantonInstance::build_appc_catalog() {
    Scalar sq2{BaseNumber::sqrt2()}, two{BaseNumber(2)};
    auto Wc = [&](const Root& r) { return OperatorExpr(G[2 + root_pos(r)]); };
    OperatorExpr K1o(G[0]), K2o(G[1]);
    auto put = [&](int i, int j, OperatorExpr rhs) {
        appc_[{i, j}] = {std::move(rhs), true};
    };
    auto wix = [&](const Root& r) { return 2 + root_pos(r); };
    const Element &a = alpha, &as = alpha_s, &b = beta, &bs = beta_s, &x = xx;

    put(0, 1, module_scale(sq2 * as, Wc({1, 0})) - module_scale(sq2 * a, Wc({-1, 0})));
    put(0, wix({0, 1}),
        module_scale(-(sq2 * b), K2o) + module_scale(two * x, Wc({0, 1})));
    put(1, wix({0, 1}),
        module_scale(sq2 * as, Wc({1, 1})) + module_scale(sq2 * a, Wc({-1, 1})));
    put(0, wix({1, -1}),
        module_scale(-(two * x), Wc({1, -1})) + module_scale(sq2 * bs, Wc({1, 0})));
    put(1, wix({1, -1}),
        module_scale(two * x, Wc({1, -1})) - module_scale(sq2 * a, Wc({0, -1})));
    put(0, wix({1, 0}),
        module_scale(-(sq2 * bs), Wc({1, 1})) + module_scale(sq2 * b, Wc({1, -1})));
    put(1, wix({1, 0}), module_scale(two * x, Wc({1, 0})) - module_scale(sq2 * a, K1o));
    put(0, wix({1, 1}),
        module_scale(two * x, Wc({1, 1})) - module_scale(sq2 * b, Wc({1, 0})));
    put(1, wix({1, 1}),
        module_scale(two * x, Wc({1, 1})) + module_scale(sq2 * a, Wc({0, 1})));

    auto putw = [&](const Root& r, const Root& s, OperatorExpr rhs) {
        int i = wix(r), j = wix(s);
        if (i < j)
            appc_[{i, j}] = {std::move(rhs), true};
        else
            appc_[{j, i}] = {-std::move(rhs), true};  // classical antisymmetry
    };
    putw({0, 1}, {1, -1},
         module_scale(sq2 * b, Wc({1, -1})) + module_scale(sq2 * a, K2o - K1o));
    putw({-1, -1}, {0, 1},
         module_scale(sq2 * b, Wc({-1, -1})) - module_scale(sq2 * as, K1o + K2o));
    putw({0, 1}, {1, 0},
         module_scale(sq2 * b, Wc({1, 0})) - module_scale(sq2 * a, Wc({0, 1})));
    putw({-1, -1}, {1, -1}, module_scale(sq2 * bs, Wc({0, -1})));
    putw({0, 1}, {1, 1}, module_scale(sq2 * b, Wc({1, 1})));
    putw({-1, -1}, {1, 0},
         module_scale(sq2 * a, Wc({-1, -1})) + module_scale(sq2 * bs, K1o + K2o));
    putw({1, -1}, {1, 0}, module_scale(sq2 * a, Wc({1, -1})));
    putw({-1, -1}, {1, 1},
         module_scale(-(two * x), K1o + K2o) - module_scale(sq2 * a, Wc({-1, 0})) -
             module_scale(sq2 * b, Wc({0, -1})));
    putw({1, -1}, {1, 1}, -module_scale(sq2 * a, Wc({1, 0})));
    putw({-1, 0}, {0, 1},
         module_scale(sq2 * b, Wc({-1, 0})) + module_scale(sq2 * as, Wc({0, 1})));
    putw({1, 0}, {1, 1}, module_scale(sq2 * a, Wc({1, 1})));
    putw({-1, 0}, {1, -1},
         -module_scale(sq2 * as, Wc({1, -1})) + module_scale(sq2 * bs, K2o - K1o));
    putw({1, 0}, {-1, 0},
         module_scale(sq2 * bs, Wc({0, 1})) + module_scale(sq2 * b, Wc({0, -1})));
    putw({-1, 1}, {0, 1}, module_scale(sq2 * b, Wc({-1, 1})));
    // The listed form of this row carries the opposite overall sign; the
    // value below is the one reproduced by the action table (and confirmed
    // numerically), recorded as a measured discrepancy.
    putw({0, -1}, {0, 1},
         -(module_scale(sq2 * as, Wc({1, 0})) + module_scale(sq2 * a, Wc({-1, 0}))));
    measured_.push_back(
        {"appC.measured.W0m1W01", wix({0, -1}), wix({0, 1}),
         module_scale(sq2 * as, Wc({1, 0})) + module_scale(sq2 * a, Wc({-1, 0})),
         -(module_scale(sq2 * as, Wc({1, 0})) + module_scale(sq2 * a, Wc({-1, 0}))),
         false});
    putw({-1, 1}, {1, -1},
         module_scale(two * x, K1o - K2o) - module_scale(sq2 * bs, Wc({0, 1})) +
             module_scale(sq2 * a, Wc({-1, 0})));

    // Star-derived completions: [G_i*, G_j*] = ([G_j, G_i])* with K_j* = K_j
    // and W_r* = W_{-r}; classically [G_j, G_i] = -[G_i, G_j].
    auto star_index = [&](int i) {
        if (i < 2) return i;
        Root r = root_list()[i - 2];
        return wix({-r.first, -r.second});
    };
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            if (appc_.count({i, j})) continue;
            int si = star_index(i), sj = star_index(j);
            auto key = si < sj ? std::pair{si, sj} : std::pair{sj, si};
            auto it = appc_.find(key);
            if (it == appc_.end())
                throw ValidationError("bracket catalog: no source entry for " +
                                      gauge_name(i) + "," + gauge_name(j));
            // [G_i, G_j] = -([G_si, G_sj])* with the source sign fixed so the
            // starred pair appears in catalog order.
            OperatorExpr src = it->second.rhs;
            if (si > sj) src = -src;  // stored entry is [G_sj, G_si]
            appc_[{i, j}] = {-star_gauge_expr(src, false), false};
        }

    // Worked examples spelled out in prose.
    worked_.push_back({"appC.worked.K2W0m1", 1, wix({0, -1}),
                       -(module_scale(sq2 * as, Wc({1, -1})) +
                         module_scale(sq2 * a, Wc({-1, -1}))),
                       false});
    worked_.push_back({"appC.worked.W10W0m1", wix({1, 0}), wix({0, -1}),
                       -(module_scale(sq2 * bs, Wc({1, 0})) +
                         module_scale(sq2 * a, Wc({0, -1}))),
                       false});
}

inline void InstantonInstance::build_table2_catalog() {
    Scalar sq2{BaseNumber::sqrt2()}, two{BaseNumber(2)};
    auto q = [](int k) { return Scalar::q_power(k); };
    auto Wt = [&](const Root& r) { return OperatorExpr(Gt[2 + root_pos(r)]); };
    auto wix = [&](const Root& r) { return 2 + root_pos(r); };
    const Element &ah = alpha_h, &ahs = alpha_h_s, &bh = beta_h, &bhs = beta_h_s, &x = xx_t;
    OperatorExpr K1t(Gt[0]), K2t(Gt[1]);

    auto put = [&](int i, int j, OperatorExpr rhs) { table2_[{i, j}] = {std::move(rhs), true}; };

    // phase aliases: the base rescalings are ph_a = q, ph_b = q^-1.
    put(0, 1, module_scale(sq2 * q(-1) * ahs, Wt({1, 0})) -
                  module_scale(sq2 * q(1) * ah, Wt({-1, 0})));
    put(0, wix({0, 1}),
        -module_scale(sq2 * q(-1) * bh, K2t) + module_scale(two * x, Wt({0, 1})));
    put(0, wix({1, -1}), -module_scale(two * x, Wt({1, -1})) +
                             module_scale(sq2 * q(3) * bhs, Wt({1, 0})));
    put(0, wix({1, 0}), module_scale(sq2 * q(-3) * bh, Wt({1, -1})) -
                            module_scale(sq2 * q(3) * bhs, Wt({1, 1})));
    put(0, wix({1, 1}),
        module_scale(two * x, Wt({1, 1})) - module_scale(sq2 * q(-3) * bh, Wt({1, 0})));
    put(1, wix({0, 1}), module_scale(sq2 * q(-3) * ahs, Wt({1, 1})) +
                            module_scale(sq2 * q(3) * ah, Wt({-1, 1})));
    put(1, wix({1, -1}), module_scale(two * x, Wt({1, -1})) -
                             module_scale(sq2 * q(-1) * ah, Wt({0, -1})));
    put(1, wix({1, 0}),
        module_scale(two * x, Wt({1, 0})) - module_scale(sq2 * q(1) * ah, K1t));
    put(1, wix({1, 1}),
        module_scale(two * x, Wt({1, 1})) + module_scale(sq2 * q(3) * ah, Wt({0, 1})));

    auto putw = [&](const Root& r, const Root& s, OperatorExpr rhs) {
        int i = wix(r), j = wix(s);
        if (i < j) {
            table2_[{i, j}] = {std::move(rhs), true};
        } else {
            // braided antisymmetry: [P,Q] = -q^{B(gP,gQ)} [Q,P] with
            // B = -(2r)^(2s) = -4 r^s on the left torus.
            int bexp = tw_->form().bform(Grade{2 * r.first, 2 * r.second, 0, 0},
                                         Grade{2 * s.first, 2 * s.second, 0, 0});
            table2_[{j, i}] = {-(Scalar::q_power(-bexp) * rhs), true};
        }
    };
    putw({0, 1}, {1, -1}, module_scale(sq2 * q(-1) * bh, Wt({1, -1})) +
                              module_scale(sq2 * q(3) * ah, K2t - K1t));
    // Four of the root-root rows and the opposite-weight row below are listed
    // with phases that do not match the transport recipe the table itself is
    // built from; the recipe-consistent values are pinned here and the listed
    // variants are re-measured by dedicated checks.
    putw({0, 1}, {1, 0}, module_scale(sq2 * q(-1) * bh, Wt({1, 0})) -
                             module_scale(sq2 * q(5) * ah, Wt({0, 1})));
    measured_.push_back({"table2.measured.W01W10", wix({0, 1}), wix({1, 0}),
                         module_scale(sq2 * q(-1) * bh, Wt({1, 0})) -
                             module_scale(sq2 * q(3) * ah, Wt({0, 1})),
                         module_scale(sq2 * q(-1) * bh, Wt({1, 0})) -
                             module_scale(sq2 * q(5) * ah, Wt({0, 1})),
                         true});
    putw({0, 1}, {1, 1}, module_scale(sq2 * q(-1) * bh, Wt({1, 1})));
    putw({1, -1}, {1, 0}, module_scale(sq2 * q(-3) * ah, Wt({1, -1})));
    measured_.push_back({"table2.measured.W1m1W10", wix({1, -1}), wix({1, 0}),
                         module_scale(sq2 * q(1) * ah, Wt({1, -1})),
                         module_scale(sq2 * q(-3) * ah, Wt({1, -1})), true});
    putw({1, -1}, {1, 1}, -module_scale(sq2 * q(-3) * ah, Wt({1, 0})));
    measured_.push_back({"table2.measured.W1m1W11", wix({1, -1}), wix({1, 1}),
                         -module_scale(sq2 * q(-1) * ah, Wt({1, 0})),
                         -module_scale(sq2 * q(-3) * ah, Wt({1, 0})), true});
    putw({1, 0}, {1, 1}, module_scale(sq2 * q(1) * ah, Wt({1, 1})));
    putw({-1, -1}, {0, 1}, module_scale(sq2 * q(3) * bh, Wt({-1, -1})) -
                               module_scale(sq2 * q(1) * ahs, K1t + K2t));
    putw({-1, -1}, {1, -1}, module_scale(sq2 * q(-3) * bhs, Wt({0, -1})));
    putw({-1, -1}, {1, 0}, module_scale(sq2 * q(-3) * ah, Wt({-1, -1})) +
                               module_scale(sq2 * q(-1) * bhs, K1t + K2t));
    measured_.push_back({"table2.measured.Wm1m1W10", wix({-1, -1}), wix({1, 0}),
                         module_scale(sq2 * q(1) * ah, Wt({-1, -1})) +
                             module_scale(sq2 * q(3) * bhs, K1t + K2t),
                         module_scale(sq2 * q(-3) * ah, Wt({-1, -1})) +
                             module_scale(sq2 * q(-1) * bhs, K1t + K2t),
                         true});
    putw({-1, -1}, {1, 1},
         -module_scale(two * x, K1t + K2t) - module_scale(sq2 * q(1) * ah, Wt({-1, 0})) -
             module_scale(sq2 * q(-1) * bh, Wt({0, -1})));
    putw({-1, 0}, {0, 1}, module_scale(sq2 * q(3) * bh, Wt({-1, 0})) +
                              module_scale(sq2 * q(-1) * ahs, Wt({0, 1})));
    putw({-1, 0}, {1, -1}, -module_scale(sq2 * q(-1) * ahs, Wt({1, -1})) +
                               module_scale(sq2 * q(-1) * bhs, K2t - K1t));
    putw({1, 0}, {-1, 0}, module_scale(sq2 * q(1) * bhs, Wt({0, 1})) +
                              module_scale(sq2 * q(-1) * bh, Wt({0, -1})));
    putw({-1, 1}, {0, 1}, module_scale(sq2 * q(3) * bh, Wt({-1, 1})));
    putw({0, -1}, {0, 1}, -(module_scale(sq2 * q(-1) * ahs, Wt({1, 0})) +
                            module_scale(sq2 * q(1) * ah, Wt({-1, 0}))));
    measured_.push_back({"table2.measured.W0m1W01", wix({0, -1}), wix({0, 1}),
                         module_scale(sq2 * q(-1) * ahs, Wt({1, 0})) -
                             module_scale(sq2 * q(1) * ah, Wt({-1, 0})),
                         -(module_scale(sq2 * q(-1) * ahs, Wt({1, 0})) +
                           module_scale(sq2 * q(1) * ah, Wt({-1, 0}))),
                         true});
    putw({-1, 1}, {1, -1},
         module_scale(two * x, K1t - K2t) - module_scale(sq2 * q(1) * bhs, Wt({0, 1})) +
             module_scale(sq2 * q(1) * ah, Wt({-1, 0})));

    // Star-derived completions via [G_i*, G_j*] = ([G_j, G_i])_* and the
    // braided antisymmetry phase.
    auto star_index = [&](int i) {
        if (i < 2) return i;
        Root r = root_list()[i - 2];
        return wix({-r.first, -r.second});
    };
    auto op_grade = [&](int i) -> Grade {
        if (i < 2) return Grade{};
        Root r = root_list()[i - 2];
        return Grade{2 * r.first, 2 * r.second, 0, 0};
    };
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            if (table2_.count({i, j})) continue;
            int si = star_index(i), sj = star_index(j);
            auto key = si < sj ? std::pair{si, sj} : std::pair{sj, si};
            auto it = table2_.find(key);
            if (it == table2_.end())
                throw ValidationError("deformed catalog: no source entry for " +
                                      gauge_name(i, true) + "," + gauge_name(j, true));
            OperatorExpr src = it->second.rhs;  // [G_si, G_sj] or [G_sj, G_si]
            if (si > sj) {
                int bexp = tw_->form().bform(op_grade(sj), op_grade(si));
                src = -(Scalar::q_power(-bexp) * src);  // flip to [G_si, G_sj]
            }
            // [G_i, G_j] = -q^{B(g_i, g_j)} ([G_si, G_sj])* .
            int bexp_ij = tw_->form().bform(op_grade(i), op_grade(j));
            table2_[{i, j}] = {-(Scalar::q_power(bexp_ij) * star_gauge_expr(src, true)),
                               false};
        }

    // Worked deformed brackets written out in prose.
    worked_.push_back({"table2.worked.Wm1m1W01", wix({-1, -1}), wix({0, 1}),
                       module_scale(sq2 * q(3) * bh, Wt({-1, -1})) -
                           module_scale(sq2 * q(1) * ahs, K1t + K2t),
                       true});
    worked_.push_back({"table2.worked.K2W0m1", 1, wix({0, -1}),
                       -(module_scale(sq2 * q(-1) * ah, Wt({-1, -1})) +
                         module_scale(sq2 * q(1) * ahs, Wt({1, -1}))),
                       true});
    worked_.push_back({"table2.worked.W10W0m1", wix({1, 0}), wix({0, -1}),
                       -(module_scale(sq2 * q(5) * bhs, Wt({1, 0})) +
                         module_scale(sq2 * q(1) * ah, Wt({0, -1}))),
                       true});
}

inline void InstantonInstance::build_coaction() {
    const Presentation& e = *ext_;
    coaction_.assign(8, Element(&e));
    auto m2 = [&](int i, int j, int sign) {
        Monomial m;
        m.idx = {static_cast<std::uint8_t>(std::min(i, j)),
                 static_cast<std::uint8_t>(std::max(i, j))};
        return Element::monomial(e, std::move(m), Scalar(sign));
    };
    coaction_[0] = m2(0, 8, 1) + m2(5, 9, -1);
    coaction_[1] = m2(1, 8, 1) + m2(4, 9, 1);
    coaction_[2] = m2(2, 8, 1) + m2(7, 9, -1);
    coaction_[3] = m2(3, 8, 1) + m2(6, 9, 1);
    coaction_[4] = m2(4, 10, 1) + m2(1, 11, -1);
    coaction_[5] = m2(5, 10, 1) + m2(0, 11, 1);
    coaction_[6] = m2(6, 10, 1) + m2(3, 11, -1);
    coaction_[7] = m2(7, 10, 1) + m2(2, 11, 1);
}

inline std::array<std::array<Element, 4>, 4> InstantonInstance::restriction_matrix_total(
    const std::array<Element, 10>& b) const {
    const Presentation& p = *cl_;
    Scalar half{BaseNumber::half()}, isq{BaseNumber::inv_sqrt2()};
    auto br = [&](const Root& r) { return b[2 + root_pos(r)]; };
    Element a1 = half * (b[0] - b[1]);
    Element a2 = half * (b[0] + b[1]);
    std::array<std::array<Element, 4>, 4> m;
    m[0] = {a1, -br({-1, 1}), isq * br({-1, 0}), isq * br({0, 1})};
    m[1] = {-br({1, -1}), -a1, isq * br({0, -1}), -(isq * br({1, 0}))};
    m[2] = {isq * br({1, 0}), isq * br({0, 1}), -a2, -br({1, 1})};
    m[3] = {isq * br({0, -1}), -(isq * br({-1, 0})), -br({-1, -1}), a2};
    return m;
}

inline std::array<std::array<Element, 5>, 5> InstantonInstance::restriction_matrix_base(
    const std::array<Element, 10>& b) const {
    const Presentation& p = *cl_;
    Scalar isq{BaseNumber::inv_sqrt2()}, sq2{BaseNumber::sqrt2()};
    auto br = [&](const Root& r) { return b[2 + root_pos(r)]; };
    Element z(&p);
    std::array<std::array<Element, 5>, 5> m;
    m[0] = {b[0], -br({-1, 1}), z, -br({-1, -1}), -(sq2 * br({-1, 0}))};
    m[1] = {-br({1, -1}), b[1], br({-1, -1}), z, -(sq2 * br({0, -1}))};
    m[2] = {z, br({1, 1}), -b[0], br({1, -1}), sq2 * br({1, 0})};
    m[3] = {-br({1, 1}), z, br({-1, 1}), -b[1], sq2 * br({0, 1})};
    m[4] = {-(isq * br({1, 0})), -(isq * br({0, 1})), isq * br({-1, 0}), isq * br({0, -1}), z};
    return m;
}

inline std::array<Element, 10> InstantonInstance::express_vertical(
    const std::array<Element, 10>& b) const {
    // Precondition: the field vanishes on the base.
    OperatorExpr X = equivariant_field(b);
    for (auto& resid : verticality_residuals(X))
        if (!equals(resid, Element::zero(*cl_)).equal())
            throw NotVertical("express_vertical: field does not vanish on the base");

    Scalar quarter{BaseNumber(Rational(1, 4))};
    Scalar sq2q{BaseNumber(Rational(1, 4)) * BaseNumber::sqrt2()};
    Scalar two{BaseNumber(2)}, sq2{BaseNumber::sqrt2()};
    auto br = [&](const Root& r) { return b[2 + root_pos(r)]; };
    const Element &a = alpha, &as = alpha_s, &be = beta, &bs = beta_s, &x = xx;

    std::array<Element, 10> c;
    c[0] = quarter * (two * (x * b[1]) + sq2 * (be * br({0, 1})) + sq2 * (bs * br({0, -1})));
    c[1] = quarter * (two * (x * b[0]) + sq2 * (a * br({1, 0})) + sq2 * (as * br({-1, 0})));
    auto set = [&](const Root& r, Element v) { c[2 + root_pos(r)] = std::move(v); };
    set({0, 1}, sq2q * (bs * b[0] + a * br({1, 1}) + as * br({-1, 1})));
    set({0, -1}, sq2q * (be * b[0] + a * br({1, -1}) + as * br({-1, -1})));
    set({1, 0}, sq2q * (as * b[1] - be * br({1, 1}) + bs * br({1, -1})));
    set({-1, 0}, sq2q * (a * b[1] + be * br({-1, 1}) - bs * br({-1, -1})));
    set({1, 1}, quarter * (two * (x * br({1, 1})) + sq2 * (as * br({0, 1})) -
                           sq2 * (bs * br({1, 0}))));
    set({-1, -1}, quarter * (two * (x * br({-1, -1})) + sq2 * (a * br({0, -1})) -
                             sq2 * (be * br({-1, 0}))));
    set({1, -1}, quarter * (-(two * (x * br({1, -1}))) + sq2 * (be * br({1, 0})) +
                            sq2 * (as * br({0, -1}))));
    set({-1, 1}, quarter * (-(two * (x * br({-1, 1}))) + sq2 * (bs * br({-1, 0})) +
                            sq2 * (a * br({0, 1}))));
    for (auto& e : c) e = normal_form(e);
    return c;
}

inline void InstantonInstance::validate() {
    // Sphere relation reduces to zero in both presentations.
    for (const Presentation* p : {cl_.get(), tw_.get()}) {
        Element s(p);
        for (int a = 0; a < 4; ++a) s += Element::gen(*p, a) * Element::gen(*p, a + 4);
        s -= Element::unit(*p);
        if (!normal_form(s).is_zero())
            throw ValidationError("s7: sphere relation does not reduce to zero");
    }
    // Commutation phases of the deformed coordinates against the weight data.
    struct PhaseCase {
        int i, j, expected;  // z_i z_j = q^expected z_j z_i
    };
    for (auto [i, j, expected] : {PhaseCase{0, 2, 2}, PhaseCase{0, 3, -2},
                                  PhaseCase{1, 2, -2}, PhaseCase{1, 3, 2}}) {
        int got = tw_->swap_phase(tw_->grade_of_gen(i), tw_->grade_of_gen(j));
        if (got != expected)
            throw ValidationError("s7~: commutation phase mismatch on generators " +
                                  std::to_string(i) + "," + std::to_string(j));
    }
    // Base grades.
    if (!(alpha.grade() == std::optional<Grade>(Grade{2, 0, 0, 0})) ||
        !(beta.grade() == std::optional<Grade>(Grade{0, 2, 0, 0})) ||
        !(xx.grade() == std::optional<Grade>(Grade{0, 0, 0, 0})))
        throw ValidationError("s7: base grade table mismatch");

    // The ten fields close so(5) with unit structure constants.
    auto N = so5_closure_constants(H1, H2, E);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) n_struct_[i][j] = N[i][j];

    // Deformed base: commutation phase and the classical identification.
    {
        Element lhs = alpha_h * beta_h - Scalar::q_power(-4) * (beta_h * alpha_h);
        if (!normal_form(lhs).is_zero())
            throw ValidationError("s7~: deformed base commutation fails");
        Element back = transport(alpha_h, *cl_);
        if (!(normal_form(back - Scalar::q_power(-1) * alpha).is_zero()))
            throw ValidationError("s7~: deformed alpha does not match its classical form");
        Element backb = transport(beta_h, *cl_);
        if (!(normal_form(backb - Scalar::q_power(1) * beta).is_zero()))
            throw ValidationError("s7~: deformed beta does not match its classical form");
    }
}

inline void InstantonInstance::build() {
    build_presentations();
    build_derivations();
    build_gauge();
    build_table1();
    build_appc_catalog();
    build_table2_catalog();
    build_coaction();
    validate();
}

/// Shared instance (built once; immutable afterwards).
inline const InstantonInstance& instanton() {
    static const InstantonInstance inst;
    return inst;
}

} // namespace braidnc
