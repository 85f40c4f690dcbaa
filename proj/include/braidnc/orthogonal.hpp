#pragma once

#include "instanton.hpp"

namespace braidnc {

/// The special-orthogonal bundle over the homogeneous deformed 4-sphere:
/// 25 matrix coordinates n_IJ with the two orthogonality conditions as
/// rewrite rules, the equivariant so(5) fields, and the gauge generators.
class OrthogonalInstance {
public:
    OrthogonalInstance() { build(); }

    const Presentation& cl() const { return *cl_; }
    const Presentation& tw() const { return *tw_; }

    static int idx(int row, int col) { return 5 * row + col; }  // 0-based
    static int prime(int i) { return i == 4 ? 4 : (i + 2) % 4; }

    /// Row/column torus weights in the fixed order (1,0),(0,1),(-1,0),(0,-1),(0,0).
    static Root weight5(int i) {
        static const std::array<Root, 5> w = {Root{1, 0}, Root{0, 1}, Root{-1, 0},
                                              Root{0, -1}, Root{0, 0}};
        return w[i];
    }

    // Base column: u1, u2, u1*, u2*, x as single generators.
    Element u1, u2, u1_s, u2_s, xx;
    Element u1t, u2t, u1t_s, u2t_s, xxt;

    DerivationPtr H1, H2, H1t, H2t;
    std::map<Root, DerivationPtr> E, Et;
    std::array<OperatorExpr, 10> KW, KWt;
    std::array<DerivationPtr, 10> G, Gt;

    const OperatorExpr& K(int j, bool twisted = false) const {
        return twisted ? KWt[j - 1] : KW[j - 1];
    }
    const OperatorExpr& W(const Root& r, bool twisted = false) const {
        return (twisted ? KWt : KW)[2 + root_position(r)];
    }
    OperatorExpr gauge_op(int i, bool twisted = false) const {
        return OperatorExpr((twisted ? Gt : G)[i]);
    }

    OperatorExpr X10, Y11, Z21;
    std::array<OperatorExpr, 5> relations;

    int structure_constant(const Root& r, const Root& s) const {
        return n_struct_[root_position(r)][root_position(s)];
    }

    std::array<Element, 5> base_elements(bool twisted = false) const {
        if (twisted) return {u1t, u2t, u1t_s, u2t_s, xxt};
        return {u1, u2, u1_s, u2_s, xx};
    }

    std::array<Element, 5> verticality_residuals(const OperatorExpr& P,
                                                 bool twisted = false) const {
        auto base = base_elements(twisted);
        std::array<Element, 5> out;
        for (int k = 0; k < 5; ++k) out[k] = apply(P, base[k]);
        return out;
    }

    /// Identification of the base subalgebra with the Hopf-fibration base:
    /// u1 -> alpha/sqrt2, u2 -> beta/sqrt2, x -> x (classical).  Defined on
    /// polynomials in the five base coordinates only.
    Element identify_base(const Element& e) const {
        const InstantonInstance& hopf = instanton();
        const Presentation& target = hopf.cl();
        std::array<Element, 25> images;
        Scalar isq{BaseNumber::inv_sqrt2()};
        images[idx(0, 4)] = isq * hopf.alpha;
        images[idx(1, 4)] = isq * hopf.beta;
        images[idx(2, 4)] = isq * hopf.alpha_s;
        images[idx(3, 4)] = isq * hopf.beta_s;
        images[idx(4, 4)] = hopf.xx;
        Element out(&target);
        for (auto& [m, c] : e.terms()) {
            Element prod = Element::unit(target, c);
            for (auto i : m.idx) {
                if (images[i].is_zero())
                    throw ValidationError("identify_base: element leaves the base column");
                prod = prod * images[i];
            }
            out += prod;
        }
        return normal_form(out);
    }

    int rule_count() const { return static_cast<int>(cl_->rules().size()); }

private:
    std::shared_ptr<Presentation> cl_, tw_;
    int n_struct_[8][8] = {};

    void build();
    void build_presentations();
    void build_derivations();
    void build_gauge();
    void validate();
};

inline void OrthogonalInstance::build_presentations() {
    auto gens = [&] {
        std::vector<GeneratorInfo> v;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                Root wi = weight5(i), wj = weight5(j);
                v.push_back({"n" + std::to_string(i + 1) + std::to_string(j + 1),
                             Grade{2 * wi.first, 2 * wi.second, 2 * wj.first, 2 * wj.second},
                             idx(prime(i), prime(j))});
            }
        return v;
    };
    cl_ = std::make_shared<Presentation>("so5", gens(), PhaseForm{0, 0});
    tw_ = std::make_shared<Presentation>("so5t", gens(), PhaseForm{-1, 1});

    for (Presentation* p : {cl_.get(), tw_.get()}) {
        std::vector<Element> eqs;
        for (int j = 0; j < 5; ++j)
            for (int l = 0; l < 5; ++l) {
                // columns: sum_K n_{K'J} n_{KL} = delta_{J'L}
                Element ec(p);
                for (int k = 0; k < 5; ++k)
                    ec += Element::gen(*p, idx(prime(k), j)) * Element::gen(*p, idx(k, l));
                if (prime(j) == l) ec -= Element::unit(*p);
                eqs.push_back(std::move(ec));
                // rows: sum_K n_{JK'} n_{LK} = delta_{J'L}
                Element er(p);
                for (int k = 0; k < 5; ++k)
                    er += Element::gen(*p, idx(j, prime(k))) * Element::gen(*p, idx(l, k));
                if (prime(j) == l) er -= Element::unit(*p);
                eqs.push_back(std::move(er));
            }
        install_rules(*p, std::move(eqs));
    }
    // The two presentations must share the oriented rule monomials.
    if (cl_->rules().size() != tw_->rules().size())
        throw ValidationError("so5: rule sets differ between instances");
    for (std::size_t k = 0; k < cl_->rules().size(); ++k)
        if (!(cl_->rules()[k].lhs == tw_->rules()[k].lhs))
            throw ValidationError("so5: rule orientation differs between instances");
}

inline void OrthogonalInstance::build_derivations() {
    const Presentation& p = *cl_;
    auto mk = [&](const std::string& name, Grade gr,
                  std::initializer_list<std::pair<int, std::pair<int, int>>> moves) {
        // moves: target row gets source row with sign: value(n_{src,K}) = sign * n_{dst,K}
        auto d = std::make_shared<Derivation>(name, gr, p);
        for (auto& [src_row, dst] : moves) {
            auto [dst_row, sign] = dst;
            for (int k = 0; k < 5; ++k)
                d->values[idx(src_row, k)] =
                    Element::gen(p, idx(dst_row, k), Scalar(BaseNumber(sign)));
        }
        return d;
    };
    auto rg = [](const Root& r) { return Grade{2 * r.first, 2 * r.second, 0, 0}; };
    // Rows are 0-based: 0..4 correspond to weights (1,0),(0,1),(-1,0),(0,-1),(0,0).
    H1 = mk("H1", Grade{}, {{0, {0, 1}}, {2, {2, -1}}});
    H2 = mk("H2", Grade{}, {{1, {1, 1}}, {3, {3, -1}}});
    E[{1, 0}] = mk("E[1,0]", rg({1, 0}), {{2, {4, 1}}, {4, {0, -1}}});
    E[{-1, 0}] = mk("E[-1,0]", rg({-1, 0}), {{4, {2, 1}}, {0, {4, -1}}});
    E[{0, 1}] = mk("E[0,1]", rg({0, 1}), {{3, {4, 1}}, {4, {1, -1}}});
    E[{0, -1}] = mk("E[0,-1]", rg({0, -1}), {{4, {3, 1}}, {1, {4, -1}}});
    E[{1, 1}] = mk("E[1,1]", rg({1, 1}), {{2, {1, 1}}, {3, {0, -1}}});
    E[{-1, -1}] = mk("E[-1,-1]", rg({-1, -1}), {{1, {2, 1}}, {0, {3, -1}}});
    E[{1, -1}] = mk("E[1,-1]", rg({1, -1}), {{2, {3, 1}}, {1, {0, -1}}});
    E[{-1, 1}] = mk("E[-1,1]", rg({-1, 1}), {{3, {2, 1}}, {0, {1, -1}}});

    H1t = std::make_shared<Derivation>(twist_derivation(*H1, *tw_));
    H2t = std::make_shared<Derivation>(twist_derivation(*H2, *tw_));
    for (auto& r : root_list())
        Et[r] = std::make_shared<Derivation>(twist_derivation(*E.at(r), *tw_));
}

inline void OrthogonalInstance::build_gauge() {
    const Presentation& p = *cl_;
    u1 = Element::gen(p, idx(0, 4));
    u2 = Element::gen(p, idx(1, 4));
    u1_s = Element::gen(p, idx(2, 4));
    u2_s = Element::gen(p, idx(3, 4));
    xx = Element::gen(p, idx(4, 4));
    const Presentation& t = *tw_;
    u1t = Element::gen(t, idx(0, 4));
    u2t = Element::gen(t, idx(1, 4));
    u1t_s = Element::gen(t, idx(2, 4));
    u2t_s = Element::gen(t, idx(3, 4));
    xxt = Element::gen(t, idx(4, 4));

    auto Wexp = [&](std::initializer_list<std::pair<Element, DerivationPtr>> terms) {
        OperatorExpr o;
        for (auto& [c, d] : terms) o = o + OperatorExpr(c, d);
        return o;
    };
    KW[0] = Wexp({{xx, H2}, {u2_s, E.at({0, 1})}, {u2, E.at({0, -1})}});
    KW[1] = Wexp({{xx, H1}, {u1_s, E.at({1, 0})}, {u1, E.at({-1, 0})}});
    auto setW = [&](const Root& r, OperatorExpr o) { KW[2 + root_position(r)] = std::move(o); };
    setW({0, 1}, Wexp({{u2, H1}, {u1_s, E.at({1, 1})}, {u1, E.at({-1, 1})}}));
    setW({0, -1}, Wexp({{u2_s, H1}, {u1_s, E.at({1, -1})}, {u1, E.at({-1, -1})}}));
    setW({1, 0}, Wexp({{u1, H2}, {-u2_s, E.at({1, 1})}, {u2, E.at({1, -1})}}));
    setW({-1, 0}, Wexp({{u1_s, H2}, {u2_s, E.at({-1, 1})}, {-u2, E.at({-1, -1})}}));
    setW({1, 1}, Wexp({{xx, E.at({1, 1})}, {u1, E.at({0, 1})}, {-u2, E.at({1, 0})}}));
    setW({-1, -1}, Wexp({{xx, E.at({-1, -1})}, {u1_s, E.at({0, -1})}, {-u2_s, E.at({-1, 0})}}));
    setW({1, -1}, Wexp({{-xx, E.at({1, -1})}, {u2_s, E.at({1, 0})}, {u1, E.at({0, -1})}}));
    setW({-1, 1}, Wexp({{-xx, E.at({-1, 1})}, {u2, E.at({-1, 0})}, {u1_s, E.at({0, 1})}}));

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

    auto Wc = [&](const Root& r) { return OperatorExpr(G[2 + root_position(r)]); };
    OperatorExpr K1o(G[0]), K2o(G[1]);
    X10 = module_scale(u2_s, Wc({1, 1})) + module_scale(u2, Wc({1, -1})) -
          module_scale(u1, K1o) + module_scale(xx, Wc({1, 0}));
    Y11 = module_scale(xx, Wc({1, 1})) + module_scale(u1, Wc({0, 1})) -
          module_scale(u2, Wc({1, 0}));
    Z21 = module_scale(u1, Wc({1, 1}));

    relations[0] = module_scale(u2, Wc({0, -1})) - module_scale(u2_s, Wc({0, 1})) +
                   module_scale(u1, Wc({-1, 0})) - module_scale(u1_s, Wc({1, 0}));
    relations[1] = -module_scale(u2, K2o) + module_scale(xx, Wc({0, 1})) -
                   module_scale(u1_s, Wc({1, 1})) + module_scale(u1, Wc({-1, 1}));
    relations[2] = module_scale(u2_s, K2o) - module_scale(xx, Wc({0, -1})) +
                   module_scale(u1, Wc({-1, -1})) - module_scale(u1_s, Wc({1, -1}));
    relations[3] = -module_scale(u1, K1o) + module_scale(xx, Wc({1, 0})) +
                   module_scale(u2_s, Wc({1, 1})) + module_scale(u2, Wc({1, -1}));
    relations[4] = module_scale(u1_s, K1o) - module_scale(xx, Wc({-1, 0})) -
                   module_scale(u2, Wc({-1, -1})) - module_scale(u2_s, Wc({-1, 1}));
}

inline void OrthogonalInstance::validate() {
    // Commutation phases against the cocycle data, all 625 generator pairs:
    // n_IJ n_KL = lambda_IK lambda_LJ n_KL n_IJ with lambda as q^{-4 (w ^ w')}.
    for (int a = 0; a < 25; ++a)
        for (int b = 0; b < 25; ++b) {
            int i = a / 5, j = a % 5, k = b / 5, l = b % 5;
            int expect = -4 * wedge(weight5(i), weight5(k)) - 4 * wedge(weight5(l), weight5(j));
            int got = tw_->swap_phase(tw_->grade_of_gen(a), tw_->grade_of_gen(b));
            if (got != expect)
                throw ValidationError("so5~: commutation phase mismatch at " +
                                      cl_->generator(a).name + "," + cl_->generator(b).name);
        }
    // Base sphere relation reduces to zero in both instances.
    for (const Presentation* p : {cl_.get(), tw_.get()}) {
        Element s(p);
        s += Scalar(2) * (Element::gen(*p, idx(2, 4)) * Element::gen(*p, idx(0, 4)));
        s += Scalar(2) * (Element::gen(*p, idx(3, 4)) * Element::gen(*p, idx(1, 4)));
        s += Element::gen(*p, idx(4, 4)) * Element::gen(*p, idx(4, 4));
        s -= Element::unit(*p);
        if (!normal_form(s).is_zero())
            throw ValidationError(p->name() + ": base sphere relation fails to reduce");
    }
    // Equivariance is syntactic: values never move the second index.
    auto check_columns = [&](const Derivation& d) {
        for (int a = 0; a < 25; ++a) {
            int col = a % 5;
            for (auto& [m, c] : d.values[a].terms())
                for (auto g : m.idx)
                    if (g % 5 != col)
                        throw ValidationError(d.name + ": value moves the second index");
        }
    };
    check_columns(*H1);
    check_columns(*H2);
    for (auto& r : root_list()) check_columns(*E.at(r));

    auto N = so5_closure_constants(H1, H2, E);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) n_struct_[i][j] = N[i][j];

    // Restriction to the base column agrees with the Hopf-fibration
    // restriction under the base identification.
    const InstantonInstance& hopf = instanton();
    std::array<std::pair<DerivationPtr, DerivationPtr>, 10> pairs = {
        std::pair{H1, hopf.H1}, std::pair{H2, hopf.H2},
        std::pair{E.at({1, 0}), hopf.E.at({1, 0})},
        std::pair{E.at({-1, 0}), hopf.E.at({-1, 0})},
        std::pair{E.at({0, 1}), hopf.E.at({0, 1})},
        std::pair{E.at({0, -1}), hopf.E.at({0, -1})},
        std::pair{E.at({1, 1}), hopf.E.at({1, 1})},
        std::pair{E.at({-1, -1}), hopf.E.at({-1, -1})},
        std::pair{E.at({1, -1}), hopf.E.at({1, -1})},
        std::pair{E.at({-1, 1}), hopf.E.at({-1, 1})}};
    auto ortho_base = base_elements(false);
    for (auto& [ours, theirs] : pairs) {
        for (int k = 0; k < 5; ++k) {
            Element lhs = identify_base(normal_form(apply_raw(*ours, ortho_base[k])));
            Element rhs = apply(OperatorExpr(theirs), identify_base(ortho_base[k]));
            if (!equals(lhs, rhs).equal())
                throw ValidationError(ours->name + ": base restriction mismatch under the "
                                                   "sphere identification");
        }
    }
}

inline void OrthogonalInstance::build() {
    build_presentations();
    build_derivations();
    build_gauge();
    validate();
}

inline const OrthogonalInstance& orthogonal() {
    static const OrthogonalInstance inst;
    return inst;
}

} // namespace braidnc
