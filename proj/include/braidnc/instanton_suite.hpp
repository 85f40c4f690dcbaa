#pragma once

#include "instanton.hpp"
#include "repkit.hpp"
#include "report.hpp"

namespace braidnc {

/// Compact id fragment for a gauge generator: K1, W01, Wm10, W1m1, ...
inline std::string gauge_id(int i) {
    if (i == 0) return "K1";
    if (i == 1) return "K2";
    Root r = root_list()[i - 2];
    auto f = [](int v) { return v < 0 ? "m" + std::to_string(-v) : std::to_string(v); };
    return "W" + f(r.first) + f(r.second);
}

inline So5Basis instanton_so5(bool twisted = false) {
    const InstantonInstance& I = instanton();
    return twisted ? So5Basis::from(I.H1t, I.H2t, I.Et) : So5Basis::from(I.H1, I.H2, I.E);
}

inline Derivation add_tables(const Derivation& a, const Derivation& b) {
    Derivation out(a.name + "+" + b.name, a.grade, *a.pres);
    for (std::size_t g = 0; g < out.values.size(); ++g)
        out.values[g] = normal_form(a.values[g] + b.values[g]);
    return out;
}

/// Harmonic content of the embedded base at one polynomial degree: the
/// reduced span of all degree-r monomials in the five base coordinates,
/// ranked exactly, must fill the predicted stack of irreducibles, with the
/// top power of the (1,0)-coordinate as highest weight vector.
struct HarmonicCheckResult {
    int degree = 0;
    long long rank = 0;
    long long expected = 0;
    bool binomial_ok = false;
    bool hw_ok = false;
    bool passed() const { return rank == expected && binomial_ok && hw_ok; }
};

inline HarmonicCheckResult check_harmonic_degree(int r) {
    const InstantonInstance& I = instanton();
    std::array<Element, 5> base = I.base_elements(false);
    HarmonicCheckResult out;
    out.degree = r;

    // Enumerate degree-r multisets over the five base coordinates.
    std::vector<std::array<int, 5>> multisets;
    std::array<int, 5> cur{};
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == 4) {
            cur[4] = left;
            multisets.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[pos] = k;
            rec(pos + 1, left - k);
        }
    };
    rec(0, r);

    ColumnIndex cols;
    ExactRank rank;
    for (auto& ms : multisets) {
        Element prod = Element::unit(I.cl());
        for (int v = 0; v < 5; ++v)
            for (int k = 0; k < ms[v]; ++k) prod = prod * base[v];
        rank.insert(row_of_element(normal_form(prod), cols));
    }
    out.rank = rank.rank();

    long long expect = 0;
    for (int k = 0; 2 * k <= r; ++k) expect += dim_irrep(0, r - 2 * k);
    out.expected = expect;

    // C(4+r, r) computed exactly.
    long long binom = 1;
    for (int k = 1; k <= r; ++k) binom = binom * (4 + k) / k;
    out.binomial_ok = (expect == binom) && (static_cast<long long>(multisets.size()) == binom);

    Element alpha_pow = Element::unit(I.cl());
    for (int k = 0; k < r; ++k) alpha_pow = alpha_pow * I.alpha;
    out.hw_ok = is_highest_weight(normal_form(alpha_pow), instanton_so5());
    return out;
}

/// Gauge-module decomposition facts at coefficient degree one, decided by
/// exact rank computations on stacked value tables.
struct GaugeDecompResult {
    int span_rank = 0;        // all products (base coordinate) x (generator)
    int orbit_top = 0;        // adjoint orbit of the degree-one highest vector
    int with_generators = 0;  // orbit stacked over the ten generators
    int y11_stack = 0;        // generators stacked with the second weight vector
    bool arithmetic_ok = false;
};

inline GaugeDecompResult instanton_gauge_decomposition() {
    const InstantonInstance& I = instanton();
    So5Basis so5 = instanton_so5();
    GaugeDecompResult out;

    std::vector<Derivation> gens;
    for (int i = 0; i < 10; ++i) gens.push_back(table_of(I.KW[i], gauge_id(i)));

    // 50 degree-one products.
    std::vector<Derivation> products;
    for (auto& b : I.base_elements(false))
        for (int i = 0; i < 10; ++i) products.push_back(table_of(module_scale(b, I.KW[i])));
    {
        ColumnIndex cols;
        ExactRank rank;
        for (auto& t : products) rank.insert(row_of_table(t, cols));
        out.span_rank = rank.rank();
    }

    OperatorExpr aW11 = module_scale(I.alpha, I.W({1, 1}));
    OrbitResult orbit = orbit_closure(table_of(aW11, "aW11"), so5);
    out.orbit_top = orbit.dimension;
    {
        ColumnIndex cols;
        ExactRank rank;
        for (auto& t : orbit.basis) rank.insert(row_of_table(t, cols));
        for (auto& t : gens) rank.insert(row_of_table(t, cols));
        out.with_generators = rank.rank();
    }
    {
        ColumnIndex cols;
        ExactRank rank;
        for (auto& t : gens) rank.insert(row_of_table(t, cols));
        Derivation y11 = table_of(I.Y11, "Y11");
        rank.insert(row_of_table(y11, cols));
        out.y11_stack = rank.rank();
    }
    out.arithmetic_ok = true;
    for (long long n = 1; n <= 10; ++n)
        out.arithmetic_ok &= (dim_irrep(2, n) + dim_irrep(2, n - 1) + dim_irrep(0, n) +
                              dim_irrep(2, n - 2)) == 10 * dim_irrep(0, n);
    return out;
}

/// The full verification suite for the Hopf-fibration instance: action
/// table, vanishing relations, the classical and deformed bracket catalogs
/// with their twist-transport cross-derivation, star reality, coaction
/// equivariance, and the representation-theoretic decompositions.
inline Report run_instanton_suite(const OracleOptions& opt = {}, unsigned jobs = 0) {
    const InstantonInstance& I = instanton();
    std::vector<Check> checks;

    auto add = [&](std::string id, std::function<CheckRecord()> f) {
        checks.push_back({std::move(id), std::move(f)});
    };

    // --- build-level identities ---------------------------------------------
    add("instanton.build.sphere.classical", [&I, opt] {
        Element s(&I.cl());
        for (int a = 0; a < 4; ++a) s += Element::gen(I.cl(), a) * Element::gen(I.cl(), a + 4);
        return elem_check(s, Element::unit(I.cl()), opt);
    });
    add("instanton.build.sphere.twisted", [&I, opt] {
        Element s(&I.tw());
        for (int a = 0; a < 4; ++a) s += Element::gen(I.tw(), a) * Element::gen(I.tw(), a + 4);
        return elem_check(s, Element::unit(I.tw()), opt);
    });
    add("instanton.build.base.commutation", [&I, opt] {
        return elem_check(I.alpha_h * I.beta_h,
                          Scalar::q_power(-4) * (I.beta_h * I.alpha_h), opt);
    });
    add("instanton.build.base.identification", [&I, opt] {
        return elem_check(transport(I.alpha_h, I.cl()), Scalar::q_power(-1) * I.alpha, opt);
    });

    // --- action table --------------------------------------------------------
    for (int i = 0; i < 10; ++i)
        for (int a = 0; a < 4; ++a) {
            add("instanton.table1." + gauge_id(i) + ".z" + std::to_string(a + 1),
                [&I, i, a, opt] {
                    return elem_check(apply_gen(I.KW[i], a), I.action_table(i, a), opt);
                });
        }
    for (auto& [key, simplified] : I.action_table_simplified()) {
        int i = key.first, a = key.second;
        add("instanton.table1." + gauge_id(i) + ".z" + std::to_string(a + 1) + ".simplified",
            [&I, i, a, opt] {
                return elem_check(I.action_table(i, a),
                                  I.action_table_simplified().at({i, a}), opt);
            });
    }
    // Star rows: X(z*) = -(X*(z))^* with X* read off the reality table.
    auto star_partner_op = [](int i) {
        if (i < 2) return i;
        Root r = root_list()[i - 2];
        return 2 + InstantonInstance::root_pos({-r.first, -r.second});
    };
    for (int i = 0; i < 10; ++i)
        for (int a = 0; a < 4; ++a) {
            int si = star_partner_op(i);
            add("instanton.table1star." + gauge_id(i) + ".z" + std::to_string(a + 1) + "c",
                [&I, i, a, si, opt] {
                    Element lhs = apply_gen(I.KW[i], a + 4);
                    Element rhs = normal_form(-(apply_gen(I.KW[si], a).star()));
                    return elem_check(lhs, rhs, opt);
                });
        }

    // --- the five vanishing module relations ---------------------------------
    for (int k = 0; k < 5; ++k) {
        add("instanton.relUWT2." + std::to_string(k + 1), [&I, k, opt] {
            return op_check(I.relations[k], OperatorExpr::zero(), opt);
        });
        add("instanton.relUWT2.twisted." + std::to_string(k + 1), [&I, k, opt] {
            return op_check(twist_op(I.relations[k], I.tw()), OperatorExpr::zero(), opt);
        });
    }

    // --- classical bracket catalog -------------------------------------------
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            add("instanton.appC." + gauge_id(i) + gauge_id(j), [&I, i, j, opt] {
                Derivation lhs = bracket(I.KW[i], I.KW[j]);
                return op_check(as_op(lhs), I.appc(i, j).rhs, opt);
            });
        }

    // --- named weight vectors -------------------------------------------------
    add("instanton.lemma35.X10",
        [&I, opt] { return op_check(I.X10, OperatorExpr::zero(), opt); });
    add("instanton.rel2.Y11", [&I, opt] {
        return op_check(I.Y11, Scalar(-BaseNumber::sqrt2()) * I.W({1, 1}), opt);
    });
    add("instanton.rel3.T11", [&I, opt] {
        Derivation t11 = add_tables(add_tables(bracket(I.K(1), I.W({1, 1})),
                                               bracket(I.K(2), I.W({1, 1}))),
                                    bracket(I.W({1, 0}), I.W({0, 1})));
        return op_check(as_op(t11), Scalar(BaseNumber(-4)) * I.W({1, 1}), opt);
    });

    // --- deformed bracket catalog and twist transport --------------------------
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            add("instanton.table2." + gauge_id(i) + gauge_id(j), [&I, i, j, opt] {
                Derivation lhs = bracket(I.KWt[i], I.KWt[j]);
                return op_check(as_op(lhs), I.table2(i, j).rhs, opt);
            });
            add("instanton.transport." + gauge_id(i) + gauge_id(j), [&I, i, j, opt] {
                // e^{-i pi theta r^s} D([G_i, G_j]) against the direct
                // deformed bracket.
                Derivation cls = bracket(I.KW[i], I.KW[j]);
                Derivation moved = twist_derivation(cls, I.tw());
                auto root_of = [](int k) {
                    return k < 2 ? Root{0, 0} : root_list()[k - 2];
                };
                Root r = root_of(i), s = root_of(j);
                Scalar ph = Scalar::q_power(-2 * wedge(r, s));
                Derivation direct = bracket(I.KWt[i], I.KWt[j]);
                return op_check(as_op(direct), ph * as_op(moved), opt);
            });
        }
    for (auto& wb : I.worked_brackets()) {
        add("instanton." + wb.id, [&I, wb, opt] {
            Derivation lhs = wb.twisted ? bracket(I.KWt[wb.i], I.KWt[wb.j])
                                        : bracket(I.KW[wb.i], I.KW[wb.j]);
            return op_check(as_op(lhs), wb.rhs, opt);
        });
    }
    // Rows whose listed variant disagrees with the transport recipe: confirm
    // the recipe-consistent value and re-measure that the listed one differs.
    for (auto& mr : I.measured_rows()) {
        add("instanton." + mr.id, [&I, mr, opt] {
            Derivation direct = mr.twisted ? bracket(I.KWt[mr.i], I.KWt[mr.j])
                                           : bracket(I.KW[mr.i], I.KW[mr.j]);
            bool derived_ok = op_equals(as_op(direct), mr.derived, opt).equal();
            bool listed_differs = !op_equals(as_op(direct), mr.listed, opt).equal();
            return fact_check(derived_ok && listed_differs,
                              std::string("derived=") + (derived_ok ? "match" : "differs") +
                                  " listed=" + (listed_differs ? "differs" : "match"),
                              "derived=match listed=differs");
        });
    }

    // --- degree-three coordinate relations ------------------------------------
    {
        const Presentation& c = I.cl();
        auto z = [&](int k) { return Element::gen(c, k); };
        Element one = Element::unit(c);
        std::array<std::pair<Element, Element>, 4> cls = {
            std::pair{(one - I.xx) * z(0), I.alpha * z(2) - I.beta_s * z(3)},
            std::pair{(one - I.xx) * z(1), I.alpha_s * z(3) + I.beta * z(2)},
            std::pair{(one + I.xx) * z(2), I.alpha_s * z(0) + I.beta_s * z(1)},
            std::pair{(one + I.xx) * z(3), I.alpha * z(1) - I.beta * z(0)}};
        for (int k = 0; k < 4; ++k)
            add("instanton.regole.classical." + std::to_string(k + 1), [cls, k, opt] {
                return elem_check(cls[k].first, cls[k].second, opt);
            });
        const Presentation& t = I.tw();
        auto zt = [&](int k) { return Element::gen(t, k); };
        Element onet = Element::unit(t);
        std::array<std::pair<Element, Element>, 4> twc = {
            std::pair{(onet - I.xx_t) * zt(0), I.alpha_h * zt(2) - zt(3) * I.beta_h_s},
            std::pair{(onet - I.xx_t) * zt(1), zt(3) * I.alpha_h_s + I.beta_h * zt(2)},
            std::pair{(onet + I.xx_t) * zt(2), I.alpha_h_s * zt(0) + I.beta_h_s * zt(1)},
            std::pair{(onet + I.xx_t) * zt(3), zt(1) * I.alpha_h - zt(0) * I.beta_h}};
        for (int k = 0; k < 4; ++k)
            add("instanton.regole.twisted." + std::to_string(k + 1), [twc, k, opt] {
                return elem_check(twc[k].first, twc[k].second, opt);
            });
    }

    // --- deformed action law ----------------------------------------------------
    for (int i = 0; i < 10; ++i) {
        add("instanton.twistaction." + gauge_id(i), [&I, i, opt] {
            const Presentation& t = I.tw();
            Grade gw = *I.KWt[i].grade();
            for (int a = 0; a < 8; ++a) {
                int b = t.swap_phase(gw, t.grade_of_gen(a));
                if (b % 2 != 0) throw OddPhaseExponent("action law phase");
                Element lhs = transport(apply_gen(I.KWt[i], a), I.cl());
                Element rhs = Scalar::q_power(b / 2) * apply_gen(I.KW[i], a);
                auto rec = elem_check(lhs, rhs, opt);
                if (rec.status != "pass") return rec;
            }
            return fact_check(true, "law", "law");
        });
    }

    // --- star reality -------------------------------------------------------------
    auto star_partner_name = [&](int i) { return star_partner_op(i); };
    for (bool twisted : {false, true})
        for (int i = 0; i < 10; ++i) {
            int si = star_partner_name(i);
            add(std::string("instanton.reality.") + (twisted ? "twisted." : "classical.") +
                    gauge_id(i),
                [&I, i, si, twisted, opt] {
                    return op_check(star_op(twisted ? I.KWt[i] : I.KW[i]),
                                    twisted ? I.KWt[si] : I.KW[si], opt);
                });
        }

    // --- verticality ---------------------------------------------------------------
    for (bool twisted : {false, true})
        for (int i = 0; i < 10; ++i) {
            add(std::string("instanton.vertical.") + (twisted ? "twisted." : "classical.") +
                    gauge_id(i),
                [&I, i, twisted, opt] {
                    auto res = I.verticality_residuals(twisted ? I.KWt[i] : I.KW[i], twisted);
                    for (auto& e : res) {
                        Element zero(e.presentation());
                        auto rec = elem_check(e, zero, opt);
                        if (rec.status != "pass") return rec;
                    }
                    return fact_check(true, "vertical", "vertical");
                });
        }

    // --- coaction equivariance --------------------------------------------------------
    {
        std::vector<std::pair<std::string, OperatorExpr>> ops;
        ops.emplace_back("H1", OperatorExpr(I.H1));
        ops.emplace_back("H2", OperatorExpr(I.H2));
        for (auto& r : root_list())
            ops.emplace_back("E" + root_tag(r), OperatorExpr(I.E.at(r)));
        for (int i = 0; i < 10; ++i) ops.emplace_back(gauge_id(i), I.KW[i]);
        for (auto& [nm, op] : ops) {
            add("instanton.coaction." + nm, [&I, op, opt] {
                return fact_check(I.coaction_check(op, opt), "equivariant", "equivariant");
            });
        }
    }

    // --- decompositions ------------------------------------------------------------------
    for (int r = 0; r <= 4; ++r) {
        add("instanton.harmonic.r" + std::to_string(r), [r] {
            auto h = check_harmonic_degree(r);
            return fact_check(h.passed(),
                              "rank=" + std::to_string(h.rank) +
                                  " hw=" + std::to_string(h.hw_ok),
                              "rank=" + std::to_string(h.expected) + " hw=1");
        });
    }
    add("instanton.orbit.W11", [&I] {
        int d = orbit_span_dim(I.W({1, 1}), instanton_so5());
        return fact_check(d == 10, std::to_string(d), "10");
    });
    add("instanton.orbit.alphaW11", [&I] {
        int d = orbit_span_dim(module_scale(I.alpha, I.W({1, 1})), instanton_so5());
        return fact_check(d == 35, std::to_string(d), "35");
    });
    add("instanton.orbit.X10", [&I] {
        int d = orbit_span_dim(I.X10, instanton_so5());
        return fact_check(d == 0, std::to_string(d), "0");
    });
    add("instanton.hw.W11", [&I] {
        return fact_check(is_highest_weight(I.W({1, 1}), instanton_so5()), "hw", "hw");
    });
    add("instanton.hw.W10.not", [&I] {
        return fact_check(!is_highest_weight(I.W({1, 0}), instanton_so5()), "raised", "raised");
    });
    add("instanton.hw.alpha", [&I] {
        return fact_check(is_highest_weight(I.alpha, instanton_so5()), "hw", "hw");
    });
    add("instanton.gauge.n0", [&I] {
        std::vector<Derivation> gens;
        for (int i = 0; i < 10; ++i) gens.push_back(table_of(I.KW[i]));
        std::vector<const Derivation*> ptrs;
        for (auto& g : gens) ptrs.push_back(&g);
        int d = joint_rank(ptrs);
        return fact_check(d == 10, std::to_string(d), "10");
    });
    add("instanton.gauge.n1", [] {
        auto g = instanton_gauge_decomposition();
        bool ok = g.span_rank == 45 && g.orbit_top == 35 && g.with_generators == 45 &&
                  g.y11_stack == 10 && g.arithmetic_ok;
        return fact_check(ok,
                          "span=" + std::to_string(g.span_rank) +
                              " orbit=" + std::to_string(g.orbit_top) +
                              " stack=" + std::to_string(g.with_generators) +
                              " y11=" + std::to_string(g.y11_stack) +
                              " arith=" + std::to_string(g.arithmetic_ok),
                          "span=45 orbit=35 stack=45 y11=10 arith=1");
    });

    return run_checks("instanton", checks, jobs);
}

} // namespace braidnc
