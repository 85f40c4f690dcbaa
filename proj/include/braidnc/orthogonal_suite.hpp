#pragma once

#include "instanton_suite.hpp"
#include "orthogonal.hpp"

namespace braidnc {

inline So5Basis orthogonal_so5(bool twisted = false) {
    const OrthogonalInstance& O = orthogonal();
    return twisted ? So5Basis::from(O.H1t, O.H2t, O.Et) : So5Basis::from(O.H1, O.H2, O.E);
}

/// Degree-one decomposition facts for the orthogonal bundle: the fifty
/// products split into a 35-dimensional top representation and a second,
/// independent ten-dimensional block generated by the degree-one weight
/// vector, the five-dimensional block vanishing.
struct OrthogonalDecomp {
    int span_rank = 0;
    int orbit_top = 0;        // orbit of u1 W11
    int orbit_second = 0;     // orbit of Y11
    int stacked = 0;          // the two orbits together
    int y11_vs_gens = 0;      // ten generators plus Y11
    int y11_vs_gens_num = 0;  // numeric lower-bound cross-check
    int span_rank_num = 0;
};

/// Ideal slice reducer for the matrix coordinate ring, shared across checks.
inline const LinearReducer& orthogonal_reducer() {
    static const LinearReducer red(orthogonal().cl(), 3);
    return red;
}

inline OrthogonalDecomp orthogonal_gauge_decomposition() {
    const OrthogonalInstance& O = orthogonal();
    So5Basis so5 = orthogonal_so5();
    const LinearReducer* red = &orthogonal_reducer();
    OrthogonalDecomp out;
    std::vector<Derivation> products;
    for (auto& b : O.base_elements(false))
        for (int i = 0; i < 10; ++i)
            products.push_back(raw_table_of(module_scale(b, O.KW[i])));
    {
        ColumnIndex cols;
        ExactRank rank;
        for (auto& t : products) rank.insert(row_of_table(t, cols, red));
        out.span_rank = rank.rank();
        std::vector<const Derivation*> ptrs;
        for (auto& t : products) ptrs.push_back(&t);
        out.span_rank_num = numeric_rank(ptrs, 8);
    }
    OrbitResult top =
        orbit_closure(raw_table_of(module_scale(O.u1, O.W({1, 1})), "u1W11"), so5, red);
    OrbitResult second = orbit_closure(raw_table_of(O.Y11, "Y11"), so5, red);
    out.orbit_top = top.dimension;
    out.orbit_second = second.dimension;
    {
        ColumnIndex cols;
        ExactRank rank;
        for (auto& t : top.basis) rank.insert(row_of_table(t, cols, red));
        for (auto& t : second.basis) rank.insert(row_of_table(t, cols, red));
        out.stacked = rank.rank();
    }
    {
        std::vector<Derivation> gens;
        for (int i = 0; i < 10; ++i) gens.push_back(raw_table_of(O.KW[i]));
        gens.push_back(raw_table_of(O.Y11, "Y11"));
        ColumnIndex cols;
        ExactRank rank;
        std::vector<const Derivation*> ptrs;
        for (auto& t : gens) {
            rank.insert(row_of_table(t, cols, red));
            ptrs.push_back(&t);
        }
        out.y11_vs_gens = rank.rank();
        out.y11_vs_gens_num = numeric_rank(ptrs);
    }
    return out;
}

inline Report run_orthogonal_suite(const OracleOptions& opt = {}, unsigned jobs = 0) {
    const OrthogonalInstance& O = orthogonal();
    std::vector<Check> checks;
    auto add = [&](std::string id, std::function<CheckRecord()> f) {
        checks.push_back({std::move(id), std::move(f)});
    };

    // --- build-level identities ------------------------------------------------
    add("orthogonal.build.sphere", [&O, opt] {
        Element s(&O.tw());
        s += Scalar(2) * (O.u1t_s * O.u1t);
        s += Scalar(2) * (O.u2t_s * O.u2t);
        s += O.xxt * O.xxt;
        return elem_check(s, Element::unit(O.tw()), opt);
    });
    add("orthogonal.build.rules", [&O] {
        // Two of the listed quadratic relation families overlap in one trace
        // identity, so the oriented system has 29 independent rules.
        return fact_check(O.rule_count() == 29, std::to_string(O.rule_count()), "29");
    });
    add("orthogonal.build.phases", [&O] {
        // Re-measure the commutation law on all 625 generator pairs.
        for (int a = 0; a < 25; ++a)
            for (int b = 0; b < 25; ++b) {
                int i = a / 5, j = a % 5, k = b / 5, l = b % 5;
                int expect = -4 * wedge(OrthogonalInstance::weight5(i),
                                        OrthogonalInstance::weight5(k)) -
                             4 * wedge(OrthogonalInstance::weight5(l),
                                       OrthogonalInstance::weight5(j));
                if (O.tw().swap_phase(O.tw().grade_of_gen(a), O.tw().grade_of_gen(b)) != expect)
                    return fact_check(false, "mismatch", "cocycle phases");
            }
        return fact_check(true, "625 pairs", "625 pairs");
    });
    add("orthogonal.build.equivariance", [&O] {
        // Values of the base fields never move the second index.
        std::vector<const Derivation*> fields = {O.H1.get(), O.H2.get()};
        for (auto& r : root_list()) fields.push_back(O.E.at(r).get());
        for (auto* d : fields)
            for (int a = 0; a < 25; ++a)
                for (auto& [m, c] : d->values[a].terms())
                    for (auto g : m.idx)
                        if (g % 5 != a % 5) return fact_check(false, d->name, "column-fixed");
        return fact_check(true, "column-fixed", "column-fixed");
    });
    {
        // Base restriction identification with the Hopf-fibration instance.
        std::vector<std::pair<std::string, DerivationPtr>> fields;
        fields.emplace_back("H1", O.H1);
        fields.emplace_back("H2", O.H2);
        for (auto& r : root_list()) fields.emplace_back("E" + root_tag(r), O.E.at(r));
        for (auto& [nm, d] : fields) {
            add("orthogonal.identification." + nm, [&O, d, opt] {
                const InstantonInstance& hopf = instanton();
                const Derivation* their = nullptr;
                if (d->name == "H1")
                    their = hopf.H1.get();
                else if (d->name == "H2")
                    their = hopf.H2.get();
                else
                    for (auto& r : root_list())
                        if (d->name == "E" + root_tag(r)) their = hopf.E.at(r).get();
                for (auto& b : O.base_elements(false)) {
                    Element lhs = O.identify_base(normal_form(apply_raw(*d, b)));
                    Element rhs = apply(OperatorExpr(std::make_shared<Derivation>(*their)),
                                        O.identify_base(b));
                    auto rec = elem_check(lhs, rhs, opt);
                    if (rec.status != "pass") return rec;
                }
                return fact_check(true, "identified", "identified");
            });
        }
    }

    // --- the five vanishing relations ---------------------------------------------
    for (int k = 0; k < 5; ++k) {
        add("orthogonal.relUWT2so." + std::to_string(k + 1), [&O, k, opt] {
            return op_check(O.relations[k], OperatorExpr::zero(), opt);
        });
        add("orthogonal.relUWT2so.twisted." + std::to_string(k + 1), [&O, k, opt] {
            return op_check(twist_op(O.relations[k], O.tw()), OperatorExpr::zero(), opt);
        });
    }

    // --- named weight vectors --------------------------------------------------------
    add("orthogonal.lemma.X10", [&O, opt] { return op_check(O.X10, OperatorExpr::zero(), opt); });
    add("orthogonal.W11W10", [&O, opt] {
        Derivation b = bracket(O.W({1, 1}), O.W({1, 0}));
        return op_check(as_op(b), -module_scale(O.u1, O.W({1, 1})), opt);
    });
    add("orthogonal.rel3.T11", [&O, opt] {
        // In the un-halved normalization (all ten generators doubled) the
        // combination equals 4 Y11 with Y11 built from the doubled root
        // vectors, exactly as listed.
        Scalar two{BaseNumber(2)};
        OperatorExpr K1d = two * O.K(1), K2d = two * O.K(2);
        OperatorExpr W11d = two * O.W({1, 1}), W10d = two * O.W({1, 0}),
                     W01d = two * O.W({0, 1});
        Derivation t11 = add_tables(add_tables(bracket(K1d, W11d), bracket(K2d, W11d)),
                                    bracket(W10d, W01d));
        OperatorExpr y11d = module_scale(O.xx, W11d) + module_scale(O.u1, W01d) -
                            module_scale(O.u2, W10d);
        return op_check(as_op(t11), Scalar(BaseNumber(4)) * y11d, opt);
    });
    add("orthogonal.rel3.T11.convention", [&O, opt] {
        // Measured: with the halved generators of this instance the same
        // combination equals 2 Y11 (and not 4 Y11).
        Derivation t11 = add_tables(add_tables(bracket(O.K(1), O.W({1, 1})),
                                               bracket(O.K(2), O.W({1, 1}))),
                                    bracket(O.W({1, 0}), O.W({0, 1})));
        bool two_ok = op_equals(as_op(t11), Scalar(BaseNumber(2)) * O.Y11, opt).equal();
        bool four_no = !op_equals(as_op(t11), Scalar(BaseNumber(4)) * O.Y11, opt).equal();
        return fact_check(two_ok && four_no,
                          std::string("2Y11=") + (two_ok ? "match" : "no") +
                              " 4Y11=" + (four_no ? "differs" : "match"),
                          "2Y11=match 4Y11=differs");
    });
    add("orthogonal.Y11.independent", [&O] {
        Derivation y = raw_table_of(O.Y11, "Y11");
        Derivation w = raw_table_of(O.W({1, 1}), "W11");
        const LinearReducer* red = &orthogonal_reducer();
        int r = joint_rank({&w, &y}, red);
        int rn = numeric_rank({&w, &y});
        return fact_check(r == 2 && rn == 2,
                          std::to_string(r) + "/" + std::to_string(rn), "2/2");
    });
    add("orthogonal.hw.W11", [&O] {
        return fact_check(is_highest_weight(O.W({1, 1}), orthogonal_so5()), "hw", "hw");
    });
    add("orthogonal.hw.Y11", [&O] {
        return fact_check(is_highest_weight(O.Y11, orthogonal_so5()), "hw", "hw");
    });

    // --- verticality --------------------------------------------------------------------
    for (bool twisted : {false, true})
        for (int i = 0; i < 10; ++i) {
            add(std::string("orthogonal.vertical.") + (twisted ? "twisted." : "classical.") +
                    gauge_id(i),
                [&O, i, twisted, opt] {
                    auto res = O.verticality_residuals(twisted ? O.KWt[i] : O.KW[i], twisted);
                    for (auto& e : res) {
                        Element zero(e.presentation());
                        auto rec = elem_check(e, zero, opt);
                        if (rec.status != "pass") return rec;
                    }
                    return fact_check(true, "vertical", "vertical");
                });
        }

    // --- deformed brackets via the twist transport ----------------------------------------
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            add("orthogonal.transport." + gauge_id(i) + gauge_id(j), [&O, i, j, opt] {
                Derivation cls = bracket(O.KW[i], O.KW[j]);
                Derivation moved = twist_derivation(cls, O.tw());
                auto root_of = [](int k) { return k < 2 ? Root{0, 0} : root_list()[k - 2]; };
                Scalar ph = Scalar::q_power(-2 * wedge(root_of(i), root_of(j)));
                Derivation direct = bracket(O.KWt[i], O.KWt[j]);
                return op_check(as_op(direct), ph * as_op(moved), opt);
            });
        }

    // --- star reality -----------------------------------------------------------------------
    auto star_partner_op = [](int i) {
        if (i < 2) return i;
        Root r = root_list()[i - 2];
        return 2 + root_position({-r.first, -r.second});
    };
    for (bool twisted : {false, true})
        for (int i = 0; i < 10; ++i) {
            int si = star_partner_op(i);
            add(std::string("orthogonal.reality.") + (twisted ? "twisted." : "classical.") +
                    gauge_id(i),
                [&O, i, si, twisted, opt] {
                    return op_check(star_op(twisted ? O.KWt[i] : O.KW[i]),
                                    twisted ? O.KWt[si] : O.KW[si], opt);
                });
        }

    // --- decomposition -------------------------------------------------------------------------
    add("orthogonal.decomp.n1", [] {
        auto d = orthogonal_gauge_decomposition();
        bool ok = d.span_rank == 45 && d.orbit_top == 35 && d.orbit_second == 10 &&
                  d.stacked == 45 && d.y11_vs_gens == 11 && d.span_rank_num == 45 &&
                  d.y11_vs_gens_num == 11;
        return fact_check(ok,
                          "span=" + std::to_string(d.span_rank) + "/" +
                              std::to_string(d.span_rank_num) +
                              " top=" + std::to_string(d.orbit_top) +
                              " second=" + std::to_string(d.orbit_second) +
                              " stacked=" + std::to_string(d.stacked) +
                              " y11stack=" + std::to_string(d.y11_vs_gens) + "/" +
                              std::to_string(d.y11_vs_gens_num),
                          "span=45/45 top=35 second=10 stacked=45 y11stack=11/11");
    });

    return run_checks("orthogonal", checks, jobs);
}

} // namespace braidnc
