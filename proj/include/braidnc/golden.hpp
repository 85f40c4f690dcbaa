#pragma once

#include "parser.hpp"

namespace braidnc {

/// Emits the textual check suite for the Hopf-fibration instance: the
/// file-expressible core of run_instanton_suite with identical check ids.
inline std::string emit_instanton_suite() {
    const InstantonInstance& I = instanton();
    InstanceContext ctx = make_instanton_context();
    std::ostringstream os;
    os << "# generated by `braidnc emit-suite instanton`\n";
    os << "suite instanton\n";
    os << "instance instanton\n\n";

    auto put = [&](const std::string& id, const std::string& body) {
        os << "check " << id << " : assert " << body << "\n";
    };

    // action table
    for (int i = 0; i < 10; ++i)
        for (int a = 0; a < 4; ++a) {
            put("instanton.table1." + gauge_id(i) + ".z" + std::to_string(a + 1),
                "elem_eq " + gauge_name(i) + "(z" + std::to_string(a + 1) +
                    ") == " + I.action_table(i, a).render());
        }
    for (auto& [key, simplified] : I.action_table_simplified()) {
        put("instanton.table1." + gauge_id(key.first) + ".z" + std::to_string(key.second + 1) +
                ".simplified",
            "elem_eq " + gauge_name(key.first) + "(z" + std::to_string(key.second + 1) +
                ") == " + simplified.render());
    }
    os << "\n";
    // vanishing module relations
    for (int k = 0; k < 5; ++k)
        put("instanton.relUWT2." + std::to_string(k + 1),
            "op_eq " + render_operator_pretty(I.relations[k], ctx.cl) + " == 0");
    os << "\n";
    // classical bracket catalog
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            put("instanton.appC." + gauge_id(i) + gauge_id(j),
                "op_eq [" + gauge_name(i) + "," + gauge_name(j) +
                    "] == " + render_operator_pretty(I.appc(i, j).rhs, ctx.cl));
    os << "\n";
    // weight vectors
    put("instanton.lemma35.X10", "op_eq " + render_operator_pretty(I.X10, ctx.cl) + " == 0");
    put("instanton.rel2.Y11",
        "op_eq " + render_operator_pretty(I.Y11, ctx.cl) + " == -sqrt2 . W[1,1]");
    put("instanton.rel3.T11",
        "op_eq [K1,W[1,1]] + [K2,W[1,1]] + [W[1,0],W[0,1]] == -4 . W[1,1]");
    os << "\n";
    // deformed bracket catalog
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            put("instanton.table2." + gauge_id(i) + gauge_id(j),
                "op_eq [" + gauge_name(i, true) + "," + gauge_name(j, true) +
                    "] == " + render_operator_pretty(I.table2(i, j).rhs, ctx.tw));
    os << "\n";
    // star reality and verticality
    for (int i = 0; i < 10; ++i) {
        int si = i < 2 ? i
                       : 2 + InstantonInstance::root_pos({-root_list()[i - 2].first,
                                                          -root_list()[i - 2].second});
        put("instanton.reality.classical." + gauge_id(i),
            "op_eq star(" + gauge_name(i) + ") == " + gauge_name(si));
        put("instanton.reality.twisted." + gauge_id(i),
            "op_eq star(" + gauge_name(i, true) + ") == " + gauge_name(si, true));
    }
    os << "\n";
    for (int i = 0; i < 10; ++i) {
        put("instanton.vertical.classical." + gauge_id(i), "vertical " + gauge_name(i));
        put("instanton.vertical.twisted." + gauge_id(i), "vertical " + gauge_name(i, true));
    }
    os << "\n";
    put("instanton.hw.W11", "hw W[1,1]");
    put("instanton.orbit.W11", "orbit_dim W[1,1] == 10");
    put("instanton.orbit.alphaW11", "orbit_dim a . W[1,1] == 35");
    put("instanton.orbit.X10", "orbit_dim " + render_operator_pretty(I.X10, ctx.cl) + " == 0");
    return os.str();
}

inline std::string emit_orthogonal_suite() {
    const OrthogonalInstance& O = orthogonal();
    InstanceContext ctx = make_orthogonal_context();
    std::ostringstream os;
    os << "# generated by `braidnc emit-suite orthogonal`\n";
    os << "suite orthogonal\n";
    os << "instance orthogonal\n\n";
    auto put = [&](const std::string& id, const std::string& body) {
        os << "check " << id << " : assert " << body << "\n";
    };
    for (int k = 0; k < 5; ++k)
        put("orthogonal.relUWT2so." + std::to_string(k + 1),
            "op_eq " + render_operator_pretty(O.relations[k], ctx.cl) + " == 0");
    os << "\n";
    put("orthogonal.lemma.X10", "op_eq " + render_operator_pretty(O.X10, ctx.cl) + " == 0");
    put("orthogonal.W11W10", "op_eq [W[1,1],W[1,0]] == -u1 . W[1,1]");
    put("orthogonal.rel3.T11",
        "op_eq [2*K1,2*W[1,1]] + [2*K2,2*W[1,1]] + [2*W[1,0],2*W[0,1]] == "
        "8*x . W[1,1] + 8*u1 . W[0,1] - 8*u2 . W[1,0]");
    os << "\n";
    for (int i = 0; i < 10; ++i) {
        int si = i < 2 ? i
                       : 2 + root_position({-root_list()[i - 2].first,
                                            -root_list()[i - 2].second});
        put("orthogonal.reality.classical." + gauge_id(i),
            "op_eq star(" + gauge_name(i) + ") == " + gauge_name(si));
        put("orthogonal.reality.twisted." + gauge_id(i),
            "op_eq star(" + gauge_name(i, true) + ") == " + gauge_name(si, true));
        put("orthogonal.vertical.classical." + gauge_id(i), "vertical " + gauge_name(i));
        put("orthogonal.vertical.twisted." + gauge_id(i), "vertical " + gauge_name(i, true));
    }
    os << "\n";
    put("orthogonal.hw.W11", "hw W[1,1]");
    put("orthogonal.hw.Y11", "hw " + render_operator_pretty(O.Y11, ctx.cl));
    put("orthogonal.orbit.W11", "orbit_dim W[1,1] == 10");
    put("orthogonal.orbit.u1W11", "orbit_dim u1 . W[1,1] == 35");
    put("orthogonal.orbit.Y11", "orbit_dim " + render_operator_pretty(O.Y11, ctx.cl) + " == 10");
    put("orthogonal.orbit.X10", "orbit_dim " + render_operator_pretty(O.X10, ctx.cl) + " == 0");
    return os.str();
}

} // namespace braidnc
