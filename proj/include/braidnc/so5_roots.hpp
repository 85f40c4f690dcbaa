#pragma once

#include "derivation.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace braidnc {

using Root = std::pair<int, int>;

/// The eight so(5) roots in the fixed engine order.
inline const std::array<Root, 8>& root_list() {
    static const std::array<Root, 8> roots = {
        Root{1, 0}, Root{-1, 0}, Root{0, 1}, Root{0, -1},
        Root{1, 1}, Root{-1, -1}, Root{1, -1}, Root{-1, 1}};
    return roots;
}

inline int wedge(const Root& r, const Root& s) {
    return r.first * s.second - r.second * s.first;
}

inline std::string root_tag(const Root& r) {
    return "[" + std::to_string(r.first) + "," + std::to_string(r.second) + "]";
}

/// Gauge generator labels: indices 0,1 are the Cartan pair K1,K2 and 2..9
/// are W_r in root order.
inline std::string gauge_name(int i, bool twisted = false) {
    std::string pre = twisted ? "~" : "";
    if (i == 0) return pre + "K1";
    if (i == 1) return pre + "K2";
    return pre + "W" + root_tag(root_list()[i - 2]);
}

inline int root_position(const Root& r) {
    for (std::size_t i = 0; i < root_list().size(); ++i)
        if (root_list()[i] == r) return static_cast<int>(i);
    throw ValidationError("unknown root " + root_tag(r));
}

/// Validates that a Cartan pair and eight root vectors close so(5) with
/// unit structure constants; returns N_rs (0 where r+s is not a root).
/// Throws ValidationError naming the failing identity.
inline std::array<std::array<int, 8>, 8> so5_closure_constants(
    const DerivationPtr& H1, const DerivationPtr& H2,
    const std::map<Root, DerivationPtr>& E) {
    const Presentation& p = *H1->pres;
    std::size_t n = p.num_generators();
    std::array<std::array<int, 8>, 8> N{};
    auto val_eq = [](const Element& a, const Element& b) {
        return normal_form(a - b).is_zero();
    };
    for (auto& r : root_list()) {
        Derivation h1e = bracket(OperatorExpr(H1), OperatorExpr(E.at(r)));
        Derivation h2e = bracket(OperatorExpr(H2), OperatorExpr(E.at(r)));
        for (std::size_t g = 0; g < n; ++g) {
            if (!val_eq(h1e.values[g], Scalar(BaseNumber(r.first)) * E.at(r)->values[g]) ||
                !val_eq(h2e.values[g], Scalar(BaseNumber(r.second)) * E.at(r)->values[g]))
                throw ValidationError("so(5) closure: Cartan action fails on E" + root_tag(r));
        }
        Derivation ee =
            bracket(OperatorExpr(E.at(r)), OperatorExpr(E.at({-r.first, -r.second})));
        for (std::size_t g = 0; g < n; ++g) {
            Element want = Scalar(BaseNumber(r.first)) * H1->values[g] +
                           Scalar(BaseNumber(r.second)) * H2->values[g];
            if (!val_eq(ee.values[g], want))
                throw ValidationError("so(5) closure: [E,E^-] fails on E" + root_tag(r));
        }
    }
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            Root r = root_list()[i], s = root_list()[j];
            Root sum{r.first + s.first, r.second + s.second};
            bool is_root = false;
            for (auto& t : root_list()) is_root |= (t == sum);
            if (sum == Root{0, 0}) continue;
            Derivation lhs = bracket(OperatorExpr(E.at(r)), OperatorExpr(E.at(s)));
            if (!is_root) {
                if (!lhs.values_all_zero())
                    throw ValidationError("so(5) closure: [E,E] not zero outside roots");
                continue;
            }
            const Derivation& target = *E.at(sum);
            int fit = 0;
            for (std::size_t g = 0; g < n && fit == 0; ++g) {
                if (target.values[g].is_zero() || lhs.values[g].is_zero()) continue;
                Scalar ratio =
                    lhs.values[g].leading_coeff() * target.values[g].leading_coeff().inverse_single();
                if (ratio == Scalar(1)) fit = 1;
                if (ratio == Scalar(-1)) fit = -1;
            }
            if (fit == 0) throw ValidationError("so(5) closure: N_rs not +-1");
            for (std::size_t g = 0; g < n; ++g)
                if (!val_eq(lhs.values[g], Scalar(BaseNumber(fit)) * target.values[g]))
                    throw ValidationError("so(5) closure: [E,E] table mismatch at " +
                                          root_tag(r) + root_tag(s));
            N[i][j] = fit;
        }
    return N;
}

} // namespace braidnc
