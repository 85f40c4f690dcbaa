#pragma once

#include "element.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace braidnc {

/// A braided derivation of a presentation, determined by its grade and its
/// values on the generators; extended to all elements by the braided Leibniz
/// rule  X(a b) = X(a) b + q^{B(g_X, g_a)} a X(b).
struct Derivation {
    std::string name;
    Grade grade;
    const Presentation* pres = nullptr;
    std::vector<Element> values;  // one per generator index

    Derivation() = default;
    Derivation(std::string n, Grade g, const Presentation& p)
        : name(std::move(n)), grade(g), pres(&p), values(p.num_generators(), Element(&p)) {}

    void set_value(int gen, Element v) { values.at(gen) = std::move(v); }
    void set_value(const std::string& gen, Element v) {
        int i = pres->index_of(gen);
        if (i < 0) throw ValidationError(name + ": unknown generator " + gen);
        values.at(i) = std::move(v);
    }
    const Element& value(int gen) const { return values.at(gen); }

    bool values_all_zero() const {
        for (auto& v : values)
            if (!v.is_zero()) return false;
        return true;
    }
};

using DerivationPtr = std::shared_ptr<const Derivation>;

/// Leibniz extension of a single derivation; the result is not reduced.
inline Element apply_raw(const Derivation& X, const Element& a) {
    const Presentation& p = *X.pres;
    Element out(&p);
    for (auto& [m, c] : a.terms()) {
        Grade prefix_grade;
        for (std::size_t i = 0; i < m.idx.size(); ++i) {
            const Element& val = X.values[m.idx[i]];
            if (!val.is_zero()) {
                int phi = p.swap_phase(X.grade, prefix_grade);
                Monomial prefix{{m.idx.begin(), m.idx.begin() + i}};
                Monomial suffix{{m.idx.begin() + i + 1, m.idx.end()}};
                Element t = Element::monomial(p, std::move(prefix), Scalar::q_power(phi) * c) *
                            val * Element::monomial(p, std::move(suffix));
                out += t;
            }
            prefix_grade = prefix_grade + p.grade_of_gen(m.idx[i]);
        }
    }
    return out;
}

/// Left-module combination  sum_i  b_i . X_i  of base derivations.
class OperatorExpr {
public:
    struct Term {
        Element coeff;
        DerivationPtr base;
    };

    OperatorExpr() = default;
    explicit OperatorExpr(DerivationPtr d) {
        const Presentation& p = *d->pres;
        terms_.push_back({Element::unit(p), std::move(d)});
    }
    OperatorExpr(Element coeff, DerivationPtr d) {
        terms_.push_back({std::move(coeff), std::move(d)});
    }

    static OperatorExpr zero() { return OperatorExpr(); }

    const std::vector<Term>& terms() const { return terms_; }
    bool has_terms() const { return !terms_.empty(); }
    const Presentation* presentation() const {
        return terms_.empty() ? nullptr : terms_.front().base->pres;
    }

    friend OperatorExpr operator+(const OperatorExpr& x, const OperatorExpr& y) {
        OperatorExpr r = x;
        for (auto& t : y.terms_) r.terms_.push_back(t);
        return r;
    }
    friend OperatorExpr operator-(const OperatorExpr& x, const OperatorExpr& y) {
        OperatorExpr r = x;
        for (auto& t : y.terms_) r.terms_.push_back({-t.coeff, t.base});
        return r;
    }
    OperatorExpr operator-() const {
        OperatorExpr r;
        for (auto& t : terms_) r.terms_.push_back({-t.coeff, t.base});
        return r;
    }
    friend OperatorExpr operator*(const Scalar& c, const OperatorExpr& x) {
        OperatorExpr r;
        for (auto& t : x.terms_) r.terms_.push_back({c * t.coeff, t.base});
        return r;
    }

    /// Grade of the expression when every term carries the same total grade.
    std::optional<Grade> grade() const {
        std::optional<Grade> g;
        for (auto& t : terms_) {
            if (t.coeff.is_zero()) continue;
            auto gc = t.coeff.grade();
            if (!gc) return std::nullopt;
            Grade total = *gc + t.base->grade;
            if (!g)
                g = total;
            else if (!(*g == total))
                return std::nullopt;
        }
        if (!g) return Grade{};
        return g;
    }

private:
    std::vector<Term> terms_;
};

/// (a . P) with  apply(a . P, b) = a * apply(P, b).
inline OperatorExpr module_scale(const Element& b, const OperatorExpr& P) {
    OperatorExpr r;
    for (auto& t : P.terms()) r = r + OperatorExpr(b * t.coeff, t.base);
    return r;
}

/// Linear application, reduced to normal form.
inline Element apply(const OperatorExpr& P, const Element& a) {
    const Presentation* p = a.presentation();
    Element out(p);
    for (auto& t : P.terms()) {
        if (t.coeff.is_zero()) continue;
        out += t.coeff * apply_raw(*t.base, a);
    }
    return normal_form(out);
}

inline Element apply_gen(const OperatorExpr& P, int gen) {
    const Presentation* p = P.presentation();
    if (!p) return Element();
    return apply(P, Element::gen(*p, gen));
}

namespace detail {

inline Grade require_grade(const OperatorExpr& P, const char* who) {
    auto g = P.grade();
    if (!g) throw InhomogeneousOperand(std::string(who) + ": operand is not graded");
    return *g;
}

} // namespace detail

/// Braided commutator evaluated on every generator:
///   [P,Q](g) = P(Q(g)) - q^{B(g_P, g_Q)} Q(P(g)).
/// The raw table is returned as a derivation of grade g_P + g_Q.
inline Derivation bracket(const OperatorExpr& P, const OperatorExpr& Q,
                          const std::string& name = "[P,Q]") {
    const Presentation& p = *P.presentation();
    Grade gp, gq;
    if (p.form().is_trivial()) {
        gp = P.grade().value_or(Grade{});
        gq = Q.grade().value_or(Grade{});
    } else {
        gp = detail::require_grade(P, "bracket");
        gq = detail::require_grade(Q, "bracket");
    }
    Scalar phase = Scalar::q_power(p.swap_phase(gp, gq));
    Derivation out(name, gp + gq, p);
    for (std::size_t g = 0; g < p.num_generators(); ++g) {
        Element qg = apply_gen(Q, static_cast<int>(g));
        Element pg = apply_gen(P, static_cast<int>(g));
        out.values[g] = normal_form(apply(P, qg) - phase * apply(Q, pg));
    }
    return out;
}

inline Derivation bracket(const DerivationPtr& X, const OperatorExpr& Q,
                          const std::string& name = "[X,Q]") {
    return bracket(OperatorExpr(X), Q, name);
}

/// Star of a base derivation:  X*(a) = -q^{-B(g_X, g_a)} star(X(star(a))),
/// realized on generator values.  The phase convention is pinned by the
/// executable star tests (involutivity, reality of the Cartan pair).
inline Derivation star_derivation(const Derivation& X) {
    const Presentation& p = *X.pres;
    Derivation out(X.name + "*", -X.grade, p);
    for (std::size_t a = 0; a < p.num_generators(); ++a) {
        int partner = p.star_of(static_cast<int>(a));
        int phi = -p.swap_phase(X.grade, p.grade_of_gen(static_cast<int>(a)));
        out.values[a] = normal_form(Scalar::q_power(phi) * -(X.values[partner].star()));
    }
    return out;
}

/// Star of a module expression: (b . X)* = q^{-B(g_b, g_X)} star(b) . X*.
/// Coefficients are split into graded components first.
inline OperatorExpr star_op(const OperatorExpr& P) {
    OperatorExpr out;
    for (auto& t : P.terms()) {
        if (t.coeff.is_zero()) continue;
        auto base_star = std::make_shared<Derivation>(star_derivation(*t.base));
        const Presentation& p = *t.base->pres;
        // Group coefficient monomials by grade.
        std::map<std::array<int, 4>, Element> parts;
        for (auto& [m, c] : t.coeff.terms()) {
            Grade g = p.grade_of_monomial(m);
            auto& e = parts[{g.l1, g.l2, g.r1, g.r2}];
            if (!e.presentation()) e = Element(&p);
            e.add_term(m, c);
        }
        for (auto& [k, b] : parts) {
            Grade gb{k[0], k[1], k[2], k[3]};
            int phi = -p.swap_phase(gb, t.base->grade);
            out = out + OperatorExpr(Scalar::q_power(phi) * b.star(), base_star);
        }
    }
    return out;
}

/// Transport of a derivation along the twist: the image acts on the deformed
/// presentation by D(X)(a) = q^{B(g_X, g_a)/2} X(a), realized on generator
/// values through the shared monomial basis.
inline Derivation twist_derivation(const Derivation& X, const Presentation& twisted) {
    const Presentation& cls = *X.pres;
    if (twisted.num_generators() != cls.num_generators())
        throw ValidationError("twist_derivation: presentations do not share generators");
    Derivation out(X.name + "~", X.grade, twisted);
    for (std::size_t a = 0; a < cls.num_generators(); ++a) {
        int b = twisted.swap_phase(X.grade, twisted.grade_of_gen(static_cast<int>(a)));
        if (b % 2 != 0)
            throw OddPhaseExponent(X.name + ": odd twist phase on generator " +
                                   cls.generator(static_cast<int>(a)).name);
        out.values[a] =
            normal_form(Scalar::q_power(b / 2) * transport(X.values[a], twisted));
    }
    return out;
}

/// Twist transport of a module expression:
///   D(b X) = q^{-B(g_b, g_X)/2} transport(b) . D(X)   for homogeneous b.
inline OperatorExpr twist_op(const OperatorExpr& P, const Presentation& twisted) {
    OperatorExpr out;
    for (auto& t : P.terms()) {
        if (t.coeff.is_zero()) continue;
        auto base_tw = std::make_shared<Derivation>(twist_derivation(*t.base, twisted));
        const Presentation& cls = *t.base->pres;
        std::map<std::array<int, 4>, Element> parts;
        for (auto& [m, c] : t.coeff.terms()) {
            Grade g = cls.grade_of_monomial(m);
            auto& e = parts[{g.l1, g.l2, g.r1, g.r2}];
            if (!e.presentation()) e = Element(&cls);
            e.add_term(m, c);
        }
        for (auto& [k, b] : parts) {
            Grade gb{k[0], k[1], k[2], k[3]};
            int phi = twisted.swap_phase(gb, t.base->grade);
            if (phi % 2 != 0)
                throw OddPhaseExponent("twist_op: odd module phase");
            out = out + OperatorExpr(Scalar::q_power(-phi / 2) * transport(b, twisted),
                                     base_tw);
        }
    }
    return out;
}

} // namespace braidnc
