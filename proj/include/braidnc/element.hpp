#pragma once

#include "presentation.hpp"

#include <cassert>
#include <optional>
#include <string>
#include <utility>

namespace braidnc {

/// Normal-ordered polynomial in a presentation: finite map from sorted
/// monomial to nonzero Scalar.  Value semantics; the presentation is shared
/// immutable state.
class Element {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLess>;

    Element() = default;
    explicit Element(const Presentation* pres) : pres_(pres) {}

    static Element zero(const Presentation& p) { return Element(&p); }
    static Element unit(const Presentation& p, Scalar c = Scalar(1)) {
        Element e(&p);
        e.add_term(Monomial{}, std::move(c));
        return e;
    }
    static Element gen(const Presentation& p, int i, Scalar c = Scalar(1)) {
        Element e(&p);
        e.add_term(Monomial{{static_cast<std::uint8_t>(i)}}, std::move(c));
        return e;
    }
    static Element monomial(const Presentation& p, Monomial m, Scalar c = Scalar(1)) {
        Element e(&p);
        e.add_term(std::move(m), std::move(c));
        return e;
    }

    const Presentation* presentation() const { return pres_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    friend bool operator==(const Element& x, const Element& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

    void add_term(Monomial m, Scalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element operator-() const {
        Element r(pres_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Element operator+(const Element& x, const Element& y) {
        Element r = x;
        if (!r.pres_) r.pres_ = y.pres_;
        for (auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }
    friend Element operator-(const Element& x, const Element& y) {
        Element r = x;
        if (!r.pres_) r.pres_ = y.pres_;
        for (auto& [m, c] : y.terms_) r.add_term(m, -c);
        return r;
    }
    friend Element operator*(const Scalar& c, const Element& x) {
        Element r(x.pres_);
        for (auto& [m, xc] : x.terms_) r.add_term(m, c * xc);
        return r;
    }
    Element& operator+=(const Element& y) { return *this = *this + y; }
    Element& operator-=(const Element& y) { return *this = *this - y; }

    /// Product with normal ordering: merging two sorted monomials accumulates
    /// q^B for every transposed generator pair.  Not auto-reduced.
    friend Element operator*(const Element& x, const Element& y) {
        const Presentation* p = x.pres_ ? x.pres_ : y.pres_;
        Element r(p);
        for (auto& [mx, cx] : x.terms_)
            for (auto& [my, cy] : y.terms_) {
                auto [m, phase] = merge_monomials(*p, mx, my);
                r.add_term(std::move(m), Scalar::q_power(phase, BaseNumber(1)) * (cx * cy));
            }
        return r;
    }

    /// Merges sorted monomials a, b into normal order; returns the merged
    /// monomial and the integer exponent of the accumulated q^B phase.
    static std::pair<Monomial, int> merge_monomials(const Presentation& p, const Monomial& a,
                                                    const Monomial& b) {
        Monomial out;
        out.idx.reserve(a.idx.size() + b.idx.size());
        int phase = 0;
        std::size_t i = 0, j = 0;
        while (i < a.idx.size() && j < b.idx.size()) {
            if (a.idx[i] <= b.idx[j]) {
                out.idx.push_back(a.idx[i++]);
            } else {
                // b.idx[j] crosses every remaining generator of a.
                for (std::size_t l = i; l < a.idx.size(); ++l)
                    phase += p.swap_phase(p.grade_of_gen(a.idx[l]), p.grade_of_gen(b.idx[j]));
                out.idx.push_back(b.idx[j++]);
            }
        }
        while (i < a.idx.size()) out.idx.push_back(a.idx[i++]);
        while (j < b.idx.size()) out.idx.push_back(b.idx[j++]);
        return {std::move(out), phase};
    }

    /// Common grade of all monomials, or nullopt when inhomogeneous.
    std::optional<Grade> grade() const {
        if (terms_.empty()) return Grade{};
        std::optional<Grade> g;
        for (auto& [m, c] : terms_) {
            Grade gm = pres_->grade_of_monomial(m);
            if (!g)
                g = gm;
            else if (!(*g == gm))
                return std::nullopt;
        }
        return g;
    }

    /// Antilinear antimultiplicative star:  monomial g1..gn maps to the
    /// normal ordering of gn* .. g1* with transposition phases.
    Element star() const {
        Element r(pres_);
        for (auto& [m, c] : terms_) {
            // Reversed conjugated word, then normal order by repeated merging.
            Element word = Element::unit(*pres_, c.conj());
            for (auto it = m.idx.rbegin(); it != m.idx.rend(); ++it)
                word = word * Element::gen(*pres_, pres_->star_of(*it));
            r += word;
        }
        return r;
    }

    /// Largest monomial (normal-order leading term). Requires non-zero.
    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const Scalar& leading_coeff() const { return terms_.rbegin()->second; }

    std::string render() const {
        if (terms_.empty()) return "0";
        std::string out;
        // Render highest monomials first for readability of normal forms?
        // Keep ascending map order: deterministic and matches parse order.
        for (auto& [m, c] : terms_) {
            bool neg = false;
            Scalar ac = c;
            if (!c.is_multi_term()) {
                std::string r = c.render();
                if (!r.empty() && r[0] == '-') {
                    neg = true;
                    ac = -c;
                }
            }
            std::string cs = ac.render();
            if (ac.is_multi_term()) cs = "(" + cs + ")";
            std::string piece;
            if (m.is_unit())
                piece = cs;
            else if (ac.is_one())
                piece = pres_->render_monomial(m);
            else
                piece = cs + "*" + pres_->render_monomial(m);
            if (out.empty())
                out = neg ? "-" + piece : piece;
            else
                out += (neg ? " - " : " + ") + piece;
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = 14695981039346656037ull;
        for (auto& [m, c] : terms_) {
            for (auto i : m.idx) h = (h ^ i) * 1099511628211ull;
            h = (h ^ c.hash()) * 1099511628211ull;
        }
        return h;
    }

private:
    const Presentation* pres_ = nullptr;
    TermMap terms_;
};

namespace detail {

struct RulePos {
    std::size_t rule = 0;
    std::size_t pos_a = 0, pos_b = 0;
};

/// Finds the first applicable rule (fixed rule order) on monomial m with the
/// leftmost occurrence positions; nullopt if m is irreducible.
inline std::optional<RulePos> find_redex(const Presentation& p, const Monomial& m) {
    const auto& rules = p.rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const auto a = rules[r].lhs.idx[0], b = rules[r].lhs.idx[1];
        std::size_t ia = m.idx.size(), ib = m.idx.size();
        for (std::size_t i = 0; i < m.idx.size(); ++i) {
            if (m.idx[i] == a) {
                ia = i;
                break;
            }
        }
        if (ia == m.idx.size()) continue;
        for (std::size_t j = ia + 1; j < m.idx.size(); ++j) {
            if (m.idx[j] == b) {
                ib = j;
                break;
            }
        }
        if (ib == m.idx.size()) continue;
        return RulePos{r, ia, ib};
    }
    return std::nullopt;
}

/// Rewrites one redex of m in context: m = q^phi * (lhs) * rest, so the
/// result is q^phi * rhs * rest.
inline Element rewrite_once(const Presentation& p, const Monomial& m, const Scalar& coeff,
                            const RulePos& rp) {
    const auto& rule = p.rules()[rp.rule];
    const auto a = m.idx[rp.pos_a], b = m.idx[rp.pos_b];
    int phi = 0;
    Monomial rest;
    rest.idx.reserve(m.idx.size() - 2);
    for (std::size_t l = 0; l < m.idx.size(); ++l) {
        if (l == rp.pos_a || l == rp.pos_b) continue;
        rest.idx.push_back(m.idx[l]);
        // Generators sitting left of an extracted slot are crossed when the
        // extracted generator moves to the front.
        if (l < rp.pos_a)
            phi += p.swap_phase(p.grade_of_gen(m.idx[l]), p.grade_of_gen(a));
        if (l < rp.pos_b)
            phi += p.swap_phase(p.grade_of_gen(m.idx[l]), p.grade_of_gen(b));
    }
    Element rhs(&p);
    for (auto& [rm, rc] : rule.rhs_terms) rhs.add_term(rm, rc);
    Element rest_elem = Element::monomial(p, std::move(rest), Scalar::q_power(phi) * coeff);
    return rhs * rest_elem;
}

} // namespace detail

/// Repeatedly rewrites the largest reducible monomial until no rule applies.
/// Deterministic (fixed rule order, leftmost occurrence) and terminating
/// since every step replaces a monomial by strictly smaller ones.
inline Element normal_form(const Element& x, std::size_t step_bound = 1000000) {
    const Presentation* p = x.presentation();
    if (!p || p->rules().empty()) return x;
    Element cur = x;
    std::size_t steps = 0;
    for (;;) {
        // Scan from the largest monomial down for the first reducible one.
        const Monomial* redex_m = nullptr;
        Scalar redex_c;
        std::optional<detail::RulePos> rp;
        for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
            rp = detail::find_redex(*p, it->first);
            if (rp) {
                redex_m = &it->first;
                redex_c = it->second;
                break;
            }
        }
        if (!rp) return cur;
        if (++steps > step_bound)
            throw NonTermination(p->name() + ": rewrite exceeded " +
                                 std::to_string(step_bound) + " steps");
        Monomial m = *redex_m;  // copy before mutating cur
        Element replaced = detail::rewrite_once(*p, m, redex_c, *rp);
        cur.add_term(std::move(m), -redex_c);
        cur += replaced;
    }
}

inline bool is_normal_form(const Element& x) {
    const Presentation* p = x.presentation();
    if (!p) return true;
    for (auto& [m, c] : x.terms())
        if (detail::find_redex(*p, m)) return false;
    return true;
}

/// Transports an element of a quasi-commutative presentation to a companion
/// presentation over the same generator table whose phase form differs.
/// Monomial x1..xk picks up q^{(1/2) sum_{i<j} (B_src - B_dst)(g_i,g_j)}: with
/// B_dst = 0 this realizes the linear identification of the deformed algebra
/// with its classical counterpart (deformed products of generators in sorted
/// order correspond to q^{B/2}-rescaled classical monomials).
inline Element transport(const Element& x, const Presentation& dst) {
    const Presentation& src = *x.presentation();
    Element out(&dst);
    for (auto& [m, c] : x.terms()) {
        int num = 0;  // sum of (B_src - B_dst) over ordered pairs i<j
        for (std::size_t i = 0; i < m.idx.size(); ++i)
            for (std::size_t j = i + 1; j < m.idx.size(); ++j) {
                const Grade& gi = src.grade_of_gen(m.idx[i]);
                const Grade& gj = src.grade_of_gen(m.idx[j]);
                num += src.swap_phase(gi, gj) - dst.swap_phase(gi, gj);
            }
        if (num % 2 != 0)
            throw OddPhaseExponent(src.name() + ": odd transport phase on " +
                                   src.render_monomial(m));
        out.add_term(m, Scalar::q_power(num / 2) * c);
    }
    return out;
}

} // namespace braidnc
