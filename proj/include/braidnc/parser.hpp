#pragma once

#include "instanton_suite.hpp"
#include "orthogonal_suite.hpp"

#include <functional>
#include <set>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace braidnc {

// ---------------------------------------------------------------------------
// tokens

struct Token {
    enum class Kind { ident, number, symbol, end };
    Kind kind = Kind::end;
    std::string text;
    long num = 0, den = 1;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string text) : text_(std::move(text)) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept_symbol(const std::string& s) {
        if (tok_.kind == Token::Kind::symbol && tok_.text == s) {
            advance();
            return true;
        }
        return false;
    }
    void expect_symbol(const std::string& s) {
        if (!accept_symbol(s)) fail("expected '" + s + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tok_.line, tok_.col, msg + " (got '" + tok_.text + "')");
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::end;
            tok_.text = "<end>";
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '~') {
            std::size_t start = pos_;
            if (c == '~') ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::Kind::ident;
            tok_.text = text_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Token::Kind::number;
            tok_.text = text_.substr(start, pos_ - start);
            tok_.num = std::stol(tok_.text);
            tok_.den = 1;
        } else {
            tok_.kind = Token::Kind::symbol;
            // multi-char symbols
            static const char* two[] = {"==", "->"};
            for (auto* s : two) {
                if (text_.compare(pos_, 2, s) == 0) {
                    tok_.text = s;
                    pos_ += 2;
                    col_ += 2;
                    return;
                }
            }
            tok_.text = std::string(1, c);
            ++pos_;
        }
        col_ += static_cast<int>(tok_.text.size());
    }

    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// ---------------------------------------------------------------------------
// expression context

/// Name resolution for one algebra instance: generators come from the
/// presentation, named base elements and operators from the instance.
struct ExprContext {
    const Presentation* pres = nullptr;
    std::map<std::string, Element> named;
    std::map<std::string, DerivationPtr> ops;

    static std::string root_suffix(const std::string& head, const Root& r) {
        return head + "[" + std::to_string(r.first) + "," + std::to_string(r.second) + "]";
    }
};

/// Context pair (classical and deformed) for a named instance.
struct InstanceContext {
    std::string name;
    ExprContext cl, tw;
    So5Basis so5_cl, so5_tw;
    const LinearReducer* reducer = nullptr;  // for rank checks, classical only
};

inline InstanceContext make_instanton_context() {
    const InstantonInstance& I = instanton();
    InstanceContext ctx;
    ctx.name = "instanton";
    ctx.cl.pres = &I.cl();
    ctx.tw.pres = &I.tw();
    ctx.cl.named = {{"a", I.alpha}, {"b", I.beta}, {"x", I.xx}};
    ctx.tw.named = {{"ah", I.alpha_h}, {"bh", I.beta_h}, {"x", I.xx_t}};
    ctx.cl.ops["H1"] = I.H1;
    ctx.cl.ops["H2"] = I.H2;
    ctx.tw.ops["~H1"] = I.H1t;
    ctx.tw.ops["~H2"] = I.H2t;
    for (auto& r : root_list()) {
        ctx.cl.ops[ExprContext::root_suffix("E", r)] = I.E.at(r);
        ctx.tw.ops[ExprContext::root_suffix("~E", r)] = I.Et.at(r);
    }
    for (int i = 0; i < 10; ++i) {
        ctx.cl.ops[gauge_name(i)] = I.G[i];
        ctx.tw.ops[gauge_name(i, true)] = I.Gt[i];
    }
    ctx.so5_cl = instanton_so5(false);
    ctx.so5_tw = instanton_so5(true);
    return ctx;
}

inline InstanceContext make_orthogonal_context() {
    const OrthogonalInstance& O = orthogonal();
    InstanceContext ctx;
    ctx.name = "orthogonal";
    ctx.cl.pres = &O.cl();
    ctx.tw.pres = &O.tw();
    ctx.cl.named = {{"u1", O.u1}, {"u2", O.u2}, {"x", O.xx}};
    ctx.tw.named = {{"u1", O.u1t}, {"u2", O.u2t}, {"x", O.xxt}};
    ctx.cl.ops["H1"] = O.H1;
    ctx.cl.ops["H2"] = O.H2;
    ctx.tw.ops["~H1"] = O.H1t;
    ctx.tw.ops["~H2"] = O.H2t;
    for (auto& r : root_list()) {
        ctx.cl.ops[ExprContext::root_suffix("E", r)] = O.E.at(r);
        ctx.tw.ops[ExprContext::root_suffix("~E", r)] = O.Et.at(r);
    }
    for (int i = 0; i < 10; ++i) {
        ctx.cl.ops[gauge_name(i)] = O.G[i];
        ctx.tw.ops[gauge_name(i, true)] = O.Gt[i];
    }
    ctx.so5_cl = orthogonal_so5(false);
    ctx.so5_tw = orthogonal_so5(true);
    ctx.reducer = &orthogonal_reducer();
    return ctx;
}

inline InstanceContext make_instance_context(const std::string& name) {
    if (name == "instanton") return make_instanton_context();
    if (name == "orthogonal") return make_orthogonal_context();
    throw UnknownOperator("unknown instance: " + name);
}

// ---------------------------------------------------------------------------
// expression parsing

class ExprParser {
public:
    ExprParser(Lexer& lx, const ExprContext& ctx) : lx_(lx), ctx_(ctx) {}

    Element parse_element() { return element_sum(); }

    OperatorExpr parse_operator() {
        OperatorExpr out = operator_product();
        for (;;) {
            if (lx_.accept_symbol("+")) {
                out = out + operator_product();
            } else if (lx_.accept_symbol("-")) {
                out = out - operator_product();
            } else {
                return out;
            }
        }
    }

private:
    // --- element grammar ---------------------------------------------------
    Element element_sum() {
        Element acc = element_term();
        for (;;) {
            if (lx_.accept_symbol("+")) {
                acc += element_term();
            } else if (lx_.accept_symbol("-")) {
                acc -= element_term();
            } else {
                return acc;
            }
        }
    }

    Element element_term() {
        bool neg = false;
        while (lx_.accept_symbol("-")) neg = !neg;
        Element acc = element_factor();
        while (lx_.accept_symbol("*")) acc = acc * element_factor();
        return neg ? -acc : acc;
    }

    Element element_factor() {
        Element base = element_atom();
        if (lx_.accept_symbol("^")) {
            bool eneg = lx_.accept_symbol("-");
            const Token t = lx_.take();
            if (t.kind != Token::Kind::number) lx_.fail("expected integer exponent");
            long e = eneg ? -t.num : t.num;
            if (e < 0) lx_.fail("negative powers are only defined for q");
            Element out = Element::unit(*ctx_.pres);
            for (long k = 0; k < e; ++k) out = out * base;
            return out;
        }
        return base;
    }

    Element element_atom() {
        const Token& t = lx_.peek();
        if (t.kind == Token::Kind::number) {
            Token n = lx_.take();
            long num = n.num, den = 1;
            if (lx_.accept_symbol("/")) {
                Token d = lx_.take();
                if (d.kind != Token::Kind::number || d.num == 0)
                    lx_.fail("expected nonzero denominator");
                den = d.num;
            }
            return Element::unit(*ctx_.pres, Scalar(BaseNumber(Rational(num, den))));
        }
        if (t.kind == Token::Kind::symbol && t.text == "(") {
            lx_.take();
            Element e = element_sum();
            lx_.expect_symbol(")");
            return e;
        }
        if (t.kind != Token::Kind::ident) lx_.fail("expected an element");
        Token id = lx_.take();
        if (id.text == "i") return Element::unit(*ctx_.pres, Scalar::i());
        if (id.text == "sqrt2") return Element::unit(*ctx_.pres, Scalar::sqrt2());
        if (id.text == "q") {
            int e = 1;
            if (lx_.accept_symbol("^")) {
                bool eneg = lx_.accept_symbol("-");
                const Token n = lx_.take();
                if (n.kind != Token::Kind::number) lx_.fail("expected integer exponent");
                e = static_cast<int>(eneg ? -n.num : n.num);
            }
            return Element::unit(*ctx_.pres, Scalar::q_power(e));
        }
        if (id.text == "star") {
            lx_.expect_symbol("(");
            Element e = element_sum();
            lx_.expect_symbol(")");
            return e.star();
        }
        // operator application OP(expr)
        std::string opname = maybe_extend_root_name(id.text);
        if (ctx_.ops.count(opname)) {
            lx_.expect_symbol("(");
            Element arg = element_sum();
            lx_.expect_symbol(")");
            return apply(OperatorExpr(ctx_.ops.at(opname)), arg);
        }
        int gi = ctx_.pres->index_of(id.text);
        if (gi >= 0) return Element::gen(*ctx_.pres, gi);
        auto it = ctx_.named.find(id.text);
        if (it != ctx_.named.end()) return it->second;
        throw ParseError(id.line, id.col, "unknown element name '" + id.text + "'");
    }

    // --- operator grammar ----------------------------------------------------
    // A product chain of element factors ending in at most one operator atom;
    // '.' and '*' both act as the product, with '.' conventional before the
    // operator.
    OperatorExpr operator_product() {
        bool neg = false;
        while (lx_.accept_symbol("-")) neg = !neg;
        Element coeff = Element::unit(*ctx_.pres);
        for (;;) {
            if (auto op = try_operator_atom()) {
                OperatorExpr out = module_scale(coeff, *op);
                // allow continued scaling on the right? keep simple: stop.
                return neg ? -out : out;
            }
            coeff = coeff * element_factor();
            if (lx_.accept_symbol("*") || lx_.accept_symbol(".")) continue;
            lx_.fail("expected '.' or '*' followed by an operator");
        }
    }

    std::optional<OperatorExpr> try_operator_atom() {
        const Token& t = lx_.peek();
        if (t.kind == Token::Kind::number && t.num == 0) {
            lx_.take();
            return OperatorExpr::zero();
        }
        if (t.kind == Token::Kind::symbol && t.text == "[") {
            lx_.take();
            OperatorExpr p = parse_operator();
            lx_.expect_symbol(",");
            OperatorExpr q = parse_operator();
            lx_.expect_symbol("]");
            return as_op(bracket(p, q));
        }
        if (t.kind == Token::Kind::symbol && t.text == "(") {
            // lookahead: parenthesized operator sum vs element grouping —
            // resolved by trying the operator parse on a lexer copy.
            Lexer save = lx_;
            try {
                lx_.take();
                OperatorExpr p = parse_operator();
                lx_.expect_symbol(")");
                return p;
            } catch (const ParseError&) {
                lx_ = save;
                return std::nullopt;
            }
        }
        if (t.kind != Token::Kind::ident) return std::nullopt;
        if (t.text == "star") {
            // star(OP) when the inside resolves to an operator
            Lexer save = lx_;
            lx_.take();
            if (!lx_.accept_symbol("(")) {
                lx_ = save;
                return std::nullopt;
            }
            if (auto op = try_operator_atom()) {
                lx_.expect_symbol(")");
                return star_op(*op);
            }
            lx_ = save;
            return std::nullopt;
        }
        Lexer save = lx_;
        Token id = lx_.take();
        std::string opname = maybe_extend_root_name(id.text);
        auto it = ctx_.ops.find(opname);
        if (it == ctx_.ops.end()) {
            lx_ = save;
            return std::nullopt;
        }
        // operator application OP(expr) is an element, not an operator atom
        if (lx_.peek().kind == Token::Kind::symbol && lx_.peek().text == "(") {
            lx_ = save;
            return std::nullopt;
        }
        return OperatorExpr(it->second);
    }

    /// Extends W / E / ~W / ~E heads with a [r1,r2] root suffix.
    std::string maybe_extend_root_name(const std::string& head) {
        if (head != "W" && head != "E" && head != "~W" && head != "~E") return head;
        if (!(lx_.peek().kind == Token::Kind::symbol && lx_.peek().text == "[")) return head;
        lx_.take();
        auto read_int = [&] {
            bool neg = lx_.accept_symbol("-");
            Token n = lx_.take();
            if (n.kind != Token::Kind::number) lx_.fail("expected root component");
            return static_cast<int>(neg ? -n.num : n.num);
        };
        int r1 = read_int();
        lx_.expect_symbol(",");
        int r2 = read_int();
        lx_.expect_symbol("]");
        return ExprContext::root_suffix(head, {r1, r2});
    }

    Lexer& lx_;
    const ExprContext& ctx_;
};

inline Element parse_element(const std::string& text, const ExprContext& ctx) {
    Lexer lx(text);
    ExprParser p(lx, ctx);
    Element e = p.parse_element();
    if (lx.peek().kind != Token::Kind::end) lx.fail("trailing input");
    return e;
}

inline OperatorExpr parse_operator(const std::string& text, const ExprContext& ctx) {
    Lexer lx(text);
    ExprParser p(lx, ctx);
    OperatorExpr e = p.parse_operator();
    if (lx.peek().kind != Token::Kind::end) lx.fail("trailing input");
    return e;
}

// ---------------------------------------------------------------------------
// presentation files

inline std::shared_ptr<Presentation> parse_presentation(const std::string& text) {
    Lexer lx(text);
    std::string name;
    PhaseForm form;
    std::vector<GeneratorInfo> gens;
    std::vector<std::pair<std::string, std::string>> raw_star;  // name -> partner
    struct RawRule {
        std::string lhs, rhs;
        int line;
    };
    std::vector<std::string> rel_monomials;
    std::vector<std::string> rel_rhs;

    auto read_int = [&] {
        bool neg = lx.accept_symbol("-");
        Token t = lx.take();
        if (t.kind != Token::Kind::number) lx.fail("expected integer");
        return static_cast<int>(neg ? -t.num : t.num);
    };
    auto read_pair = [&] {
        lx.expect_symbol("(");
        int a = read_int();
        lx.expect_symbol(",");
        int b = read_int();
        lx.expect_symbol(")");
        return std::pair{a, b};
    };

    std::vector<std::pair<Monomial, std::string>> pending_rules;
    std::shared_ptr<Presentation> pres;

    while (lx.peek().kind != Token::Kind::end) {
        Token head = lx.take();
        if (head.kind != Token::Kind::ident)
            throw ParseError(head.line, head.col, "expected a directive");
        if (head.text == "algebra") {
            Token n = lx.take();
            if (n.kind != Token::Kind::ident) lx.fail("expected algebra name");
            name = n.text;
        } else if (head.text == "form") {
            form.cl = read_int();
            form.cr = read_int();
        } else if (head.text == "gen") {
            Token n = lx.take();
            if (n.kind != Token::Kind::ident) lx.fail("expected generator name");
            GeneratorInfo gi;
            gi.name = n.text;
            Token kw = lx.take();
            if (kw.text != "left") lx.fail("expected 'left'");
            auto l = read_pair();
            kw = lx.take();
            if (kw.text != "right") lx.fail("expected 'right'");
            auto r = read_pair();
            gi.grade = Grade{l.first, l.second, r.first, r.second};
            kw = lx.take();
            if (kw.text != "star") lx.fail("expected 'star'");
            Token partner = lx.take();
            if (partner.kind != Token::Kind::ident) lx.fail("expected star partner name");
            raw_star.emplace_back(gi.name, partner.text);
            gens.push_back(std::move(gi));
        } else if (head.text == "rel") {
            if (!pres) {
                // first rel line: resolve star partners and build the
                // presentation so relation expressions can be parsed.
                for (auto& g : gens) {
                    const std::string& partner = raw_star[&g - gens.data()].second;
                    int idx = -1;
                    for (std::size_t k = 0; k < gens.size(); ++k)
                        if (gens[k].name == partner) idx = static_cast<int>(k);
                    if (idx < 0)
                        throw ValidationError("unknown star partner '" + partner + "' for " +
                                              g.name);
                    g.star_partner = idx;
                }
                pres = std::make_shared<Presentation>(name, gens, form);
            }
            ExprContext ctx;
            ctx.pres = pres.get();
            ExprParser ep(lx, ctx);
            Element lhs = ep.parse_element();
            lx.expect_symbol("->");
            Element rhs = ep.parse_element();
            if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one())
                throw ValidationError(name + ": relation lhs must be a plain monomial");
            std::map<Monomial, Scalar, MonomialLess> rhs_map(rhs.terms().begin(),
                                                             rhs.terms().end());
            pres->add_rule_raw(lhs.terms().begin()->first, std::move(rhs_map));
        } else {
            throw ParseError(head.line, head.col, "unknown directive '" + head.text + "'");
        }
    }
    if (!pres) {
        for (auto& g : gens) {
            const std::string& partner = raw_star[&g - gens.data()].second;
            int idx = -1;
            for (std::size_t k = 0; k < gens.size(); ++k)
                if (gens[k].name == partner) idx = static_cast<int>(k);
            if (idx < 0)
                throw ValidationError("unknown star partner '" + partner + "' for " + g.name);
            g.star_partner = idx;
        }
        if (gens.empty()) throw ParseError(1, 1, "empty presentation file");
        pres = std::make_shared<Presentation>(name, gens, form);
    }
    return pres;
}

inline std::string render_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "algebra " << p.name() << "\n";
    os << "form " << p.form().cl << " " << p.form().cr << "\n";
    for (auto& g : p.generators()) {
        os << "gen " << g.name << " left (" << g.grade.l1 << "," << g.grade.l2 << ") right ("
           << g.grade.r1 << "," << g.grade.r2 << ") star "
           << p.generators()[g.star_partner].name << "\n";
    }
    for (auto& r : p.rules()) {
        Element rhs(&p);
        for (auto& [m, c] : r.rhs_terms) rhs.add_term(m, c);
        os << "rel " << p.render_monomial(r.lhs) << " -> " << rhs.render() << "\n";
    }
    return os.str();
}

/// Renders a module expression as parseable text: `coef . OP` terms.
inline std::string render_operator(const OperatorExpr& P) {
    if (!P.has_terms()) return "0";
    std::string out;
    for (auto& t : P.terms()) {
        if (t.coeff.is_zero()) continue;
        Element coeff = t.coeff;
        bool neg = false;
        if (coeff.size() == 1) {
            std::string r = coeff.render();
            if (!r.empty() && r[0] == '-') {
                neg = true;
                coeff = -coeff;
            }
        }
        std::string cs = coeff.render();
        if (coeff.size() > 1) cs = "(" + cs + ")";
        std::string piece;
        if (cs == "1")
            piece = t.base->name;
        else
            piece = cs + " . " + t.base->name;
        if (out.empty())
            out = neg ? "-" + piece : piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

/// Pretty form: factors each coefficient as scalar * <named base element>
/// when possible (e.g. `sqrt2*q^-1*bh . ~W[1,1]`), falling back to the raw
/// polynomial rendering.
inline std::string render_operator_pretty(const OperatorExpr& P, const ExprContext& ctx) {
    if (!P.has_terms()) return "0";
    // candidate named elements, their stars, and the unit
    std::vector<std::pair<std::string, Element>> cands;
    for (auto& [nm, el] : ctx.named) {
        cands.emplace_back(nm, el);
        if (!(normal_form(el.star()) == normal_form(el)))
            cands.emplace_back("star(" + nm + ")", el.star());
    }
    std::string out;
    for (auto& t : P.terms()) {
        if (t.coeff.is_zero()) continue;
        std::string cs;
        Element coeff = t.coeff;
        bool matched = false, neg = false;
        if (coeff.size() == 1 && coeff.terms().begin()->first.is_unit()) {
            Scalar s = coeff.terms().begin()->second;
            std::string r = s.render();
            if (!s.is_multi_term() && !r.empty() && r[0] == '-') {
                neg = true;
                s = -s;
                r = s.render();
            }
            cs = s.is_multi_term() ? "(" + r + ")" : r;
            matched = true;
        }
        for (auto& [nm, el] : cands) {
            if (matched) break;
            if (el.is_zero()) continue;
            Scalar ratio = coeff.leading_coeff();
            Scalar base_lead = el.leading_coeff();
            if (!base_lead.is_single_term()) continue;
            Scalar s = ratio * base_lead.inverse_single();
            if (!s.is_single_term()) continue;
            if (!(coeff == s * el)) continue;
            std::string r = s.render();
            if (!r.empty() && r[0] == '-') {
                neg = true;
                s = -s;
                r = s.render();
            }
            cs = s.is_one() ? nm : r + "*" + nm;
            matched = true;
        }
        if (!matched) {
            Element c2 = coeff;
            std::string r = c2.render();
            if (c2.size() == 1 && !r.empty() && r[0] == '-') {
                neg = true;
                c2 = -c2;
                r = c2.render();
            }
            cs = c2.size() > 1 ? "(" + r + ")" : r;
        }
        std::string piece = (cs == "1") ? t.base->name : cs + " . " + t.base->name;
        if (out.empty())
            out = neg ? "-" + piece : piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// check suites

struct ParsedSuite {
    std::string name;
    std::string instance;
    std::vector<Check> checks;
};

namespace detail_suite {

/// Scans assert text tokens for a deformed-instance marker.
inline bool mentions_twisted(const std::string& s) {
    if (s.find('~') != std::string::npos) return true;
    if (s.find("ah") != std::string::npos || s.find("bh") != std::string::npos) return true;
    if (s.find('q') != std::string::npos) {
        // `q` as a standalone token (not part of an identifier)
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == 'q' &&
                (i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1]))) &&
                (i + 1 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1]))))
                return true;
    }
    return false;
}

} // namespace detail_suite

/// Parses a check-suite file into deferred checks bound to a built instance.
inline ParsedSuite parse_suite(const std::string& text, const OracleOptions& opt = {}) {
    ParsedSuite out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::shared_ptr<InstanceContext> ctx;
    std::set<std::string> ids;

    while (std::getline(is, line)) {
        ++lineno;
        std::string s = line;
        if (auto h = s.find('#'); h != std::string::npos) s = s.substr(0, h);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
        s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string head;
        ls >> head;
        if (head == "suite") {
            ls >> out.name;
        } else if (head == "instance") {
            std::string inst;
            ls >> inst;
            out.instance = inst;
            ctx = std::make_shared<InstanceContext>(make_instance_context(inst));
        } else if (head == "check") {
            if (!ctx) throw ParseError(lineno, 1, "check before instance directive");
            std::string id, colon, akw, kind;
            ls >> id >> colon >> akw >> kind;
            if (colon != ":" || akw != "assert")
                throw ParseError(lineno, 1, "expected 'check <id> : assert <kind> ...'");
            if (!ids.insert(id).second)
                throw ParseError(lineno, 1, "duplicate check id '" + id + "'");
            std::string rest;
            std::getline(ls, rest);
            auto split_eq = [&](const std::string& b) {
                auto p = b.find("==");
                if (p == std::string::npos)
                    throw ParseError(lineno, 1, "expected '==' in assertion");
                return std::pair{b.substr(0, p), b.substr(p + 2)};
            };
            std::shared_ptr<InstanceContext> c = ctx;
            if (kind == "elem_eq") {
                std::string body = rest;
                std::string tw_kw = "twisted ";
                bool force_tw = false;
                auto bpos = body.find_first_not_of(' ');
                if (bpos != std::string::npos && body.compare(bpos, tw_kw.size(), tw_kw) == 0) {
                    force_tw = true;
                    body = body.substr(bpos + tw_kw.size());
                }
                auto [l, r] = split_eq(body);
                out.checks.push_back({id, [c, l, r, force_tw, opt] {
                    const ExprContext& ec = force_tw ? c->tw
                                            : detail_suite::mentions_twisted(l + r) ? c->tw
                                                                                    : c->cl;
                    return elem_check(parse_element(l, ec), parse_element(r, ec), opt);
                }});
            } else if (kind == "op_eq") {
                auto [l, r] = split_eq(rest);
                out.checks.push_back({id, [c, l, r, opt] {
                    const ExprContext& ec = detail_suite::mentions_twisted(l + r) ? c->tw : c->cl;
                    return op_check(parse_operator(l, ec), parse_operator(r, ec), opt);
                }});
            } else if (kind == "vertical") {
                std::string body = rest;
                out.checks.push_back({id, [c, body, opt] {
                    const ExprContext& ec = detail_suite::mentions_twisted(body) ? c->tw : c->cl;
                    bool twisted = (&ec == &c->tw);
                    OperatorExpr P = parse_operator(body, ec);
                    std::array<Element, 5> res;
                    if (c->name == "instanton")
                        res = instanton().verticality_residuals(P, twisted);
                    else
                        res = orthogonal().verticality_residuals(P, twisted);
                    for (auto& e : res) {
                        Element zero(e.presentation());
                        auto rec = elem_check(e, zero, opt);
                        if (rec.status != "pass") return rec;
                    }
                    return fact_check(true, "vertical", "vertical");
                }});
            } else if (kind == "hw") {
                std::string body = rest;
                out.checks.push_back({id, [c, body, opt] {
                    const ExprContext& ec = detail_suite::mentions_twisted(body) ? c->tw : c->cl;
                    bool twisted = (&ec == &c->tw);
                    OperatorExpr P = parse_operator(body, ec);
                    bool hw = is_highest_weight(P, twisted ? c->so5_tw : c->so5_cl, opt);
                    return fact_check(hw, hw ? "hw" : "raised", "hw");
                }});
            } else if (kind == "orbit_dim") {
                auto [l, r] = split_eq(rest);
                long want = std::stol(r);
                out.checks.push_back({id, [c, l, want] {
                    OperatorExpr P = parse_operator(l, c->cl);
                    int d = orbit_span_dim(P, c->so5_cl, c->reducer);
                    return fact_check(d == want, std::to_string(d), std::to_string(want));
                }});
            } else {
                throw ParseError(lineno, 1, "unknown assertion kind '" + kind + "'");
            }
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + head + "'");
        }
    }
    return out;
}

inline Report run_suite(const ParsedSuite& suite, unsigned jobs = 0) {
    return run_checks(suite.name.empty() ? suite.instance : suite.name, suite.checks, jobs);
}

} // namespace braidnc
