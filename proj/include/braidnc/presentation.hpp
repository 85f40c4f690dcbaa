#pragma once

#include "errors.hpp"
#include "grade.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace braidnc {

/// A normal-ordered monomial: generator indices sorted ascending, with
/// repetition.  The empty monomial is the unit.
struct Monomial {
    std::vector<std::uint8_t> idx;

    std::size_t degree() const { return idx.size(); }
    bool is_unit() const { return idx.empty(); }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: degree first, then the sorted index sequences compared
/// lexicographically (on equal degree the monomial whose first differing
/// slot holds the larger generator index is the larger monomial).  This is
/// multiplicative, so oriented rewriting terminates.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.idx.size() != b.idx.size()) return a.idx.size() < b.idx.size();
        return std::lexicographical_compare(a.idx.begin(), a.idx.end(), b.idx.begin(),
                                            b.idx.end());
    }
};

struct GeneratorInfo {
    std::string name;
    Grade grade;
    int star_partner = -1;
};

class Element;

struct RewriteRule {
    Monomial lhs;          // degree-2 normal-ordered monomial
    // rhs lives in Presentation::rules_rhs_ to avoid an incomplete type here.
};

/// A graded quasi-commutative algebra presentation: generators with grades
/// and star pairing, the phase form, and oriented quadratic rewrite rules.
class Presentation {
public:
    Presentation(std::string name, std::vector<GeneratorInfo> gens, PhaseForm form)
        : name_(std::move(name)), gens_(std::move(gens)), form_(form) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            int p = gens_[i].star_partner;
            if (p < 0 || p >= static_cast<int>(gens_.size()))
                throw ValidationError(name_ + ": generator " + gens_[i].name +
                                      " has out-of-range star partner");
            if (gens_[p].star_partner != static_cast<int>(i))
                throw ValidationError(name_ + ": star pairing is not an involution at " +
                                      gens_[i].name);
            if (!(gens_[p].grade == -gens_[i].grade))
                throw ValidationError(name_ + ": star partner of " + gens_[i].name +
                                      " does not carry the opposite grade");
            by_name_.emplace(gens_[i].name, static_cast<int>(i));
        }
    }

    const std::string& name() const { return name_; }
    const PhaseForm& form() const { return form_; }
    std::size_t num_generators() const { return gens_.size(); }
    const GeneratorInfo& generator(int i) const { return gens_.at(i); }
    const std::vector<GeneratorInfo>& generators() const { return gens_; }

    int index_of(const std::string& gen_name) const {
        auto it = by_name_.find(gen_name);
        return it == by_name_.end() ? -1 : it->second;
    }

    int star_of(int i) const { return gens_.at(i).star_partner; }
    const Grade& grade_of_gen(int i) const { return gens_.at(i).grade; }

    Grade grade_of_monomial(const Monomial& m) const {
        Grade g;
        for (auto i : m.idx) g = g + gens_.at(i).grade;
        return g;
    }

    /// B(g,h) for the presentation's phase form.
    int swap_phase(const Grade& g, const Grade& h) const { return form_.bform(g, h); }

    // Rule storage; rhs elements are appended by add_rule (defined with Element).
    struct StoredRule {
        Monomial lhs;
        std::map<Monomial, Scalar, MonomialLess> rhs_terms;
        Grade grade;  // common grade of lhs and every rhs monomial
    };
    const std::vector<StoredRule>& rules() const { return rules_; }

    void add_rule_raw(Monomial lhs, std::map<Monomial, Scalar, MonomialLess> rhs_terms) {
        if (lhs.degree() != 2)
            throw ValidationError(name_ + ": rule lhs must have degree 2");
        Grade g = grade_of_monomial(lhs);
        MonomialLess less;
        for (auto& [m, c] : rhs_terms) {
            if (!(grade_of_monomial(m) == g))
                throw ValidationError(name_ + ": rule for " + render_monomial(lhs) +
                                      " is not grade-homogeneous");
            if (!less(m, lhs))
                throw ValidationError(name_ + ": rule for " + render_monomial(lhs) +
                                      " is not oriented downward");
        }
        for (auto& r : rules_)
            if (r.lhs == lhs)
                throw ValidationError(name_ + ": duplicate rule lhs " + render_monomial(lhs));
        rules_.push_back({std::move(lhs), std::move(rhs_terms), g});
    }

    std::string render_monomial(const Monomial& m) const {
        if (m.is_unit()) return "1";
        std::string out;
        for (auto i : m.idx) {
            if (!out.empty()) out += "*";
            out += display_name(i);
        }
        return out;
    }

    /// A generator whose star partner has a smaller index displays as
    /// star(<partner>), so conjugated generators need no names of their own.
    std::string display_name(int i) const {
        int p = gens_.at(i).star_partner;
        if (p < static_cast<int>(i)) return "star(" + gens_[p].name + ")";
        return gens_[i].name;
    }

private:
    std::string name_;
    std::vector<GeneratorInfo> gens_;
    PhaseForm form_;
    std::vector<StoredRule> rules_;
    std::map<std::string, int> by_name_;
};

} // namespace braidnc
