#pragma once

#include "equality.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <vector>

namespace braidnc {

/// Irreducible so(5) dimension d(s,n) = (1+s)(1+n)(2+s+n)(3+s+2n)/6; zero
/// when a leading factor is non-positive (absent representation).
inline long long dim_irrep(long long s, long long n) {
    if (1 + s <= 0 || 1 + n <= 0) return 0;
    long long prod = (1 + s) * (1 + n) * (2 + s + n) * (3 + s + 2 * n);
    if (prod % 6 != 0) throw ValidationError("dim_irrep: non-integral dimension");
    return prod / 6;
}

/// Shared column interning for joint value tables: a column is one monomial
/// slot of one generator value.
class ColumnIndex {
public:
    int intern(int gen, const Monomial& m) {
        auto key = std::pair{gen, m.idx};
        auto it = cols_.find(key);
        if (it != cols_.end()) return it->second;
        int id = static_cast<int>(cols_.size());
        cols_.emplace(std::move(key), id);
        return id;
    }

private:
    std::map<std::pair<int, std::vector<std::uint8_t>>, int> cols_;
};

using SparseRow = std::vector<std::pair<int, BaseNumber>>;

/// Incremental exact Gaussian elimination over Q(i,sqrt2).
class ExactRank {
public:
    /// Inserts a row; returns true when it enlarges the span.
    bool insert(SparseRow row) {
        normalize(row);
        for (auto& [pcol, prow] : pivots_) {
            const BaseNumber* c = coeff_of(row, pcol);
            if (c) axpy(row, -*c, prow);
        }
        if (row.empty()) return false;
        BaseNumber inv = row.front().second.inverse();
        for (auto& [col, v] : row) v = v * inv;
        int pcol = row.front().first;
        pivots_.emplace_back(pcol, std::move(row));
        // keep pivot list ordered by column for deterministic elimination
        for (std::size_t i = pivots_.size(); i > 1 && pivots_[i - 1].first < pivots_[i - 2].first;
             --i)
            std::swap(pivots_[i - 1], pivots_[i - 2]);
        return true;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    static void normalize(SparseRow& row) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow out;
        for (auto& [c, v] : row) {
            if (!out.empty() && out.back().first == c)
                out.back().second += v;
            else
                out.emplace_back(c, v);
        }
        std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
        row = std::move(out);
    }
    static const BaseNumber* coeff_of(const SparseRow& row, int col) {
        auto it = std::lower_bound(row.begin(), row.end(), col,
                                   [](const auto& e, int c) { return e.first < c; });
        if (it == row.end() || it->first != col) return nullptr;
        return &it->second;
    }
    static void axpy(SparseRow& row, const BaseNumber& c, const SparseRow& other) {
        SparseRow merged;
        merged.reserve(row.size() + other.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < other.size()) {
            if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
                merged.push_back(row[i++]);
            } else if (i == row.size() || other[j].first < row[i].first) {
                BaseNumber v = c * other[j].second;
                if (!v.is_zero()) merged.emplace_back(other[j].first, std::move(v));
                ++j;
            } else {
                BaseNumber v = row[i].second + c * other[j].second;
                if (!v.is_zero()) merged.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        row = std::move(merged);
    }

    std::vector<std::pair<int, SparseRow>> pivots_;
};

/// Scalar must be q-free for exact ranks; the engine only ranks classical
/// instances, where the twist phases are absent.
inline BaseNumber scalar_as_base(const Scalar& s) {
    if (s.is_zero()) return BaseNumber();
    if (!s.is_single_term() || s.terms().begin()->first != 0)
        throw ValidationError("rank computation met a deformed coefficient");
    return s.terms().begin()->second;
}

/// Linear reduction modulo the degree-bounded slice of the relation ideal.
/// Oriented rewriting need not be confluent, and a non-confluent normal form
/// is not linear, which would poison rank computations; reducing against a
/// fixed echelonized basis of monomial multiples of the relations is linear
/// by construction.
class LinearReducer {
public:
    LinearReducer() = default;
    LinearReducer(const Presentation& p, int max_degree) : pres_(&p) {
        std::vector<Element> rows;
        for (auto& rule : p.rules()) {
            Element rel = Element::monomial(p, rule.lhs);
            for (auto& [m, c] : rule.rhs_terms) rel.add_term(m, -c);
            int room = max_degree - 2;
            std::vector<Monomial> mults = monomials_up_to(p, room);
            for (auto& m : mults) rows.push_back(Element::monomial(p, m) * rel);
        }
        // Echelonize by leading monomial, largest first.
        std::sort(rows.begin(), rows.end(), [](const Element& a, const Element& b) {
            return MonomialLess{}(b.leading_monomial(), a.leading_monomial());
        });
        for (auto& r : rows) insert_pivot(std::move(r));
    }

    const Presentation* presentation() const { return pres_; }

    /// Linear: eliminates every monomial that matches a pivot.
    Element reduce(const Element& x) const {
        Element cur = x;
        for (;;) {
            const Monomial* hit = nullptr;
            const Element* pivot = nullptr;
            Scalar coeff;
            for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
                auto p = pivots_.find(it->first.idx);
                if (p != pivots_.end()) {
                    hit = &it->first;
                    pivot = &p->second;
                    coeff = it->second;
                    break;
                }
            }
            if (!hit) return cur;
            cur -= coeff * *pivot;
        }
    }

private:
    static std::vector<Monomial> monomials_up_to(const Presentation& p, int deg) {
        std::vector<Monomial> out;
        out.push_back(Monomial{});
        std::vector<Monomial> prev = out;
        for (int d = 1; d <= deg; ++d) {
            std::vector<Monomial> next;
            for (auto& m : prev) {
                int lo = m.idx.empty() ? 0 : m.idx.back();
                for (std::size_t g = lo; g < p.num_generators(); ++g) {
                    Monomial n = m;
                    n.idx.push_back(static_cast<std::uint8_t>(g));
                    next.push_back(std::move(n));
                }
            }
            for (auto& m : next) out.push_back(m);
            prev = std::move(next);
        }
        return out;
    }

    void insert_pivot(Element r) {
        r = reduce(r);
        if (r.is_zero()) return;
        Scalar inv = r.leading_coeff().inverse_single();
        r = inv * r;
        Monomial lead = r.leading_monomial();
        pivots_.emplace(lead.idx, std::move(r));
    }

    const Presentation* pres_ = nullptr;
    // pivot monomial -> full pivot element with unit leading coefficient
    std::map<std::vector<std::uint8_t>, Element> pivots_;
};

inline SparseRow row_of_table(const Derivation& d, ColumnIndex& cols,
                              const LinearReducer* red = nullptr) {
    SparseRow row;
    for (std::size_t g = 0; g < d.values.size(); ++g) {
        Element v = red ? red->reduce(d.values[g]) : d.values[g];
        for (auto& [m, c] : v.terms())
            row.emplace_back(cols.intern(static_cast<int>(g), m), scalar_as_base(c));
    }
    return row;
}

inline SparseRow row_of_element(const Element& e, ColumnIndex& cols,
                                const LinearReducer* red = nullptr) {
    SparseRow row;
    Element v = red ? red->reduce(e) : e;
    for (auto& [m, c] : v.terms()) row.emplace_back(cols.intern(0, m), scalar_as_base(c));
    return row;
}

/// The four raising roots (positive-root actions for highest-weight tests).
inline const std::array<Root, 4>& raising_roots() {
    static const std::array<Root, 4> r = {Root{1, 0}, Root{0, 1}, Root{1, 1}, Root{1, -1}};
    return r;
}

/// A basis of so(5) as operator expressions, used for adjoint orbits.
struct So5Basis {
    std::vector<OperatorExpr> ops;     // H1, H2, E_r in root order
    std::vector<Grade> grades;

    static So5Basis from(const DerivationPtr& h1, const DerivationPtr& h2,
                         const std::map<Root, DerivationPtr>& roots) {
        So5Basis b;
        b.ops.emplace_back(h1);
        b.grades.push_back(Grade{});
        b.ops.emplace_back(h2);
        b.grades.push_back(Grade{});
        for (auto& r : root_list()) {
            b.ops.emplace_back(roots.at(r));
            b.grades.push_back(Grade{2 * r.first, 2 * r.second, 0, 0});
        }
        return b;
    }
    const OperatorExpr& raising(const Root& r) const {
        for (std::size_t i = 0; i < root_list().size(); ++i)
            if (root_list()[i] == r) return ops[2 + i];
        throw ValidationError("raising root not found");
    }
};

inline Derivation table_of(const OperatorExpr& P, const std::string& name = "table") {
    const Presentation& p = *P.presentation();
    Grade g = P.grade().value_or(Grade{});
    Derivation d(name, g, p);
    for (std::size_t i = 0; i < p.num_generators(); ++i)
        d.values[i] = apply_gen(P, static_cast<int>(i));
    return d;
}

/// Table without any rewriting; rank computations over a non-confluent
/// presentation must stay linear end to end, so values are built by exact
/// multiplication only and reduced by the LinearReducer at row extraction.
inline Derivation raw_table_of(const OperatorExpr& P, const std::string& name = "table") {
    const Presentation& p = *P.presentation();
    Grade g = P.grade().value_or(Grade{});
    Derivation d(name, g, p);
    for (std::size_t i = 0; i < p.num_generators(); ++i) {
        Element acc(&p);
        for (auto& t : P.terms())
            acc += t.coeff * apply_raw(*t.base, Element::gen(p, static_cast<int>(i)));
        d.values[i] = std::move(acc);
    }
    return d;
}

/// Raw adjoint step: [X, T](g) = X(T(g)) - T(X(g)) with no rewriting
/// (classical instances only, where the braiding phase is trivial).
inline Derivation bracket_raw(const Derivation& X, const Derivation& T) {
    const Presentation& p = *T.pres;
    Derivation out("[" + X.name + "," + T.name + "]", X.grade + T.grade, p);
    for (std::size_t g = 0; g < p.num_generators(); ++g)
        out.values[g] = apply_raw(X, T.values[g]) - apply_raw(T, X.values[g]);
    return out;
}

/// True when all four raising actions annihilate the operator (adjoint case).
inline bool is_highest_weight(const OperatorExpr& v, const So5Basis& so5,
                              const OracleOptions& opt = {}) {
    if (!v.grade()) throw InhomogeneousOperand("is_highest_weight: operator is not graded");
    for (auto& r : raising_roots()) {
        Derivation d = bracket(so5.raising(r), v);
        for (auto& val : d.values) {
            Element zero(val.presentation());
            if (!equals(val, zero, opt).equal()) return false;
        }
    }
    return true;
}

/// Element form: the raising derivations must annihilate the element.
inline bool is_highest_weight(const Element& v, const So5Basis& so5,
                              const OracleOptions& opt = {}) {
    for (auto& r : raising_roots()) {
        Element image = apply(so5.raising(r), v);
        Element zero(v.presentation());
        if (!equals(image, zero, opt).equal()) return false;
    }
    return true;
}

struct OrbitResult {
    int dimension = 0;
    std::vector<Derivation> basis;  // independent representatives
};

/// Closes the adjoint orbit of a value table under so(5), deciding linear
/// independence by exact rank over Q(i,sqrt2).  When a reducer is supplied,
/// the orbit iteration stays rewrite-free and rows are reduced linearly.
inline OrbitResult orbit_closure(const Derivation& start, const So5Basis& so5,
                                 const LinearReducer* red = nullptr, std::size_t cap = 200) {
    OrbitResult out;
    ColumnIndex cols;
    ExactRank rank;
    std::deque<Derivation> queue;
    queue.push_back(start);
    while (!queue.empty()) {
        Derivation t = std::move(queue.front());
        queue.pop_front();
        if (!rank.insert(row_of_table(t, cols, red))) continue;
        if (out.basis.size() >= cap)
            throw OrbitBlowup("orbit exceeded " + std::to_string(cap) + " vectors");
        if (red) {
            for (auto& op : so5.ops) {
                if (op.terms().size() != 1)
                    throw ValidationError("orbit: so(5) basis must be pure derivations");
                queue.push_back(bracket_raw(*op.terms().front().base, t));
            }
        } else {
            for (auto& op : so5.ops) queue.push_back(bracket(op, as_op(t)));
        }
        out.basis.push_back(std::move(t));
    }
    out.dimension = rank.rank();
    return out;
}

inline int orbit_span_dim(const OperatorExpr& v, const So5Basis& so5,
                          const LinearReducer* red = nullptr, std::size_t cap = 200) {
    Derivation t = red ? raw_table_of(v) : table_of(v);
    bool zero = true;
    for (auto& val : t.values) {
        Element checkv = red ? red->reduce(val) : normal_form(val);
        zero &= checkv.is_zero();
    }
    if (zero) return 0;
    return orbit_closure(t, so5, red, cap).dimension;
}

/// Joint rank of a set of value tables.
inline int joint_rank(const std::vector<const Derivation*>& tables,
                      const LinearReducer* red = nullptr) {
    ColumnIndex cols;
    ExactRank rank;
    for (auto* t : tables) rank.insert(row_of_table(*t, cols, red));
    return rank.rank();
}

/// Numeric lower-bound cross-check for rank claims: evaluates each table at
/// sampled variety points and ranks the complex matrix with partial
/// pivoting.  An exact rank equal to the numeric rank is two-sided evidence.
inline int numeric_rank(const std::vector<const Derivation*>& tables, int points = 4,
                        std::uint64_t seed = 0x5eedcab1e5ull) {
    if (tables.empty()) return 0;
    const Presentation& p = *tables.front()->pres;
    std::vector<std::vector<std::complex<double>>> rows;
    for (auto* t : tables) {
        std::vector<std::complex<double>> row;
        for (int k = 0; k < points; ++k) {
            SamplePoint pt = sample_point(p, seed + static_cast<std::uint64_t>(k));
            for (auto& v : t->values) row.push_back(eval_element(v, pt, 0.0));
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    std::size_t ncols = rows.front().size();
    for (std::size_t c = 0; c < ncols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t best = rank;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (std::abs(rows[r][c]) > std::abs(rows[best][c])) best = r;
        if (std::abs(rows[best][c]) < 1e-7) continue;
        std::swap(rows[rank], rows[best]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            auto f = rows[r][c] / rows[rank][c];
            for (std::size_t cc = c; cc < ncols; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        ++rank;
    }
    return rank;
}

} // namespace braidnc
