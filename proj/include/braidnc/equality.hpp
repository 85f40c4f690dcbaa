#pragma once

#include "derivation.hpp"
#include "oracle.hpp"

#include <sstream>
#include <string>

namespace braidnc {

/// Outcome of an equality decision, with the path that produced it.
struct EqualityVerdict {
    enum class Status { symbolic_equal, numeric_equal, distinct };
    Status status = Status::distinct;
    double max_residual = 0;
    std::string witness;

    bool equal() const { return status != Status::distinct; }
    bool symbolic() const { return status == Status::symbolic_equal; }
    const char* path() const {
        return status == Status::symbolic_equal ? "symbolic" : "numeric";
    }
};

/// Symbolic-Equal when normal_form(x - y) vanishes; otherwise the numeric
/// oracle decides Numeric-Equal or Distinct.
inline EqualityVerdict equals(const Element& x, const Element& y,
                              const OracleOptions& opt = {}) {
    EqualityVerdict v;
    Element d = normal_form(x - y);
    if (d.is_zero()) {
        v.status = EqualityVerdict::Status::symbolic_equal;
        return v;
    }
    OracleVerdict ov = numeric_identity_check(x, y, opt);
    v.max_residual = ov.max_residual;
    if (ov.equal) {
        v.status = EqualityVerdict::Status::numeric_equal;
    } else {
        v.status = EqualityVerdict::Status::distinct;
        std::ostringstream os;
        os << "seed=" << ov.witness_seed << " theta=" << ov.witness_theta
           << " residual=" << ov.max_residual;
        v.witness = os.str();
    }
    return v;
}

/// Operator equality is extensional: equal action on every generator.
inline EqualityVerdict op_equals(const OperatorExpr& P, const OperatorExpr& Q,
                                 const OracleOptions& opt = {}) {
    const Presentation* p = P.presentation() ? P.presentation() : Q.presentation();
    EqualityVerdict agg;
    agg.status = EqualityVerdict::Status::symbolic_equal;
    if (!p) return agg;  // both zero expressions
    for (std::size_t g = 0; g < p->num_generators(); ++g) {
        Element vx = apply_gen(P, static_cast<int>(g));
        Element vy = apply_gen(Q, static_cast<int>(g));
        EqualityVerdict v = equals(vx, vy, opt);
        agg.max_residual = std::max(agg.max_residual, v.max_residual);
        if (!v.equal()) {
            agg.status = EqualityVerdict::Status::distinct;
            agg.witness = "on " + p->display_name(static_cast<int>(g)) +
                          (v.witness.empty() ? "" : ": " + v.witness);
            return agg;
        }
        if (!v.symbolic() && agg.status == EqualityVerdict::Status::symbolic_equal)
            agg.status = EqualityVerdict::Status::numeric_equal;
    }
    return agg;
}

inline OperatorExpr as_op(const Derivation& d) {
    return OperatorExpr(std::make_shared<Derivation>(d));
}

/// Compares a raw bracket table against a module re-expression.
inline EqualityVerdict table_matches(const Derivation& table, const OperatorExpr& expr,
                                     const OracleOptions& opt = {}) {
    return op_equals(as_op(table), expr, opt);
}

/// Numeric re-verification of a claimed identity between two elements at the
/// oracle grid; used to cross-check every symbolic pass.
inline bool numeric_confirms(const Element& x, const Element& y,
                             const OracleOptions& opt = {}) {
    return numeric_identity_check(x, y, opt).equal;
}

} // namespace braidnc
