#include "rxc/instances.hpp"

#include <string>

#include "rxc/error.hpp"

namespace rxc {

void GraphInstance::validate() const {
    if (k < 1) throw Error("cover budget must be at least 1");
    for (const auto& [u, v] : edges) {
        if (u < 1 || v < 1 || u > vertices || v > vertices) {
            throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " references a missing vertex");
        }
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    }
}

void CnfFormula::validate() const {
    for (const auto& clause : clauses) {
        if (clause.empty()) throw Error("empty clause");
        for (const auto& lit : clause) {
            if (lit.var >= variables) throw Error("literal variable " + std::to_string(lit.var) + " out of range");
        }
    }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (const auto& lit : clause) {
            if (assignment.at(lit.var) == lit.positive) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool CnfFormula::is_exact_three_cnf() const {
    for (const auto& clause : clauses) {
        if (clause.size() != 3) return false;
        if (!(clause[0].var < clause[1].var && clause[1].var < clause[2].var)) return false;
    }
    return true;
}

}  // namespace rxc
