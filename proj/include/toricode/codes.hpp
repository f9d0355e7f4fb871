#pragma once

#include <span>
#include <string>

#include "toricode/linalg.hpp"
#include "toricode/polytope.hpp"

namespace toricode {

/// A(F_q, P): rows are the (q-1)^m torus points in odometer order over
/// generator powers (last coordinate fastest), columns the lattice points
/// of P in lexicographic order. Every entry is a unit.
struct EvaluationMatrix {
    Field field;
    LatticePolytope polytope;
    Matrix a;
    int m;

    int torus_size() const { return a.rows; }

    /// Coordinates of the torus point indexing row r.
    std::vector<Fe> torus_point(int r) const;
};

struct LinearCode {
    Field field;
    int length;
    int rank;
    Matrix generator; // rank x length, full row rank, in RREF
    std::string role; // "primal" | "dual"
};

EvaluationMatrix evaluation_matrix(const LatticePolytope& p, const Field& field,
                                   long long row_budget = 1'000'000);

LinearCode primal_code(const LatticePolytope& p, const Field& field);

/// r_S = |S| - rk(A_S): dimension of the space of dual words supported
/// inside S.
int r_s(const EvaluationMatrix& a, std::span<const int> s);

/// Number of dual words with support exactly S, by Moebius inversion of
/// q^{r_B} = sum over B subset of S of f_B.
long long f_s(const EvaluationMatrix& a, std::span<const int> s);

/// Same quantity by exhaustive enumeration of Ker(A_S^t); independent
/// check route for f_s. Budget: q^{r_S} <= 10^6.
long long f_s_enumerate(const EvaluationMatrix& a, std::span<const int> s);

/// Exact minimum weight by projective enumeration of message vectors.
/// Budget: (q^k - 1)/(q - 1) <= 10^7 by default.
int dmin_primal_bruteforce(const LinearCode& code, long long budget = 10'000'000);

struct DualDminResult {
    int value;  // exact dmin if `exact`, otherwise the searched cap
    bool exact; // false means dmin > cap
};

/// Minimum distance of the dual code = smallest |S| with rk(A_S) < |S|.
/// Sizes 2 and 3 use duplicate-row and pair-span hashing; larger sizes a
/// pruned subset search up to `cap`.
DualDminResult dmin_dual(const EvaluationMatrix& a, int cap);

} // namespace toricode
