#include "toricode/codes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricode {

namespace {

void check_subset(const Matrix& m, std::span<const int> s) {
    std::set<int> seen;
    for (int r : s) {
        if (r < 0 || r >= m.rows) fail(Errc::IndexOutOfRange, "row index " + std::to_string(r));
        if (!seen.insert(r).second) fail(Errc::DuplicateIndex, "row index " + std::to_string(r));
    }
}

__int128 ipow128(long long base, int exp) {
    __int128 r = 1;
    const __int128 cap = (__int128)1 << 100;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) fail(Errc::BudgetExceeded, "q^r too large");
    }
    return r;
}

} // namespace

std::vector<Fe> EvaluationMatrix::torus_point(int r) const {
    const int qm1 = field.q() - 1;
    std::vector<Fe> pt(m);
    for (int j = m - 1; j >= 0; --j) {
        pt[j] = field.units()[r % qm1];
        r /= qm1;
    }
    return pt;
}

EvaluationMatrix evaluation_matrix(const LatticePolytope& p, const Field& field, long long row_budget) {
    const int m = p.dim();
    const int qm1 = field.q() - 1;
    for (const Point& n : p.lattice_points()) {
        for (long long c : n) {
            if (c < 0 || c > qm1)
                fail(Errc::PolytopeTooLargeForField,
                     "lattice point exponent outside [0, q-1]");
        }
    }
    long long t = 1;
    for (int j = 0; j < m; ++j) {
        t *= qm1;
        if (t > row_budget) fail(Errc::BudgetExceeded, "torus has too many points");
    }
    const auto& pts = p.lattice_points();
    const int ncols = int(pts.size());
    Matrix a(field, int(t), ncols);
    // row r <-> exponent digits of r base (q-1), last coordinate fastest;
    // the torus point is (g^{d_1}, ..., g^{d_m})
    std::vector<long long> digits(m, 0);
    for (long long r = 0; r < t; ++r) {
        for (int c = 0; c < ncols; ++c) {
            long long exp = 0;
            for (int j = 0; j < m; ++j) exp += digits[j] * pts[c][j];
            a.at(int(r), c) = field.exp_at(exp);
        }
        int j = m - 1;
        while (j >= 0 && digits[j] == qm1 - 1) {
            digits[j] = 0;
            --j;
        }
        if (j >= 0) ++digits[j];
    }
    return {field, p, std::move(a), m};
}

LinearCode primal_code(const LatticePolytope& p, const Field& field) {
    EvaluationMatrix em = evaluation_matrix(p, field);
    Matrix at(field, em.a.cols, em.a.rows);
    for (int i = 0; i < em.a.rows; ++i)
        for (int j = 0; j < em.a.cols; ++j) at.at(j, i) = em.a.at(i, j);
    RrefResult rr = rref(at);
    Matrix gen(field, rr.rank, em.a.rows);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < em.a.rows; ++j) gen.at(i, j) = rr.r.at(i, j);
    return {field, em.a.rows, rr.rank, std::move(gen), "primal"};
}

int r_s(const EvaluationMatrix& a, std::span<const int> s) {
    check_subset(a.a, s);
    std::vector<int> rows(s.begin(), s.end());
    return int(rows.size()) - rank_of_subset(a.a, rows);
}

long long f_s(const EvaluationMatrix& a, std::span<const int> s) {
    check_subset(a.a, s);
    const int n = int(s.size());
    if (n > 20) fail(Errc::BudgetExceeded, "|S| > 20");
    const long long q = a.field.q();
    __int128 total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        DependencyTracker t(a.field, a.a.cols);
        int size = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                t.insert(a.a.row(s[i]));
                ++size;
            }
        }
        int r = size - t.rank();
        __int128 term = ipow128(q, r);
        if ((n - size) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    if (total < 0 || total > (__int128)0x7fffffffffffffffLL)
        fail(Errc::InternalInconsistency, "f_S out of int64 range");
    return (long long)total;
}

long long f_s_enumerate(const EvaluationMatrix& a, std::span<const int> s) {
    check_subset(a.a, s);
    const int n = int(s.size());
    if (n == 0) return 1; // only the zero word has empty support
    DependencyTracker t(a.field, a.a.cols);
    for (int r : s) t.insert(a.a.row(r));
    auto deps = t.dependencies();
    const int d = int(deps.size());
    if (d == 0) return 0;
    __int128 space = ipow128(a.field.q(), d);
    if (space > 1'000'000) fail(Errc::BudgetExceeded, "kernel too large to enumerate");
    const Field& F = a.field;
    long long count = 0;
    std::vector<Fe> coeff(d, 0);
    std::vector<Fe> word(n, 0);
    for (long long it = 0; it < (long long)space; ++it) {
        std::fill(word.begin(), word.end(), 0);
        for (int i = 0; i < d; ++i) {
            if (coeff[i] == 0) continue;
            for (int j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(coeff[i], deps[i][j]));
        }
        bool full = true;
        for (Fe x : word)
            if (x == 0) {
                full = false;
                break;
            }
        if (full) ++count;
        int i = d - 1;
        while (i >= 0 && coeff[i] == F.q() - 1) {
            coeff[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++coeff[i];
    }
    return count;
}

int dmin_primal_bruteforce(const LinearCode& code, long long budget) {
    const Field& F = code.field;
    const int k = code.rank, t = code.length;
    const long long q = F.q();
    __int128 classes = 0, qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    classes = (qk - 1) / (q - 1);
    if (classes > budget) fail(Errc::BudgetExceeded, "projective message space over budget");

    // scaled generator rows, indexed [row][scalar]
    std::vector<std::vector<std::vector<Fe>>> scaled(k);
    for (int i = 0; i < k; ++i) {
        scaled[i].assign(q, std::vector<Fe>(t, 0));
        for (int c = 1; c < q; ++c)
            for (int j = 0; j < t; ++j) scaled[i][Fe(c)][j] = F.mul(Fe(c), code.generator.at(i, j));
    }

    int best = t + 1;
    std::vector<std::vector<Fe>> buf(k + 1, std::vector<Fe>(t, 0));
    // leading coefficient fixed to 1: one representative per projective class
    auto weight = [&](const std::vector<Fe>& w) {
        int nz = 0;
        for (Fe x : w)
            if (x != 0) ++nz;
        return nz;
    };
    auto rec = [&](auto&& self, int pos, int depth) -> void {
        if (pos == k) {
            best = std::min(best, weight(buf[depth]));
            return;
        }
        const auto& prev = buf[depth];
        auto& next = buf[depth + 1];
        for (int c = 0; c < q; ++c) {
            if (c == 0) {
                self(self, pos + 1, depth);
            } else {
                const auto& add = scaled[pos][c];
                for (int j = 0; j < t; ++j) next[j] = F.add(prev[j], add[j]);
                self(self, pos + 1, depth + 1);
            }
        }
    };
    for (int lead = 0; lead < k; ++lead) {
        for (int j = 0; j < t; ++j) buf[0][j] = code.generator.at(lead, j);
        rec(rec, lead + 1, 0);
    }
    return best;
}

DualDminResult dmin_dual(const EvaluationMatrix& em, int cap) {
    if (cap < 3) fail(Errc::BudgetExceeded, "cap must be at least 3");
    const Matrix& a = em.a;
    const Field& F = em.field;
    const int t = a.rows, nc = a.cols;

    // size 2: proportional rows; every entry is a unit so normalize by the
    // first entry
    std::vector<std::vector<Fe>> norm(t);
    {
        std::set<std::vector<Fe>> seen;
        for (int i = 0; i < t; ++i) {
            std::vector<Fe> v(a.row(i).begin(), a.row(i).end());
            Fe s = F.inv(v[0]);
            for (Fe& x : v) x = F.mul(x, s);
            norm[i] = v;
            if (!seen.insert(v).second) return {2, true};
        }
    }

    // size 3: two pairs with the same 2-dimensional row span force three
    // rows in a plane; hash the canonical (RREF) form of each pair span
    {
        std::set<std::vector<Fe>> spans;
        std::vector<Fe> key(2 * nc);
        for (int i = 0; i < t; ++i) {
            for (int j = i + 1; j < t; ++j) {
                // second row reduced by the first (pivot col 0), then the
                // first reduced back: canonical RREF of the pair
                std::vector<Fe> r2(nc);
                Fe c = norm[j][0]; // = 1
                for (int x = 0; x < nc; ++x) r2[x] = F.sub(norm[j][x], F.mul(c, norm[i][x]));
                int piv = -1;
                for (int x = 0; x < nc; ++x)
                    if (r2[x] != 0) {
                        piv = x;
                        break;
                    }
                // piv >= 1; rows are not proportional at this point
                Fe s = F.inv(r2[piv]);
                for (int x = 0; x < nc; ++x) r2[x] = F.mul(r2[x], s);
                std::vector<Fe> r1 = norm[i];
                Fe c1 = r1[piv];
                if (c1 != 0)
                    for (int x = 0; x < nc; ++x) r1[x] = F.sub(r1[x], F.mul(c1, r2[x]));
                std::copy(r1.begin(), r1.end(), key.begin());
                std::copy(r2.begin(), r2.end(), key.begin() + nc);
                if (!spans.insert(key).second) return {3, true};
            }
        }
    }

    // sizes 4..cap: all smaller subsets are now known independent, so a
    // dependent s-set has an independent (s-1)-prefix and a later row in
    // its span
    for (int target = 4; target <= cap; ++target) {
        std::vector<int> chosen;
        bool found = false;
        auto rec = [&](auto&& self, const DependencyTracker& tracker, int start) -> void {
            if (found) return;
            if (int(chosen.size()) == target - 1) {
                for (int kdx = start; kdx < t; ++kdx) {
                    if (tracker.in_span(a.row(kdx))) {
                        found = true;
                        return;
                    }
                }
                return;
            }
            for (int i = start; i < t && !found; ++i) {
                DependencyTracker next = tracker;
                next.insert(a.row(i));
                chosen.push_back(i);
                self(self, next, i + 1);
                chosen.pop_back();
            }
        };
        DependencyTracker root(F, nc);
        rec(rec, root, 0);
        if (found) return {target, true};
    }
    return {cap, false};
}

} // namespace toricode
