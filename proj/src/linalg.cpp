#include "toricode/linalg.hpp"

#include <set>
#include <string>

namespace toricode {

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    const Field& F = r.field;
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; ++col) {
        int pivot = -1;
        for (int i = lead; i < r.rows; ++i) {
            if (r.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead) {
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(pivot, j), r.at(lead, j));
        }
        Fe s = F.inv(r.at(lead, col));
        for (int j = col; j < r.cols; ++j) r.at(lead, j) = F.mul(r.at(lead, j), s);
        for (int i = 0; i < r.rows; ++i) {
            if (i == lead) continue;
            Fe c = r.at(i, col);
            if (c == 0) continue;
            for (int j = col; j < r.cols; ++j) {
                r.at(i, j) = F.sub(r.at(i, j), F.mul(c, r.at(lead, j)));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    int rank = int(pivots.size());
    return {std::move(r), rank, std::move(pivots)};
}

std::vector<std::vector<Fe>> kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    const Field& F = m.field;
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<std::vector<Fe>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fe> v(m.cols, 0);
        v[free] = 1;
        for (int i = 0; i < rr.rank; ++i) {
            v[rr.pivots[i]] = F.neg(rr.r.at(i, free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_of_subset(const Matrix& m, std::span<const int> rows) {
    std::set<int> seen;
    for (int r : rows) {
        if (r < 0 || r >= m.rows) fail(Errc::IndexOutOfRange, "row index " + std::to_string(r));
        if (!seen.insert(r).second) fail(Errc::DuplicateIndex, "row index " + std::to_string(r));
    }
    DependencyTracker t(m.field, m.cols);
    for (int r : rows) t.insert(m.row(r));
    return t.rank();
}

bool DependencyTracker::insert(std::span<const Fe> row) {
    const Field& F = *field_;
    std::vector<Fe> v(row.begin(), row.end());
    std::vector<Fe> aug(inserted_ + 1, 0);
    aug[inserted_] = 1;
    ++inserted_;
    for (const BasisRow& b : basis_) {
        Fe c = v[b.pivot];
        if (c == 0) continue;
        for (int j = 0; j < ncols_; ++j) v[j] = F.sub(v[j], F.mul(c, b.vec[j]));
        for (size_t j = 0; j < b.aug.size(); ++j) aug[j] = F.sub(aug[j], F.mul(c, b.aug[j]));
    }
    int pivot = -1;
    for (int j = 0; j < ncols_; ++j) {
        if (v[j] != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) {
        deps_.push_back(std::move(aug));
        return false;
    }
    Fe s = F.inv(v[pivot]);
    for (int j = 0; j < ncols_; ++j) v[j] = F.mul(v[j], s);
    for (Fe& x : aug) x = F.mul(x, s);
    basis_.push_back({pivot, std::move(v), std::move(aug)});
    return true;
}

bool DependencyTracker::in_span(std::span<const Fe> row) const {
    const Field& F = *field_;
    std::vector<Fe> v(row.begin(), row.end());
    for (const BasisRow& b : basis_) {
        Fe c = v[b.pivot];
        if (c == 0) continue;
        for (int j = 0; j < ncols_; ++j) v[j] = F.sub(v[j], F.mul(c, b.vec[j]));
    }
    for (Fe x : v)
        if (x != 0) return false;
    return true;
}

std::vector<std::vector<Fe>> DependencyTracker::dependencies() const {
    std::vector<std::vector<Fe>> out = deps_;
    for (auto& d : out) d.resize(inserted_, 0);
    return out;
}

} // namespace toricode
