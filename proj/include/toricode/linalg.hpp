#pragma once

#include <span>
#include <vector>

#include "toricode/gf.hpp"

namespace toricode {

/// Dense row-major matrix over GF(q).
struct Matrix {
    Field field;
    int rows = 0;
    int cols = 0;
    std::vector<Fe> a;

    Matrix(Field f, int r, int c) : field(std::move(f)), rows(r), cols(c), a(size_t(r) * c, 0) {}

    Fe at(int r, int c) const { return a[size_t(r) * cols + c]; }
    Fe& at(int r, int c) { return a[size_t(r) * cols + c]; }
    std::span<const Fe> row(int r) const { return {a.data() + size_t(r) * cols, size_t(cols)}; }
};

struct RrefResult {
    Matrix r;
    int rank;
    std::vector<int> pivots; // strictly increasing column indices
};

/// Reduced row echelon form by Gaussian elimination with first-nonzero
/// pivot scan; deterministic.
RrefResult rref(const Matrix& m);

/// Canonical basis of the right null space: one vector per free column of
/// the RREF, free variable set to 1.
std::vector<std::vector<Fe>> kernel(const Matrix& m);

/// Rank of the submatrix made of the given rows. Indices must be distinct
/// and in range.
int rank_of_subset(const Matrix& m, std::span<const int> rows);

/// Incremental row-space tracker over GF(q) that records, for every
/// inserted row that does not increase the rank, the coefficients of one
/// linear dependency among the rows inserted so far.
class DependencyTracker {
  public:
    DependencyTracker(const Field& f, int ncols) : field_(&f), ncols_(ncols) {}

    /// Returns true if the row increased the rank.
    bool insert(std::span<const Fe> row);

    /// Residual of the row after reduction against the current basis is
    /// zero, i.e. the row lies in the span. Does not insert.
    bool in_span(std::span<const Fe> row) const;

    int rank() const { return int(basis_.size()); }
    int inserted() const { return inserted_; }

    /// Dependency coefficient vectors, each padded to inserted() entries;
    /// entry i multiplies the i-th inserted row. Together they span the
    /// left kernel of the inserted row stack.
    std::vector<std::vector<Fe>> dependencies() const;

  private:
    struct BasisRow {
        int pivot;
        std::vector<Fe> vec; // length ncols_, leading entry 1 at pivot
        std::vector<Fe> aug; // combination of inserted rows producing vec
    };

    const Field* field_;
    int ncols_;
    int inserted_ = 0;
    std::vector<BasisRow> basis_;
    std::vector<std::vector<Fe>> deps_;
};

} // namespace toricode
