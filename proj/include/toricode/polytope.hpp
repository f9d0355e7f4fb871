#pragma once

#include <vector>

#include "toricode/errors.hpp"

namespace toricode {

using Point = std::vector<long long>;

/// Facet inequality normal . x <= offset with integer, gcd-reduced normal.
struct Facet {
    Point normal;
    long long offset;
};

/// Full-dimensional lattice polytope given by its vertices, with a cached
/// exact H-representation and a cached sorted lattice-point list.
class LatticePolytope {
  public:
    /// Caps: m <= 4 and at most 32 vertices (naive hull budget).
    static LatticePolytope from_vertices(int m, std::vector<Point> vertices);

    int dim() const { return m_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    /// Lexicographically sorted, duplicate-free.
    const std::vector<Point>& lattice_points() const { return lattice_points_; }
    long long lattice_point_count() const { return (long long)lattice_points_.size(); }

    /// [|kP ∩ Z^m| for k = 0..kmax].
    std::vector<long long> ehrhart_counts(int kmax) const;

    /// Numerator coefficients (h0*, ..., hm*) of the Ehrhart series.
    std::vector<long long> h_star() const;

    /// True iff the first dilate with an interior lattice point is the
    /// m-th; cross-checked against the h*-degree criterion.
    bool is_degree_one() const;

    /// m! vol(P) = sum of h* coefficients.
    long long normalized_volume() const;

    /// Number of lattice points minus 1 minus m.
    long long codim() const;

    /// kP contains an interior lattice point.
    bool has_interior_point(long long k) const;

  private:
    friend LatticePolytope make_polytope(int m, std::vector<Point> vertices);
    LatticePolytope() = default;

    long long count_points(long long k) const;

    int m_ = 0;
    std::vector<Point> vertices_;
    std::vector<Facet> facets_;
    std::vector<Point> lattice_points_;
};

/// L(a0,...,a_{s-1}) for a positive nondecreasing sequence.
LatticePolytope lawrence_prism(const std::vector<long long>& a);

/// The triangle Conv((0,0),(2,0),(0,2)).
LatticePolytope exceptional_simplex();

/// Conv(P x {0} ∪ {(0,1)}).
LatticePolytope pyramid(const LatticePolytope& p);

/// f . Conv(0, e1, ..., em) = {x >= 0, sum x_i <= f}.
LatticePolytope dilated_simplex(long long f, int m);

/// The segment [0, c+1].
LatticePolytope interval(long long c);

} // namespace toricode
