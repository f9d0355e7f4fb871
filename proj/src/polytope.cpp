#include "toricode/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace toricode {

namespace {

constexpr long long kScanBudget = 50'000'000; // box points per enumeration

// Bareiss determinant; n <= 5 at desk scale, entries stay within int64.
long long det_bareiss(std::vector<std::vector<long long>> m) {
    const int n = int(m.size());
    if (n == 0) return 1;
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

int integer_rank(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    const int rows = int(m.size()), cols = int(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            long long g = std::gcd(m[rank][col], m[i][col]);
            long long fa = m[i][col] / g, fb = m[rank][col] / g;
            for (int j = col; j < cols; ++j) {
                m[i][j] = fb * m[i][j] - fa * m[rank][j];
            }
            // keep entries small
            long long rowg = 0;
            for (int j = col; j < cols; ++j) rowg = std::gcd(rowg, m[i][j]);
            if (rowg > 1)
                for (int j = col; j < cols; ++j) m[i][j] /= rowg;
        }
        ++rank;
    }
    return rank;
}

// normal of the hyperplane through m affinely independent points, via
// signed maximal minors of the difference matrix; empty if degenerate
Point hyperplane_normal(const std::vector<Point>& pts, int m) {
    std::vector<std::vector<long long>> diff(m - 1, std::vector<long long>(m));
    for (int i = 0; i < m - 1; ++i)
        for (int j = 0; j < m; ++j) diff[i][j] = pts[i + 1][j] - pts[0][j];
    Point n(m, 0);
    bool nonzero = false;
    for (int skip = 0; skip < m; ++skip) {
        std::vector<std::vector<long long>> minor(m - 1, std::vector<long long>(m - 1));
        for (int i = 0; i < m - 1; ++i) {
            int cc = 0;
            for (int j = 0; j < m; ++j) {
                if (j == skip) continue;
                minor[i][cc++] = diff[i][j];
            }
        }
        long long d = det_bareiss(minor);
        n[skip] = (skip % 2 == 0) ? d : -d;
        if (d != 0) nonzero = true;
    }
    if (!nonzero) return {};
    long long g = 0;
    for (long long x : n) g = std::gcd(g, x < 0 ? -x : x);
    for (long long& x : n) x /= g;
    return n;
}

long long dot(const Point& a, const Point& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

LatticePolytope make_polytope(int m, std::vector<Point> vertices) {
    if (m < 1) fail(Errc::NotFullDimensional, "dimension must be positive");
    for (const Point& v : vertices) {
        if (int(v.size()) != m) fail(Errc::NotFullDimensional, "vertex dimension mismatch");
    }
    const int nv = int(vertices.size());
    if (nv < m + 1) fail(Errc::NotFullDimensional, "too few vertices to span R^m");

    {
        std::vector<std::vector<long long>> diff(nv - 1, std::vector<long long>(m));
        for (int i = 1; i < nv; ++i)
            for (int j = 0; j < m; ++j) diff[i - 1][j] = vertices[i][j] - vertices[0][j];
        if (integer_rank(diff) != m) fail(Errc::NotFullDimensional, "affine hull is not full-dimensional");
    }

    LatticePolytope p;
    p.m_ = m;
    p.vertices_ = std::move(vertices);

    // facet candidates: hyperplanes through every m-subset of vertices
    // with all vertices on one side
    std::set<std::pair<Point, long long>> seen;
    std::vector<int> idx(m);
    std::vector<bool> pick(nv, false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
        std::vector<Point> pts;
        for (int i = 0; i < nv; ++i)
            if (pick[i]) pts.push_back(p.vertices_[i]);
        Point n = hyperplane_normal(pts, m);
        if (n.empty()) continue;
        long long b = dot(n, pts[0]);
        bool above = false, below = false;
        for (const Point& v : p.vertices_) {
            long long d = dot(n, v);
            if (d > b) above = true;
            if (d < b) below = true;
        }
        if (above && below) continue;
        if (above) {
            for (long long& x : n) x = -x;
            b = -b;
        }
        if (seen.insert({n, b}).second) p.facets_.push_back({std::move(n), b});
    } while (std::prev_permutation(pick.begin(), pick.end()));

    // lattice points by bounding-box scan
    Point lo(m), hi(m);
    for (int j = 0; j < m; ++j) {
        lo[j] = hi[j] = p.vertices_[0][j];
        for (const Point& v : p.vertices_) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    }
    long long box = 1;
    for (int j = 0; j < m; ++j) {
        box *= hi[j] - lo[j] + 1;
        if (box > kScanBudget) fail(Errc::BudgetExceeded, "bounding box too large");
    }
    Point x = lo;
    for (;;) {
        bool inside = true;
        for (const Facet& f : p.facets_) {
            if (dot(f.normal, x) > f.offset) {
                inside = false;
                break;
            }
        }
        if (inside) p.lattice_points_.push_back(x);
        int j = m - 1;
        while (j >= 0 && x[j] == hi[j]) {
            x[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++x[j];
    }
    std::sort(p.lattice_points_.begin(), p.lattice_points_.end());
    return p;
}

LatticePolytope LatticePolytope::from_vertices(int m, std::vector<Point> vertices) {
    if (m > 4) fail(Errc::BudgetExceeded, "from_vertices supports m <= 4");
    if (vertices.size() > 32) fail(Errc::BudgetExceeded, "from_vertices supports at most 32 vertices");
    return make_polytope(m, std::move(vertices));
}

long long LatticePolytope::count_points(long long k) const {
    if (k == 0) return 1;
    Point lo(m_), hi(m_);
    for (int j = 0; j < m_; ++j) {
        lo[j] = hi[j] = k * vertices_[0][j];
        for (const Point& v : vertices_) {
            lo[j] = std::min(lo[j], k * v[j]);
            hi[j] = std::max(hi[j], k * v[j]);
        }
    }
    long long box = 1;
    for (int j = 0; j < m_; ++j) {
        box *= hi[j] - lo[j] + 1;
        if (box > kScanBudget) fail(Errc::BudgetExceeded, "dilate bounding box too large");
    }
    long long count = 0;
    Point x = lo;
    for (;;) {
        bool inside = true;
        for (const Facet& f : facets_) {
            if (dot(f.normal, x) > k * f.offset) {
                inside = false;
                break;
            }
        }
        if (inside) ++count;
        int j = m_ - 1;
        while (j >= 0 && x[j] == hi[j]) {
            x[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++x[j];
    }
    return count;
}

bool LatticePolytope::has_interior_point(long long k) const {
    Point lo(m_), hi(m_);
    for (int j = 0; j < m_; ++j) {
        lo[j] = hi[j] = k * vertices_[0][j];
        for (const Point& v : vertices_) {
            lo[j] = std::min(lo[j], k * v[j]);
            hi[j] = std::max(hi[j], k * v[j]);
        }
    }
    long long box = 1;
    for (int j = 0; j < m_; ++j) {
        box *= hi[j] - lo[j] + 1;
        if (box > kScanBudget) fail(Errc::BudgetExceeded, "dilate bounding box too large");
    }
    Point x = lo;
    for (;;) {
        bool strict = true;
        for (const Facet& f : facets_) {
            if (dot(f.normal, x) >= k * f.offset) {
                strict = false;
                break;
            }
        }
        if (strict) return true;
        int j = m_ - 1;
        while (j >= 0 && x[j] == hi[j]) {
            x[j] = lo[j];
            --j;
        }
        if (j < 0) break;
        ++x[j];
    }
    return false;
}

std::vector<long long> LatticePolytope::ehrhart_counts(int kmax) const {
    std::vector<long long> counts;
    counts.reserve(kmax + 1);
    for (long long k = 0; k <= kmax; ++k) counts.push_back(count_points(k));
    return counts;
}

std::vector<long long> LatticePolytope::h_star() const {
    const int m = m_;
    std::vector<long long> counts = ehrhart_counts(m);
    std::vector<long long> binom(m + 2, 0); // C(m+1, i)
    binom[0] = 1;
    for (int i = 1; i <= m + 1; ++i) binom[i] = binom[i - 1] * (m + 2 - i) / i;
    std::vector<long long> h(m + 1, 0);
    for (int j = 0; j <= m; ++j) {
        long long s = 0;
        for (int i = 0; i <= j; ++i) {
            long long term = binom[j - i] * counts[i];
            s += ((j - i) % 2 == 0) ? term : -term;
        }
        h[j] = s;
    }
    return h;
}

bool LatticePolytope::is_degree_one() const {
    long long kmin = m_ + 2;
    for (long long k = 1; k <= m_ + 1; ++k) {
        if (has_interior_point(k)) {
            kmin = k;
            break;
        }
    }
    bool by_interior = (kmin == m_);

    std::vector<long long> h = h_star();
    bool by_hstar = h.size() >= 2 && h[1] != 0;
    for (size_t i = 2; i < h.size(); ++i)
        if (h[i] != 0) by_hstar = false;

    if (by_interior != by_hstar)
        fail(Errc::InternalInconsistency, "interior-dilate and h*-degree criteria disagree");
    return by_interior;
}

long long LatticePolytope::normalized_volume() const {
    std::vector<long long> h = h_star();
    long long s = 0;
    for (long long x : h) s += x;
    return s;
}

long long LatticePolytope::codim() const { return lattice_point_count() - 1 - m_; }

LatticePolytope lawrence_prism(const std::vector<long long>& a) {
    if (a.empty()) fail(Errc::EmptySequence, "Lawrence prism needs a nonempty sequence");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= 0) fail(Errc::NonPositiveEntry, "heights must be positive");
        if (i > 0 && a[i] < a[i - 1]) fail(Errc::NotNondecreasing, "heights must be nondecreasing");
    }
    const int s = int(a.size());
    std::vector<Point> verts;
    for (int i = 0; i < s; ++i) { // 0, e_1, ..., e_{s-1}
        Point v(s, 0);
        if (i > 0) v[i - 1] = 1;
        verts.push_back(std::move(v));
    }
    for (int i = 0; i < s; ++i) { // a_0 e_s, e_1 + a_1 e_s, ...
        Point v(s, 0);
        if (i > 0) v[i - 1] = 1;
        v[s - 1] += a[i];
        verts.push_back(std::move(v));
    }
    return make_polytope(s, std::move(verts));
}

LatticePolytope exceptional_simplex() {
    return make_polytope(2, {{0, 0}, {2, 0}, {0, 2}});
}

LatticePolytope pyramid(const LatticePolytope& p) {
    const int m = p.dim();
    std::vector<Point> verts;
    for (const Point& v : p.vertices()) {
        Point w = v;
        w.push_back(0);
        verts.push_back(std::move(w));
    }
    Point apex(m + 1, 0);
    apex[m] = 1;
    verts.push_back(std::move(apex));
    return make_polytope(m + 1, std::move(verts));
}

LatticePolytope dilated_simplex(long long f, int m) {
    if (f < 1 || m < 1) fail(Errc::NonPositiveEntry, "dilated simplex needs f >= 1, m >= 1");
    std::vector<Point> verts;
    verts.push_back(Point(m, 0));
    for (int i = 0; i < m; ++i) {
        Point v(m, 0);
        v[i] = f;
        verts.push_back(std::move(v));
    }
    return make_polytope(m, std::move(verts));
}

LatticePolytope interval(long long c) {
    if (c < 0) fail(Errc::NonPositiveEntry, "interval needs c >= 0");
    return make_polytope(1, {{0}, {c + 1}});
}

} // namespace toricode
