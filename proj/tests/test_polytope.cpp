#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "toricode/polytope.hpp"

using namespace toricode;

namespace {

// m! vol(P) for m <= 2 by fanning over facets from the first lattice
// point. Independent of the Ehrhart route used by normalized_volume().
long long nvol_by_decomposition(const LatticePolytope& p) {
    const auto& pts = p.lattice_points();
    if (p.dim() == 1) return pts.back()[0] - pts.front()[0];
    const Point& apex = pts[0];
    long long total = 0;
    for (const Facet& f : p.facets()) {
        long long apex_val =
            std::inner_product(f.normal.begin(), f.normal.end(), apex.begin(), 0LL);
        if (apex_val == f.offset) continue;
        std::vector<Point> on;
        for (const Point& x : pts)
            if (std::inner_product(f.normal.begin(), f.normal.end(), x.begin(), 0LL) == f.offset)
                on.push_back(x);
        std::sort(on.begin(), on.end());
        long long ux = on.back()[0] - on.front()[0], uy = on.back()[1] - on.front()[1];
        long long vx = on.front()[0] - apex[0], vy = on.front()[1] - apex[1];
        total += std::abs(ux * vy - uy * vx);
    }
    return total;
}

} // namespace

TEST_CASE("lawrence_prism") {
    auto p = lawrence_prism({1, 2, 3});
    CHECK(p.dim() == 3);
    CHECK(p.lattice_point_count() == 9);

    auto sq = lawrence_prism({1, 1});
    CHECK(sq.dim() == 2);
    CHECK(sq.lattice_point_count() == 4);
    CHECK(sq.lattice_points() ==
          std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

    CHECK_THROWS_AS(lawrence_prism({2, 1}), Error);
    CHECK_THROWS_AS(lawrence_prism({}), Error);
    CHECK_THROWS_AS(lawrence_prism({0, 1}), Error);

    // |a| + sum(a) lattice points across a small battery
    for (const auto& a : std::vector<std::vector<long long>>{
             {1}, {3}, {1, 1}, {1, 3}, {2, 2}, {1, 2, 3}, {1, 1, 1}, {2, 2, 4}}) {
        auto lp = lawrence_prism(a);
        long long expect = (long long)a.size() + std::accumulate(a.begin(), a.end(), 0LL);
        CHECK(lp.lattice_point_count() == expect);
    }
}

TEST_CASE("exceptional_simplex") {
    auto d2 = exceptional_simplex();
    CHECK(d2.lattice_point_count() == 6);
    CHECK(d2.vertices() == std::vector<Point>{{0, 0}, {2, 0}, {0, 2}});
    CHECK(d2.normalized_volume() == 4);
}

TEST_CASE("pyramid") {
    CHECK(pyramid(interval(0)).lattice_point_count() == 3);
    CHECK(pyramid(exceptional_simplex()).lattice_point_count() == 7);
    auto p = pyramid(pyramid(lawrence_prism({1, 2, 3})));
    CHECK(p.dim() == 5);
    CHECK(p.lattice_point_count() == 11);

    for (const auto& base : {lawrence_prism({1, 2}), exceptional_simplex(), interval(3)}) {
        CHECK(pyramid(base).lattice_point_count() == base.lattice_point_count() + 1);
        CHECK(pyramid(base).dim() == base.dim() + 1);
    }
}

TEST_CASE("dilated_simplex") {
    CHECK(dilated_simplex(2, 2).lattice_point_count() == 6);
    CHECK(dilated_simplex(2, 2).lattice_points() == exceptional_simplex().lattice_points());
    CHECK(dilated_simplex(1, 3).lattice_point_count() == 4);
    CHECK(dilated_simplex(3, 1).lattice_point_count() == 4);
}

TEST_CASE("interval") {
    CHECK(interval(0).lattice_point_count() == 2);
    CHECK(interval(2).lattice_point_count() == 4);
    CHECK(interval(5).codim() == 5);
}

TEST_CASE("from_vertices") {
    auto sq2 = LatticePolytope::from_vertices(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    CHECK(sq2.lattice_point_count() == 9);

    auto d2 = LatticePolytope::from_vertices(2, {{0, 0}, {2, 0}, {0, 2}});
    CHECK(d2.lattice_points() == exceptional_simplex().lattice_points());

    CHECK_THROWS_AS(LatticePolytope::from_vertices(2, {{0, 0}, {1, 1}, {2, 2}}), Error);

    // round trip: rebuilding from constructor vertices keeps the point set
    for (const auto& p : {lawrence_prism({1, 2, 3}), pyramid(exceptional_simplex()),
                          dilated_simplex(3, 2)}) {
        auto rebuilt = LatticePolytope::from_vertices(p.dim(), p.vertices());
        CHECK(rebuilt.lattice_points() == p.lattice_points());
    }
}

TEST_CASE("ehrhart_counts and h_star") {
    auto sq = lawrence_prism({1, 1});
    CHECK(sq.ehrhart_counts(3) == std::vector<long long>{1, 4, 9, 16});
    CHECK(sq.h_star() == std::vector<long long>{1, 1, 0});

    auto d2 = exceptional_simplex();
    CHECK(d2.ehrhart_counts(2) == std::vector<long long>{1, 6, 15});
    CHECK(d2.h_star() == std::vector<long long>{1, 3, 0});

    CHECK(interval(0).h_star() == std::vector<long long>{1, 0});

    // h*_0 = 1 and the series reproduces counts past k = m
    for (const auto& p : {lawrence_prism({2, 3}), pyramid(lawrence_prism({1, 2})),
                          dilated_simplex(2, 3),
                          LatticePolytope::from_vertices(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}})}) {
        auto h = p.h_star();
        CHECK(h[0] == 1);
        const int m = p.dim();
        auto counts = p.ehrhart_counts(m + 2);
        // |kP| = sum_i h*_i C(k - i + m, m)
        auto binom = [](long long n, long long r) {
            if (n < r || r < 0) return 0LL;
            long long v = 1;
            for (long long i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
            return v;
        };
        for (int k = 0; k <= m + 2; ++k) {
            long long expect = 0;
            for (int i = 0; i <= m; ++i) expect += h[i] * binom(k - i + m, m);
            CHECK(counts[k] == expect);
        }
    }
}

TEST_CASE("is_degree_one") {
    CHECK(lawrence_prism({1, 2, 3}).is_degree_one());
    CHECK(exceptional_simplex().is_degree_one());
    CHECK_FALSE(LatticePolytope::from_vertices(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}).is_degree_one());

    // pyramids preserve degree one
    for (const auto& p : {lawrence_prism({1, 1}), lawrence_prism({2, 5}), exceptional_simplex()}) {
        CHECK(p.is_degree_one());
        CHECK(pyramid(p).is_degree_one());
    }
    CHECK_FALSE(dilated_simplex(3, 2).is_degree_one());
}

TEST_CASE("normalized_volume and codim") {
    auto sq = lawrence_prism({1, 1});
    CHECK(sq.normalized_volume() == 2);
    CHECK(sq.codim() == 1);

    auto d2 = exceptional_simplex();
    CHECK(d2.normalized_volume() == 4);
    CHECK(d2.codim() == 3);
    CHECK(d2.normalized_volume() == d2.codim() + 1); // minimal degree

    auto sq2 = LatticePolytope::from_vertices(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}});
    CHECK(sq2.normalized_volume() == 8);
    CHECK(sq2.codim() == 6);

    // independent volume oracle for segments and 2d polytopes
    CHECK(interval(3).normalized_volume() == 4);
    CHECK(nvol_by_decomposition(interval(3)) == 4);
    for (const auto& p : {lawrence_prism({1, 3}), lawrence_prism({2, 2}), exceptional_simplex(),
                          dilated_simplex(3, 2), sq2}) {
        CHECK(p.normalized_volume() == nvol_by_decomposition(p));
    }
}
