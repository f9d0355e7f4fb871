#include <doctest.h>

#include <numeric>
#include <vector>

#include "toricode/codes.hpp"

using namespace toricode;

namespace {

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

long long qpow(long long q, int e) {
    long long r = 1;
    while (e--) r *= q;
    return r;
}

} // namespace

TEST_CASE("evaluation_matrix on [0,2] over GF(7)") {
    Field f7(7, 1);
    auto em = evaluation_matrix(interval(1), f7);
    CHECK(em.a.rows == 6);
    CHECK(em.a.cols == 3);
    // rows are (1, t, t^2) with t = 3^i
    for (int i = 0; i < 6; ++i) {
        Fe t = f7.units()[i];
        CHECK(em.a.at(i, 0) == 1);
        CHECK(em.a.at(i, 1) == t);
        CHECK(em.a.at(i, 2) == f7.mul(t, t));
    }
}

TEST_CASE("evaluation_matrix on the unit square over GF(5)") {
    Field f5(5, 1);
    auto em = evaluation_matrix(lawrence_prism({1, 1}), f5);
    CHECK(em.a.rows == 16);
    CHECK(em.a.cols == 4);
    CHECK(rref(em.a).rank == 4);
    // entry(alpha, n) = prod alpha_i^{n_i}, checked directly
    for (int r = 0; r < em.a.rows; ++r) {
        auto pt = em.torus_point(r);
        for (int c = 0; c < em.a.cols; ++c) {
            const Point& n = em.polytope.lattice_points()[c];
            Fe v = 1;
            for (int j = 0; j < em.m; ++j) v = f5.mul(v, f5.pow(pt[j], n[j]));
            CHECK(em.a.at(r, c) == v);
        }
    }
}

TEST_CASE("evaluation_matrix rejects polytopes outside [0,q-1]^m") {
    Field f5(5, 1);
    CHECK_THROWS_AS(evaluation_matrix(interval(4), f5), Error); // [0,5], exponent 5 > 4
}

TEST_CASE("full column rank whenever P fits") {
    for (auto [p, e] : {std::pair{5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        Field f(p, e);
        for (const auto& poly : {interval(1), lawrence_prism({1, 2}), exceptional_simplex(),
                                 pyramid(lawrence_prism({1, 1}))}) {
            auto em = evaluation_matrix(poly, f);
            CHECK(rref(em.a).rank == em.a.cols);
        }
    }
}

TEST_CASE("primal_code parameters") {
    Field f5(5, 1), f7(7, 1);
    auto c1 = primal_code(exceptional_simplex(), f5);
    CHECK(c1.length == 16);
    CHECK(c1.rank == 6);
    CHECK(c1.role == "primal");

    auto c2 = primal_code(lawrence_prism({1, 2, 3}), f7);
    CHECK(c2.length == 216);
    CHECK(c2.rank == 9);

    auto c3 = primal_code(pyramid(exceptional_simplex()), f5);
    CHECK(c3.length == 64);
    CHECK(c3.rank == 7);
}

TEST_CASE("r_s on the Vandermonde matrix") {
    Field f7(7, 1);
    auto em = evaluation_matrix(interval(1), f7); // 6x3 Vandermonde
    CHECK(r_s(em, std::vector<int>{}) == 0);
    // all |S| = 3 give 0, all |S| = 4 give 1
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                CHECK(r_s(em, std::vector<int>{a, b, c}) == 0);
                for (int d = c + 1; d < 6; ++d)
                    CHECK(r_s(em, std::vector<int>{a, b, c, d}) == 1);
            }
    CHECK_THROWS_AS(r_s(em, std::vector<int>{6}), Error);
}

TEST_CASE("f_s on the Vandermonde matrix") {
    Field f7(7, 1);
    auto em = evaluation_matrix(interval(1), f7);
    CHECK(f_s(em, std::vector<int>{}) == 1);
    CHECK(f_s(em, std::vector<int>{0, 1, 2, 3}) == 6);
    CHECK(f_s(em, std::vector<int>{0, 2, 4}) == 0);
}

TEST_CASE("f_s equals kernel enumeration and satisfies the counting identity") {
    int checked = 0;
    for (auto [p, e] : {std::pair{5, 1}, {7, 1}, {2, 2}}) {
        Field f(p, e);
        for (const auto& poly : {interval(1), lawrence_prism({1, 1}), exceptional_simplex()}) {
            auto em = evaluation_matrix(poly, f);
            const int t = em.torus_size();
            // a spread of subsets: prefixes and strided picks
            std::vector<std::vector<int>> subsets;
            for (int len = 0; len <= std::min(6, t); ++len) {
                std::vector<int> s(iota_vec(len));
                subsets.push_back(s);
            }
            for (int stride : {2, 3})
                for (int start : {0, 1}) {
                    std::vector<int> s;
                    for (int i = start; i < t && int(s.size()) < 6; i += stride) s.push_back(i);
                    subsets.push_back(s);
                }
            for (const auto& s : subsets) {
                long long viaM = f_s(em, s);
                long long viaE = f_s_enumerate(em, s);
                CHECK(viaM == viaE);
                // q^{r_S} = sum over subsets B of S of f_B
                long long total = 0;
                const int n = int(s.size());
                for (int mask = 0; mask < (1 << n); ++mask) {
                    std::vector<int> b;
                    for (int i = 0; i < n; ++i)
                        if (mask & (1 << i)) b.push_back(s[i]);
                    total += f_s(em, b);
                }
                CHECK(total == qpow(f.q(), r_s(em, s)));
                ++checked;
            }
        }
    }
    CHECK(checked >= 50);
}

TEST_CASE("dmin_primal_bruteforce on degree-one surfaces over GF(5)") {
    Field f5(5, 1);
    CHECK(dmin_primal_bruteforce(primal_code(exceptional_simplex(), f5)) == 8);
    CHECK(dmin_primal_bruteforce(primal_code(lawrence_prism({1, 2}), f5)) == 8);
    CHECK(dmin_primal_bruteforce(primal_code(lawrence_prism({2, 2}), f5)) == 6);
}

TEST_CASE("every enumerated codeword respects dmin") {
    // [0,2] over GF(5) is a Reed-Solomon code [4,3,2]
    Field f5(5, 1);
    auto code = primal_code(interval(1), f5);
    CHECK(code.length == 4);
    CHECK(code.rank == 3);
    CHECK(dmin_primal_bruteforce(code) == 2);
}

TEST_CASE("pyramid multiplies primal dmin by q-1") {
    for (int q : {4, 5}) {
        Field f(q == 4 ? 2 : 5, q == 4 ? 2 : 1);
        for (const auto& poly : {interval(1), lawrence_prism({1, 1}), lawrence_prism({1, 2})}) {
            int base = dmin_primal_bruteforce(primal_code(poly, f));
            int lifted = dmin_primal_bruteforce(primal_code(pyramid(poly), f));
            CHECK(lifted == (q - 1) * base);
        }
    }
}

TEST_CASE("dmin_dual") {
    Field f5(5, 1), f7(7, 1);
    SUBCASE("unit square over GF(5): collinear rows give 3") {
        auto r = dmin_dual(evaluation_matrix(lawrence_prism({1, 1}), f5), 10);
        CHECK(r.exact);
        CHECK(r.value == 3);
    }
    SUBCASE("rational normal curve [0,3] over GF(7): 5") {
        auto r = dmin_dual(evaluation_matrix(interval(2), f7), 10);
        CHECK(r.exact);
        CHECK(r.value == 5);
    }
    SUBCASE("exceptional simplex over GF(7): 4") {
        auto r = dmin_dual(evaluation_matrix(exceptional_simplex(), f7), 10);
        CHECK(r.exact);
        CHECK(r.value == 4);
    }
    SUBCASE("cap reached reports inexact") {
        auto r = dmin_dual(evaluation_matrix(interval(2), f7), 4);
        CHECK_FALSE(r.exact);
        CHECK(r.value == 4);
    }
    SUBCASE("always at least 3 with enough lattice points") {
        for (const auto& poly : {interval(1), lawrence_prism({1, 1}), exceptional_simplex(),
                                 lawrence_prism({2, 3})}) {
            auto r = dmin_dual(evaluation_matrix(poly, f7), 12);
            CHECK(r.value >= 3);
        }
    }
    SUBCASE("dual dmin from dependencies matches brute force over the dual code") {
        // smallest dependent subset equals weight enumeration over Ker(A^t)
        auto em = evaluation_matrix(exceptional_simplex(), f5);
        auto r = dmin_dual(em, 6);
        // dual code generator: kernel of A^t as rows
        Matrix at(em.field, em.a.cols, em.a.rows);
        for (int i = 0; i < em.a.rows; ++i)
            for (int j = 0; j < em.a.cols; ++j) at.at(j, i) = em.a.at(i, j);
        auto ker = kernel(at);
        REQUIRE(!ker.empty());
        Matrix gen(em.field, int(ker.size()), em.a.rows);
        for (size_t i = 0; i < ker.size(); ++i)
            for (int j = 0; j < em.a.rows; ++j) gen.at(int(i), j) = ker[i][j];
        LinearCode dual{em.field, em.a.rows, int(ker.size()), rref(gen).r, "dual"};
        CHECK(r.exact);
        CHECK(r.value == dmin_primal_bruteforce(dual));
    }
}
