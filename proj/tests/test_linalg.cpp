#include <doctest.h>

#include <random>

#include "toricode/linalg.hpp"

using namespace toricode;

namespace {

Matrix from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
    Matrix m(f, int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = Fe(rows[i][j]);
    return m;
}

// Vandermonde rows (1, t, t^2) at the first four units of GF(7)
Matrix vandermonde_gf7() {
    Field f(7, 1);
    Matrix m(f, 4, 3);
    const int ts[4] = {1, 3, 2, 6};
    for (int i = 0; i < 4; ++i) {
        m.at(i, 0) = 1;
        m.at(i, 1) = Fe(ts[i]);
        m.at(i, 2) = Fe(ts[i] * ts[i] % 7);
    }
    return m;
}

bool mat_vec_zero(const Matrix& m, const std::vector<Fe>& v) {
    for (int i = 0; i < m.rows; ++i) {
        Fe s = 0;
        for (int j = 0; j < m.cols; ++j) s = m.field.add(s, m.field.mul(m.at(i, j), v[j]));
        if (s != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("rref basics") {
    Field f7(7, 1);
    auto id = from_rows(f7, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto rr = rref(id);
    CHECK(rr.rank == 3);
    CHECK(rr.pivots == std::vector<int>{0, 1, 2});

    Matrix zero(f7, 2, 5);
    CHECK(rref(zero).rank == 0);
    CHECK(rref(zero).pivots.empty());

    CHECK(rref(vandermonde_gf7()).rank == 3);
}

TEST_CASE("rref is idempotent") {
    Field f5(5, 1);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        Matrix m(f5, 4, 5);
        for (Fe& x : m.a) x = Fe(rng() % 5);
        auto r1 = rref(m);
        auto r2 = rref(r1.r);
        CHECK(r1.r.a == r2.r.a);
    }
}

TEST_CASE("kernel basics") {
    Field f7(7, 1);
    auto id = from_rows(f7, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(kernel(id).empty());

    Field f5(5, 1);
    Matrix zero(f5, 2, 3);
    CHECK(kernel(zero).size() == 3);

    Field f3(3, 1);
    auto row = from_rows(f3, {{1, 1}});
    auto ker = kernel(row);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<Fe>{2, 1}); // (-1, 1)
}

TEST_CASE("kernel vectors annihilate and dimensions add up") {
    std::mt19937_64 rng(3);
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        Field f(p, e);
        for (int it = 0; it < 40; ++it) {
            Matrix m(f, 3, 4);
            for (Fe& x : m.a) x = Fe(rng() % f.q());
            auto ker = kernel(m);
            CHECK(int(ker.size()) + rref(m).rank == m.cols);
            for (const auto& v : ker) CHECK(mat_vec_zero(m, v));
        }
    }
}

TEST_CASE("rank equals transpose rank, exhaustive 3x3 over GF(2) and GF(3)") {
    for (int p : {2, 3}) {
        Field f(p, 1);
        const int total = p * p * p * p * p * p * p * p * p;
        for (int code = 0; code < total; ++code) {
            Matrix m(f, 3, 3), mt(f, 3, 3);
            int v = code;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    m.at(i, j) = Fe(v % p);
                    mt.at(j, i) = Fe(v % p);
                    v /= p;
                }
            CHECK(rref(m).rank == rref(mt).rank);
        }
    }
}

TEST_CASE("rank_of_subset") {
    auto m = vandermonde_gf7();
    CHECK(rank_of_subset(m, std::vector<int>{}) == 0);
    CHECK(rank_of_subset(m, std::vector<int>{0, 1, 2}) == 3);
    CHECK(rank_of_subset(m, std::vector<int>{1, 2, 3}) == 3);
    CHECK(rank_of_subset(m, std::vector<int>{0, 1, 2, 3}) == 3);
    CHECK_THROWS_AS(rank_of_subset(m, std::vector<int>{0, 0}), Error);
    CHECK_THROWS_AS(rank_of_subset(m, std::vector<int>{4}), Error);
}

TEST_CASE("DependencyTracker records left-kernel combinations") {
    Field f7(7, 1);
    auto m = vandermonde_gf7();
    DependencyTracker t(f7, 3);
    for (int i = 0; i < 4; ++i) t.insert(m.row(i));
    CHECK(t.rank() == 3);
    auto deps = t.dependencies();
    REQUIRE(deps.size() == 1);
    // the dependency really combines the rows to zero
    std::vector<Fe> acc(3, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) acc[j] = f7.add(acc[j], f7.mul(deps[0][i], m.at(i, j)));
    CHECK(acc == std::vector<Fe>{0, 0, 0});
    // Lagrange-type dependency on distinct nodes has full support
    for (Fe x : deps[0]) CHECK(x != 0);
}
