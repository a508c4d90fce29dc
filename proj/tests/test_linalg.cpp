#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homkit/mat.hpp"
#include "homkit/module.hpp"

using namespace homkit;

namespace {

Mat random_mat(std::size_t r, std::size_t c, uint32_t p, Rng& rng) {
    Mat m(r, c, p);
    for (auto& v : m.a) v = rng.below(p);
    return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
    CHECK(fp_add(3, 4, 5) == 2);
    CHECK(fp_sub(1, 3, 5) == 3);
    CHECK(fp_mul(3, 4, 5) == 2);
    CHECK(fp_inv(3, 7) == 5);
    CHECK(fp_from_int(-1, 5) == 4);
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(2147483647u));
    CHECK(!is_prime_u32(1));
    CHECK(!is_prime_u32(91));
    for (uint32_t p : {2u, 3u, 101u}) {
        for (uint32_t a = 1; a < std::min(p, 50u); ++a) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
    }
}

TEST_CASE("rref identity and zero") {
    Mat id = Mat::identity(2, 2);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});

    Mat z(3, 3, 2);
    auto rz = rref(z);
    CHECK(rz.reduced == z);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref of the all-ones 2x2 over GF(2)") {
    Mat m = mat_from_rows({{1, 1}, {1, 1}}, 2, 2);
    auto r = rref(m);
    CHECK(r.reduced == mat_from_rows({{1, 1}, {0, 0}}, 2, 2));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel basis examples") {
    CHECK(kernel_basis(Mat::identity(4, 3)).rows == 0);
    Mat z(2, 3, 5);
    Mat k = kernel_basis(z);
    CHECK(k.rows == 3);
    CHECK(k == Mat::identity(3, 5));
    Mat m = mat_from_rows({{1, 1}}, 2, 2);
    CHECK(kernel_basis(m) == mat_from_rows({{1, 1}}, 2, 2));
}

TEST_CASE("solve examples") {
    Mat id = Mat::identity(3, 7);
    Mat b = mat_from_rows({{1}, {2}, {3}}, 1, 7);
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Mat z(2, 2, 2);
    CHECK(!solve(z, mat_from_rows({{1}, {0}}, 1, 2)).has_value());

    Mat a = mat_from_rows({{1, 1}, {0, 0}}, 2, 2);
    auto s = solve(a, mat_from_rows({{1}, {0}}, 1, 2));
    REQUIRE(s.has_value());
    CHECK(*s == mat_from_rows({{1}, {0}}, 1, 2));  // free variable pinned to zero
}

TEST_CASE("kernel, rank and rref properties on random matrices") {
    for (uint32_t p : {2u, 3u, 7u}) {
        Rng rng(42 + p);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
            Mat a = random_mat(r, c, p, rng);
            Mat k = kernel_basis(a);
            CHECK(rank(a) + k.rows == c);
            CHECK(is_zero(mul(a, transpose(k))));
            Mat rr = rref(a).reduced;
            CHECK(rref(rr).reduced == rr);  // idempotent
            // canonical kernel: already in reduced form
            CHECK(row_space(k) == k);
        }
    }
}

TEST_CASE("solve finds solutions exactly when consistent") {
    Rng rng(7);
    for (int trial = 0; trial < 80; ++trial) {
        uint32_t p = trial % 2 ? 2 : 5;
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        Mat a = random_mat(r, c, p, rng);
        Mat x0 = random_mat(c, 2, p, rng);
        Mat b = mul(a, x0);
        auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(mul(a, *x) == b);
    }
}

TEST_CASE("subspace operations") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        uint32_t p = trial % 2 ? 2 : 3;
        std::size_t n = 2 + rng.below(5);
        Mat u = row_space(random_mat(1 + rng.below(3), n, p, rng));
        Mat v = row_space(random_mat(1 + rng.below(3), n, p, rng));
        Mat s = subspace_sum(u, v);
        Mat i = subspace_intersect(u, v);
        CHECK(s.rows + i.rows == u.rows + v.rows);  // dim formula
        for (std::size_t r = 0; r < i.rows; ++r) {
            std::vector<uint32_t> vec(i.a.begin() + r * n, i.a.begin() + (r + 1) * n);
            CHECK(in_row_space(u, vec));
            CHECK(in_row_space(v, vec));
        }
    }
}

TEST_CASE("inverse") {
    Mat a = mat_from_rows({{1, 1}, {0, 1}}, 2, 2);
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(mul(a, *inv) == Mat::identity(2, 2));
    CHECK(!inverse(mat_from_rows({{1, 1}, {1, 1}}, 2, 2)).has_value());
}

TEST_CASE("empty shapes behave") {
    Mat e(0, 3, 2);
    CHECK(rank(e) == 0);
    CHECK(kernel_basis(e) == Mat::identity(3, 2));
    Mat f(3, 0, 2);
    CHECK(rank(f) == 0);
    CHECK(kernel_basis(f).rows == 0);
    CHECK(mul(e, transpose(e)).rows == 0);
}
