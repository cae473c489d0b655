#include <doctest.h>

#include <random>

#include "swcert/linalg.hpp"

using namespace swcert;

namespace {

MatFq random_matrix(const FieldPtr& F, int r, int c, std::mt19937& rng) {
    MatFq M(F, r, c);
    std::uniform_int_distribution<int> d(0, F->q() - 1);
    for (auto& x : M.a) x = d(rng);
    return M;
}

bool row_is_zero(const MatFq& M, int r) {
    for (int j = 0; j < M.cols; ++j)
        if (M.at(r, j) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("rref examples") {
    auto f2 = Field::make(2, 1);
    auto I = MatFq::identity(f2, 2);
    auto r1 = rref(I);
    CHECK(r1.R == I);
    CHECK(r1.pivots == std::vector<int>{0, 1});
    CHECK(r1.rank == 2);

    auto M = MatFq::from_rows(f2, {{1, 1}, {1, 1}});
    auto r2 = rref(M);
    CHECK(r2.R == MatFq::from_rows(f2, {{1, 1}, {0, 0}}));
    CHECK(r2.rank == 1);

    auto f3 = Field::make(3, 1);
    auto r3 = rref(MatFq::from_rows(f3, {{0, 1}, {1, 0}}));
    CHECK(r3.R == MatFq::identity(f3, 2));
    CHECK(r3.rank == 2);
}

TEST_CASE("rref properties on random matrices") {
    std::mt19937 rng(1234);
    for (int q : {2, 3, 4}) {
        auto F = Field::make_q(q);
        for (int trial = 0; trial < 50; ++trial) {
            int r = 1 + (int)(rng() % 5), c = 1 + (int)(rng() % 5);
            MatFq M = random_matrix(F, r, c, rng);
            auto rr = rref(M);
            CHECK(rref(rr.R).R == rr.R);                       // idempotence
            CHECK(rr.rank == rref(M.transpose()).rank);        // row rank = column rank
            CHECK((int)rr.pivots.size() == rr.rank);
            CHECK(std::is_sorted(rr.pivots.begin(), rr.pivots.end()));
        }
    }
}

TEST_CASE("kernel_fq") {
    auto f2 = Field::make(2, 1);
    auto K = kernel_fq(MatFq::from_rows(f2, {{1}, {1}}));
    CHECK(K == MatFq::from_rows(f2, {{1, 1}}));

    CHECK(kernel_fq(MatFq::identity(f2, 3)).rows == 0);

    auto f3 = Field::make(3, 1);
    MatFq Z(f3, 2, 2);
    CHECK(kernel_fq(Z) == MatFq::identity(f3, 2));

    std::mt19937 rng(99);
    for (int q : {2, 3}) {
        auto F = Field::make_q(q);
        for (int trial = 0; trial < 40; ++trial) {
            int r = 1 + (int)(rng() % 4), c = 1 + (int)(rng() % 4);
            MatFq M = random_matrix(F, r, c, rng);
            MatFq K2 = kernel_fq(M);
            CHECK(K2.rows == r - rref(M).rank);  // rank-nullity
            for (int i = 0; i < K2.rows; ++i) {
                auto img = apply_row(K2.row(i), M);
                for (Fel x : img) CHECK(x == 0);
            }
            CHECK(rref(K2).R == K2);  // canonical basis
        }
    }
}

TEST_CASE("solve_right") {
    auto f2 = Field::make(2, 1);
    auto I = MatFq::identity(f2, 3);
    auto x = solve_right(I, {1, 0, 1});
    REQUIRE(x);
    CHECK(*x == std::vector<Fel>{1, 0, 1});

    auto M = MatFq::from_rows(f2, {{1, 1}});
    CHECK(!solve_right(M, {1, 0}));
    auto y = solve_right(M, {1, 1});
    REQUIRE(y);
    CHECK(*y == std::vector<Fel>{1});

    CHECK_THROWS_AS(solve_right(M, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("integer kernel examples") {
    {
        MatZ M(2, 1);
        M.at(0, 0) = 1;
        M.at(1, 0) = -1;
        auto K = integer_kernel(M);
        CHECK(K.rank == 1);
        REQUIRE(K.basis.rows == 1);
        CHECK(K.basis.at(0, 0) == 1);
        CHECK(K.basis.at(0, 1) == 1);
    }
    {
        MatZ M(2, 1);
        M.at(0, 0) = 2;
        M.at(1, 0) = -1;
        auto K = integer_kernel(M);
        REQUIRE(K.basis.rows == 1);
        CHECK(K.basis.at(0, 0) == 1);
        CHECK(K.basis.at(0, 1) == 2);
    }
    {
        MatZ M(1, 1);
        M.at(0, 0) = 0;
        auto K = integer_kernel(M);
        CHECK(K.rank == 0);
        REQUIRE(K.basis.rows == 1);
        CHECK(K.basis.at(0, 0) == 1);
    }
    {
        // saturation: the basis must span the whole kernel lattice, not a
        // finite-index sublattice.  Kernel of [[2],[2],[4]] is
        // {x : x_1 + x_2 + 2 x_3 = 0}, whose HNF basis is computed by hand.
        MatZ M(3, 1);
        M.at(0, 0) = 2;
        M.at(1, 0) = 2;
        M.at(2, 0) = 4;
        auto K = integer_kernel(M);
        CHECK(K.rank == 1);
        REQUIRE(K.basis.rows == 2);
        std::vector<long> expect{1, 1, -1, 0, 2, -1};
        for (int i = 0; i < 6; ++i) CHECK(K.basis.a[i] == expect[i]);
    }
}

TEST_CASE("integer kernel properties on random matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + (int)(rng() % 5), c = 1 + (int)(rng() % 5);
        MatZ M(r, c);
        for (auto& x : M.a) x = d(rng);
        auto K = integer_kernel(M);
        CHECK(K.basis.rows == r - K.rank);
        for (int i = 0; i < K.basis.rows; ++i) {
            // x M = 0 exactly
            for (int j = 0; j < c; ++j) {
                mpz_class s = 0;
                for (int t = 0; t < r; ++t) s += K.basis.at(i, t) * M.at(t, j);
                CHECK(s == 0);
            }
            // primitive rows
            mpz_class g = 0;
            for (int j = 0; j < r; ++j)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), K.basis.at(i, j).get_mpz_t());
            CHECK(g == 1);
        }
        // deterministic canonical form
        auto K2 = integer_kernel(M);
        CHECK(K.basis.a == K2.basis.a);
        // the basis spans a lattice of full kernel rank: echelon rows are
        // independent, and there are exactly r - rank of them
        MatZ H = hermite_normal_form(K.basis);
        CHECK(H.rows == K.basis.rows);
        CHECK(H.a == K.basis.a);  // HNF is idempotent on the returned basis
    }
}

TEST_CASE("matrix inverse") {
    auto f3 = Field::make(3, 1);
    auto M = MatFq::from_rows(f3, {{1, 2}, {0, 1}});
    auto inv = inverse(M);
    REQUIRE(inv);
    CHECK(mat_mul(M, *inv) == MatFq::identity(f3, 2));
    CHECK(mat_mul(*inv, M) == MatFq::identity(f3, 2));
    CHECK(!inverse(MatFq::from_rows(f3, {{1, 2}, {2, 1}})));

    MatFq Z(f3, 2, 2);
    CHECK(!inverse(Z));
    (void)row_is_zero;
}
