#include <doctest.h>

#include <random>

#include "swcert/fourier.hpp"

using namespace swcert;

TEST_CASE("cyclotomic arithmetic") {
    // p = 2: plain integers with zeta = -1
    auto a = Cyc::integer(2, 5);
    auto z = Cyc::zeta_pow(2, 1);
    CHECK(z == Cyc::integer(2, -1));
    CHECK(cyc_mul(a, z) == Cyc::integer(2, -5));
    CHECK(cyc_add(a, Cyc::integer(2, 0)) == a);

    // p = 3: zeta * zeta^2 = 1 through the rewrite zeta^2 = -1 - zeta
    auto z1 = Cyc::zeta_pow(3, 1);
    auto z2 = Cyc::zeta_pow(3, 2);
    CHECK(z2.c == std::vector<long long>{-1, -1});
    CHECK(cyc_mul(z1, z2) == Cyc::integer(3, 1));
    CHECK(cyc_mul(z1, z1) == z2);

    // 1 + zeta + zeta^2 = 0
    auto s = cyc_add(cyc_add(Cyc::zeta_pow(3, 0), z1), z2);
    CHECK(s.is_zero());

    CHECK_THROWS_AS(cyc_add(Cyc::integer(2, 1), Cyc::integer(3, 1)), std::invalid_argument);
}

TEST_CASE("character evaluation") {
    auto f2 = Field::make(2, 1);
    std::vector<Fel> zero{0, 0};
    for (long long xi = 0; xi < 4; ++xi)
        CHECK(char_eval(f2, zero, point_from_index(xi, 2, 2)) == Cyc::integer(2, 1));

    CHECK(char_eval(f2, {1, 0}, {1, 1}) == Cyc::integer(2, -1));

    // multiplicativity chi_y(x + x') = chi_y(x) chi_y(x')
    auto f4 = Field::make(2, 2);
    for (long long yi = 0; yi < 16; ++yi) {
        auto y = point_from_index(yi, 2, 4);
        for (long long ai = 0; ai < 16; ++ai)
            for (long long bi = 0; bi < 16; ++bi) {
                auto a = point_from_index(ai, 2, 4);
                auto b = point_from_index(bi, 2, 4);
                std::vector<Fel> ab(2);
                for (int i = 0; i < 2; ++i) ab[i] = f4->add(a[i], b[i]);
                CHECK(char_eval(f4, y, ab) ==
                      cyc_mul(char_eval(f4, y, a), char_eval(f4, y, b)));
            }
    }
}

TEST_CASE("trace pairing nondegenerate") {
    for (int q : {2, 3, 4, 5, 8, 9, 16}) CHECK(trace_pairing_nondegenerate(Field::make_q(q)));
}

TEST_CASE("character orthogonality") {
    for (int q : {2, 3}) {
        auto F = Field::make_q(q);
        for (int m = 1; m <= 3; ++m) {
            long long total = 1;
            for (int i = 0; i < m; ++i) total *= q;
            for (long long yi = 0; yi < total; ++yi) {
                auto y = point_from_index(yi, m, q);
                Cyc s(F->p());
                for (long long xi = 0; xi < total; ++xi)
                    s = cyc_add(s, char_eval(F, y, point_from_index(xi, m, q)));
                CHECK(s == Cyc::integer(F->p(), yi == 0 ? total : 0));
            }
        }
    }
}

TEST_CASE("fourier transform basics") {
    auto f2 = Field::make(2, 1);
    std::vector<long long> delta(8, 0);
    delta[0] = 1;  // indicator of {0}
    auto hat = fourier(f2, 3, delta);
    for (const auto& v : hat) CHECK(v == Cyc::integer(2, 1));

    std::vector<long long> zero(8, 0);
    for (const auto& v : fourier(f2, 3, zero)) CHECK(v.is_zero());
}

TEST_CASE("indicator transform identity") {
    auto f2 = Field::make(2, 1);
    for (int d = 0; d <= 3; ++d)
        for (const auto& V : enumerate_subspaces(3, d, f2)) CHECK(check_indicator_transform(V));

    auto f3 = Field::make(3, 1);
    for (int d = 0; d <= 2; ++d)
        for (const auto& V : enumerate_subspaces(2, d, f3)) CHECK(check_indicator_transform(V));

    // full space: mass |V| at y = 0, zero elsewhere
    auto full = Subspace::full(f2, 3);
    std::vector<long long> ind(8, 1);
    auto hat = fourier(f2, 3, ind);
    CHECK(hat[0] == Cyc::integer(2, 8));
    for (int i = 1; i < 8; ++i) CHECK(hat[i].is_zero());
}

TEST_CASE("inverse transform recovers integer functions exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
        auto f2 = Field::make(2, 1);
        std::vector<long long> f(8);
        for (auto& x : f) x = d(rng);
        CHECK(inverse_fourier(f2, 3, fourier(f2, 3, f)) == f);

        auto f3 = Field::make(3, 1);
        std::vector<long long> g(9);
        for (auto& x : g) x = d(rng);
        CHECK(inverse_fourier(f3, 2, fourier(f3, 2, g)) == g);
    }
}
