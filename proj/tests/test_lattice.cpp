#include <doctest.h>

#include "swcert/lattice.hpp"

using namespace swcert;

namespace {

std::vector<Subspace> whole_lattice(int m, const FieldPtr& F) {
    std::vector<Subspace> all;
    for (int d = 0; d <= m; ++d)
        for (const auto& S : enumerate_subspaces(m, d, F)) all.push_back(S);
    return all;
}

}  // namespace

TEST_CASE("enumeration counts match gaussian binomials") {
    auto f2 = Field::make(2, 1);
    auto lines = enumerate_subspaces(2, 1, f2);
    CHECK(lines.size() == 3);

    for (int m = 0; m <= 5; ++m)
        for (int d = 0; d <= m; ++d)
            CHECK(mpz_class((long)enumerate_subspaces(m, d, f2).size()) == gauss_binom(m, d, 2));

    auto f3 = Field::make(3, 1);
    for (int m = 0; m <= 3; ++m)
        for (int d = 0; d <= m; ++d)
            CHECK(mpz_class((long)enumerate_subspaces(m, d, f3).size()) == gauss_binom(m, d, 3));

    auto zero = enumerate_subspaces(4, 0, f2);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].dim() == 0);
    auto full = enumerate_subspaces(4, 4, f2);
    REQUIRE(full.size() == 1);
    CHECK(full[0] == Subspace::full(f2, 4));

    CHECK_THROWS_AS(enumerate_subspaces(20, 10, f2, 1000), std::runtime_error);  // cap
}

TEST_CASE("gauss_binom values") {
    CHECK(gauss_binom(4, 2, 2) == 35);  // equals the enumeration count above
    CHECK(gauss_binom(7, 0, 5) == 1);
    CHECK(gauss_binom(5, 1, 2) == 31);
    CHECK(gauss_binom(3, 5, 2) == 0);
    CHECK(gauss_binom(3, -1, 2) == 0);
}

TEST_CASE("intersect, sum, contains") {
    auto f2 = Field::make(2, 1);
    auto lines = enumerate_subspaces(2, 1, f2);
    for (const auto& L : lines) {
        CHECK(intersect(L, L) == L);
        CHECK(sum(L, L) == L);
    }
    CHECK(intersect(lines[0], lines[1]).dim() == 0);
    CHECK(sum(lines[0], lines[1]) == Subspace::full(f2, 2));

    auto full = Subspace::full(f2, 2);
    for (const auto& L : lines) CHECK(contains(full, L));
    CHECK(contains(full, Subspace::zero(f2, 2)));

    // dimension formula over the whole lattice of F_2^3
    auto all = whole_lattice(3, f2);
    for (const auto& U : all)
        for (const auto& V : all)
            CHECK(U.dim() + V.dim() == intersect(U, V).dim() + sum(U, V).dim());
}

TEST_CASE("orthogonal complement and duality laws") {
    auto f2 = Field::make(2, 1);
    auto e1 = Subspace::span(f2, 2, MatFq::from_rows(f2, {{1, 0}}));
    auto e2 = Subspace::span(f2, 2, MatFq::from_rows(f2, {{0, 1}}));
    CHECK(orthogonal_complement(e1) == e2);
    CHECK(orthogonal_complement(Subspace::zero(f2, 2)) == Subspace::full(f2, 2));
    auto diag = Subspace::span(f2, 2, MatFq::from_rows(f2, {{1, 1}}));
    CHECK(orthogonal_complement(diag) == diag);  // (1,1).(1,1) = 0 over F_2

    auto f3 = Field::make(3, 1);
    struct Case {
        FieldPtr F;
        int m;
    };
    for (const auto& cs : {Case{f2, 4}, Case{f3, 3}}) {
        auto all = whole_lattice(cs.m, cs.F);
        for (const auto& V : all) {
            auto Vp = orthogonal_complement(V);
            CHECK(Vp.dim() == cs.m - V.dim());
            CHECK(orthogonal_complement(Vp) == V);
        }
        for (const auto& U : all)
            for (const auto& V : all) {
                CHECK(orthogonal_complement(intersect(V, U)) ==
                      sum(orthogonal_complement(V), orthogonal_complement(U)));
                if (contains(V, U))
                    CHECK(contains(orthogonal_complement(U), orthogonal_complement(V)));
            }
    }
}

TEST_CASE("mobius function") {
    auto f2 = Field::make(2, 1);
    auto all = whole_lattice(4, f2);
    for (const auto& V : all) CHECK(mobius(V, V) == 1);

    auto zero = Subspace::zero(f2, 4);
    for (const auto& V : all) {
        int d = V.dim();
        if (d == 1) CHECK(mobius(zero, V) == -1);
        if (d == 2) CHECK(mobius(zero, V) == 2);  // (-1)^2 * 2^1
    }
    auto f3 = Field::make(3, 1);
    auto line3 = enumerate_subspaces(2, 1, f3)[0];
    CHECK(mobius(Subspace::zero(f3, 2), line3) == -1);  // d = 1 for any q

    // not contained -> 0
    auto lines = enumerate_subspaces(4, 1, f2);
    auto planes = enumerate_subspaces(4, 2, f2);
    int zeros = 0;
    for (const auto& L : lines)
        for (const auto& P : planes)
            if (!contains(P, L)) {
                CHECK(mobius(L, P) == 0);
                ++zeros;
            }
    CHECK(zeros > 0);
}

TEST_CASE("mobius inversion on L(F_2^4)") {
    auto f2 = Field::make(2, 1);
    auto all = whole_lattice(4, f2);
    for (const auto& V : all)
        for (const auto& T : all) {
            if (!contains(V, T)) continue;
            mpz_class s = 0;
            for (const auto& U : all)
                if (contains(V, U) && contains(U, T)) s += mobius(U, V);
            CHECK(s == (T == V ? 1 : 0));
        }
}

TEST_CASE("count_complement_avoiding against brute force") {
    CHECK(count_complement_avoiding(3, 1, 1, 2) == 6);
    CHECK(count_complement_avoiding(4, 0, 2, 2) == gauss_binom(4, 2, 2));
    CHECK(count_complement_avoiding(4, 2, 2, 2) == 16);

    for (int q : {2, 3}) {
        auto F = Field::make_q(q);
        for (int a = 0; a <= 4; ++a) {
            if (q == 3 && a == 4) continue;  // 3^4 lattice is big; covered by a <= 3
            for (int b = 0; b <= a; ++b) {
                MatFq bb(F, b, a);
                for (int i = 0; i < b; ++i) bb.at(i, i) = 1;
                Subspace B = Subspace::span(F, a, bb);
                for (int c = 0; c <= a; ++c) {
                    long brute = 0;
                    for (const auto& C : enumerate_subspaces(a, c, F))
                        if (intersect(C, B).dim() == 0) ++brute;
                    CHECK(count_complement_avoiding(a, b, c, q) == mpz_class(brute));
                }
            }
        }
    }
}

TEST_CASE("find_min_x") {
    CHECK(find_min_x(1, 2) == 2);
    CHECK(find_min_x(1, 3) == 2);

    // direct scan oracle for t = 2, q = 2
    auto holds = [](int x) {
        mpz_class lhs = gauss_binom(x, 0, 2) + gauss_binom(x, 1, 2);
        mpz_class rhs;
        mpz_class two = 2;
        mpz_pow_ui(rhs.get_mpz_t(), two.get_mpz_t(), 2 * (x - 2));
        return lhs < rhs;
    };
    CHECK(!holds(3));
    CHECK(!holds(4));
    CHECK(holds(5));
    CHECK(find_min_x(2, 2) == 5);
}

TEST_CASE("point indexing") {
    CHECK(point_from_index(6, 3, 2) == std::vector<Fel>{1, 1, 0});
    CHECK(index_of_point({1, 1, 0}, 2) == 6);
    for (long long i = 0; i < 27; ++i) CHECK(index_of_point(point_from_index(i, 3, 3), 3) == i);

    auto f2 = Field::make(2, 1);
    auto plane = Subspace::span(f2, 3, MatFq::from_rows(f2, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(rows_contained({1, 0, 0, 1, 1, 0}, 2, plane));
    CHECK(!rows_contained({1, 0, 0, 0, 1, 1}, 2, plane));
}
