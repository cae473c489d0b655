#include <doctest.h>

#include "swcert/gf.hpp"

using namespace swcert;

namespace {

// root-check oracle for quadratics over F_p: irreducible iff no roots
bool quadratic_has_root(int c0, int c1, int p) {
    for (int x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("field construction") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus() == std::vector<int>{0, 1});

    auto f4 = Field::make(2, 2);
    CHECK(f4->q() == 4);
    CHECK(f4->modulus() == std::vector<int>{1, 1, 1});

    // x^2 + x + 1 is the only irreducible monic quadratic over F_2
    int irreducible_count = 0;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1)
            if (!quadratic_has_root(c0, c1, 2)) ++irreducible_count;
    CHECK(irreducible_count == 1);
    CHECK(!quadratic_has_root(1, 1, 2));

    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);                    // non-prime p
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<int>{1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(Field::make(2, 5), std::invalid_argument);                    // q over cap
    CHECK(Field::make(2, 5, std::vector<int>{1, 0, 1, 0, 0, 1}, 32)->q() == 32);  // raised cap
    CHECK_THROWS_AS(Field::make_q(12), std::invalid_argument);                    // not a prime power
}

TEST_CASE("arithmetic examples") {
    auto f2 = Field::make(2, 1);
    CHECK(f2->add(1, 1) == 0);

    auto f4 = Field::make(2, 2);
    // x encodes as 2; x*x reduces to x+1, which encodes as 3
    CHECK(f4->mul(2, 2) == 3);

    auto f3 = Field::make(3, 1);
    CHECK(f3->inv(2) == 2);
    CHECK_THROWS_AS(f3->inv(0), std::invalid_argument);
}

TEST_CASE("field axioms exhaustively for every built-in q") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        auto F = Field::make_q(q);
        for (Fel a = 0; a < q; ++a) {
            CHECK(F->add(a, 0) == a);
            CHECK(F->mul(a, 1) == a);
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) {
                CHECK(F->mul(a, F->inv(a)) == 1);
                CHECK(F->mul(F->inv(a), a) == 1);
            }
            for (Fel b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (Fel c = 0; c < q; ++c) {
                    CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                    CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("trace") {
    auto f2 = Field::make(2, 1);
    for (Fel a = 0; a < 2; ++a) CHECK(f2->trace(a) == a);  // e = 1: identity

    auto f4 = Field::make(2, 2);
    CHECK(f4->trace(2) == 1);  // Tr(x) = x + x^2 = 1
    CHECK(f4->trace(0) == 0);

    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        auto F = Field::make_q(q);
        CHECK(F->trace(0) == 0);
        for (Fel a = 0; a < q; ++a) {
            CHECK(F->trace(a) < F->p());
            for (Fel b = 0; b < q; ++b)
                CHECK(F->trace(F->add(a, b)) ==
                      F->add(F->trace(a), F->trace(b)));  // additivity
        }
        // surjectivity onto F_p
        std::vector<bool> hit(F->p(), false);
        for (Fel a = 0; a < q; ++a) hit[F->trace(a)] = true;
        for (int c = 0; c < F->p(); ++c) CHECK(hit[c]);
    }
}
