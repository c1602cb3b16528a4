#include "salemlab/field.hpp"

#include "salemlab/errors.hpp"
#include "salemlab/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace salemlab;

TEST_CASE("make_field validates its inputs") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->q() == 5);
    CHECK(f5->n() == 1);

    auto f9 = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    CHECK(f9->q() == 9);

    CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{0, 0, 1}), Error);  // t^2 = t*t
    CHECK_THROWS_AS(Field::make(2, 1), Error);
    CHECK_THROWS_AS(Field::make(9, 1), Error);
    CHECK_THROWS_AS(Field::make(15, 2), Error);
}

TEST_CASE("default modulus is the lexicographically smallest irreducible") {
    auto f9 = Field::make(3, 2);
    CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(f9->spec() == "3^2");

    auto f25 = Field::make(5, 2);
    // c0=0 gives a root at 0; t^2+1 has the root 2; t^2+t+1 is irreducible.
    CHECK(f25->modulus() == std::vector<std::uint32_t>{1, 1, 1});

    auto f81 = Field::make(3, 4);
    CHECK(f81->q() == 81);
    // Degree-4 modulus passes the Frobenius-gcd irreducibility path.
    auto clone = Field::make(3, 4, f81->modulus());
    CHECK(clone->modulus() == f81->modulus());
}

TEST_CASE("field spec strings round-trip") {
    CHECK(Field::from_spec("5")->q() == 5);
    CHECK(Field::from_spec("3^2")->q() == 9);
    auto explicit_mod = Field::from_spec("3^2/1,0,1");
    CHECK(explicit_mod->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(Field::from_spec(explicit_mod->spec())->q() == 9);
    CHECK_THROWS_AS(Field::from_spec("abc"), Error);
    CHECK(Field::from_order(9)->n() == 2);
    CHECK(Field::from_order(343)->p() == 7);
    CHECK_THROWS_AS(Field::from_order(12), Error);
}

TEST_CASE("trace") {
    auto f5 = Field::make(5, 1);
    CHECK(f5->trace(f5->from_integer(3)) == 3);

    auto f9 = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    CHECK(f9->trace(f9->one()) == 2);                       // n * 1
    CHECK(f9->trace(f9->from_coeffs({0, 1})) == 0);         // t + t^3 = 0
}

TEST_CASE("trace is additive and lands in F_p") {
    for (auto spec : {"3^2", "5^2", "3^4", "7^2"}) {
        auto f = Field::from_spec(spec);
        Rng rng(7);
        for (int i = 0; i < 200; ++i) {
            Scalar x{rng.below(f->q())};
            Scalar y{rng.below(f->q())};
            CHECK(f->trace(f->add(x, y)) == (f->trace(x) + f->trace(y)) % f->p());
            CHECK(f->trace(x) < f->p());
        }
    }
}

TEST_CASE("character") {
    auto f5 = Field::make(5, 1);
    CHECK(std::abs(f5->character(f5->zero()) - std::complex<double>{1.0, 0.0}) < 1e-12);
    std::complex<double> expected = std::polar(1.0, 2.0 * 3.14159265358979323846 / 5.0);
    CHECK(std::abs(f5->character(f5->one()) - expected) < 1e-9);

    for (auto spec : {"3", "5", "7", "3^2", "11", "5^2", "7^2", "11^2"}) {
        auto f = Field::from_spec(spec);
        std::complex<double> sum = 0;
        for (std::uint64_t x = 0; x < f->q(); ++x) sum += f->character(Scalar{x});
        CHECK(std::abs(sum) < 1e-9);  // nontrivial character sums to zero
        for (std::uint64_t x = 0; x < f->q(); ++x) {
            Scalar s{x};
            CHECK(std::abs(f->character(s) * f->character(f->neg(s)) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("character is multiplicative over addition") {
    auto f9 = Field::make(3, 2);
    for (std::uint64_t x = 0; x < 9; ++x)
        for (std::uint64_t y = 0; y < 9; ++y) {
            auto lhs = f9->character(f9->add(Scalar{x}, Scalar{y}));
            auto rhs = f9->character(Scalar{x}) * f9->character(Scalar{y});
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
}

TEST_CASE("sqrt_of_minus_one") {
    CHECK(Field::make(5, 1)->sqrt_of_minus_one()->v == 2);
    CHECK(Field::make(13, 1)->sqrt_of_minus_one()->v == 5);
    CHECK(!Field::make(7, 1)->sqrt_of_minus_one().has_value());
}

TEST_CASE("sqrt_of_minus_one present exactly when q = 1 mod 4") {
    for (std::uint64_t q = 3; q <= 1000; ++q) {
        if (q % 2 == 0) continue;
        FieldPtr f;
        try {
            f = Field::from_order(q);
        } catch (const Error&) {
            continue;  // not a prime power
        }
        auto root = f->sqrt_of_minus_one();
        CHECK(root.has_value() == (q % 4 == 1));
        if (root) CHECK(f->mul(*root, *root) == f->neg(f->one()));
    }
}

TEST_CASE("two_squares_minus_one") {
    auto check = [](std::uint64_t p, std::uint64_t a, std::uint64_t b) {
        auto f = Field::make(p, 1);
        auto [x, y] = f->two_squares_minus_one();
        CHECK(x.v == a);
        CHECK(y.v == b);
        CHECK(f->add(f->mul(x, x), f->mul(y, y)) == f->neg(f->one()));
    };
    check(3, 1, 1);
    check(7, 2, 3);
    check(5, 0, 2);
}

TEST_CASE("field axioms on seeded samples") {
    for (auto spec : {"7", "3^2", "5^2", "3^4"}) {
        auto f = Field::from_spec(spec);
        Rng rng(42);
        for (int i = 0; i < 1000; ++i) {
            Scalar x{rng.below(f->q())}, y{rng.below(f->q())}, z{rng.below(f->q())};
            CHECK(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
            CHECK(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
            CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
            if (x.v != 0) CHECK(f->mul(x, f->inv(x)) == f->one());
        }
    }
}

TEST_CASE("Frobenius fixes the prime subfield") {
    auto f7 = Field::make(7, 1);
    for (std::uint64_t x = 0; x < 7; ++x) CHECK(f7->pow(Scalar{x}, 7) == Scalar{x});
    auto f9 = Field::make(3, 2);
    for (std::uint64_t x = 0; x < 3; ++x) CHECK(f9->pow(Scalar{x}, 3) == Scalar{x});
}

TEST_CASE("coefficient round trip") {
    auto f27 = Field::make(3, 3);
    for (std::uint64_t x = 0; x < 27; ++x) {
        auto c = f27->coeffs(Scalar{x});
        CHECK(c.size() == 3);
        CHECK(f27->from_coeffs(c) == Scalar{x});
    }
    CHECK_THROWS_AS(f27->from_coeffs({1, 2}), Error);
    CHECK_THROWS_AS(f27->from_encoding(27), Error);
}
