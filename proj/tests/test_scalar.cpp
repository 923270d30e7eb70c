#include <hlbip/generate.hpp>
#include <hlbip/scalar.hpp>

#include <doctest.h>

using namespace hlbip;

TEST_CASE("rational arithmetic and canonical form") {
    Scalar a = Scalar::rational(1, 2);
    Scalar b = Scalar::rational(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a / b).str() == "3/2");
    CHECK(Scalar::rational(2, 4).str() == "1/2");
    CHECK(Scalar::rational(-2, 4).str() == "-1/2");
    CHECK(Scalar::rational(2, -4).str() == "-1/2");
    CHECK(Scalar::rational(0, 7).str() == "0");
    CHECK(Scalar::rational(6, 3).str() == "2");
    CHECK((-Scalar::rational(7, 1)).str() == "-7");
}

TEST_CASE("rational parse") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(q.parse("-7/3").str() == "-7/3");
    CHECK(q.parse("4/6").str() == "2/3");
    CHECK(q.parse("12").str() == "12");
    CHECK(q.parse("-12").str() == "-12");
    CHECK_THROWS_AS(q.parse("1/0"), input_error);
    CHECK_THROWS_AS(q.parse(""), input_error);
    CHECK_THROWS_AS(q.parse("a/b"), input_error);
    CHECK_THROWS_AS(q.parse("1.5"), input_error);
}

TEST_CASE("rational order, sign, abs") {
    Scalar a = Scalar::rational(-3, 2);
    CHECK(a.sign() == -1);
    CHECK(a.abs().str() == "3/2");
    CHECK(a < Scalar::rational(0, 1));
    CHECK(Scalar::rational(1, 3) < Scalar::rational(1, 2));
    CHECK(Scalar::rational(0, 1).sign() == 0);
    CHECK(Scalar::rational(5, 1).sign() == 1);
}

TEST_CASE("rational inverse and zero division") {
    Scalar a = Scalar::rational(-3, 7);
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS_AS(Scalar::rational(0, 1).inverse(), input_error);
    CHECK_THROWS_AS(a / Scalar::rational(0, 1), input_error);
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f7 = FieldSpec::prime(7);
    Scalar a = f7.from_int(5);
    Scalar b = f7.from_int(4);
    CHECK((a + b).residue() == 2);
    CHECK((a - b).residue() == 1);
    CHECK((a * b).residue() == 6);
    CHECK((b - a).residue() == 6);
    CHECK(f7.from_int(-1).residue() == 6);
    CHECK(f7.parse("12").residue() == 5);
    for (std::uint64_t r = 1; r < 7; ++r)
        CHECK((f7.from_int(static_cast<long>(r)) *
               f7.from_int(static_cast<long>(r)).inverse())
                  .is_one());
}

TEST_CASE("prime field near the word boundary") {
    std::uint64_t p = 2305843009213693951ull; // 2^61 - 1
    REQUIRE(is_prime_u64(p));
    FieldSpec f = FieldSpec::prime(p);
    Scalar x = f.from_int(1234567890123456789L);
    CHECK((x * x.inverse()).is_one());
    Scalar big = f.parse("2305843009213693950");
    CHECK((big + f.one()).is_zero());
    CHECK((big * big).is_one()); // (-1)^2
}

TEST_CASE("primality check") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(97));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(4));
    CHECK_FALSE(is_prime_u64(561));       // Carmichael
    CHECK_FALSE(is_prime_u64(1ull << 32));
    CHECK(is_prime_u64(4294967311ull));   // first prime past 2^32
    CHECK_THROWS_AS(FieldSpec::prime(4), input_error);
    CHECK_THROWS_AS(FieldSpec::prime(1), input_error);
}

TEST_CASE("field mixing is rejected") {
    Scalar a = Scalar::rational(1, 2);
    Scalar b = FieldSpec::prime(5).from_int(2);
    Scalar c = FieldSpec::prime(7).from_int(2);
    CHECK_THROWS_AS(a + b, input_error);
    CHECK_THROWS_AS(b * c, input_error);
    CHECK_FALSE(b.same_field(c));
    CHECK_THROWS_AS(b.abs(), input_error); // no order on GF(p)
}

TEST_CASE("field axioms hold on random elements") {
    FieldSpec fields[2] = {FieldSpec::rationals(), FieldSpec::prime(101)};
    for (const FieldSpec& f : fields) {
        Rng rng(f.kind() == FieldKind::rational ? 11 : 12);
        for (int t = 0; t < 60; ++t) {
            auto draw = [&] {
                return f.from_int(rng.in_range(-9, 9));
            };
            Scalar a = draw(), b = draw(), c = draw();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + f.zero()) == a);
            CHECK((a * f.one()) == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK((a / a).is_one());
        }
    }
}

TEST_CASE("compound assignment matches the binary operators") {
    Scalar a = Scalar::rational(3, 4);
    Scalar b = Scalar::rational(-2, 5);
    Scalar c = a;
    c += b;
    CHECK(c == a + b);
    c = a;
    c -= b;
    CHECK(c == a - b);
    c = a;
    c *= b;
    CHECK(c == a * b);
}
