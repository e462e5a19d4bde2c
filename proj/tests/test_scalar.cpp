#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdouble/scalar.hpp"

using namespace qd;

namespace {

const FieldMode SYM = FieldMode::symbolic();

Scalar sc(long n) { return Scalar::from_int(SYM, n); }
Scalar vpow(int k) { return Scalar::qpow(SYM, k); }

// random scalar: small Laurent numerator over small denominators
Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> exp(-3, 3), coeff(-4, 4), pick(0, 2);
    Laurent num;
    for (int t = 0; t < 3; ++t) num.add_term(exp(rng), coeff(rng));
    Laurent den = Laurent::v(2) - Laurent(1);
    switch (pick(rng)) {
        case 0: den = Laurent(1); break;
        case 1: break;
        case 2: den = den * (Laurent::v(1) + Laurent(1)); break;
    }
    return Scalar::fraction(num, den);
}

}  // namespace

TEST_CASE("laurent basics") {
    Laurent a = Laurent::v(2) + Laurent(2) + Laurent::v(-2);
    CHECK(a.str() == "v^2 + 2 + v^-2");
    CHECK((Laurent::v(1) * Laurent::v(-1)) == Laurent(1));
    Laurent sq = (Laurent::v(1) + Laurent::v(-1)).pow(2);
    CHECK(sq == a);
    Laurent q;
    CHECK(sq.divide_exact(Laurent::v(1) + Laurent::v(-1), &q));
    CHECK(q == Laurent::v(1) + Laurent::v(-1));
    CHECK_FALSE((Laurent::v(2) + Laurent(1)).divide_exact(Laurent::v(1) + Laurent(1)));
}

TEST_CASE("qint examples") {
    CHECK(qint(0, SYM).is_zero());           // empty sum
    CHECK(qint(2, SYM) == vpow(1) + vpow(-1));
    // rational mode: evaluate (q^3 - q^-3)/(q - q^-1) at q = 2 independently
    FieldMode rat = FieldMode::rational(Rat(2));
    Scalar q = Scalar::qpow(rat, 1);
    Scalar direct = (q.pow(3) - q.pow(-3)) / (q - q.pow(-1));
    CHECK(qint(3, rat) == direct);
    CHECK(qint(3, rat) == Scalar::from_rational(rat, Rat(21, 4)));
}

TEST_CASE("qfactorial examples") {
    CHECK(qfactorial(0, SYM).is_one());
    CHECK(qfactorial(2, SYM) == qint(2, SYM));
    CHECK(qfactorial(3, SYM) == qint(2, SYM) * qint(3, SYM));
    CHECK(qfactorial(3, SYM) == (vpow(1) + vpow(-1)) * (vpow(2) + sc(1) + vpow(-2)));
}

TEST_CASE("qbinomial examples and the factorial formula") {
    CHECK(qbinomial(7, 0, SYM).is_one());
    CHECK(qbinomial(2, 1, SYM) == qint(2, SYM));
    // brute force from [m]!/([n]![m-n]!) and expand
    Scalar expect = qfactorial(4, SYM) / (qfactorial(2, SYM) * qfactorial(2, SYM));
    CHECK(qbinomial(4, 2, SYM) == expect);
    CHECK(qbinomial(4, 2, SYM) == vpow(4) + vpow(2) + sc(2) + vpow(-2) + vpow(-4));
}

TEST_CASE("qbinomial stays Laurent on the [-6,6] x [0,6] grid") {
    for (long m = -6; m <= 6; ++m)
        for (unsigned n = 0; n <= 6; ++n) CHECK(is_laurent(qbinomial(m, n, SYM)));
}

TEST_CASE("q-Pascal recurrence against the factorial formula") {
    for (long m = 1; m <= 6; ++m) {
        for (unsigned n = 1; n <= unsigned(m); ++n) {
            Scalar lhs = qbinomial(m, n, SYM);
            Scalar rhs = vpow(int(n)) * qbinomial(m - 1, n, SYM) +
                         vpow(int(n) - int(m)) * qbinomial(m - 1, n - 1, SYM);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("membership tests") {
    CHECK(is_laurent(qbinomial(5, 2, SYM)));
    Scalar inv_vv = Scalar::fraction(Laurent(1), Laurent::v(1) - Laurent::v(-1));
    CHECK_FALSE(is_laurent(inv_vv));
    CHECK(in_localized_A(inv_vv));
    // (v^2+1) is coprime to (v - v^-1) up to units
    Scalar x = Scalar::fraction(Laurent(1), Laurent::v(2) + Laurent(1));
    CHECK_FALSE(in_localized_A(x));
    // mixed denominators and integer content
    Scalar y = inv_vv * inv_vv;
    CHECK(in_localized_A(y));
    CHECK_FALSE(in_localized_A(y / sc(2)));
    FieldMode rat = FieldMode::rational(Rat(2));
    CHECK_THROWS_AS((void)is_laurent(Scalar::one(rat)), ModeMismatch);
}

TEST_CASE("specialize examples") {
    FieldMode rat = FieldMode::rational(Rat(2));
    CHECK(specialize(vpow(2) - sc(1), rat) == Scalar::from_int(rat, 3));
    // cyclotomic: q = i, so [2] = i + i^-1 = 0
    FieldMode c4 = FieldMode::cyclotomic(4, 1);
    CHECK(specialize(qint(2, SYM), c4).is_zero());
    CHECK(qint(2, c4).is_zero());
    // denominator vanishing at q^2 = 1 is rejected at mode construction,
    // and at specialization time for vanishing denominators
    CHECK_THROWS_AS(FieldMode::rational(Rat(1)), DomainError);
    CHECK_THROWS_AS(FieldMode::rational(Rat(-1)), DomainError);
    Scalar bad = Scalar::fraction(Laurent(1), Laurent::v(2) - Laurent(1));
    FieldMode c8 = FieldMode::cyclotomic(8, 2);  // q = zeta_8^2 = i, q^2 = -1
    CHECK(specialize(bad, c8) == -Scalar::from_rational(c8, Rat(1, 2)));
    FieldMode c3 = FieldMode::cyclotomic(3, 1);
    Scalar bad3 = Scalar::fraction(Laurent(1), Laurent::v(3) - Laurent(1));
    CHECK_THROWS_AS(specialize(bad3, c3), VanishingDenominator);
}

TEST_CASE("specialize is a ring homomorphism where defined") {
    std::mt19937_64 rng(7);
    FieldMode rat = FieldMode::rational(Rat(3, 2));
    FieldMode c5 = FieldMode::cyclotomic(5, 1);
    for (int i = 0; i < 40; ++i) {
        Scalar x = random_scalar(rng), y = random_scalar(rng);
        CHECK(specialize(x * y, rat) == specialize(x, rat) * specialize(y, rat));
        CHECK(specialize(x + y, rat) == specialize(x, rat) + specialize(y, rat));
        CHECK(specialize(x * y, c5) == specialize(x, c5) * specialize(y, c5));
    }
}

TEST_CASE("ring axioms on random scalars") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar::one(SYM));
    }
}

TEST_CASE("cyclotomic field arithmetic") {
    FieldMode c8 = FieldMode::cyclotomic(8, 1);
    Scalar q = Scalar::qpow(c8, 1);
    CHECK(q.pow(8).is_one());
    CHECK_FALSE(q.pow(4).is_one());
    CHECK(q.pow(4) == -Scalar::one(c8));
    CHECK(c8.order_of_q() == 8);
    CHECK(c8.order_of_q2() == 4);
    // inverse roundtrip
    Scalar x = q + Scalar::from_int(c8, 2);
    CHECK((x * x.inverse()).is_one());
    // zeta_5: order checks for the odd case
    FieldMode c5 = FieldMode::cyclotomic(5, 1);
    CHECK(c5.order_of_q() == 5);
    CHECK(c5.order_of_q2() == 5);
}

TEST_CASE("canonical denominators and printing") {
    Scalar a = Scalar::fraction(Laurent::v(1), Laurent::v(2) - Laurent(1));
    CHECK(a.den() == Laurent::v(2) - Laurent(1));
    CHECK(a.str() == "v/(v^2 - 1)");
    Scalar b = Scalar::fraction(Laurent(2), Laurent(4));
    CHECK(b.str() == "1/2");
    CHECK(Scalar::fraction(-Laurent::v(1), Laurent(1) - Laurent::v(2)) == a);
    CHECK(sc(0).str() == "0");
}
