#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdouble/aform.hpp"

using namespace qd;

namespace {

const FieldMode SYM = FieldMode::symbolic();
Scalar vpow(int k) { return Scalar::qpow(SYM, k); }
PBWElement mono(int a, int c, int d, int b, Scalar s) {
    return PBWElement::monomial(Algebra::Dq, SYM, {a, c, d, b}, s);
}

}  // namespace

TEST_CASE("expand basics") {
    // [K,Kt;1] = (K - Kt^-1)/(v - v^-1)
    Scalar iq = (vpow(1) - vpow(-1)).inverse();
    CHECK(expand(AFormExpr({AFactor::bracket(1)})) ==
          mono(0, 1, 0, 0, iq) + mono(0, 0, -1, 0, -iq));
    CHECK(expand(AFormExpr({AFactor::divE(0)})) == PBWElement::unit(Algebra::Dq, SYM));
    CHECK(expand(AFormExpr({AFactor::bracket_c(5, 0)})) == PBWElement::unit(Algebra::Dq, SYM));
    CHECK(expand(AFormExpr({AFactor::divE(2)})) ==
          mono(2, 0, 0, 0, (vpow(1) + vpow(-1)).inverse()));
}

TEST_CASE("lemma21") {
    CHECK(verify_lemma21(0, 3));  // both sides F^(3)
    CHECK(verify_lemma21(1, 1));  // reproduces the EF relation
    CHECK(verify_lemma21(3, 2));
    CHECK(verify_lemma21(2, 4));
}

TEST_CASE("lemma21 cross-check against the rewriting engine") {
    // the right side, times [a]! [b]!, equals normalize(E^a F^b)
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            PBWElement rhs = PBWElement::zero(Algebra::Dq, SYM);
            for (int t = 0; t <= std::min(a, b); ++t)
                rhs = rhs + expand(AFormExpr({AFactor::divF(b - t),
                                              AFactor::bracket_c(2 * t - a - b, t),
                                              AFactor::divE(a - t)}));
            rhs = rhs * (qfactorial(unsigned(a), SYM) * qfactorial(unsigned(b), SYM));
            Word w;
            for (int i = 0; i < a; ++i) w.push_back(Gen::E);
            for (int i = 0; i < b; ++i) w.push_back(Gen::F);
            CHECK(rhs == normalize(w, Algebra::Dq, SYM));
        }
    }
}

TEST_CASE("lemma22 part 1") {
    CHECK(verify_lemma22_part1(2, 3, 0));  // p = 0 is trivial
    CHECK(verify_lemma22_part1(2, 3, 1));
    CHECK(verify_lemma22_part1(-1, 2, 2));
    CHECK(verify_lemma22_part1(3, 4, 4));
}

TEST_CASE("lemma22 part 2") {
    CHECK(verify_lemma22_part2(0, 1, 1));
    CHECK(verify_lemma22_part2(2, 2, 1));
    CHECK(verify_lemma22_part2(-2, 3, 2));
    CHECK(verify_lemma22_part2(1, 0, 3));  // t = 0 edge
}

TEST_CASE("lemma22 part 3 integrality") {
    for (int c = -4; c <= 4; ++c)
        for (int t = 0; t <= 3; ++t) CHECK(verify_lemma22_part3(c, t));
    // c > t exercises the reduction walk
    CHECK(verify_lemma22_part3(4, 2));
}

TEST_CASE("lemma22 part 4") {
    CHECK(verify_lemma22_part4(1, 2));
    CHECK(verify_lemma22_part4(2, 2));
    CHECK(verify_lemma22_part4(3, 0));
    // the splitting identity behind part 4 carries a binomial factor:
    // [t+t' t] [K,Kt;t+t'] = [K,Kt;t] [K,Kt,-t;t'] (the denominators of the
    // two sides run over different index ranges, which is exactly [t+t' t])
    for (int t = 0; t <= 3; ++t)
        for (int tp = 0; t + tp <= 5; ++tp)
            CHECK(expand(AFormExpr(qbinomial(t + tp, unsigned(t), SYM),
                                   {AFactor::bracket(t + tp)})) ==
                  expand(AFormExpr({AFactor::bracket(t), AFactor::bracket_c(-t, tp)})));
}

TEST_CASE("delta of bracket") {
    CHECK(verify_delta_bracket(1));
    CHECK(verify_delta_bracket(2));
    CHECK(verify_delta_bracket(4));
}

TEST_CASE("divided-power hopf formulas") {
    CHECK(verify_divided_hopf(1));
    CHECK(verify_divided_hopf(2));
    CHECK(verify_divided_hopf(3));
    // explicit N=3 antipode coefficient: S(E^(3)) = -v^6 K^-3 E^(3); the
    // exponent sign is pinned by the direct anti-map computation (S(E^2) =
    // S(E)S(E) = q^2 K^-2 E^2) together with uniqueness of the antipode
    PBWElement s = antipode(expand(AFormExpr({AFactor::divE(3)})), +1);
    PBWElement want = expand(AFormExpr(-vpow(6), {AFactor::kpow(-3), AFactor::divE(3)}));
    CHECK(s == want);
    PBWElement s2 = antipode(expand(AFormExpr({AFactor::divE(2)})), +1);
    CHECK(s2 == expand(AFormExpr(vpow(2), {AFactor::kpow(-2), AFactor::divE(2)})));
}

TEST_CASE("divided products") {
    CHECK(verify_divided_products(0, 4));
    CHECK(verify_divided_products(1, 1));
    CHECK(verify_divided_products(2, 3));
}

TEST_CASE("theta") {
    PBWElement k = PBWElement::generator(Algebra::Dq, SYM, Gen::K);
    PBWElement kt = PBWElement::generator(Algebra::Dq, SYM, Gen::Kt);
    CHECK(theta(k) == kt);
    PBWElement ekf = normalize(Word{Gen::E, Gen::K, Gen::F}, Algebra::Dq, SYM);
    CHECK(theta(theta(ekf)) == ekf);
    // theta restricts to an algebra automorphism of the Cartan subalgebra
    // k[K^{+-1}, Kt^{+-1}] (on all of D_q the EF relation obstructs it: it
    // would force K - Kt^-1 = Kt - K^-1)
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> kb(-2, 2), cf(-3, 3), nt(1, 2);
    for (int i = 0; i < 12; ++i) {
        PBWElement x(Algebra::Dq, SYM), y(Algebra::Dq, SYM);
        for (int t = nt(rng); t > 0; --t) {
            x.add({0, kb(rng), kb(rng), 0}, Scalar::from_int(SYM, cf(rng)));
            y.add({0, kb(rng), kb(rng), 0}, Scalar::from_int(SYM, cf(rng)));
        }
        CHECK(theta(multiply(x, y)) == multiply(theta(x), theta(y)));
        CHECK(theta(theta(x)) == x);
    }
    // the theta-image of a bracket identity holds (the part-1 reduction
    // transported by theta)
    PBWElement l = theta(expand(AFormExpr(vpow(-2), {AFactor::bracket_c(2, 2)})));
    PBWElement r = PBWElement::zero(Algebra::Dq, SYM);
    for (int j = 0; j <= 1; ++j)
        r = r + theta(expand(AFormExpr(qbinomial(1, unsigned(j), SYM) * vpow(-2 * j),
                                       {AFactor::bracket_c(1, 2 - j), AFactor::ktpow(-j)})));
    CHECK(l == r);
    // bracket conjugation identity for t = 2, and via the formal factor
    CHECK(verify_theta_bracket(2));
    CHECK(verify_theta_bracket(3));
}
