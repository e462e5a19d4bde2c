#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdouble/textio.hpp"

using namespace qd;

namespace {
const FieldMode SYM = FieldMode::symbolic();
}

TEST_CASE("mode parsing") {
    CHECK(parse_mode("symbolic") == FieldMode::symbolic());
    CHECK(parse_mode("cyclotomic:8:1") == FieldMode::cyclotomic(8, 1));
    CHECK(parse_mode("rational:2") == FieldMode::rational(Rat(2)));
    CHECK(parse_mode("rational:3/2") == FieldMode::rational(Rat(3, 2)));
    CHECK_THROWS_AS(parse_mode("nonsense"), ParseError);
    CHECK_THROWS_AS(parse_mode("rational:1"), DomainError);
}

TEST_CASE("expression parsing") {
    PBWElement fe = parse_pbw("F*E", Algebra::Dq, SYM);
    CHECK(fe == normalize(Word{Gen::F, Gen::E}, Algebra::Dq, SYM));
    // juxtaposition, powers, negative group-like powers, scalars
    CHECK(parse_pbw("K^-1", Algebra::Dq, SYM) ==
          PBWElement::generator(Algebra::Dq, SYM, Gen::Kinv));
    CHECK(parse_pbw("Kt^-2", Algebra::Dq, SYM) ==
          PBWElement::monomial(Algebra::Dq, SYM, {0, 0, -2, 0}, Scalar::one(SYM)));
    CHECK(parse_pbw("2 E K", Algebra::Dq, SYM) ==
          PBWElement::monomial(Algebra::Dq, SYM, {1, 1, 0, 0}, Scalar::from_int(SYM, 2)));
    CHECK(parse_pbw("v^2 - 1", Algebra::Dq, SYM) ==
          PBWElement::unit(Algebra::Dq, SYM) * (Scalar::qpow(SYM, 2) - Scalar::one(SYM)));
    CHECK(parse_pbw("(v - v^-1)^-1 K", Algebra::Dq, SYM) ==
          PBWElement::monomial(Algebra::Dq, SYM, {0, 1, 0, 0},
                               (Scalar::qpow(SYM, 1) - Scalar::qpow(SYM, -1)).inverse()));
    CHECK_THROWS_AS(parse_pbw("E^-1", Algebra::Dq, SYM), ParseError);
    CHECK_THROWS_AS(parse_pbw("E +", Algebra::Dq, SYM), ParseError);
    CHECK_THROWS_AS(parse_pbw("E ) K", Algebra::Dq, SYM), ParseError);
}

TEST_CASE("printing round trips") {
    std::vector<std::string> exprs = {"F*E", "E^2 K Kt^-1 F", "K - Kt", "2 + v^2",
                                      "(1 - v^2) E F + K^3"};
    for (auto& e : exprs) {
        PBWElement x = parse_pbw(e, Algebra::Dq, SYM);
        PBWElement back = parse_pbw(pbw_text(x), Algebra::Dq, SYM);
        CHECK(back == x);
    }
    CHECK(pbw_text(parse_pbw("K*E", Algebra::Dq, SYM)) == "v^2 E K");
    CHECK(pbw_text(PBWElement::zero(Algebra::Dq, SYM)) == "0");
    CHECK(pbw_text(parse_pbw("F*E", Algebra::Dq, SYM)) ==
          "E F - v/(v^2 - 1) K + v/(v^2 - 1) Kt^-1");
}

TEST_CASE("borel parsing") {
    BorelElement up = parse_borel("E^2 K^-1", Side::Upper, SYM);
    CHECK(up.terms().size() == 1);
    CHECK(up.terms().begin()->first == BorelMono{2, -1});
    // lower side converts to the canonical F-then-K order
    BorelElement lo = parse_borel("F*K", Side::Lower, SYM);
    CHECK(lo == BorelElement::monomial(Side::Lower, SYM, {1, 1}, Scalar::one(SYM)));
    BorelElement lo2 = parse_borel("K*F", Side::Lower, SYM);
    CHECK(lo2 == BorelElement::monomial(Side::Lower, SYM, {1, 1}, Scalar::qpow(SYM, -2)));
    CHECK_THROWS_AS(parse_borel("F", Side::Upper, SYM), ParseError);
    CHECK_THROWS_AS(parse_borel("E", Side::Lower, SYM), ParseError);
}

TEST_CASE("scalar parsing") {
    CHECK(parse_scalar("21/4", FieldMode::rational(Rat(2))).rat() == Rat(21, 4));
    CHECK(parse_scalar("v^2 + 2 + v^-2", SYM) ==
          Scalar::qpow(SYM, 2) + Scalar::from_int(SYM, 2) + Scalar::qpow(SYM, -2));
    CHECK_THROWS_AS(parse_scalar("E", SYM), ParseError);
}

TEST_CASE("json forms are canonical and stable") {
    PBWElement x = parse_pbw("F*E + K^2", Algebra::Dq, SYM);
    Json j1 = pbw_json(x), j2 = pbw_json(parse_pbw("K^2 + F*E", Algebra::Dq, SYM));
    CHECK(j1.dump() == j2.dump());  // ordering canonicalized
    CHECK(j1["algebra"] == "Dq");
    // scalar JSON round-trip sanity on the shape
    Scalar s = Scalar::fraction(Laurent::v(2) + Laurent(2) + Laurent::v(-2), Laurent(1));
    Json js = scalar_json(s);
    CHECK(js["terms"].size() == 3);
    CHECK(js["den"].size() == 1);
    FieldMode c4 = FieldMode::cyclotomic(4, 1);
    CHECK(scalar_json(Scalar::qpow(c4, 1)).contains("cyclotomic"));
}

TEST_CASE("cartan json inputs") {
    Json cj = Json{{"a", {{2, -1}, {-1, 2}}}, {"d", {1, 1}}};
    CartanData cd = cartan_from_json(cj);
    CHECK(cd.n == 2);
    Json bad = Json{{"a", {{2, 1}, {1, 2}}}, {"d", {1, 1}}};
    CHECK_THROWS_AS(cartan_from_json(bad), DomainError);
    // 1x1 matrices with expression entries
    Json mj = Json{{"E", {{{"0"}}}}, {"F", {{{"0"}}}}, {"K", {{{"v"}}}}};
    std::vector<Scalar> s = {Scalar::from_int(SYM, 3)};
    RankNRep rep = rep_from_json(mj, s, SYM);
    CHECK(rep.dim == 1);
    CHECK(rep.K[0].at(0, 0) == Scalar::qpow(SYM, 1) * Scalar::from_int(SYM, 3));
    CHECK(rep.Kt[0].at(0, 0) ==
          Scalar::qpow(SYM, 1) * Scalar::from_int(SYM, 3).inverse());
}
