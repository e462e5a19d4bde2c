#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdouble/cartan.hpp"
#include "qdouble/pairing.hpp"

using namespace qd;

namespace {

const FieldMode SYM = FieldMode::symbolic();
const FieldMode Q2 = FieldMode::rational(Rat(2));

RankNRep sl3_fundamental(const FieldMode& mode, const std::vector<Scalar>& s) {
    // weights of the vector representation: K_1 = diag(q, q^-1, 1),
    // K_2 = diag(1, q, q^-1); E_1 = e_12, E_2 = e_23, F_i the transposes
    std::vector<ScalarMatrix> E(2, ScalarMatrix(3, 3, mode)), F(2, ScalarMatrix(3, 3, mode)),
        K(2, ScalarMatrix(3, 3, mode));
    E[0].set(0, 1, Scalar::one(mode));
    E[1].set(1, 2, Scalar::one(mode));
    F[0].set(1, 0, Scalar::one(mode));
    F[1].set(2, 1, Scalar::one(mode));
    K[0].set(0, 0, Scalar::qpow(mode, 1));
    K[0].set(1, 1, Scalar::qpow(mode, -1));
    K[0].set(2, 2, Scalar::one(mode));
    K[1].set(0, 0, Scalar::one(mode));
    K[1].set(1, 1, Scalar::qpow(mode, 1));
    K[1].set(2, 2, Scalar::qpow(mode, -1));
    return pullback_rep(E, F, K, s);
}

}  // namespace

TEST_CASE("cartan validation") {
    CHECK_NOTHROW(validate(cartan_rank1()));
    CHECK_NOTHROW(validate(cartan_sl3()));
    // B2 with symmetrizer (2,1)
    CartanData b2{2, {{2, -1}, {-2, 2}}, {2, 1}};
    CHECK_NOTHROW(validate(b2));
    CHECK_THROWS_AS(validate(CartanData{2, {{2, 1}, {1, 2}}, {1, 1}}), DomainError);
    CHECK_THROWS_AS(validate(CartanData{2, {{2, -1}, {-2, 2}}, {1, 1}}), DomainError);  // not sym
    // affine A1~ is not positive definite
    CHECK_THROWS_AS(validate(CartanData{2, {{2, -2}, {-2, 2}}, {1, 1}}), DomainError);
}

TEST_CASE("rank-1 degeneration is bit-identical to the base presentation") {
    CartanData cd = cartan_rank1();
    // pairing values
    SkewPairing phi(SYM);
    CHECK(generator_pairing(cd, 1, 1, PairingKind::EF, SYM) == phi.pair_mono({1, 0}, {1, 0}));
    CHECK(generator_pairing(cd, 1, 1, PairingKind::KK, SYM) == phi.pair_mono({0, 1}, {0, 1}));
    CHECK(generator_pairing(cd, 1, 1, PairingKind::KKinv, SYM) ==
          phi.pair_mono({0, 1}, {0, -1}));
    // the EF relation carries exactly 1/(q - q^-1)
    Scalar iq = (Scalar::qpow(SYM, 1) - Scalar::qpow(SYM, -1)).inverse();
    bool found_ef = false;
    for (const auto& rel : relations(cd, SYM)) {
        if (rel.kind != RankNRelation::Kind::EF) continue;
        found_ef = true;
        REQUIRE(rel.terms.size() == 4);
        CHECK(rel.terms[2].first == -iq);
        CHECK(rel.terms[3].first == iq);
    }
    CHECK(found_ef);
    // no Serre relations in rank 1
    for (const auto& rel : relations(cd, SYM))
        CHECK(rel.kind != RankNRelation::Kind::SerreE);
}

TEST_CASE("serre coefficients") {
    CartanData cd = cartan_sl3();
    const auto rels = relations(cd, SYM);
    // a_ij = -1: E_i^2 E_j - (q + q^-1) E_i E_j E_i + E_j E_i^2
    for (const auto& rel : rels) {
        if (rel.kind != RankNRelation::Kind::SerreE) continue;
        REQUIRE(rel.serre_coeffs.size() == 3);
        CHECK(rel.serre_coeffs[0].is_one());
        CHECK(rel.serre_coeffs[1] == -(Scalar::qpow(SYM, 1) + Scalar::qpow(SYM, -1)));
        CHECK(rel.serre_coeffs[2].is_one());
        // palindromic up to sign
        for (size_t s = 0; s < rel.serre_coeffs.size(); ++s) {
            const Scalar& a = rel.serre_coeffs[s];
            const Scalar& b = rel.serre_coeffs[rel.serre_coeffs.size() - 1 - s];
            CHECK((a == b || a == -b));
        }
    }
    // a_ij = 0 gives plain commutation: coefficients 1, -1
    CartanData a1a1{2, {{2, 0}, {0, 2}}, {1, 1}};
    for (const auto& rel : relations(a1a1, SYM)) {
        if (rel.kind != RankNRelation::Kind::SerreE) continue;
        REQUIRE(rel.serre_coeffs.size() == 2);
        CHECK(rel.serre_coeffs[0].is_one());
        CHECK(rel.serre_coeffs[1] == -Scalar::one(SYM));
    }
}

TEST_CASE("sl3 fundamental representation passes") {
    std::vector<Scalar> s = {Scalar::from_int(Q2, 3), Scalar::from_int(Q2, 5)};
    RankNRep rep = sl3_fundamental(Q2, s);
    MatrixRepReport r = check_matrix_rep(cartan_sl3(), rep, Q2);
    CHECK(r.all_pass);
    for (bool d : r.k_diagonal) CHECK(d);
    for (bool d : r.kt_diagonal) CHECK(d);
}

TEST_CASE("epsilon_vec passes and has the right eigenvalues") {
    std::vector<Scalar> s = {Scalar::from_int(Q2, 3), Scalar::from_int(Q2, 5)};
    RankNRep eps = epsilon_vec(cartan_sl3(), s, Q2);
    MatrixRepReport r = check_matrix_rep(cartan_sl3(), eps, Q2);
    CHECK(r.all_pass);
    CHECK(eps.K[0].at(0, 0) == s[0]);
    CHECK(eps.Kt[1].at(0, 0) == s[1].inverse());
    // K_i Kt_i^-1 eigenvalue = s_i^2
    CHECK((eps.K[0] * eps.Kt[0].diagonal_inverse()).at(0, 0) == s[0] * s[0]);
    // trivial character from s = (1,...,1)
    std::vector<Scalar> ones = {Scalar::one(Q2), Scalar::one(Q2)};
    RankNRep triv = epsilon_vec(cartan_sl3(), ones, Q2);
    CHECK(triv.K[0].at(0, 0).is_one());
}

namespace {

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b, const FieldMode& mode) {
    ScalarMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), mode);
    for (int i = 0; i < a.rows(); ++i)
        for (auto& [j, v] : a.row(i))
            for (int k = 0; k < b.rows(); ++k)
                for (auto& [l, w] : b.row(k)) m.set(i * b.rows() + k, j * b.cols() + l, v * w);
    return m;
}

// V (x) V through the U_q coproduct, then pulled back; here the Serre
// words are individually nonzero, so a corrupted coefficient must bite
RankNRep sl3_tensor_square(const FieldMode& mode, const std::vector<Scalar>& s) {
    std::vector<Scalar> ones = {Scalar::one(mode), Scalar::one(mode)};
    RankNRep v = sl3_fundamental(mode, ones);
    ScalarMatrix id = ScalarMatrix::identity(3, mode);
    std::vector<ScalarMatrix> E, F, K;
    for (int i = 0; i < 2; ++i) {
        E.push_back(kron(v.E[size_t(i)], id, mode) +
                    kron(v.K[size_t(i)], v.E[size_t(i)], mode));
        F.push_back(kron(v.F[size_t(i)], v.K[size_t(i)].diagonal_inverse(), mode) +
                    kron(id, v.F[size_t(i)], mode));
        K.push_back(kron(v.K[size_t(i)], v.K[size_t(i)], mode));
    }
    return pullback_rep(E, F, K, s);
}

}  // namespace

TEST_CASE("corrupted Serre coefficient fails as expected") {
    std::vector<Scalar> s = {Scalar::from_int(Q2, 3), Scalar::from_int(Q2, 5)};
    RankNRep rep = sl3_tensor_square(Q2, s);
    MatrixRepReport ok = check_matrix_rep(cartan_sl3(), rep, Q2);
    CHECK(ok.all_pass);
    auto rels = relations(cartan_sl3(), Q2);
    int corrupted_checked = 0;
    for (auto& rel : rels) {
        if (rel.kind != RankNRelation::Kind::SerreF && rel.kind != RankNRelation::Kind::SerreE)
            continue;
        CHECK(evaluate_relation(rel, rep, Q2).is_zero());
        RankNRelation bad = rel;
        bad.terms[1].first = bad.terms[1].first * Scalar::from_int(Q2, 2);
        CHECK_FALSE(evaluate_relation(bad, rep, Q2).is_zero());
        ++corrupted_checked;
    }
    CHECK(corrupted_checked == 4);
}

TEST_CASE("tensor-by-character invariance") {
    std::vector<Scalar> s = {Scalar::from_int(Q2, 3), Scalar::from_int(Q2, 5)};
    std::vector<Scalar> s2 = {Scalar::from_int(Q2, 2), Scalar::from_int(Q2, 7)};
    RankNRep rep = sl3_fundamental(Q2, s);
    RankNRep twisted = twist_by_character(rep, s2);
    CHECK(check_matrix_rep(cartan_sl3(), rep, Q2).all_pass);
    CHECK(check_matrix_rep(cartan_sl3(), twisted, Q2).all_pass);
}

TEST_CASE("B2 relations hold on epsilon characters") {
    CartanData b2{2, {{2, -1}, {-2, 2}}, {2, 1}};
    std::vector<Scalar> s = {Scalar::from_int(Q2, 2), Scalar::from_int(Q2, 3)};
    CHECK(check_matrix_rep(b2, epsilon_vec(b2, s, Q2), Q2).all_pass);
}
