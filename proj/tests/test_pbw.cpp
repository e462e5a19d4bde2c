#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdouble/pbw.hpp"

using namespace qd;

namespace {

const FieldMode SYM = FieldMode::symbolic();

PBWElement gen(Gen g, Algebra alg = Algebra::Dq) { return PBWElement::generator(alg, SYM, g); }
Scalar vpow(int k) { return Scalar::qpow(SYM, k); }
Scalar inv_qq() { return (vpow(1) - vpow(-1)).inverse(); }

WordExpr expr(std::initializer_list<Gen> w) {
    WordExpr e;
    e.terms.push_back({Scalar::one(SYM), Word(w)});
    return e;
}

Word random_word(std::mt19937_64& rng, size_t maxlen) {
    std::uniform_int_distribution<int> len(0, int(maxlen)), pick(0, 5);
    Word w(size_t(len(rng)));
    for (auto& g : w) g = Gen(pick(rng));
    return w;
}

PBWElement random_element(std::mt19937_64& rng, Algebra alg = Algebra::Dq) {
    std::uniform_int_distribution<int> nt(1, 3), ex(0, 2), kx(-2, 2), cf(-3, 3);
    PBWElement r(alg, SYM);
    for (int t = nt(rng); t > 0; --t) {
        PBWMonomial m{ex(rng), kx(rng), alg == Algebra::Dq ? kx(rng) : 0, ex(rng)};
        r.add(m, Scalar::from_int(SYM, cf(rng)));
    }
    return r;
}

}  // namespace

TEST_CASE("normalize: defining relations") {
    // K E = q^2 E K
    PBWElement ke = normalize(expr({Gen::K, Gen::E}), Algebra::Dq, SYM);
    PBWElement ek = gen(Gen::E) * gen(Gen::K);
    CHECK(ke == ek * vpow(2));
    // inverse cancellation
    CHECK(normalize(expr({Gen::E, Gen::K, Gen::Kinv}), Algebra::Dq, SYM) == gen(Gen::E));
    // F E = E F - (q-q^-1)^-1 K + (q-q^-1)^-1 Kt^-1
    PBWElement fe = normalize(expr({Gen::F, Gen::E}), Algebra::Dq, SYM);
    PBWElement want = gen(Gen::E) * gen(Gen::F) - gen(Gen::K) * inv_qq() +
                      gen(Gen::Ktinv) * inv_qq();
    CHECK(fe == want);
    // idempotence on already-normal words
    Word normal{Gen::E, Gen::E, Gen::K, Gen::Kt, Gen::F};
    PBWElement once = normalize(normal, Algebra::Dq, SYM);
    CHECK(once.terms().size() == 1);
    CHECK(once.terms().begin()->first == PBWMonomial{2, 1, 1, 1});
}

TEST_CASE("normalize: U_q identifies Kt with K") {
    PBWElement fe = normalize(expr({Gen::F, Gen::E}), Algebra::Uq, SYM);
    PBWElement want = gen(Gen::E, Algebra::Uq) * gen(Gen::F, Algebra::Uq) -
                      gen(Gen::K, Algebra::Uq) * inv_qq() +
                      gen(Gen::Kinv, Algebra::Uq) * inv_qq();
    CHECK(fe == want);
    CHECK(normalize(expr({Gen::Kt}), Algebra::Uq, SYM) == gen(Gen::K, Algebra::Uq));
}

TEST_CASE("multiply examples") {
    CHECK(gen(Gen::E) * gen(Gen::F) ==
          PBWElement::monomial(Algebra::Dq, SYM, {1, 0, 0, 1}, Scalar::one(SYM)));
    // E^2 K * Kt F: the concatenated word is already in normal order, so the
    // product is E^2 K Kt F on the nose (certified by the oracle below)
    PBWElement lhs = normalize(Word{Gen::E, Gen::E, Gen::K}, Algebra::Dq, SYM) *
                     normalize(Word{Gen::Kt, Gen::F}, Algebra::Dq, SYM);
    CHECK(lhs == PBWElement::monomial(Algebra::Dq, SYM, {2, 1, 1, 1}, Scalar::one(SYM)));
    WordExpr cross;
    cross.terms.push_back({Scalar::one(SYM), {Gen::E, Gen::E, Gen::K, Gen::Kt, Gen::F}});
    CHECK(oracle_check(cross, SYM));
}

TEST_CASE("oracle: operators satisfy all defining relations on A'") {
    // sample basis elements T^(a,c,d,b)
    std::vector<PBWMonomial> basis;
    for (int a : {0, 1, 2, 3})
        for (int c : {-2, 0, 1})
            for (int d : {-1, 0, 2})
                for (int b : {0, 1, 2}) basis.push_back({a, c, d, b});

    const Scalar iq = inv_qq();
    auto apply2 = [](Gen g1, Gen g2, const APrimeElement& x) {
        return oracle_apply(g1, oracle_apply(g2, x));
    };
    auto sub = [](APrimeElement a, const APrimeElement& b) {
        for (auto& [m, c] : b.terms) {
            auto it = a.terms.find(m);
            if (it == a.terms.end()) a.terms.emplace(m, -c);
            else {
                it->second -= c;
                if (it->second.is_zero()) a.terms.erase(it);
            }
        }
        return a;
    };
    auto scaled = [](APrimeElement a, const Scalar& s) {
        for (auto& [m, c] : a.terms) c *= s;
        return a;
    };

    for (auto& m : basis) {
        APrimeElement x{SYM, {}};
        x.terms.emplace(m, Scalar::one(SYM));
        // he = q^2 eh, hf = q^-2 fh (and the Kt versions)
        CHECK(apply2(Gen::K, Gen::E, x) == scaled(apply2(Gen::E, Gen::K, x), vpow(2)));
        CHECK(apply2(Gen::Kt, Gen::E, x) == scaled(apply2(Gen::E, Gen::Kt, x), vpow(2)));
        CHECK(apply2(Gen::K, Gen::F, x) == scaled(apply2(Gen::F, Gen::K, x), vpow(-2)));
        CHECK(apply2(Gen::Kt, Gen::F, x) == scaled(apply2(Gen::F, Gen::Kt, x), vpow(-2)));
        // inverses and commuting K-block
        CHECK(apply2(Gen::K, Gen::Kinv, x) == x);
        CHECK(apply2(Gen::Ktinv, Gen::Kt, x) == x);
        CHECK(apply2(Gen::K, Gen::Kt, x) == apply2(Gen::Kt, Gen::K, x));
        // ef - fe = (h - ht^-1)/(q - q^-1)
        APrimeElement lhs = sub(apply2(Gen::E, Gen::F, x), apply2(Gen::F, Gen::E, x));
        APrimeElement rhs =
            scaled(sub(oracle_apply(Gen::K, x), oracle_apply(Gen::Ktinv, x)), iq);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("oracle: f on T1 has the re-derived coefficient") {
    APrimeElement t1 = oracle_apply(Gen::E, oracle_one(SYM));
    APrimeElement ft1 = oracle_apply(Gen::F, t1);
    // f(T1) = T1 T4 - (T2 - T3^-1)/(q - q^-1)
    APrimeElement want{SYM, {}};
    want.terms.emplace(PBWMonomial{1, 0, 0, 1}, Scalar::one(SYM));
    want.terms.emplace(PBWMonomial{0, 1, 0, 0}, -inv_qq());
    want.terms.emplace(PBWMonomial{0, 0, -1, 0}, inv_qq());
    CHECK(ft1 == want);
}

TEST_CASE("oracle_check examples") {
    CHECK(oracle_check(expr({}), SYM));  // the word "1"
    CHECK(oracle_apply_word({}, SYM) == oracle_one(SYM));
    CHECK(oracle_check(expr({Gen::K, Gen::E}), SYM));
    // K E - q^2 E K acts as zero
    WordExpr rel;
    rel.terms.push_back({Scalar::one(SYM), {Gen::K, Gen::E}});
    rel.terms.push_back({-vpow(2), {Gen::E, Gen::K}});
    CHECK(oracle_check(rel, SYM));
    CHECK(normalize(rel, Algebra::Dq, SYM).is_zero());
}

TEST_CASE("normalize agrees with the oracle on random words") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 60; ++i) {
        WordExpr e;
        e.terms.push_back({Scalar::one(SYM), random_word(rng, 10)});
        CHECK(oracle_check(e, SYM));
    }
}

TEST_CASE("normalize is idempotent") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        WordExpr e;
        e.terms.push_back({Scalar::one(SYM), random_word(rng, 9)});
        PBWElement n = normalize(e, Algebra::Dq, SYM);
        WordExpr back;
        for (auto& [m, c] : n.terms()) back.terms.push_back({c, monomial_word(m)});
        CHECK(normalize(back, Algebra::Dq, SYM) == n);
    }
}

TEST_CASE("multiplication is associative on random triples") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 12; ++i) {
        PBWElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
}

TEST_CASE("project_pi") {
    CHECK(project_pi(gen(Gen::Kt)) == gen(Gen::K, Algebra::Uq));
    CHECK(project_pi(gen(Gen::K) - gen(Gen::Kt)).is_zero());
    PBWElement ekktf = normalize(Word{Gen::E, Gen::K, Gen::Kt, Gen::F}, Algebra::Dq, SYM);
    CHECK(project_pi(ekktf) ==
          PBWElement::monomial(Algebra::Uq, SYM, {1, 2, 0, 1}, Scalar::one(SYM)));
    // algebra map on random pairs
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        PBWElement x = random_element(rng), y = random_element(rng);
        CHECK(project_pi(multiply(x, y)) == multiply(project_pi(x), project_pi(y)));
    }
}

TEST_CASE("project_pi_z") {
    Scalar s = Scalar::from_int(SYM, 3);
    PBWElement kktinv = normalize(Word{Gen::K, Gen::Ktinv}, Algebra::Dq, SYM);
    CHECK(project_pi_z(kktinv, s, +1) ==
          PBWElement::monomial(Algebra::Uq, SYM, {}, s * s));
    CHECK(project_pi_z(gen(Gen::E), Scalar::one(SYM), +1) == gen(Gen::E, Algebra::Uq));
    // pi_z^+(EF - FE) = pi_z^+((K - Kt^-1)/(q - q^-1)) = s (K - K^-1)/(q - q^-1),
    // since pi_z^+(Kt^-1) = (s^-1 K)^-1 = s K^-1; consistent with pi_z^+ being
    // an algebra map: pi(E)pi(F) - pi(F)pi(E) = s (EF - FE)
    PBWElement comm = gen(Gen::E) * gen(Gen::F) - gen(Gen::F) * gen(Gen::E);
    PBWElement img = project_pi_z(comm, s, +1);
    PBWElement want = (gen(Gen::K, Algebra::Uq) - gen(Gen::Kinv, Algebra::Uq)) * (s * inv_qq());
    CHECK(img == want);
    // kernel property and algebra-map property (both signs)
    std::mt19937_64 rng(31);
    for (int sign : {+1, -1}) {
        PBWElement kk = kktinv - PBWElement::unit(Algebra::Dq, SYM) * (s * s);
        CHECK(project_pi_z(kk, s, sign).is_zero());
        for (int i = 0; i < 8; ++i) {
            PBWElement x = random_element(rng), y = random_element(rng);
            CHECK(project_pi_z(multiply(x, y), s, sign) ==
                  multiply(project_pi_z(x, s, sign), project_pi_z(y, s, sign)));
        }
    }
}
