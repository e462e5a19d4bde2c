#include "qdouble/hopf.hpp"

namespace qd {

TensorElement TensorElement::outer(const PBWElement& x, const PBWElement& y) {
    if (x.algebra() != y.algebra() || x.mode() != y.mode())
        throw ModeMismatch("tensor outer: tag/mode mismatch");
    TensorElement t(x.algebra(), x.mode());
    for (auto& [mx, cx] : x.terms())
        for (auto& [my, cy] : y.terms()) t.add({mx, my}, cx * cy);
    return t;
}

TensorElement TensorElement::unit(Algebra alg, const FieldMode& mode) {
    TensorElement t(alg, mode);
    t.add({PBWMonomial{}, PBWMonomial{}}, Scalar::one(mode));
    return t;
}

void TensorElement::add(const TensorKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement t = *this;
    for (auto& [k, c] : o.terms_) t.add(k, c);
    return t;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement t = *this;
    for (auto& [k, c] : o.terms_) t.add(k, -c);
    return t;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    TensorElement t(alg_, mode_);
    for (auto& [k1, c1] : terms_) {
        PBWElement l1 = PBWElement::monomial(alg_, mode_, k1.first, Scalar::one(mode_));
        PBWElement r1 = PBWElement::monomial(alg_, mode_, k1.second, Scalar::one(mode_));
        for (auto& [k2, c2] : o.terms_) {
            PBWElement l = multiply(l1, PBWElement::monomial(alg_, mode_, k2.first, Scalar::one(mode_)));
            PBWElement r = multiply(r1, PBWElement::monomial(alg_, mode_, k2.second, Scalar::one(mode_)));
            Scalar c = c1 * c2;
            for (auto& [ml, cl] : l.terms())
                for (auto& [mr, cr] : r.terms()) t.add({ml, mr}, c * cl * cr);
        }
    }
    return t;
}

TensorElement TensorElement::operator*(const Scalar& s) const {
    TensorElement t(alg_, mode_);
    if (s.is_zero()) return t;
    for (auto& [k, c] : terms_) t.add(k, c * s);
    return t;
}

TensorElement TensorElement::pow(unsigned n) const {
    TensorElement r = unit(alg_, mode_);
    TensorElement base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
    return alg_ == o.alg_ && mode_ == o.mode_ && terms_ == o.terms_;
}

void Tensor3Element::add(const Tensor3Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Tensor3Element::operator==(const Tensor3Element& o) const {
    return alg_ == o.alg_ && mode_ == o.mode_ && terms_ == o.terms_;
}

namespace {

// Delta on a single generator
TensorElement coproduct_gen(Gen g, Algebra alg, const FieldMode& mode) {
    auto mono = [&](PBWMonomial m1, PBWMonomial m2) {
        TensorElement t(alg, mode);
        t.add({m1, m2}, Scalar::one(mode));
        return t;
    };
    const int kt = alg == Algebra::Uq ? 0 : 1;  // Kt collapses to K in U_q
    switch (g) {
        case Gen::E:  // E (x) 1 + K (x) E
            return mono({1, 0, 0, 0}, {}) + mono({0, 1, 0, 0}, {1, 0, 0, 0});
        case Gen::F:  // F (x) Kt^-1 + 1 (x) F
            return mono({0, 0, 0, 1}, {0, kt ? 0 : -1, kt ? -1 : 0, 0}) +
                   mono({}, {0, 0, 0, 1});
        case Gen::K: return mono({0, 1, 0, 0}, {0, 1, 0, 0});
        case Gen::Kinv: return mono({0, -1, 0, 0}, {0, -1, 0, 0});
        case Gen::Kt:
            return kt ? mono({0, 0, 1, 0}, {0, 0, 1, 0}) : mono({0, 1, 0, 0}, {0, 1, 0, 0});
        case Gen::Ktinv:
            return kt ? mono({0, 0, -1, 0}, {0, 0, -1, 0}) : mono({0, -1, 0, 0}, {0, -1, 0, 0});
    }
    throw Error("unreachable");
}

}  // namespace

TensorElement coproduct(const PBWElement& x) {
    const Algebra alg = x.algebra();
    const FieldMode& mode = x.mode();
    TensorElement out(alg, mode);
    for (auto& [m, c] : x.terms()) {
        // group-like block in one shot, E/F blocks by repeated multiplication
        TensorElement t(alg, mode);
        t.add({{0, m.c, m.d, 0}, {0, m.c, m.d, 0}}, Scalar::one(mode));
        if (m.a) t = coproduct_gen(Gen::E, alg, mode).pow(unsigned(m.a)) * t;
        if (m.b) t = t * coproduct_gen(Gen::F, alg, mode).pow(unsigned(m.b));
        out = out + t * c;
    }
    return out;
}

Tensor3Element coproduct2(const PBWElement& x) {
    Tensor3Element out(x.algebra(), x.mode());
    const TensorElement d = coproduct(x);
    for (auto& [k, c] : d.terms()) {
        TensorElement inner =
            coproduct(PBWElement::monomial(x.algebra(), x.mode(), k.first, Scalar::one(x.mode())));
        for (auto& [kk, cc] : inner.terms())
            out.add({kk.first, kk.second, k.second}, c * cc);
    }
    return out;
}

Tensor3Element coproduct2_right(const PBWElement& x) {
    Tensor3Element out(x.algebra(), x.mode());
    const TensorElement d = coproduct(x);
    for (auto& [k, c] : d.terms()) {
        TensorElement inner =
            coproduct(PBWElement::monomial(x.algebra(), x.mode(), k.second, Scalar::one(x.mode())));
        for (auto& [kk, cc] : inner.terms())
            out.add({k.first, kk.first, kk.second}, c * cc);
    }
    return out;
}

Scalar counit(const PBWElement& x) {
    Scalar r = Scalar::zero(x.mode());
    for (auto& [m, c] : x.terms())
        if (m.a == 0 && m.b == 0) r += c;
    return r;
}

PBWElement antipode(const PBWElement& x, int power) {
    if (power != 1 && power != -1) throw DomainError("antipode power must be +-1");
    const Algebra alg = x.algebra();
    const FieldMode& mode = x.mode();
    const Gen kt = alg == Algebra::Uq ? Gen::K : Gen::Kt;

    // S(E) = -K^-1 E, S(F) = -F Kt;  S^-1(E) = -E K^-1, S^-1(F) = -Kt F
    WordExpr se, sf;
    se.terms.push_back({-Scalar::one(mode),
                        power == 1 ? Word{Gen::Kinv, Gen::E} : Word{Gen::E, Gen::Kinv}});
    sf.terms.push_back({-Scalar::one(mode), power == 1 ? Word{Gen::F, kt} : Word{kt, Gen::F}});
    const PBWElement sE = normalize(se, alg, mode);
    const PBWElement sF = normalize(sf, alg, mode);

    PBWElement out(alg, mode);
    for (auto& [m, c] : x.terms()) {
        // anti-map: S(E^a K^c Kt^d F^b) = S(F)^b Kt^-d K^-c S(E)^a
        PBWElement t = PBWElement::monomial(alg, mode, {0, -m.c, -m.d, 0}, c);
        if (alg == Algebra::Uq && m.d != 0) throw Error("U_q monomial with Kt part");
        t = sF.pow(unsigned(m.b)) * t;
        t = t * sE.pow(unsigned(m.a));
        out = out + t;
    }
    return out;
}

PBWElement contract_counit_left(const TensorElement& t) {
    PBWElement r(t.algebra(), t.mode());
    for (auto& [k, c] : t.terms())
        if (k.first.a == 0 && k.first.b == 0) r.add(k.second, c);
    return r;
}

PBWElement contract_counit_right(const TensorElement& t) {
    PBWElement r(t.algebra(), t.mode());
    for (auto& [k, c] : t.terms())
        if (k.second.a == 0 && k.second.b == 0) r.add(k.first, c);
    return r;
}

PBWElement multiply_legs(const TensorElement& t) {
    PBWElement r(t.algebra(), t.mode());
    for (auto& [k, c] : t.terms()) {
        PBWElement p = multiply(PBWElement::monomial(t.algebra(), t.mode(), k.first, c),
                                PBWElement::monomial(t.algebra(), t.mode(), k.second,
                                                     Scalar::one(t.mode())));
        r = r + p;
    }
    return r;
}

PBWElement antipode_mul_left(const TensorElement& t, int power) {
    PBWElement r(t.algebra(), t.mode());
    for (auto& [k, c] : t.terms()) {
        PBWElement s = antipode(
            PBWElement::monomial(t.algebra(), t.mode(), k.first, Scalar::one(t.mode())), power);
        r = r + multiply(s, PBWElement::monomial(t.algebra(), t.mode(), k.second, c));
    }
    return r;
}

PBWElement antipode_mul_right(const TensorElement& t, int power) {
    PBWElement r(t.algebra(), t.mode());
    for (auto& [k, c] : t.terms()) {
        PBWElement s = antipode(
            PBWElement::monomial(t.algebra(), t.mode(), k.second, Scalar::one(t.mode())), power);
        r = r + multiply(PBWElement::monomial(t.algebra(), t.mode(), k.first, c), s);
    }
    return r;
}

TensorElement project_pi_tensor(const TensorElement& t) {
    TensorElement r(Algebra::Uq, t.mode());
    for (auto& [k, c] : t.terms()) {
        PBWMonomial l{k.first.a, k.first.c + k.first.d, 0, k.first.b};
        PBWMonomial rr{k.second.a, k.second.c + k.second.d, 0, k.second.b};
        r.add({l, rr}, c);
    }
    return r;
}

}  // namespace qd
