#include "qdouble/pairing.hpp"

namespace qd {

// --------------------------------------------------------------- Borel side

BorelElement BorelElement::unit(Side side, const FieldMode& mode) {
    return monomial(side, mode, {}, Scalar::one(mode));
}

BorelElement BorelElement::monomial(Side side, const FieldMode& mode, const BorelMono& m,
                                    const Scalar& c) {
    BorelElement e(side, mode);
    e.add(m, c);
    return e;
}

BorelElement BorelElement::efgen(Side side, const FieldMode& mode) {
    return monomial(side, mode, {1, 0}, Scalar::one(mode));
}

BorelElement BorelElement::kpow(Side side, const FieldMode& mode, int b) {
    return monomial(side, mode, {0, b}, Scalar::one(mode));
}

void BorelElement::add(const BorelMono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BorelElement BorelElement::operator+(const BorelElement& o) const {
    if (side_ != o.side_ || mode_ != o.mode_) throw ModeMismatch("Borel add: side/mode mismatch");
    BorelElement r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

BorelElement BorelElement::operator-(const BorelElement& o) const {
    BorelElement n = o * Scalar::from_int(mode_, -1);
    return *this + n;
}

BorelElement BorelElement::operator*(const BorelElement& o) const {
    if (side_ != o.side_ || mode_ != o.mode_) throw ModeMismatch("Borel mul: side/mode mismatch");
    BorelElement r(side_, mode_);
    for (auto& [m1, c1] : terms_) {
        for (auto& [m2, c2] : o.terms_) {
            // K^b past E^a costs q^(2ba); past F^a costs q^(-2ba)
            long e = 2L * m1.b * m2.a * (side_ == Side::Upper ? 1 : -1);
            r.add({m1.a + m2.a, m1.b + m2.b}, c1 * c2 * Scalar::qpow(mode_, e));
        }
    }
    return r;
}

BorelElement BorelElement::operator*(const Scalar& s) const {
    BorelElement r(side_, mode_);
    if (s.is_zero()) return r;
    for (auto& [m, c] : terms_) r.add(m, c * s);
    return r;
}

bool BorelElement::operator==(const BorelElement& o) const {
    return side_ == o.side_ && mode_ == o.mode_ && terms_ == o.terms_;
}

BorelTensor borel_coproduct(const BorelElement& x) {
    const FieldMode& mode = x.mode();
    BorelTensor t{x.side(), mode, {}};
    auto add = [&t](const BorelMono& m1, const BorelMono& m2, const Scalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(m1, m2);
        auto it = t.terms.find(key);
        if (it == t.terms.end()) {
            t.terms.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.terms.erase(it);
        }
    };
    for (auto& [m, c] : x.terms()) {
        for (int i = 0; i <= m.a; ++i) {
            Scalar f = c * Scalar::qpow(mode, long(i) * (m.a - i)) *
                       qbinomial(m.a, unsigned(i), mode);
            if (x.side() == Side::Upper) {
                // Delta(E^a K^b) = sum v^{i(a-i)} [a i] E^{a-i}K^{i+b} (x) E^i K^b
                add({m.a - i, i + m.b}, {i, m.b}, f);
            } else {
                // Delta(F^a K^b) = sum v^{i(a-i)} [a i] F^i K^b (x) F^{a-i} K^{b-i}
                add({i, m.b}, {m.a - i, m.b - i}, f);
            }
        }
    }
    return t;
}

BorelTensor3 borel_coproduct2(const BorelElement& x) {
    BorelTensor3 t{x.side(), x.mode(), {}};
    const BorelTensor d = borel_coproduct(x);
    for (auto& [k, c] : d.terms) {
        BorelTensor inner =
            borel_coproduct(BorelElement::monomial(x.side(), x.mode(), k.first, c));
        for (auto& [kk, cc] : inner.terms) {
            auto key = std::make_tuple(kk.first, kk.second, k.second);
            auto it = t.terms.find(key);
            if (it == t.terms.end()) {
                t.terms.emplace(key, cc);
            } else {
                it->second += cc;
                if (it->second.is_zero()) t.terms.erase(it);
            }
        }
    }
    return t;
}

BorelElement borel_antipode(const BorelElement& x, int power) {
    if (power != 1 && power != -1) throw DomainError("borel_antipode power must be +-1");
    const FieldMode& mode = x.mode();
    const Side side = x.side();
    // S(E) = -K^-1 E, S(F) = -F K;  S^-1(E) = -E K^-1, S^-1(F) = -K F
    BorelElement sgen(side, mode);
    if (side == Side::Upper) {
        sgen.add({1, -1}, power == 1 ? -Scalar::qpow(mode, -2) : -Scalar::one(mode));
    } else {
        sgen.add({1, 1}, power == 1 ? -Scalar::one(mode) : -Scalar::qpow(mode, -2));
    }
    BorelElement r(side, mode);
    for (auto& [m, c] : x.terms()) {
        BorelElement t = BorelElement::monomial(side, mode, {0, -m.b}, c);
        for (int i = 0; i < m.a; ++i) t = t * sgen;
        r = r + t;
    }
    return r;
}

// ------------------------------------------------------------- the pairing

Scalar SkewPairing::pair_mono(const BorelMono& upper, const BorelMono& lower) const {
    const int a = upper.a, b = upper.b, a2 = lower.a, b2 = lower.b;
    if (a != a2) return Scalar::zero(mode_);  // axiom (2): degree filtering
    if (a == 0) return Scalar::qpow(mode_, 2L * b * b2);

    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({a, b, a2, b2});
        if (it != memo_.end()) return it->second;
    }

    Scalar r = Scalar::zero(mode_);
    if (a == 1 && b2 == 0) {
        // phi(E K^b, F) = phi(E (x) K^b, Delta(F)) = phi(E,F) phi(K^b, K^-1)
        const Scalar phiEF = (Scalar::qpow(mode_, 2) - Scalar::one(mode_)).inverse();
        r = phiEF * Scalar::qpow(mode_, -2L * b);
    } else {
        // split y = F . (F^(a-1) K^b2) by axiom (4); only the Sweedler term
        // with a degree-1 second component survives
        r = Scalar::qpow(mode_, a - 1) * qint(unsigned(a), mode_) * pair_mono({1, b}, {1, 0}) *
            pair_mono({a - 1, b + 1}, {a - 1, b2});
    }

    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::make_tuple(a, b, a2, b2), r);
    return r;
}

Scalar SkewPairing::pair(const BorelElement& x, const BorelElement& y) const {
    if (x.side() != Side::Upper || y.side() != Side::Lower)
        throw DomainError("pair expects (upper, lower)");
    if (x.mode() != mode_ || y.mode() != mode_) throw ModeMismatch("pair: mode mismatch");
    Scalar r = Scalar::zero(mode_);
    for (auto& [mx, cx] : x.terms())
        for (auto& [my, cy] : y.terms()) r += cx * cy * pair_mono(mx, my);
    return r;
}

Scalar SkewPairing::pair_closed(int a, int b, int a2, int b2) const {
    if (a != a2) return Scalar::zero(mode_);
    const Scalar phiEF = (Scalar::qpow(mode_, 2) - Scalar::one(mode_)).inverse();
    Scalar r = qfactorial(unsigned(a), mode_) * phiEF.pow(a) *
               Scalar::qpow(mode_, -long(a) * (a - 1) / 2);
    return r * Scalar::qpow(mode_, 2L * (long(b) * b2 + long(a) * b2 - long(a) * b));
}

// ------------------------------------------------------------- the double

DoubleElement DoubleElement::unit(const FieldMode& mode) {
    return monomial(mode, {}, Scalar::one(mode));
}

DoubleElement DoubleElement::outer(const BorelElement& up, const BorelElement& lo) {
    if (up.side() != Side::Upper || lo.side() != Side::Lower)
        throw DomainError("DoubleElement::outer expects (upper, lower)");
    if (up.mode() != lo.mode()) throw ModeMismatch("outer: mode mismatch");
    DoubleElement r(up.mode());
    for (auto& [mu, cu] : up.terms())
        for (auto& [ml, cl] : lo.terms()) r.add({mu, ml}, cu * cl);
    return r;
}

DoubleElement DoubleElement::monomial(const FieldMode& mode, const DoubleMono& m, const Scalar& c) {
    DoubleElement r(mode);
    r.add(m, c);
    return r;
}

void DoubleElement::add(const DoubleMono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DoubleElement DoubleElement::operator+(const DoubleElement& o) const {
    DoubleElement r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

DoubleElement DoubleElement::operator-(const DoubleElement& o) const {
    DoubleElement r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
}

DoubleElement DoubleElement::operator*(const Scalar& s) const {
    DoubleElement r(mode_);
    if (s.is_zero()) return r;
    for (auto& [m, c] : terms_) r.add(m, c * s);
    return r;
}

bool DoubleElement::operator==(const DoubleElement& o) const {
    return mode_ == o.mode_ && terms_ == o.terms_;
}

DoubleElement double_multiply(const SkewPairing& phi, const DoubleElement& u,
                              const DoubleElement& w) {
    const FieldMode& mode = phi.mode();
    if (u.mode() != mode || w.mode() != mode) throw ModeMismatch("double_multiply: mode mismatch");
    DoubleElement out(mode);
    for (auto& [m1, c1] : u.terms()) {
        // Delta^2 of the lower factor y of the left operand
        BorelTensor3 lo3 = borel_coproduct2(
            BorelElement::monomial(Side::Lower, mode, m1.lo, Scalar::one(mode)));
        for (auto& [m2, c2] : w.terms()) {
            BorelTensor3 up3 = borel_coproduct2(
                BorelElement::monomial(Side::Upper, mode, m2.up, Scalar::one(mode)));
            const Scalar c = c1 * c2;
            for (auto& [uk, uc] : up3.terms) {
                const auto& [x1, x2, x3] = uk;
                for (auto& [lk, lc] : lo3.terms) {
                    const auto& [y1, y2, y3] = lk;
                    Scalar s1 = phi.pair_mono(x1, y1);
                    if (s1.is_zero()) continue;
                    // phi(x'_(3), S^-1(y_(3)))
                    BorelElement sy = borel_antipode(
                        BorelElement::monomial(Side::Lower, mode, y3, Scalar::one(mode)), -1);
                    Scalar s3 = Scalar::zero(mode);
                    for (auto& [sm, sc] : sy.terms()) s3 += sc * phi.pair_mono(x3, sm);
                    if (s3.is_zero()) continue;
                    // x x'_(2)  and  y_(2) y'
                    BorelElement xm =
                        BorelElement::monomial(Side::Upper, mode, m1.up, Scalar::one(mode)) *
                        BorelElement::monomial(Side::Upper, mode, x2, Scalar::one(mode));
                    BorelElement ym =
                        BorelElement::monomial(Side::Lower, mode, y2, Scalar::one(mode)) *
                        BorelElement::monomial(Side::Lower, mode, m2.lo, Scalar::one(mode));
                    const Scalar f = c * uc * lc * s1 * s3;
                    for (auto& [xmm, xmc] : xm.terms())
                        for (auto& [ymm, ymc] : ym.terms())
                            out.add({xmm, ymm}, f * xmc * ymc);
                }
            }
        }
    }
    return out;
}

DoubleTensor double_coproduct(const DoubleElement& x) {
    const FieldMode& mode = x.mode();
    DoubleTensor t{mode, {}};
    for (auto& [m, c] : x.terms()) {
        BorelTensor du =
            borel_coproduct(BorelElement::monomial(Side::Upper, mode, m.up, Scalar::one(mode)));
        BorelTensor dl =
            borel_coproduct(BorelElement::monomial(Side::Lower, mode, m.lo, Scalar::one(mode)));
        for (auto& [ku, cu] : du.terms) {
            for (auto& [kl, cl] : dl.terms) {
                DoubleMono first{ku.first, kl.first}, second{ku.second, kl.second};
                auto key = std::make_pair(first, second);
                Scalar f = c * cu * cl;
                auto it = t.terms.find(key);
                if (it == t.terms.end()) {
                    t.terms.emplace(key, f);
                } else {
                    it->second += f;
                    if (it->second.is_zero()) t.terms.erase(it);
                }
            }
        }
    }
    return t;
}

// ------------------------------------------------------------------- psi

DoubleElement psi_transport(const PBWElement& x) {
    if (x.algebra() != Algebra::Dq) throw DomainError("psi_transport expects a D_q element");
    const FieldMode& mode = x.mode();
    DoubleElement r(mode);
    for (auto& [m, c] : x.terms()) {
        // E^a K^c Kt^d F^b -> q^b (E^a K^c (x) K^d F^b), and K^d F^b as a
        // canonical lower monomial is q^(-2db) F^b K^d
        Scalar f = c * Scalar::qpow(mode, long(m.b) - 2L * m.d * m.b);
        r.add({{m.a, m.c}, {m.b, m.d}}, f);
    }
    return r;
}

PBWElement psi_inverse(const DoubleElement& x) {
    const FieldMode& mode = x.mode();
    PBWElement r(Algebra::Dq, mode);
    for (auto& [m, c] : x.terms()) {
        Scalar f = c * Scalar::qpow(mode, 2L * m.lo.b * m.lo.a - long(m.lo.a));
        r.add({m.up.a, m.up.b, m.lo.b, m.lo.a}, f);
    }
    return r;
}

}  // namespace qd
