#include "qdouble/pbw.hpp"

#include <algorithm>

namespace qd {

namespace {

// rewrite classes fixing the normal order E < K-block < Kt-block < F
int cls(Gen g) {
    switch (g) {
        case Gen::E: return 0;
        case Gen::K:
        case Gen::Kinv: return 1;
        case Gen::Kt:
        case Gen::Ktinv: return 2;
        case Gen::F: return 3;
    }
    return -1;
}

bool cancels(Gen x, Gen y) {
    return (x == Gen::K && y == Gen::Kinv) || (x == Gen::Kinv && y == Gen::K) ||
           (x == Gen::Kt && y == Gen::Ktinv) || (x == Gen::Ktinv && y == Gen::Kt);
}

// q-power picked up when moving x left past y (x of higher class)
int swap_qexp(Gen x, Gen y) {
    if (y == Gen::E) return (x == Gen::K || x == Gen::Kt) ? 2 : -2;       // K-likes past E
    if (x == Gen::F) return (y == Gen::K || y == Gen::Kt) ? 2 : -2;       // F past K-likes
    return 0;                                                              // Kt-block past K-block
}

}  // namespace

PBWElement PBWElement::unit(Algebra alg, const FieldMode& mode) {
    return monomial(alg, mode, PBWMonomial{}, Scalar::one(mode));
}

PBWElement PBWElement::monomial(Algebra alg, const FieldMode& mode, const PBWMonomial& m,
                                const Scalar& coeff) {
    PBWElement e(alg, mode);
    e.add(m, coeff);
    return e;
}

PBWElement PBWElement::generator(Algebra alg, const FieldMode& mode, Gen g) {
    PBWMonomial m;
    switch (g) {
        case Gen::E: m.a = 1; break;
        case Gen::F: m.b = 1; break;
        case Gen::K: m.c = 1; break;
        case Gen::Kinv: m.c = -1; break;
        case Gen::Kt:
            if (alg == Algebra::Uq) m.c = 1; else m.d = 1;
            break;
        case Gen::Ktinv:
            if (alg == Algebra::Uq) m.c = -1; else m.d = -1;
            break;
    }
    return monomial(alg, mode, m, Scalar::one(mode));
}

void PBWElement::add(const PBWMonomial& m, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
    if (alg_ != o.alg_ || mode_ != o.mode_) throw ModeMismatch("PBW add: tag/mode mismatch");
    PBWElement r = *this;
    for (auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

PBWElement PBWElement::operator-() const {
    PBWElement r(alg_, mode_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const { return *this + (-o); }

PBWElement PBWElement::operator*(const PBWElement& o) const { return multiply(*this, o); }

PBWElement PBWElement::operator*(const Scalar& s) const {
    PBWElement r(alg_, mode_);
    if (s.is_zero()) return r;
    for (auto& [m, c] : terms_) r.add(m, c * s);
    return r;
}

PBWElement PBWElement::pow(unsigned n) const {
    PBWElement r = unit(alg_, mode_);
    PBWElement base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool PBWElement::operator==(const PBWElement& o) const {
    return alg_ == o.alg_ && mode_ == o.mode_ && terms_ == o.terms_;
}

Word monomial_word(const PBWMonomial& m) {
    Word w;
    w.reserve(size_t(m.a + std::abs(m.c) + std::abs(m.d) + m.b));
    for (int i = 0; i < m.a; ++i) w.push_back(Gen::E);
    for (int i = 0; i < std::abs(m.c); ++i) w.push_back(m.c > 0 ? Gen::K : Gen::Kinv);
    for (int i = 0; i < std::abs(m.d); ++i) w.push_back(m.d > 0 ? Gen::Kt : Gen::Ktinv);
    for (int i = 0; i < m.b; ++i) w.push_back(Gen::F);
    return w;
}

PBWElement normalize(const WordExpr& x, Algebra alg, const FieldMode& mode) {
    const Scalar q2 = Scalar::qpow(mode, 2);
    const Scalar q2inv = Scalar::qpow(mode, -2);
    // 1/(q - q^-1); q^2 != 1 keeps this invertible in every mode
    const Scalar inv_qq = (Scalar::qpow(mode, 1) - Scalar::qpow(mode, -1)).inverse();

    PBWElement out(alg, mode);
    std::vector<WordTerm> work;
    for (const auto& t : x.terms) {
        if (t.coeff.is_zero()) continue;
        WordTerm wt = t;
        if (alg == Algebra::Uq) {
            for (auto& g : wt.word) {
                if (g == Gen::Kt) g = Gen::K;
                if (g == Gen::Ktinv) g = Gen::Kinv;
            }
        }
        work.push_back(std::move(wt));
    }

    while (!work.empty()) {
        WordTerm t = std::move(work.back());
        work.pop_back();
        Word& w = t.word;

        bool rewritten = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            Gen g1 = w[i], g2 = w[i + 1];
            if (cancels(g1, g2)) {
                w.erase(w.begin() + long(i), w.begin() + long(i) + 2);
                work.push_back(std::move(t));
                rewritten = true;
                break;
            }
            if (cls(g1) <= cls(g2)) continue;
            if (g1 == Gen::F && g2 == Gen::E) {
                // F E -> E F - (q - q^-1)^-1 K + (q - q^-1)^-1 Kt^-1
                WordTerm swapped = t;
                swapped.word[i] = Gen::E;
                swapped.word[i + 1] = Gen::F;
                WordTerm kterm{t.coeff * (-inv_qq), Word()};
                kterm.word.assign(w.begin(), w.begin() + long(i));
                kterm.word.push_back(Gen::K);
                kterm.word.insert(kterm.word.end(), w.begin() + long(i) + 2, w.end());
                WordTerm ktterm{t.coeff * inv_qq, Word()};
                ktterm.word.assign(w.begin(), w.begin() + long(i));
                ktterm.word.push_back(alg == Algebra::Uq ? Gen::Kinv : Gen::Ktinv);
                ktterm.word.insert(ktterm.word.end(), w.begin() + long(i) + 2, w.end());
                work.push_back(std::move(swapped));
                work.push_back(std::move(kterm));
                work.push_back(std::move(ktterm));
            } else {
                int e = swap_qexp(g1, g2);
                std::swap(w[i], w[i + 1]);
                if (e == 2) t.coeff *= q2;
                else if (e == -2) t.coeff *= q2inv;
                work.push_back(std::move(t));
            }
            rewritten = true;
            break;
        }
        if (rewritten) continue;

        // normal word: read off the monomial
        PBWMonomial m;
        for (Gen g : w) {
            switch (g) {
                case Gen::E: m.a++; break;
                case Gen::K: m.c++; break;
                case Gen::Kinv: m.c--; break;
                case Gen::Kt: m.d++; break;
                case Gen::Ktinv: m.d--; break;
                case Gen::F: m.b++; break;
            }
        }
        out.add(m, t.coeff);
    }
    return out;
}

PBWElement normalize(const Word& w, Algebra alg, const FieldMode& mode) {
    WordExpr x;
    x.terms.push_back({Scalar::one(mode), w});
    return normalize(x, alg, mode);
}

PBWElement multiply(const PBWElement& x, const PBWElement& y) {
    if (x.algebra() != y.algebra() || x.mode() != y.mode())
        throw ModeMismatch("PBW multiply: tag/mode mismatch");
    PBWElement out(x.algebra(), x.mode());
    for (auto& [m1, c1] : x.terms()) {
        Word w1 = monomial_word(m1);
        for (auto& [m2, c2] : y.terms()) {
            Word w = w1;
            Word w2 = monomial_word(m2);
            w.insert(w.end(), w2.begin(), w2.end());
            WordExpr e;
            e.terms.push_back({c1 * c2, std::move(w)});
            out = out + normalize(e, x.algebra(), x.mode());
        }
    }
    return out;
}

// ------------------------------------------------------------------ oracle

APrimeElement oracle_one(const FieldMode& mode) {
    APrimeElement x{mode, {}};
    x.terms.emplace(PBWMonomial{}, Scalar::one(mode));
    return x;
}

namespace {

void ap_add(APrimeElement& x, const PBWMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = x.terms.find(m);
    if (it == x.terms.end()) {
        x.terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) x.terms.erase(it);
    }
}

}  // namespace

APrimeElement oracle_apply(Gen g, const APrimeElement& x) {
    const FieldMode& mode = x.mode;
    const Scalar inv_qq = (Scalar::qpow(mode, 1) - Scalar::qpow(mode, -1)).inverse();
    APrimeElement r{mode, {}};
    for (auto& [m, c] : x.terms) {
        PBWMonomial t = m;
        switch (g) {
            case Gen::E:
                t.a++;
                ap_add(r, t, c);
                break;
            case Gen::K:
                t.c++;
                ap_add(r, t, c * Scalar::qpow(mode, 2 * m.a));
                break;
            case Gen::Kinv:
                t.c--;
                ap_add(r, t, c * Scalar::qpow(mode, -2 * m.a));
                break;
            case Gen::Kt:
                t.d++;
                ap_add(r, t, c * Scalar::qpow(mode, 2 * m.a));
                break;
            case Gen::Ktinv:
                t.d--;
                ap_add(r, t, c * Scalar::qpow(mode, -2 * m.a));
                break;
            case Gen::F: {
                t.b++;
                ap_add(r, t, c * Scalar::qpow(mode, 2 * (m.c + m.d)));
                if (m.a >= 1) {
                    Scalar f = c * qint(unsigned(m.a), mode) * inv_qq;
                    PBWMonomial u = m;
                    u.a--;
                    u.c++;
                    ap_add(r, u, -(f * Scalar::qpow(mode, m.a - 1)));
                    PBWMonomial w = m;
                    w.a--;
                    w.d--;
                    ap_add(r, w, f * Scalar::qpow(mode, 1 - m.a));
                }
                break;
            }
        }
    }
    return r;
}

APrimeElement oracle_apply_word(const Word& w, const FieldMode& mode) {
    APrimeElement x = oracle_one(mode);
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = oracle_apply(*it, x);
    return x;
}

APrimeElement oracle_of_normal_form(const PBWElement& x) {
    // e^a h^c ht^d f^b (1) = T1^a T2^c T3^d T4^b, so a normal form maps to
    // A' by reading its monomials as basis elements
    APrimeElement r{x.mode(), {}};
    for (auto& [m, c] : x.terms()) ap_add(r, m, c);
    return r;
}

bool oracle_check(const WordExpr& x, const FieldMode& mode) {
    APrimeElement lhs{mode, {}};
    for (auto& t : x.terms) {
        APrimeElement part = oracle_apply_word(t.word, mode);
        for (auto& [m, c] : part.terms) ap_add(lhs, m, c * t.coeff);
    }
    APrimeElement rhs = oracle_of_normal_form(normalize(x, Algebra::Dq, mode));
    return lhs == rhs;
}

// ------------------------------------------------------------- projections

PBWElement project_pi(const PBWElement& x) {
    if (x.algebra() != Algebra::Dq) throw DomainError("project_pi expects a D_q element");
    PBWElement r(Algebra::Uq, x.mode());
    for (auto& [m, c] : x.terms()) {
        PBWMonomial u{m.a, m.c + m.d, 0, m.b};
        r.add(u, c);
    }
    return r;
}

PBWElement project_pi_z(const PBWElement& x, const Scalar& s, int sign) {
    if (x.algebra() != Algebra::Dq) throw DomainError("project_pi_z expects a D_q element");
    if (s.is_zero()) throw DomainError("project_pi_z: s must be nonzero");
    if (sign != 1 && sign != -1) throw DomainError("project_pi_z: sign must be +-1");
    Scalar t = sign == 1 ? s : -s;
    PBWElement r(Algebra::Uq, x.mode());
    for (auto& [m, c] : x.terms()) {
        // E^a K^c Kt^d F^b -> (t E)^a (t K)^c (t^-1 K)^d F^b
        PBWMonomial u{m.a, m.c + m.d, 0, m.b};
        r.add(u, c * t.pow(m.a + m.c - m.d));
    }
    return r;
}

}  // namespace qd
