// PBW normal form for the quantum double D_q of the Borel subalgebra of
// U_q(sl_2), and for U_q itself.
//
// D_q is presented by E, F, K^{+-1}, Kt^{+-1} (Kt = K-tilde) with
//     KE = q^2 EK,   KF = q^-2 FK,   KtE = q^2 EKt,   KtF = q^-2 FKt,
//     K Kt = Kt K,   EF - FE = (K - Kt^-1)/(q - q^-1),
// and the monomials E^a K^c Kt^d F^b form a basis.  normalize() rewrites an
// arbitrary word into that basis by leftmost-innermost rewriting of adjacent
// generator pairs.  U_q shares the engine with Kt identified to K.
//
// The faithful representation on the Laurent-polynomial module A' (from the
// proof of the presentation theorem) provides an independent oracle for the
// rewriting engine: a word acting on 1 letter by letter must agree with its
// normal form acting monomial by monomial.

#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "qdouble/scalar.hpp"

namespace qd {

enum class Gen : uint8_t { E, K, Kinv, Kt, Ktinv, F };

using Word = std::vector<Gen>;

struct WordTerm {
    Scalar coeff;
    Word word;
};

// A free expression: any sum of scalar multiples of arbitrary words.
struct WordExpr {
    std::vector<WordTerm> terms;
};

enum class Algebra : uint8_t { Dq, Uq };

// Normal monomial E^a K^c Kt^d F^b (d is always 0 in the U_q variant).
struct PBWMonomial {
    int a = 0;  // E exponent, >= 0
    int c = 0;  // K exponent
    int d = 0;  // Kt exponent
    int b = 0;  // F exponent, >= 0

    std::tuple<int, int, int, int, int> key() const { return {a + b, a, c, d, b}; }
    bool operator<(const PBWMonomial& o) const { return key() < o.key(); }
    bool operator==(const PBWMonomial& o) const {
        return a == o.a && c == o.c && d == o.d && b == o.b;
    }
    bool is_unit() const { return a == 0 && c == 0 && d == 0 && b == 0; }
};

class PBWElement {
public:
    PBWElement() = default;
    PBWElement(Algebra alg, const FieldMode& mode) : alg_(alg), mode_(mode) {}

    static PBWElement zero(Algebra alg, const FieldMode& mode) { return {alg, mode}; }
    static PBWElement unit(Algebra alg, const FieldMode& mode);
    static PBWElement monomial(Algebra alg, const FieldMode& mode, const PBWMonomial& m,
                               const Scalar& coeff);
    static PBWElement generator(Algebra alg, const FieldMode& mode, Gen g);

    Algebra algebra() const { return alg_; }
    const FieldMode& mode() const { return mode_; }
    const std::map<PBWMonomial, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    void add(const PBWMonomial& m, const Scalar& coeff);

    PBWElement operator+(const PBWElement& o) const;
    PBWElement operator-(const PBWElement& o) const;
    PBWElement operator-() const;
    PBWElement operator*(const PBWElement& o) const;  // multiply + normalize
    PBWElement operator*(const Scalar& s) const;
    PBWElement pow(unsigned n) const;

    bool operator==(const PBWElement& o) const;
    bool operator!=(const PBWElement& o) const { return !(*this == o); }

private:
    Algebra alg_ = Algebra::Dq;
    FieldMode mode_;
    std::map<PBWMonomial, Scalar> terms_;
};

// Rewrites w to the PBW normal form; result equals w in the presented
// algebra, every monomial in normal order, idempotent on normal input.
PBWElement normalize(const WordExpr& w, Algebra alg, const FieldMode& mode);
PBWElement normalize(const Word& w, Algebra alg, const FieldMode& mode);

// product in the presented algebra (concatenate words and normalize)
PBWElement multiply(const PBWElement& x, const PBWElement& y);

// the word of a normal monomial, E...E K... Kt... F...F
Word monomial_word(const PBWMonomial& m);

// ---------------------------------------------------------------------
// Faithful-representation oracle.  A' is the span of T1^a T2^c T3^d T4^b
// with a, b >= 0; the operators e, h, ht, f act by
//   e:  T^(a,c,d,b) -> T^(a+1,c,d,b)
//   h:  T^(a,c,d,b) -> q^2a T^(a,c+1,d,b)      (ht likewise on d)
//   f:  T^(a,c,d,b) -> q^(2c+2d) T^(a,c,d,b+1)
//       - [a]/(q-q^-1) (q^(a-1) T^(a-1,c+1,d,b) - q^(1-a) T^(a-1,c,d-1,b))
// The f-operator is re-derived from the requirement that e,f,h,ht satisfy
// all defining relations as endomorphisms; the printed form mixes algebra
// symbols into operator coefficients (see the relation test in tests/).
struct APrimeElement {
    FieldMode mode;
    std::map<PBWMonomial, Scalar> terms;  // monomial indexes T1^a T2^c T3^d T4^b

    bool operator==(const APrimeElement& o) const { return terms == o.terms; }
};

APrimeElement oracle_one(const FieldMode& mode);
APrimeElement oracle_apply(Gen g, const APrimeElement& x);
// word acting on 1, letter by letter (rightmost letter acts first)
APrimeElement oracle_apply_word(const Word& w, const FieldMode& mode);
// a normalized element acting on 1, monomial by monomial
APrimeElement oracle_of_normal_form(const PBWElement& x);
// the independent correctness oracle for normalize (D_q variant)
bool oracle_check(const WordExpr& x, const FieldMode& mode);

// ---------------------------------------------------------------------
// Projections onto U_q.

// pi: E -> E, F -> F, K^{+-1} -> K^{+-1}, Kt^{+-1} -> K^{+-1} (Hopf map)
PBWElement project_pi(const PBWElement& x);
// pi_z^{+-}: E -> (+-s)E, F -> F, K -> (+-s)K, Kt -> (+-s)^-1 K, where s
// is the chosen square root of z; sign is +1 or -1
PBWElement project_pi_z(const PBWElement& x, const Scalar& s, int sign);

}  // namespace qd
