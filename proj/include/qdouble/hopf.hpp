// Coalgebra and antipode structure of D_q (and U_q) on PBW elements.
//
// Generator values:
//   Delta(E) = E (x) 1 + K (x) E      Delta(K^{+-1})  = K^{+-1}  (x) K^{+-1}
//   Delta(F) = F (x) Kt^-1 + 1 (x) F  Delta(Kt^{+-1}) = Kt^{+-1} (x) Kt^{+-1}
//   eps(E) = 0 = eps(F), eps(K) = eps(Kt) = 1
//   S(E) = -K^-1 E,  S(F) = -F Kt,  S(K) = K^-1,  S(Kt) = Kt^-1
// In the U_q variant the Kt legs become K.  The D_q Delta(F) leg uses Kt^-1
// (not K^-1): this is forced by psi(F) = 1 (x) qF and the tensor-coalgebra
// structure of the double, and the divided-power formulas confirm it.

#pragma once

#include "qdouble/pbw.hpp"

namespace qd {

struct TensorKey {
    PBWMonomial first, second;
    auto key() const { return std::tuple(first.key(), second.key()); }
    bool operator<(const TensorKey& o) const { return key() < o.key(); }
    bool operator==(const TensorKey& o) const { return first == o.first && second == o.second; }
};

struct Tensor3Key {
    PBWMonomial first, second, third;
    auto key() const { return std::tuple(first.key(), second.key(), third.key()); }
    bool operator<(const Tensor3Key& o) const { return key() < o.key(); }
    bool operator==(const Tensor3Key& o) const {
        return first == o.first && second == o.second && third == o.third;
    }
};

// Finite sum of scalars times pairs of normal monomials.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(Algebra alg, const FieldMode& mode) : alg_(alg), mode_(mode) {}

    static TensorElement outer(const PBWElement& x, const PBWElement& y);
    static TensorElement unit(Algebra alg, const FieldMode& mode);

    Algebra algebra() const { return alg_; }
    const FieldMode& mode() const { return mode_; }
    const std::map<TensorKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const TensorKey& k, const Scalar& c);
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;  // leg-wise product
    TensorElement operator*(const Scalar& s) const;
    TensorElement pow(unsigned n) const;
    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

private:
    Algebra alg_ = Algebra::Dq;
    FieldMode mode_;
    std::map<TensorKey, Scalar> terms_;
};

class Tensor3Element {
public:
    Tensor3Element() = default;
    Tensor3Element(Algebra alg, const FieldMode& mode) : alg_(alg), mode_(mode) {}

    Algebra algebra() const { return alg_; }
    const FieldMode& mode() const { return mode_; }
    const std::map<Tensor3Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Tensor3Key& k, const Scalar& c);
    bool operator==(const Tensor3Element& o) const;
    bool operator!=(const Tensor3Element& o) const { return !(*this == o); }

private:
    Algebra alg_ = Algebra::Dq;
    FieldMode mode_;
    std::map<Tensor3Key, Scalar> terms_;
};

// multiplicative extension of the generator coproducts, both legs normalized
TensorElement coproduct(const PBWElement& x);
// (Delta (x) id) o Delta; coassociativity makes it equal (id (x) Delta) o Delta
Tensor3Element coproduct2(const PBWElement& x);
Tensor3Element coproduct2_right(const PBWElement& x);  // (id (x) Delta) o Delta

Scalar counit(const PBWElement& x);

// antipode (power = +1) or its inverse (power = -1); anti-algebra map
PBWElement antipode(const PBWElement& x, int power = +1);

// helpers for the Hopf axioms
PBWElement contract_counit_left(const TensorElement& t);   // (eps (x) id)
PBWElement contract_counit_right(const TensorElement& t);  // (id (x) eps)
PBWElement multiply_legs(const TensorElement& t);          // m: x (x) y -> xy
// m o (S^power (x) id) resp. m o (id (x) S^power) applied to a tensor
PBWElement antipode_mul_left(const TensorElement& t, int power = +1);
PBWElement antipode_mul_right(const TensorElement& t, int power = +1);
// (pi (x) pi) on a D_q tensor element
TensorElement project_pi_tensor(const TensorElement& t);

}  // namespace qd
