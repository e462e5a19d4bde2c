// Exact coefficient arithmetic for the quantum double library.
//
// A Scalar is an element of one of three coefficient fields:
//   * SymbolicV   -- the fraction field of Z[v,v^-1], stored as a reduced
//                    pair of integer Laurent polynomials;
//   * CyclotomicQ -- the cyclotomic field Q(zeta_m) with q = zeta_m^e,
//                    arithmetic modulo the m-th cyclotomic polynomial;
//   * RationalQ   -- Q with q specialized to a rational number, q^2 != 1.
//
// All operations are exact; equality is decidable by comparing canonical
// forms.  Quantum integers, factorials and Gaussian binomials live here.

#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qd {

using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Denominator vanishes under a specialization v -> q.
class VanishingDenominator : public Error {
public:
    explicit VanishingDenominator(const std::string& what) : Error(what) {}
};

// Operands live in different coefficient fields.
class ModeMismatch : public Error {
public:
    explicit ModeMismatch(const std::string& what) : Error(what) {}
};

// DomainError: an argument violates a documented precondition.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// -------------------------------------------------------------------------
// Integer Laurent polynomials in one variable v.
//
// Sparse exponent -> coefficient map; no zero coefficients are stored.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(long n) { if (n != 0) c_[0] = Int(n); }
    explicit Laurent(const Int& n) { if (n != 0) c_[0] = n; }

    static Laurent monomial(const Int& coeff, int exp);
    static Laurent v(int exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    // lowest / highest exponent with nonzero coefficient; zero poly -> 0
    int low_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int high_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    Int coeff(int exp) const;
    const std::map<int, Int>& terms() const { return c_; }
    size_t term_count() const { return c_.size(); }

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // multiply by v^k
    Laurent shifted(int k) const;
    Laurent pow(unsigned n) const;

    // gcd of all coefficients, made positive; zero poly -> 0
    Int content() const;
    // exact division: *this = q * d with q integral.  Returns false (and
    // leaves quot untouched) if d does not divide exactly.
    bool divide_exact(const Laurent& d, Laurent* quot = nullptr) const;

    // gcd in Z[v,v^-1], normalized: lowest exponent 0, positive leading
    // coefficient, includes the integer content gcd.
    static Laurent gcd(const Laurent& a, const Laurent& b);

    void add_term(int exp, const Int& coeff);  // accumulate, dropping zeros

    std::string str() const;  // e.g. "v^2 + 2 + v^-2"

private:
    std::map<int, Int> c_;
};

// -------------------------------------------------------------------------
enum class FieldKind { SymbolicV, CyclotomicQ, RationalQ };

// m-th cyclotomic field data, shared between all Scalars of a mode.
struct CycData {
    unsigned m = 0;               // order of the root of unity
    unsigned e = 0;               // q = zeta_m^e
    unsigned deg = 0;             // deg Phi_m = phi(m)
    std::vector<Int> phi;         // Phi_m coefficients, index = power, monic
};

class FieldMode {
public:
    FieldMode() : kind_(FieldKind::SymbolicV) {}

    static FieldMode symbolic();
    // q = zeta_m^e; requires q^2 != 1, i.e. m does not divide 2e.
    static FieldMode cyclotomic(unsigned m, unsigned e);
    // requires q not in {0, 1, -1}.
    static FieldMode rational(const Rat& q);

    FieldKind kind() const { return kind_; }
    bool is_symbolic() const { return kind_ == FieldKind::SymbolicV; }
    // true when q is not a root of unity (symbolic or rational mode)
    bool generic_q() const { return kind_ != FieldKind::CyclotomicQ; }

    const CycData& cyc() const;
    const Rat& q() const;  // RationalQ only

    // multiplicative order of q (CyclotomicQ only)
    unsigned order_of_q() const;
    unsigned order_of_q2() const;

    bool operator==(const FieldMode& o) const;
    bool operator!=(const FieldMode& o) const { return !(*this == o); }

    std::string str() const;  // "symbolic" | "cyclotomic:m:e" | "rational:q"

private:
    FieldKind kind_;
    std::shared_ptr<const CycData> cyc_;
    Rat q_;
};

// -------------------------------------------------------------------------
// Exact field element in the mode chosen at construction.
//
// SymbolicV canonical form: num/den reduced (poly gcd and integer content),
// den has lowest exponent 0, nonzero constant term and positive leading
// coefficient; zero is 0/1.
class Scalar {
public:
    Scalar() = default;  // zero in symbolic mode

    static Scalar zero(const FieldMode& mode);
    static Scalar one(const FieldMode& mode);
    static Scalar from_int(const FieldMode& mode, const Int& n);
    static Scalar from_int(const FieldMode& mode, long n) { return from_int(mode, Int(n)); }
    static Scalar from_rational(const FieldMode& mode, const Rat& r);
    // q^k in the given mode (v^k in symbolic mode)
    static Scalar qpow(const FieldMode& mode, long k);
    static Scalar from_laurent(const Laurent& num);                      // symbolic
    static Scalar fraction(const Laurent& num, const Laurent& den);     // symbolic

    const FieldMode& mode() const { return mode_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }
    Scalar inverse() const;
    Scalar pow(long k) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // SymbolicV accessors
    const Laurent& num() const;
    const Laurent& den() const;
    // CyclotomicQ accessor: coefficients of 1, zeta, ..., zeta^(deg-1)
    const std::vector<Rat>& cyc_coeffs() const;
    // RationalQ accessor
    const Rat& rat() const;

    std::string str() const;

private:
    FieldMode mode_;
    Laurent num_, den_ = Laurent(1);  // SymbolicV
    std::vector<Rat> cyc_;            // CyclotomicQ
    Rat rat_;                         // RationalQ

    void reduce_symbolic();
    void check_same_mode(const Scalar& o) const;
};

// -------------------------------------------------------------------------
// q-combinatorics.  [N] = (v^N - v^-N)/(v - v^-1) as a Laurent polynomial,
// so these are defined in every mode.

// quantum integer [N]; [0] = 0
Scalar qint(unsigned n, const FieldMode& mode);
// [N]! = [N][N-1]...[1]; [0]! = 1
Scalar qfactorial(unsigned n, const FieldMode& mode);
// Gaussian binomial for any integer m and n >= 0, computed by the product
// form so the result is a Laurent polynomial for negative m as well.
Scalar qbinomial(long m, unsigned n, const FieldMode& mode);
// Gaussian binomial at base q^base_exp (used by the rank-n presentation).
Scalar qbinomial_base(long m, unsigned n, unsigned base_exp, const FieldMode& mode);

// Laurent-polynomial membership tests (SymbolicV only; throw otherwise).
// is_laurent: x lies in Z[v,v^-1].
bool is_laurent(const Scalar& x);
// in_localized_A: x lies in A = Z[v,v^-1,(v-v^-1)^-1], i.e. the reduced
// denominator is a unit times a power of (v - v^-1).
bool in_localized_A(const Scalar& x);

// exact image of a SymbolicV scalar under v -> q
Scalar specialize(const Scalar& x, const FieldMode& target);

}  // namespace qd
