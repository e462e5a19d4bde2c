// Integral (divided-power) form of the quantum double: the generators
//   E^(N) = E^N/[N]!,  F^(N) = F^N/[N]!,  K^{+-1},  Kt^{+-1},
//   [K,Kt;t]   = prod_{s=1..t} (K v^{-s+1} - Kt^-1 v^{s-1})/(v^s - v^-s),
//   [K,Kt,c;t] = prod_{s=1..t} (K v^{c-s+1} - Kt^-1 v^{-c+s-1})/(v^s - v^-s),
// the theta automorphism swapping K and Kt, and machine checks of the
// bracket/divided-power identities.  Everything expands over SymbolicV.

#pragma once

#include "qdouble/hopf.hpp"
#include "qdouble/pbw.hpp"

namespace qd {

struct AFactor {
    enum class Type {
        DividedE,      // E^(N), uses n
        DividedF,      // F^(N), uses n
        KPow,          // K^n
        KtPow,         // Kt^n
        Bracket,       // [K,Kt,c;t], uses c and t
        ThetaBracket,  // theta([K,Kt,c;t]) = [Kt,K,c;t], uses c and t
    };
    Type type;
    int n = 0;
    int c = 0;
    int t = 0;

    static AFactor divE(int N) { return {Type::DividedE, N, 0, 0}; }
    static AFactor divF(int N) { return {Type::DividedF, N, 0, 0}; }
    static AFactor kpow(int n) { return {Type::KPow, n, 0, 0}; }
    static AFactor ktpow(int n) { return {Type::KtPow, n, 0, 0}; }
    static AFactor bracket(int t) { return {Type::Bracket, 0, 0, t}; }
    static AFactor bracket_c(int c, int t) { return {Type::Bracket, 0, c, t}; }
    static AFactor theta_bracket(int t) { return {Type::ThetaBracket, 0, 0, t}; }
    static AFactor theta_bracket_c(int c, int t) { return {Type::ThetaBracket, 0, c, t}; }
};

// A formal product of A-form factors with a scalar coefficient.
struct AFormExpr {
    Scalar coeff;
    std::vector<AFactor> factors;

    AFormExpr() : coeff(Scalar::one(FieldMode::symbolic())) {}
    explicit AFormExpr(std::vector<AFactor> f)
        : coeff(Scalar::one(FieldMode::symbolic())), factors(std::move(f)) {}
    AFormExpr(const Scalar& c, std::vector<AFactor> f) : coeff(c), factors(std::move(f)) {}
};

// exact PBW expansion over SymbolicV; Bracket(c,0) = 1, E^(0) = 1
PBWElement expand(const AFormExpr& x);
PBWElement expand_factor(const AFactor& f);

// theta: E -> E, F -> F, K^{+-1} <-> Kt^{+-1}, applied monomial-wise
PBWElement theta(const PBWElement& x);

// E^(a) F^(b) = sum_{t <= min(a,b)} F^(b-t) [K,Kt,2t-a-b;t] E^(a-t)
bool verify_lemma21(int a, int b);

// bracket reduction identities.
// part 1 (t >= 0, 0 <= p <= t):
//   v^-pt [K,Kt,c;t] = sum_j [K,Kt,c-p;t-j] [p j] Kt^-j v^-cj
bool verify_lemma22_part1(int c, int t, int p);
// part 2 (t >= 0, p >= 1):
//   v^-pt [K,Kt,-c;t] = sum_j (-1)^j [K,Kt,p-c;t-j] [p+j-1 j] K^j v^-cj
bool verify_lemma22_part2(int c, int t, int p);
// part 3: [K,Kt,c;t] lies in the A-span of { [K,Kt;j] K^i Kt^m }; checked by
// reducing through the part-1/part-2 formulas and testing every coefficient
// with is_laurent (and re-expanding the representation as a cross-check)
bool verify_lemma22_part3(int c, int t);
// part 4 (t >= 1, t' >= 0):
//   [t+t' t] [K,Kt;t+t'] = sum_j (-1)^j v^{t(t'-j)} [t+j-1 j] K^j [K,Kt;t] [K,Kt;t'-j]
bool verify_lemma22_part4(int t, int tp);

// Delta([K,Kt;t]) = sum_a [K,Kt;t-a] Kt^-a (x) K^{t-a} [K,Kt;a]
bool verify_delta_bracket(int t);

// divided-power Hopf formulas:
//   Delta(E^(N)) = sum_i v^{i(N-i)} E^(N-i) K^i (x) E^(i)
//   Delta(F^(N)) = sum_i v^{i(N-i)} F^(i) (x) F^(N-i) Kt^-i
//   S(E^(N)) = (-1)^N v^{(1-N)N} K^-N E^(N)
//   S(F^(N)) = (-1)^N v^{(N-1)N} F^(N) Kt^N
bool verify_divided_hopf(int N);

// E^(a) E^(b) = [a+b b] E^(a+b), and the F version
bool verify_divided_products(int a, int b);

// theta([K,Kt;t]) = K^-t Kt^t [K,Kt;t]
bool verify_theta_bracket(int t);

}  // namespace qd
