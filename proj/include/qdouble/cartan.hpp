// Rank-n generalization: Cartan-matrix presentations of the double, quantum
// Serre relations, generator pairing values, the epsilon_z characters, and
// relation checking of user-supplied matrix representations under the
// pi_z^+ twist.  Realized as relation data plus verification -- the source
// gives no PBW basis for rank >= 2, so no normal forms here.

#pragma once

#include <string>
#include <vector>

#include "qdouble/matrix.hpp"

namespace qd {

struct CartanData {
    int n = 0;
    std::vector<std::vector<int>> a;  // Cartan matrix
    std::vector<int> d;               // symmetrizer, entries in {1,2,3}
};

// throws DomainError unless a_ii = 2, a_ij <= 0 off-diagonal with entries
// in {-3,-2,-1,0}, d_i in {1,2,3}, (d_i a_ij) symmetric positive definite
void validate(const CartanData& cd);

CartanData cartan_rank1();
CartanData cartan_sl3();

struct RankNGen {
    enum class Type { E, F, K, Kinv, Kt, Ktinv };
    Type type;
    int i;  // 1-based generator index
};
using GenWord = std::vector<RankNGen>;

struct RankNRelation {
    enum class Kind { Group, KE, KF, KtE, KtF, EF, SerreE, SerreF };
    Kind kind;
    int i = 0, j = 0;
    std::string name;
    // sum of coeff * word, equal to zero in the presented algebra
    std::vector<std::pair<Scalar, GenWord>> terms;
    // Serre relations expose their coefficient list (-1)^s [1-a_ij s]_{q^d_i}
    std::vector<Scalar> serre_coeffs;
};

// the complete relation list of the rank-n presentation, binomials evaluated
std::vector<RankNRelation> relations(const CartanData& cd, const FieldMode& mode);

enum class PairingKind { EF, KK, KKinv };
// phi(E_i,F_j) = delta_ij/(q^(2d_i)-1), phi(K_i,K_j) = q^(d_i a_ij),
// phi(K_i,K_j^-1) = q^(-d_i a_ij)
Scalar generator_pairing(const CartanData& cd, int i, int j, PairingKind which,
                         const FieldMode& mode);

// a concrete matrix representation of the rank-n double
struct RankNRep {
    int dim = 0;
    std::vector<ScalarMatrix> E, F, K, Kt;  // one per node, same square size
};

// the character eps_z^+: E_i, F_i -> 0, K_i -> s_i, Kt_i -> s_i^-1
RankNRep epsilon_vec(const CartanData& cd, const std::vector<Scalar>& s, const FieldMode& mode);
// pullback through pi_z^+ of a U_q representation: E_i -> s_i E_i,
// F_i -> F_i, K_i -> s_i K_i, Kt_i -> s_i^-1 K_i
RankNRep pullback_rep(const std::vector<ScalarMatrix>& E, const std::vector<ScalarMatrix>& F,
                      const std::vector<ScalarMatrix>& K, const std::vector<Scalar>& s);
// tensor with the character: E_i -> s_i E_i, K_i -> s_i K_i, Kt_i -> s_i^-1 Kt_i
RankNRep twist_by_character(const RankNRep& rep, const std::vector<Scalar>& s);

// value of a relation on a representation (the zero matrix iff it holds)
ScalarMatrix evaluate_relation(const RankNRelation& rel, const RankNRep& rep,
                               const FieldMode& mode);

struct MatrixRepReport {
    struct Item {
        std::string name;
        bool pass;
    };
    std::vector<Item> items;
    std::vector<bool> k_diagonal, kt_diagonal;  // weight-module check
    bool all_pass = true;
};

MatrixRepReport check_matrix_rep(const CartanData& cd, const RankNRep& rep,
                                 const FieldMode& mode);

}  // namespace qd
