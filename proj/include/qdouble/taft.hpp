// Root-of-unity specialization: the d^4-dimensional quotient of the double
// by < E^d, F^d, K^d - 1, Kt^d - 1 > (the Drinfel'd double of the Taft
// algebra), the radical of the pairing, and Gram-matrix nondegeneracy of
// the induced pairing on the d-truncated Borel bases.

#pragma once

#include "qdouble/matrix.hpp"
#include "qdouble/pairing.hpp"
#include "qdouble/rep.hpp"

namespace qd {

class TaftDouble {
public:
    // requires q^2 of multiplicative order exactly d in the cyclotomic mode
    TaftDouble(int d, const FieldMode& mode);

    int d() const { return d_; }
    const FieldMode& mode() const { return mode_; }
    // ord(q): either d or 2d, both accepted
    unsigned q_order() const { return mode_.order_of_q(); }

    long dimension() const { return 1L * d_ * d_ * d_ * d_; }
    std::vector<PBWMonomial> basis() const;

    // image under the quotient map: K,Kt exponents mod d, E^a and F^b with
    // a or b >= d go to zero
    PBWElement reduce(const PBWElement& x) const;
    PBWElement multiply(const PBWElement& x, const PBWElement& y) const;

    // presentation relations evaluated through quotient multiplication
    RelationReport relations_report() const;
    // Delta and S of each ideal generator vanish after reducing the legs
    bool hopf_ideal_sane() const;

private:
    int d_;
    FieldMode mode_;
};

// true iff pair(x, F^a' K^b') = 0 for all 0 <= a' <= d, |b'| <= d (resp.
// the symmetric check when x is a lower element)
bool radical_membership(const SkewPairing& phi, const BorelElement& x, int d);

// Gram matrix of the induced pairing, rows E^a K^b, columns F^a' K^b',
// 0 <= a,b,a',b' < d, index a*d + b
ScalarMatrix gram_matrix(int d, const FieldMode& mode);
bool nondegenerate(const ScalarMatrix& gram);
// block structure of the proof: zero off the a-diagonal, and each a-block
// equals diag(c_a q^{-2ab}) times the Vandermonde matrix in x_b = q^{2(b+a)}
bool gram_block_structure_ok(int d, const FieldMode& mode);

struct InventoryEntry {
    std::string name;
    WeightModule module;
    bool relations_pass = false;
    bool nilpotency_pass = false;       // E^d = 0 = F^d
    bool kills_group_ideal = false;     // K^d = 1 = Kt^d (true D_q-bar module)
    bool simplicity_checked = false;    // brute force ran (d <= 3)
    bool simple = false;
};

// the simple-module inventory at sample parameters: L_z(n,+-) for 0 <= n < d
// and Z_{0,z}^{+-}(lambda) for each sample lambda with lambda^(2d) != 1
std::vector<InventoryEntry> simple_inventory(int d, const FieldMode& mode,
                                             const std::vector<Scalar>& lambdas,
                                             const std::vector<Scalar>& ss);

// no proper nonzero invariant subspace among weight-compatible subspaces;
// requires pairwise-distinct (K,Kt) weights so invariant subspaces are
// spanned by basis subsets
bool brute_force_simple(const WeightModule& m);

}  // namespace qd
