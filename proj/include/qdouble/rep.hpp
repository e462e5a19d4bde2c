// Weight modules over D_q: truncated Vermas, finite simples L_z(n,+-),
// one-dimensional characters, root-of-unity quotients Z_{0,z}(lambda),
// tensor products through the coproduct, exact Clebsch-Gordan decomposition
// by highest-weight-vector search, and the central element
//   C = FE + (Kq + Kt^-1 q^-1)/(q - q^-1)^2.
//
// The chosen square root s = sqrt(z) is always an input, never computed;
// tensor products propagate s multiplicatively, which turns the
// sqrt(z)sqrt(z') vs sqrt(zz') sign rule into an exact comparison.

#pragma once

#include <optional>

#include "qdouble/matrix.hpp"
#include "qdouble/pbw.hpp"

namespace qd {

class NonScalarAction : public Error {
public:
    explicit NonScalarAction(const std::string& what) : Error(what) {}
};

enum class ModKind { Verma, Simple, OneDim, Z0, Tensor, Other };

struct WeightModule {
    FieldMode mode;
    int dim = 0;
    bool truncated = false;  // truncated Verma: EF-FE exempts the last column
    std::vector<Scalar> k_weight, kt_weight;  // diagonal K and Kt actions
    ScalarMatrix E, F;
    ModKind kind = ModKind::Other;
    Scalar s;       // chosen sqrt(z); z = s^2 is the K Kt^-1 scalar
    int sign = +1;
    Scalar lambda;  // Verma / Z0 highest weight parameter
    int n = -1;     // simple label

    ScalarMatrix k_matrix() const { return ScalarMatrix::diagonal(k_weight, mode); }
    ScalarMatrix kt_matrix() const { return ScalarMatrix::diagonal(kt_weight, mode); }
};

// the truncated Verma M_z^{sign}(lambda) on basis m_0..m_{trunc-1}
WeightModule verma(const FieldMode& mode, const Scalar& s, int sign, const Scalar& lambda,
                   int trunc);
// the (n+1)-dimensional simple L_z(n,+-); at a root of unity requires
// n < ord(q^2)
WeightModule simple(const FieldMode& mode, const Scalar& s, int n, int sign);
// the character eps_z^{sign}
WeightModule one_dim(const FieldMode& mode, const Scalar& s, int sign);
// Z_{0,z}^{sign}(lambda) = M_z^{sign}(lambda)/(D_q m_d) at ord(q^2) = d;
// requires lambda^(2d) != 1
WeightModule z0_module(const FieldMode& mode, const Scalar& s, int sign, const Scalar& lambda,
                       int d);

struct RelationReport {
    struct Item {
        std::string name;
        bool pass;
    };
    std::vector<Item> items;
    bool all_pass = true;
    bool truncation_exempted = false;

    bool pass(const std::string& name) const;
};

// all presentation relations as matrix identities; a truncated Verma
// reports the boundary exemption explicitly
RelationReport check_relations(const WeightModule& m);

// C as a PBW element; ef_form=false gives FE + (Kq + Kt^-1 q^-1)/(q-q^-1)^2,
// ef_form=true the EF variant
PBWElement casimir_element(const FieldMode& mode, Algebra alg = Algebra::Dq,
                           bool ef_form = false);
// the scalar by which C acts; throws NonScalarAction if C is not scalar
Scalar central_scalar(const WeightModule& m);

// tensor product through Delta: E -> E(x)1 + K(x)E, F -> F(x)Kt^-1 + 1(x)F
WeightModule tensor(const WeightModule& m, const WeightModule& n);

struct DecompositionLabel {
    int n = 0;
    int sign = +1;
    Scalar s;  // chosen root for the summand, s'' = s_M (propagated)

    bool operator==(const DecompositionLabel& o) const {
        return n == o.n && sign == o.sign && s == o.s;
    }
};

struct DecompositionResult {
    std::vector<std::pair<DecompositionLabel, int>> labels;  // label -> multiplicity
    bool residual = false;

    int multiplicity(int n, int sign) const;
    int total_dim() const;
};

// exact decomposition into simples by highest-weight-vector search
// (kernel of E within each simultaneous K/Kt eigenspace); requires a
// completely reducible regime (q not a root of unity)
DecompositionResult decompose(const WeightModule& m);

// n if lambda = +-q^n for some n >= 0 (exact detection) -- the index at
// which the Verma acquires its maximal proper submodule; nullopt when the
// Verma is simple
std::optional<int> verma_submodule_index(const FieldMode& mode, const Scalar& lambda);

struct RadfordLabel {
    bool finite = false;  // false: infinite-dimensional Verma M_z^+(lambda)
    Scalar z;
    Scalar sqrt_z;   // chosen root of z propagated from chosen_root
    Scalar lambda;   // Verma parameter (finite = false)
    int n = -1;      // L_z(n, sign) label (finite = true)
    int sign = +1;
};

// Radford parameter correspondence: beta_a = beta(a), l the group-like
// exponent, chosen_root a fixed square root of beta_a
RadfordLabel radford_parameters(const FieldMode& mode, const Scalar& beta_a, long l,
                                const Scalar& chosen_root);

}  // namespace qd
