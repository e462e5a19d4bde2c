#include "qdouble/taft.hpp"

#include "qdouble/hopf.hpp"

namespace qd {

TaftDouble::TaftDouble(int d, const FieldMode& mode) : d_(d), mode_(mode) {
    if (d < 2) throw DomainError("TaftDouble needs d > 1");
    if (mode.generic_q()) throw DomainError("TaftDouble needs a root-of-unity mode");
    if (mode.order_of_q2() != unsigned(d))
        throw DomainError("TaftDouble: q^2 must be a primitive d-th root of unity");
}

std::vector<PBWMonomial> TaftDouble::basis() const {
    std::vector<PBWMonomial> b;
    b.reserve(size_t(dimension()));
    for (int a = 0; a < d_; ++a)
        for (int c = 0; c < d_; ++c)
            for (int dd = 0; dd < d_; ++dd)
                for (int e = 0; e < d_; ++e) b.push_back({a, c, dd, e});
    return b;
}

PBWElement TaftDouble::reduce(const PBWElement& x) const {
    PBWElement r(Algebra::Dq, mode_);
    for (auto& [m, c] : x.terms()) {
        if (m.a >= d_ || m.b >= d_) continue;  // E^d = 0 = F^d
        PBWMonomial t = m;
        t.c = ((m.c % d_) + d_) % d_;          // K^d = 1
        t.d = ((m.d % d_) + d_) % d_;          // Kt^d = 1
        r.add(t, c);
    }
    return r;
}

PBWElement TaftDouble::multiply(const PBWElement& x, const PBWElement& y) const {
    return reduce(qd::multiply(reduce(x), reduce(y)));
}

RelationReport TaftDouble::relations_report() const {
    RelationReport rep;
    auto push = [&rep](const std::string& name, bool ok) {
        rep.items.push_back({name, ok});
        rep.all_pass = rep.all_pass && ok;
    };
    auto gen = [&](Gen g) { return PBWElement::generator(Algebra::Dq, mode_, g); };
    const Scalar q2 = Scalar::qpow(mode_, 2);
    const Scalar iq = (Scalar::qpow(mode_, 1) - Scalar::qpow(mode_, -1)).inverse();
    const PBWElement unit = PBWElement::unit(Algebra::Dq, mode_);

    push("K E = q^2 E K", multiply(gen(Gen::K), gen(Gen::E)) ==
                              multiply(gen(Gen::E), gen(Gen::K)) * q2);
    push("K F = q^-2 F K", multiply(gen(Gen::K), gen(Gen::F)) ==
                               multiply(gen(Gen::F), gen(Gen::K)) * q2.inverse());
    push("Kt E = q^2 E Kt", multiply(gen(Gen::Kt), gen(Gen::E)) ==
                                multiply(gen(Gen::E), gen(Gen::Kt)) * q2);
    push("Kt F = q^-2 F Kt", multiply(gen(Gen::Kt), gen(Gen::F)) ==
                                 multiply(gen(Gen::F), gen(Gen::Kt)) * q2.inverse());
    push("K Kt = Kt K", multiply(gen(Gen::K), gen(Gen::Kt)) ==
                            multiply(gen(Gen::Kt), gen(Gen::K)));
    // in the quotient K^-1 = K^(d-1)
    PBWElement kinv = PBWElement::monomial(Algebra::Dq, mode_, {0, d_ - 1, 0, 0},
                                           Scalar::one(mode_));
    push("K K^-1 = 1", multiply(gen(Gen::K), kinv) == unit);
    PBWElement ef = multiply(gen(Gen::E), gen(Gen::F)) - multiply(gen(Gen::F), gen(Gen::E));
    PBWElement ktinv = PBWElement::monomial(Algebra::Dq, mode_, {0, 0, d_ - 1, 0},
                                            Scalar::one(mode_));
    push("EF - FE = (K - Kt^-1)/(q - q^-1)", ef == (gen(Gen::K) - ktinv) * iq);
    // quotient exponent rules
    push("K^d = 1", reduce(PBWElement::monomial(Algebra::Dq, mode_, {0, d_, 0, 0},
                                                Scalar::one(mode_))) == unit);
    push("E E^(d-1) = 0", multiply(gen(Gen::E),
                                   PBWElement::monomial(Algebra::Dq, mode_, {d_ - 1, 0, 0, 0},
                                                        Scalar::one(mode_)))
                              .is_zero());
    push("F^d = 0", reduce(PBWElement::monomial(Algebra::Dq, mode_, {0, 0, 0, d_},
                                                Scalar::one(mode_)))
                        .is_zero());
    return rep;
}

bool TaftDouble::hopf_ideal_sane() const {
    auto reduce_tensor = [this](const TensorElement& t) {
        TensorElement r(Algebra::Dq, mode_);
        for (auto& [k, c] : t.terms()) {
            PBWElement l = reduce(PBWElement::monomial(Algebra::Dq, mode_, k.first,
                                                       Scalar::one(mode_)));
            PBWElement rr = reduce(PBWElement::monomial(Algebra::Dq, mode_, k.second,
                                                        Scalar::one(mode_)));
            for (auto& [ml, cl] : l.terms())
                for (auto& [mr, cr] : rr.terms()) r.add({ml, mr}, c * cl * cr);
        }
        return r;
    };
    const PBWElement unit = PBWElement::unit(Algebra::Dq, mode_);
    std::vector<PBWElement> ideal = {
        PBWElement::monomial(Algebra::Dq, mode_, {d_, 0, 0, 0}, Scalar::one(mode_)),
        PBWElement::monomial(Algebra::Dq, mode_, {0, 0, 0, d_}, Scalar::one(mode_)),
        PBWElement::monomial(Algebra::Dq, mode_, {0, d_, 0, 0}, Scalar::one(mode_)) - unit,
        PBWElement::monomial(Algebra::Dq, mode_, {0, 0, d_, 0}, Scalar::one(mode_)) - unit,
    };
    for (auto& g : ideal) {
        if (!reduce_tensor(coproduct(g)).is_zero()) return false;
        if (!reduce(antipode(g, +1)).is_zero()) return false;
        if (!counit(g).is_zero()) return false;
    }
    return true;
}

bool radical_membership(const SkewPairing& phi, const BorelElement& x, int d) {
    const FieldMode& mode = phi.mode();
    const Side other = x.side() == Side::Upper ? Side::Lower : Side::Upper;
    for (int a = 0; a <= d; ++a) {
        for (int b = -d; b <= d; ++b) {
            BorelElement y = BorelElement::monomial(other, mode, {a, b}, Scalar::one(mode));
            Scalar v = x.side() == Side::Upper ? phi.pair(x, y) : phi.pair(y, x);
            if (!v.is_zero()) return false;
        }
    }
    return true;
}

ScalarMatrix gram_matrix(int d, const FieldMode& mode) {
    if (mode.generic_q() || mode.order_of_q2() != unsigned(d))
        throw DomainError("gram_matrix: q^2 must have order d");
    SkewPairing phi(mode);
    ScalarMatrix g(d * d, d * d, mode);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int a2 = 0; a2 < d; ++a2)
                for (int b2 = 0; b2 < d; ++b2)
                    g.set(a * d + b, a2 * d + b2, phi.pair_mono({a, b}, {a2, b2}));
    return g;
}

bool nondegenerate(const ScalarMatrix& gram) { return !gram.determinant().is_zero(); }

bool gram_block_structure_ok(int d, const FieldMode& mode) {
    SkewPairing phi(mode);
    ScalarMatrix g = gram_matrix(d, mode);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int a2 = 0; a2 < d; ++a2)
                for (int b2 = 0; b2 < d; ++b2)
                    if (a != a2 && !g.at(a * d + b, a2 * d + b2).is_zero()) return false;
    // each a-block is diag(c_a q^{-2ab}) times Vandermonde in x_b = q^{2(b+a)},
    // with the x_b pairwise distinct
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            Scalar row0 = g.at(a * d + b, a * d + 0);
            if (row0.is_zero()) return false;
            for (int b2 = 0; b2 < d; ++b2) {
                Scalar x_b = Scalar::qpow(mode, 2 * (b + a));
                if (g.at(a * d + b, a * d + b2) != row0 * x_b.pow(b2)) return false;
            }
        }
        for (int b = 0; b < d; ++b)
            for (int b2 = b + 1; b2 < d; ++b2)
                if (Scalar::qpow(mode, 2 * (b + a)) == Scalar::qpow(mode, 2 * (b2 + a)))
                    return false;
    }
    return true;
}

bool brute_force_simple(const WeightModule& m) {
    // weight pairs must be pairwise distinct so every invariant subspace is
    // a span of basis vectors
    for (int i = 0; i < m.dim; ++i)
        for (int j = i + 1; j < m.dim; ++j)
            if (m.k_weight[size_t(i)] == m.k_weight[size_t(j)] &&
                m.kt_weight[size_t(i)] == m.kt_weight[size_t(j)])
                throw DomainError("brute_force_simple needs distinct weight pairs");
    const int n = m.dim;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        bool closed = true;
        for (int j = 0; j < n && closed; ++j) {
            if (!(mask >> j & 1)) continue;
            for (int i = 0; i < n && closed; ++i) {
                bool hitE = m.E.find(i, j) != nullptr;
                bool hitF = m.F.find(i, j) != nullptr;
                if ((hitE || hitF) && !(mask >> i & 1)) closed = false;
            }
        }
        if (closed) return false;  // proper nonzero invariant subspace
    }
    return true;
}

std::vector<InventoryEntry> simple_inventory(int d, const FieldMode& mode,
                                             const std::vector<Scalar>& lambdas,
                                             const std::vector<Scalar>& ss) {
    if (mode.generic_q() || mode.order_of_q2() != unsigned(d))
        throw DomainError("simple_inventory: q^2 must have order d");
    std::vector<InventoryEntry> out;
    auto examine = [&](const std::string& name, const WeightModule& m) {
        InventoryEntry e;
        e.name = name;
        e.module = m;
        e.relations_pass = check_relations(m).all_pass;
        e.nilpotency_pass = m.E.pow(unsigned(d)).is_zero() && m.F.pow(unsigned(d)).is_zero();
        e.kills_group_ideal = true;
        for (int i = 0; i < m.dim; ++i) {
            if (!m.k_weight[size_t(i)].pow(d).is_one() ||
                !m.kt_weight[size_t(i)].pow(d).is_one())
                e.kills_group_ideal = false;
        }
        if (d <= 3) {
            e.simplicity_checked = true;
            e.simple = brute_force_simple(m);
        }
        out.push_back(std::move(e));
    };
    for (const Scalar& s : ss) {
        for (int n = 0; n < d; ++n) {
            for (int sign : {+1, -1}) {
                std::string nm = "L(" + std::to_string(n) + (sign > 0 ? ",+)" : ",-)");
                examine(nm, simple(mode, s, n, sign));
            }
        }
        for (const Scalar& lam : lambdas) {
            if (lam.pow(2 * d).is_one())
                throw DomainError("simple_inventory: lambda^(2d) = 1 sample rejected");
            for (int sign : {+1, -1}) {
                std::string nm = std::string("Z0(") + (sign > 0 ? "+" : "-") + ")";
                examine(nm, z0_module(mode, s, sign, lam, d));
            }
        }
    }
    return out;
}

}  // namespace qd
