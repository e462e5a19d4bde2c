#include "qdouble/rep.hpp"

#include <algorithm>

namespace qd {

namespace {

Scalar qq_inv(const FieldMode& mode) {
    return (Scalar::qpow(mode, 1) - Scalar::qpow(mode, -1)).inverse();
}

void require_nonzero(const Scalar& s, const char* what) {
    if (s.is_zero()) throw DomainError(std::string(what) + " must be nonzero");
}

int sign_scalar_check(int sign) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +-1");
    return sign;
}

}  // namespace

WeightModule verma(const FieldMode& mode, const Scalar& s, int sign, const Scalar& lambda,
                   int trunc) {
    require_nonzero(s, "s");
    require_nonzero(lambda, "lambda");
    sign_scalar_check(sign);
    if (trunc < 1) throw DomainError("verma: trunc >= 1");

    WeightModule m;
    m.mode = mode;
    m.dim = trunc;
    m.truncated = true;
    m.kind = ModKind::Verma;
    m.s = s;
    m.sign = sign;
    m.lambda = lambda;
    m.n = -1;
    m.E = ScalarMatrix(trunc, trunc, mode);
    m.F = ScalarMatrix(trunc, trunc, mode);
    const Scalar ss = sign == 1 ? s : -s;
    const Scalar iq = qq_inv(mode);
    for (int i = 0; i < trunc; ++i) {
        m.k_weight.push_back(ss * lambda * Scalar::qpow(mode, -2 * i));
        m.kt_weight.push_back(ss.inverse() * lambda * Scalar::qpow(mode, -2 * i));
        if (i + 1 < trunc) m.F.set(i + 1, i, Scalar::one(mode));
        if (i >= 1) {
            // E m_i = [i] (+-s) (lambda q^{1-i} - lambda^-1 q^{i-1})/(q - q^-1) m_{i-1}
            Scalar c = qint(unsigned(i), mode) * ss *
                       (lambda * Scalar::qpow(mode, 1 - i) -
                        lambda.inverse() * Scalar::qpow(mode, i - 1)) *
                       iq;
            m.E.set(i - 1, i, c);
        }
    }
    return m;
}

WeightModule simple(const FieldMode& mode, const Scalar& s, int n, int sign) {
    require_nonzero(s, "s");
    sign_scalar_check(sign);
    if (n < 0) throw DomainError("simple: n >= 0");
    if (!mode.generic_q() && unsigned(n) >= mode.order_of_q2())
        throw DomainError("simple: n must be < ord(q^2) at a root of unity");

    WeightModule m;
    m.mode = mode;
    m.dim = n + 1;
    m.kind = n == 0 ? ModKind::OneDim : ModKind::Simple;
    m.s = s;
    m.sign = sign;
    m.lambda = Scalar::qpow(mode, n) * Scalar::from_int(mode, sign);
    m.n = n;
    m.E = ScalarMatrix(n + 1, n + 1, mode);
    m.F = ScalarMatrix(n + 1, n + 1, mode);
    const Scalar ss = sign == 1 ? s : -s;
    for (int i = 0; i <= n; ++i) {
        m.k_weight.push_back(ss * Scalar::qpow(mode, n - 2 * i));
        m.kt_weight.push_back(ss.inverse() * Scalar::qpow(mode, n - 2 * i));
        if (i + 1 <= n) m.F.set(i + 1, i, Scalar::one(mode));
        if (i >= 1)
            m.E.set(i - 1, i, ss * qint(unsigned(i), mode) * qint(unsigned(n + 1 - i), mode));
    }
    return m;
}

WeightModule one_dim(const FieldMode& mode, const Scalar& s, int sign) {
    WeightModule m = simple(mode, s, 0, sign);
    m.kind = ModKind::OneDim;
    return m;
}

WeightModule z0_module(const FieldMode& mode, const Scalar& s, int sign, const Scalar& lambda,
                       int d) {
    if (mode.generic_q()) throw DomainError("z0_module requires a root-of-unity mode");
    if (unsigned(d) != mode.order_of_q2())
        throw DomainError("z0_module: d must equal the order of q^2");
    if (lambda.pow(2 * d).is_one())
        throw DomainError("z0_module: lambda^(2d) = 1 is outside the Z_0 family");
    WeightModule m = verma(mode, s, sign, lambda, d);
    // E m_d = [d](...) m_{d-1} vanishes because [d]_q = 0, so the quotient
    // by D_q m_d satisfies every relation on the nose
    m.truncated = false;
    m.kind = ModKind::Z0;
    return m;
}

bool RelationReport::pass(const std::string& name) const {
    for (auto& i : items)
        if (i.name == name) return i.pass;
    return false;
}

RelationReport check_relations(const WeightModule& m) {
    RelationReport rep;
    const FieldMode& mode = m.mode;
    const Scalar q2 = Scalar::qpow(mode, 2), q2i = Scalar::qpow(mode, -2);
    auto push = [&rep](const std::string& name, bool ok) {
        rep.items.push_back({name, ok});
        rep.all_pass = rep.all_pass && ok;
    };

    bool invertible = true;
    for (auto& w : m.k_weight) invertible = invertible && !w.is_zero();
    for (auto& w : m.kt_weight) invertible = invertible && !w.is_zero();
    push("K, Kt invertible (K K^-1 = 1 = Kt Kt^-1)", invertible);
    if (!invertible) return rep;

    ScalarMatrix K = m.k_matrix(), Kt = m.kt_matrix();
    ScalarMatrix Ktinv = Kt.diagonal_inverse();
    push("K Kt = Kt K", K * Kt == Kt * K);
    push("K E = q^2 E K", K * m.E == m.E * K * q2);
    push("K F = q^-2 F K", K * m.F == m.F * K * q2i);
    push("Kt E = q^2 E Kt", Kt * m.E == m.E * Kt * q2);
    push("Kt F = q^-2 F Kt", Kt * m.F == m.F * Kt * q2i);

    ScalarMatrix lhs = m.E * m.F - m.F * m.E;
    ScalarMatrix rhs = (K - Ktinv) * qq_inv(mode);
    ScalarMatrix diff = lhs - rhs;
    if (m.truncated) {
        rep.truncation_exempted = true;
        push("EF - FE = (K - Kt^-1)/(q - q^-1) [last column exempt: truncated]",
             diff.is_zero_except_column(m.dim - 1));
    } else {
        push("EF - FE = (K - Kt^-1)/(q - q^-1)", diff.is_zero());
    }
    return rep;
}

PBWElement casimir_element(const FieldMode& mode, Algebra alg, bool ef_form) {
    const Scalar iq2 = qq_inv(mode) * qq_inv(mode);
    PBWElement r(alg, mode);
    if (!ef_form) {
        // FE + (Kq + Kt^-1 q^-1)/(q - q^-1)^2
        r = r + multiply(PBWElement::generator(alg, mode, Gen::F),
                         PBWElement::generator(alg, mode, Gen::E));
        r.add({0, 1, 0, 0}, Scalar::qpow(mode, 1) * iq2);
        if (alg == Algebra::Dq)
            r.add({0, 0, -1, 0}, Scalar::qpow(mode, -1) * iq2);
        else
            r.add({0, -1, 0, 0}, Scalar::qpow(mode, -1) * iq2);
    } else {
        // EF + (Kq^-1 + Kt^-1 q)/(q - q^-1)^2
        r = r + multiply(PBWElement::generator(alg, mode, Gen::E),
                         PBWElement::generator(alg, mode, Gen::F));
        r.add({0, 1, 0, 0}, Scalar::qpow(mode, -1) * iq2);
        if (alg == Algebra::Dq)
            r.add({0, 0, -1, 0}, Scalar::qpow(mode, 1) * iq2);
        else
            r.add({0, -1, 0, 0}, Scalar::qpow(mode, 1) * iq2);
    }
    return r;
}

Scalar central_scalar(const WeightModule& m) {
    const FieldMode& mode = m.mode;
    const Scalar iq2 = qq_inv(mode) * qq_inv(mode);
    ScalarMatrix C = m.F * m.E +
                     (m.k_matrix() * Scalar::qpow(mode, 1) +
                      m.kt_matrix().diagonal_inverse() * Scalar::qpow(mode, -1)) *
                         iq2;
    Scalar c = C.at(0, 0);
    if (C != ScalarMatrix::identity(m.dim, mode) * c)
        throw NonScalarAction("central element does not act as a scalar");
    return c;
}

WeightModule tensor(const WeightModule& a, const WeightModule& b) {
    if (a.mode != b.mode) throw ModeMismatch("tensor: mode mismatch");
    const FieldMode& mode = a.mode;
    WeightModule t;
    t.mode = mode;
    t.dim = a.dim * b.dim;
    t.truncated = a.truncated || b.truncated;
    t.kind = ModKind::Tensor;
    t.s = a.s * b.s;
    t.sign = a.sign * b.sign;
    t.lambda = Scalar::one(mode);
    t.n = -1;
    t.E = ScalarMatrix(t.dim, t.dim, mode);
    t.F = ScalarMatrix(t.dim, t.dim, mode);
    auto idx = [&](int i, int j) { return i * b.dim + j; };
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) {
            t.k_weight.push_back(a.k_weight[size_t(i)] * b.k_weight[size_t(j)]);
            t.kt_weight.push_back(a.kt_weight[size_t(i)] * b.kt_weight[size_t(j)]);
        }
    // E = E (x) 1 + K (x) E
    for (int i = 0; i < a.dim; ++i)
        for (auto& [c, v] : a.E.row(i))
            for (int j = 0; j < b.dim; ++j) t.E.add_at(idx(i, j), idx(c, j), v);
    for (int j = 0; j < b.dim; ++j)
        for (auto& [c, v] : b.E.row(j))
            for (int i = 0; i < a.dim; ++i)
                t.E.add_at(idx(i, j), idx(i, c), a.k_weight[size_t(i)] * v);
    // F = F (x) Kt^-1 + 1 (x) F
    for (int i = 0; i < a.dim; ++i)
        for (auto& [c, v] : a.F.row(i))
            for (int j = 0; j < b.dim; ++j)
                t.F.add_at(idx(i, j), idx(c, j), v * b.kt_weight[size_t(j)].inverse());
    for (int j = 0; j < b.dim; ++j)
        for (auto& [c, v] : b.F.row(j))
            for (int i = 0; i < a.dim; ++i) t.F.add_at(idx(i, j), idx(i, c), v);
    return t;
}

int DecompositionResult::multiplicity(int n, int sign) const {
    for (auto& [l, m] : labels)
        if (l.n == n && l.sign == sign) return m;
    return 0;
}

int DecompositionResult::total_dim() const {
    int d = 0;
    for (auto& [l, m] : labels) d += (l.n + 1) * m;
    return d;
}

DecompositionResult decompose(const WeightModule& m) {
    if (!m.mode.generic_q())
        throw DomainError("decompose refuses root-of-unity modes (no complete reducibility)");
    const FieldMode& mode = m.mode;
    DecompositionResult res;

    // group basis indices into simultaneous (K, Kt) eigenspaces
    std::vector<std::vector<int>> classes;
    std::vector<std::pair<Scalar, Scalar>> class_weight;
    for (int i = 0; i < m.dim; ++i) {
        bool placed = false;
        for (size_t c = 0; c < classes.size(); ++c) {
            if (class_weight[c].first == m.k_weight[size_t(i)] &&
                class_weight[c].second == m.kt_weight[size_t(i)]) {
                classes[c].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({i});
            class_weight.emplace_back(m.k_weight[size_t(i)], m.kt_weight[size_t(i)]);
        }
    }

    std::vector<std::vector<Scalar>> chain_vectors;
    auto add_label = [&res](const DecompositionLabel& l) {
        for (auto& [label, mult] : res.labels) {
            if (label == l) {
                ++mult;
                return;
            }
        }
        res.labels.emplace_back(l, 1);
    };

    for (size_t c = 0; c < classes.size(); ++c) {
        // highest-weight vectors: kernel of E restricted to the eigenspace
        const auto& cols = classes[c];
        ScalarMatrix esub(m.dim, int(cols.size()), mode);
        for (int r = 0; r < m.dim; ++r)
            for (size_t j = 0; j < cols.size(); ++j) {
                const Scalar* p = m.E.find(r, cols[j]);
                if (p) esub.set(r, int(j), *p);
            }
        for (auto& kv : esub.kernel_basis()) {
            std::vector<Scalar> w(size_t(m.dim), Scalar::zero(mode));
            for (size_t j = 0; j < cols.size(); ++j) w[size_t(cols[j])] = kv[j];
            // F-chain down from the highest-weight vector
            std::vector<std::vector<Scalar>> chain{w};
            while (int(chain.size()) <= m.dim) {
                std::vector<Scalar> next = mat_apply(m.F, chain.back());
                if (vec_is_zero(next)) break;
                chain.push_back(std::move(next));
            }
            if (int(chain.size()) > m.dim) {
                res.residual = true;
                return res;
            }
            const int n = int(chain.size()) - 1;
            const Scalar kappa = class_weight[c].first;
            DecompositionLabel label;
            label.n = n;
            label.s = m.s;
            if (kappa == m.s * Scalar::qpow(mode, n)) {
                label.sign = +1;
            } else if (kappa == -(m.s * Scalar::qpow(mode, n))) {
                label.sign = -1;
            } else {
                res.residual = true;
                return res;
            }
            // certify the chain is a copy of L(n, sign):
            // E F^k w = (+-s)[k][n+1-k] F^(k-1) w
            const Scalar ss = label.sign == 1 ? m.s : -m.s;
            for (int k = 1; k <= n; ++k) {
                std::vector<Scalar> lhs = mat_apply(m.E, chain[size_t(k)]);
                Scalar coeff = ss * qint(unsigned(k), mode) * qint(unsigned(n + 1 - k), mode);
                std::vector<Scalar> rhs = chain[size_t(k - 1)];
                for (auto& x : rhs) x *= coeff;
                if (lhs != rhs) {
                    res.residual = true;
                    return res;
                }
            }
            for (auto& v : chain) chain_vectors.push_back(v);
            add_label(label);
        }
    }

    // the chains must jointly span the module
    if (res.total_dim() != m.dim || vectors_rank(chain_vectors, mode) != m.dim)
        res.residual = true;
    return res;
}

std::optional<int> verma_submodule_index(const FieldMode& mode, const Scalar& lambda) {
    require_nonzero(lambda, "lambda");
    switch (mode.kind()) {
        case FieldKind::SymbolicV: {
            // lambda = +-v^n iff the reduced form is a single unit monomial
            if (!lambda.den().is_one()) return std::nullopt;
            const Laurent& num = lambda.num();
            if (num.term_count() != 1) return std::nullopt;
            int e = num.low_exp();
            Int c = num.coeff(e);
            if ((c != 1 && c != -1) || e < 0) return std::nullopt;
            return e;
        }
        case FieldKind::RationalQ: {
            const Rat& q = mode.q();
            Rat qa = abs(q);
            Rat la = abs(lambda.rat());
            Rat p(1);
            for (int n = 0; n <= 1 << 20; ++n) {
                if (p == la) {
                    Scalar qn = Scalar::qpow(mode, n);
                    if (lambda == qn || lambda == -qn) return n;
                    return std::nullopt;
                }
                if (qa > 1 ? p > la : p < la) return std::nullopt;
                p *= qa;
            }
            return std::nullopt;
        }
        case FieldKind::CyclotomicQ:
            throw DomainError("verma_submodule_index requires q not a root of unity");
    }
    return std::nullopt;
}

RadfordLabel radford_parameters(const FieldMode& mode, const Scalar& beta_a, long l,
                                const Scalar& chosen_root) {
    if (!mode.generic_q()) throw DomainError("radford_parameters requires generic q");
    require_nonzero(beta_a, "beta(a)");
    if (chosen_root * chosen_root != beta_a)
        throw DomainError("chosen_root^2 must equal beta(a)");

    // decide beta(a) = omega^(l+n) = q^(-2(l+n)) for some n >= 0, exactly
    std::optional<long> hit;
    switch (mode.kind()) {
        case FieldKind::SymbolicV: {
            // degree certificate: a unit monomial v^e with e = -2(l+n)
            if (beta_a.den().is_one() && beta_a.num().term_count() == 1 &&
                beta_a.num().coeff(beta_a.num().low_exp()) == 1) {
                int e = beta_a.num().low_exp();
                if (e % 2 == 0 && -e / 2 - l >= 0) hit = -e / 2 - l;
            }
            break;
        }
        case FieldKind::RationalQ: {
            Rat qa = abs(mode.q());
            Rat ba = abs(beta_a.rat());
            for (long n = 0;; ++n) {
                Scalar w = Scalar::qpow(mode, -2 * (l + n));
                if (beta_a == w) {
                    hit = n;
                    break;
                }
                // |q^-2(l+n)| is strictly monotone in n: stop once past |beta_a|
                Rat cur = abs(w.rat());
                if (qa > 1 ? cur < ba : cur > ba) break;
            }
            break;
        }
        case FieldKind::CyclotomicQ: break;  // unreachable (generic_q check)
    }

    RadfordLabel label;
    if (!hit) {
        label.finite = false;
        label.z = beta_a * Scalar::qpow(mode, -2 * l);
        label.sqrt_z = chosen_root * Scalar::qpow(mode, -l);
        label.lambda = chosen_root.inverse() * Scalar::qpow(mode, -l);
        return label;
    }
    const long n = *hit;
    label.finite = true;
    label.n = int(n);
    label.z = Scalar::qpow(mode, -2 * (n + 2 * l));
    label.sqrt_z = chosen_root * Scalar::qpow(mode, -l);
    label.lambda = Scalar::qpow(mode, n);
    if (Scalar::qpow(mode, -n - 2 * l) == label.sqrt_z) {
        label.sign = +1;
    } else if (Scalar::qpow(mode, -n - 2 * l) == -label.sqrt_z) {
        label.sign = -1;
    } else {
        throw Error("radford_parameters: chosen root is not +-q^(-n-l)");
    }
    return label;
}

}  // namespace qd
