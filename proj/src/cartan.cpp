#include "qdouble/cartan.hpp"

namespace qd {

namespace {

// determinant of an integer matrix by fraction-free elimination
Int int_det(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    Int det = m[n - 1][n - 1];
    return sign < 0 ? Int(-det) : det;
}

}  // namespace

void validate(const CartanData& cd) {
    if (cd.n < 1) throw DomainError("cartan: rank must be >= 1");
    if (int(cd.a.size()) != cd.n || int(cd.d.size()) != cd.n)
        throw DomainError("cartan: dimension mismatch");
    for (int i = 0; i < cd.n; ++i) {
        if (int(cd.a[size_t(i)].size()) != cd.n) throw DomainError("cartan: ragged matrix");
        if (cd.a[size_t(i)][size_t(i)] != 2) throw DomainError("cartan: a_ii must be 2");
        if (cd.d[size_t(i)] < 1 || cd.d[size_t(i)] > 3)
            throw DomainError("cartan: d_i must lie in {1,2,3}");
        for (int j = 0; j < cd.n; ++j) {
            int v = cd.a[size_t(i)][size_t(j)];
            if (i != j && (v > 0 || v < -3))
                throw DomainError("cartan: off-diagonal entries must lie in {-3,-2,-1,0}");
        }
    }
    for (int i = 0; i < cd.n; ++i)
        for (int j = 0; j < cd.n; ++j)
            if (cd.d[size_t(i)] * cd.a[size_t(i)][size_t(j)] !=
                cd.d[size_t(j)] * cd.a[size_t(j)][size_t(i)])
                throw DomainError("cartan: (d_i a_ij) must be symmetric");
    // positive definite: all leading principal minors positive
    for (int k = 1; k <= cd.n; ++k) {
        const size_t kk = size_t(k);
        std::vector<std::vector<Int>> m(kk, std::vector<Int>(kk, Int(0)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                m[size_t(i)][size_t(j)] = Int(cd.d[size_t(i)] * cd.a[size_t(i)][size_t(j)]);
        if (int_det(m) <= 0)
            throw DomainError("cartan: (d_i a_ij) must be positive definite");
    }
}

CartanData cartan_rank1() { return {1, {{2}}, {1}}; }

CartanData cartan_sl3() { return {2, {{2, -1}, {-1, 2}}, {1, 1}}; }

namespace {

GenWord w(std::initializer_list<RankNGen> g) { return GenWord(g); }
RankNGen g(RankNGen::Type t, int i) { return {t, i}; }

}  // namespace

std::vector<RankNRelation> relations(const CartanData& cd, const FieldMode& mode) {
    validate(cd);
    using T = RankNGen::Type;
    using K = RankNRelation::Kind;
    std::vector<RankNRelation> out;
    const Scalar one = Scalar::one(mode);
    auto add = [&out](K kind, int i, int j, std::string name,
                      std::vector<std::pair<Scalar, GenWord>> terms,
                      std::vector<Scalar> serre = {}) {
        out.push_back({kind, i, j, std::move(name), std::move(terms), std::move(serre)});
    };
    auto nm = [](const std::string& base, int i, int j) {
        return base + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    };

    for (int i = 1; i <= cd.n; ++i) {
        add(K::Group, i, i, nm("K Kinv", i, i),
            {{one, w({g(T::K, i), g(T::Kinv, i)})}, {-one, {}}});
        add(K::Group, i, i, nm("Kt Ktinv", i, i),
            {{one, w({g(T::Kt, i), g(T::Ktinv, i)})}, {-one, {}}});
        for (int j = 1; j <= cd.n; ++j) {
            if (i < j) {
                add(K::Group, i, j, nm("K K comm", i, j),
                    {{one, w({g(T::K, i), g(T::K, j)})}, {-one, w({g(T::K, j), g(T::K, i)})}});
                add(K::Group, i, j, nm("Kt Kt comm", i, j),
                    {{one, w({g(T::Kt, i), g(T::Kt, j)})},
                     {-one, w({g(T::Kt, j), g(T::Kt, i)})}});
            }
            add(K::Group, i, j, nm("K Kt comm", i, j),
                {{one, w({g(T::K, i), g(T::Kt, j)})}, {-one, w({g(T::Kt, j), g(T::K, i)})}});
        }
    }

    for (int i = 1; i <= cd.n; ++i) {
        const long di = cd.d[size_t(i - 1)];
        for (int j = 1; j <= cd.n; ++j) {
            const long daij = di * cd.a[size_t(i - 1)][size_t(j - 1)];
            add(K::KE, i, j, nm("K E", i, j),
                {{one, w({g(T::K, i), g(T::E, j)})},
                 {-Scalar::qpow(mode, daij), w({g(T::E, j), g(T::K, i)})}});
            add(K::KF, i, j, nm("K F", i, j),
                {{one, w({g(T::K, i), g(T::F, j)})},
                 {-Scalar::qpow(mode, -daij), w({g(T::F, j), g(T::K, i)})}});
            add(K::KtE, i, j, nm("Kt E", i, j),
                {{one, w({g(T::Kt, i), g(T::E, j)})},
                 {-Scalar::qpow(mode, daij), w({g(T::E, j), g(T::Kt, i)})}});
            add(K::KtF, i, j, nm("Kt F", i, j),
                {{one, w({g(T::Kt, i), g(T::F, j)})},
                 {-Scalar::qpow(mode, -daij), w({g(T::F, j), g(T::Kt, i)})}});
        }
    }

    for (int i = 1; i <= cd.n; ++i) {
        const long di = cd.d[size_t(i - 1)];
        for (int j = 1; j <= cd.n; ++j) {
            std::vector<std::pair<Scalar, GenWord>> terms = {
                {one, w({g(T::E, i), g(T::F, j)})}, {-one, w({g(T::F, j), g(T::E, i)})}};
            if (i == j) {
                Scalar c = (Scalar::qpow(mode, di) - Scalar::qpow(mode, -di)).inverse();
                terms.push_back({-c, w({g(T::K, i)})});
                terms.push_back({c, w({g(T::Ktinv, i)})});
            }
            add(K::EF, i, j, nm("E F", i, j), std::move(terms));
        }
    }

    // quantum Serre relations, i != j
    for (int i = 1; i <= cd.n; ++i) {
        for (int j = 1; j <= cd.n; ++j) {
            if (i == j) continue;
            const int m = 1 - cd.a[size_t(i - 1)][size_t(j - 1)];
            const unsigned di = unsigned(cd.d[size_t(i - 1)]);
            std::vector<Scalar> coeffs;
            std::vector<std::pair<Scalar, GenWord>> etrm, ftrm;
            for (int s = 0; s <= m; ++s) {
                int r = m - s;
                Scalar c = qbinomial_base(m, unsigned(s), di, mode);
                if (s % 2) c = -c;
                coeffs.push_back(c);
                GenWord we, wf;
                for (int k = 0; k < r; ++k) we.push_back(g(T::E, i));
                we.push_back(g(T::E, j));
                for (int k = 0; k < s; ++k) we.push_back(g(T::E, i));
                for (int k = 0; k < r; ++k) wf.push_back(g(T::F, i));
                wf.push_back(g(T::F, j));
                for (int k = 0; k < s; ++k) wf.push_back(g(T::F, i));
                etrm.emplace_back(c, we);
                ftrm.emplace_back(c, wf);
            }
            add(K::SerreE, i, j, nm("Serre E", i, j), std::move(etrm), coeffs);
            add(K::SerreF, i, j, nm("Serre F", i, j), std::move(ftrm), std::move(coeffs));
        }
    }
    return out;
}

Scalar generator_pairing(const CartanData& cd, int i, int j, PairingKind which,
                         const FieldMode& mode) {
    validate(cd);
    if (i < 1 || i > cd.n || j < 1 || j > cd.n)
        throw DomainError("generator_pairing: index out of range");
    const long di = cd.d[size_t(i - 1)];
    switch (which) {
        case PairingKind::EF:
            if (i != j) return Scalar::zero(mode);
            return (Scalar::qpow(mode, 2 * di) - Scalar::one(mode)).inverse();
        case PairingKind::KK:
            return Scalar::qpow(mode, di * cd.a[size_t(i - 1)][size_t(j - 1)]);
        case PairingKind::KKinv:
            return Scalar::qpow(mode, -di * cd.a[size_t(i - 1)][size_t(j - 1)]);
    }
    throw Error("unreachable");
}

RankNRep epsilon_vec(const CartanData& cd, const std::vector<Scalar>& s, const FieldMode& mode) {
    validate(cd);
    if (int(s.size()) != cd.n) throw DomainError("epsilon_vec: wrong s length");
    RankNRep rep;
    rep.dim = 1;
    for (int i = 0; i < cd.n; ++i) {
        if (s[size_t(i)].is_zero()) throw DomainError("epsilon_vec: zero entry in s");
        rep.E.push_back(ScalarMatrix(1, 1, mode));
        rep.F.push_back(ScalarMatrix(1, 1, mode));
        ScalarMatrix k(1, 1, mode), kt(1, 1, mode);
        k.set(0, 0, s[size_t(i)]);
        kt.set(0, 0, s[size_t(i)].inverse());
        rep.K.push_back(k);
        rep.Kt.push_back(kt);
    }
    return rep;
}

RankNRep pullback_rep(const std::vector<ScalarMatrix>& E, const std::vector<ScalarMatrix>& F,
                      const std::vector<ScalarMatrix>& K, const std::vector<Scalar>& s) {
    if (E.size() != F.size() || E.size() != K.size() || E.size() != s.size())
        throw DomainError("pullback_rep: length mismatch");
    RankNRep rep;
    rep.dim = E.empty() ? 0 : E[0].rows();
    for (size_t i = 0; i < E.size(); ++i) {
        if (s[i].is_zero()) throw DomainError("pullback_rep: zero entry in s");
        rep.E.push_back(E[i] * s[i]);
        rep.F.push_back(F[i]);
        rep.K.push_back(K[i] * s[i]);
        rep.Kt.push_back(K[i] * s[i].inverse());
    }
    return rep;
}

RankNRep twist_by_character(const RankNRep& rep, const std::vector<Scalar>& s) {
    if (s.size() != rep.E.size()) throw DomainError("twist_by_character: length mismatch");
    RankNRep r = rep;
    for (size_t i = 0; i < s.size(); ++i) {
        r.E[i] = r.E[i] * s[i];
        r.K[i] = r.K[i] * s[i];
        r.Kt[i] = r.Kt[i] * s[i].inverse();
    }
    return r;
}

ScalarMatrix evaluate_relation(const RankNRelation& rel, const RankNRep& rep,
                               const FieldMode& mode) {
    ScalarMatrix acc(rep.dim, rep.dim, mode);
    for (auto& [coeff, word] : rel.terms) {
        ScalarMatrix m = ScalarMatrix::identity(rep.dim, mode);
        for (auto& gen : word) {
            const size_t i = size_t(gen.i - 1);
            switch (gen.type) {
                case RankNGen::Type::E: m = m * rep.E[i]; break;
                case RankNGen::Type::F: m = m * rep.F[i]; break;
                case RankNGen::Type::K: m = m * rep.K[i]; break;
                case RankNGen::Type::Kinv: m = m * rep.K[i].diagonal_inverse(); break;
                case RankNGen::Type::Kt: m = m * rep.Kt[i]; break;
                case RankNGen::Type::Ktinv: m = m * rep.Kt[i].diagonal_inverse(); break;
            }
        }
        acc = acc + m * coeff;
    }
    return acc;
}

MatrixRepReport check_matrix_rep(const CartanData& cd, const RankNRep& rep,
                                 const FieldMode& mode) {
    validate(cd);
    if (int(rep.E.size()) != cd.n) throw DomainError("check_matrix_rep: wrong rep arity");
    for (auto* fam : {&rep.E, &rep.F, &rep.K, &rep.Kt})
        for (auto& m : *fam)
            if (m.rows() != rep.dim || m.cols() != rep.dim)
                throw DomainError("check_matrix_rep: dimension mismatch");
    MatrixRepReport report;
    for (int i = 0; i < cd.n; ++i) {
        report.k_diagonal.push_back(rep.K[size_t(i)].is_invertible_diagonal());
        report.kt_diagonal.push_back(rep.Kt[size_t(i)].is_invertible_diagonal());
    }
    for (const auto& rel : relations(cd, mode)) {
        bool ok = evaluate_relation(rel, rep, mode).is_zero();
        report.items.push_back({rel.name, ok});
        report.all_pass = report.all_pass && ok;
    }
    return report;
}

}  // namespace qd
