#include "qdouble/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qd {

// ---------------------------------------------------------------- Laurent

Laurent Laurent::monomial(const Int& coeff, int exp) {
    Laurent r;
    if (coeff != 0) r.c_[exp] = coeff;
    return r;
}

bool Laurent::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

Int Laurent::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
}

void Laurent::add_term(int exp, const Int& coeff) {
    if (coeff == 0) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
        c_[exp] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) c_.erase(it);
    }
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.add_term(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (auto& [e, c] : o.c_) r.add_term(e, -c);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

Laurent Laurent::pow(unsigned n) const {
    Laurent r(1);
    Laurent base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Int Laurent::content() const {
    Int g = 0;
    for (auto& [e, c] : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

bool Laurent::divide_exact(const Laurent& d, Laurent* quot) const {
    if (d.is_zero()) return false;
    if (is_zero()) {
        if (quot) *quot = Laurent();
        return true;
    }
    // classic long division on the shifted (ordinary polynomial) forms
    Laurent rem = shifted(-low_exp());
    Laurent div = d.shifted(-d.low_exp());
    int qshift = low_exp() - d.low_exp();
    Laurent q;
    const Int lead = div.c_.rbegin()->second;
    while (!rem.is_zero() && rem.high_exp() >= div.high_exp()) {
        Int c = rem.c_.rbegin()->second;
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return false;
        Int f = c / lead;
        int sh = rem.high_exp() - div.high_exp();
        q.add_term(sh, f);
        rem = rem - div.shifted(sh) * Laurent(f);
    }
    if (!rem.is_zero()) return false;
    if (quot) *quot = q.shifted(qshift);
    return true;
}

namespace {

// primitive part with positive leading coefficient (ordinary poly form)
Laurent primitive_part(const Laurent& a) {
    if (a.is_zero()) return a;
    Int c = a.content();
    if (a.terms().rbegin()->second < 0) c = -c;
    Laurent r;
    for (auto& [e, v] : a.terms()) r.add_term(e, v / c);
    return r;
}

// pseudo-remainder of a by b (both ordinary polys, b nonzero, deg a >= deg b)
Laurent pseudo_rem(Laurent a, const Laurent& b) {
    const Int lead = b.terms().rbegin()->second;
    const int db = b.high_exp();
    while (!a.is_zero() && a.high_exp() >= db) {
        Int ca = a.terms().rbegin()->second;
        int sh = a.high_exp() - db;
        a = a * Laurent(lead) - b.shifted(sh) * Laurent(ca);
    }
    return a;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero())
        return b.is_zero() ? b
                           : primitive_part(b.shifted(-b.low_exp())) * Laurent(b.content());
    if (b.is_zero()) return primitive_part(a.shifted(-a.low_exp())) * Laurent(a.content());
    Int cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    Laurent x = primitive_part(a.shifted(-a.low_exp()));
    Laurent y = primitive_part(b.shifted(-b.low_exp()));
    if (x.high_exp() < y.high_exp()) std::swap(x, y);
    while (!y.is_zero()) {
        Laurent r = pseudo_rem(x, y);
        x = y;
        y = primitive_part(r);
    }
    return x * Laurent(cg);
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponents
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << abs.get_str();
        } else {
            if (abs != 1) os << abs.get_str();
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

// -------------------------------------------------------------- FieldMode

namespace {

// Phi_m as ordinary integer polynomial, index = power.
std::vector<Int> cyclotomic_poly(unsigned m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<std::vector<Int>> memo(m + 1);
    auto poly_div = [](const std::vector<Int>& num, const std::vector<Int>& den) {
        std::vector<Int> rem = num;
        std::vector<Int> q(num.size() - den.size() + 1, Int(0));
        const Int lead = den.back();
        for (int i = int(rem.size()) - 1; i >= int(den.size()) - 1; --i) {
            Int f = rem[i] / lead;  // exact for cyclotomic factors
            q[i - (den.size() - 1)] = f;
            for (size_t j = 0; j < den.size(); ++j) rem[i - (den.size() - 1) + j] -= f * den[j];
        }
        return q;
    };
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        std::vector<Int> num(d + 1, Int(0));
        num[0] = -1;
        num[d] = 1;
        for (unsigned dd = 1; dd < d; ++dd)
            if (d % dd == 0) num = poly_div(num, memo[dd]);
        memo[d] = num;
    }
    return memo[m];
}

}  // namespace

FieldMode FieldMode::symbolic() { return FieldMode(); }

FieldMode FieldMode::cyclotomic(unsigned m, unsigned e) {
    if (m < 2) throw DomainError("cyclotomic order must be >= 2");
    e %= m;
    if ((2u * e) % m == 0)
        throw DomainError("q^2 = 1 is excluded (m divides 2e)");
    auto data = std::make_shared<CycData>();
    data->m = m;
    data->e = e;
    data->phi = cyclotomic_poly(m);
    data->deg = unsigned(data->phi.size() - 1);
    FieldMode f;
    f.kind_ = FieldKind::CyclotomicQ;
    f.cyc_ = std::move(data);
    return f;
}

FieldMode FieldMode::rational(const Rat& q) {
    if (q == 0 || q == 1 || q == -1)
        throw DomainError("rational q must satisfy q != 0, q^2 != 1");
    FieldMode f;
    f.kind_ = FieldKind::RationalQ;
    f.q_ = q;
    return f;
}

const CycData& FieldMode::cyc() const {
    if (kind_ != FieldKind::CyclotomicQ) throw ModeMismatch("not a cyclotomic mode");
    return *cyc_;
}

const Rat& FieldMode::q() const {
    if (kind_ != FieldKind::RationalQ) throw ModeMismatch("not a rational mode");
    return q_;
}

unsigned FieldMode::order_of_q() const {
    const auto& c = cyc();
    return c.m / std::gcd(c.m, c.e == 0 ? c.m : c.e);
}

unsigned FieldMode::order_of_q2() const {
    const auto& c = cyc();
    return c.m / std::gcd(c.m, 2 * c.e);
}

bool FieldMode::operator==(const FieldMode& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case FieldKind::SymbolicV: return true;
        case FieldKind::CyclotomicQ: return cyc_->m == o.cyc_->m && cyc_->e == o.cyc_->e;
        case FieldKind::RationalQ: return q_ == o.q_;
    }
    return false;
}

std::string FieldMode::str() const {
    switch (kind_) {
        case FieldKind::SymbolicV: return "symbolic";
        case FieldKind::CyclotomicQ:
            return "cyclotomic:" + std::to_string(cyc_->m) + ":" + std::to_string(cyc_->e);
        case FieldKind::RationalQ: return "rational:" + q_.get_str();
    }
    return "?";
}

// ----------------------------------------------------------------- Scalar

namespace {

// reduce a dense rational-coefficient polynomial modulo Phi_m
void cyc_reduce(std::vector<Rat>& p, const CycData& cd) {
    for (int i = int(p.size()) - 1; i >= int(cd.deg); --i) {
        if (p[i] == 0) continue;
        Rat f = p[i];
        for (size_t j = 0; j < cd.phi.size(); ++j)
            p[i - cd.deg + j] -= f * Rat(cd.phi[j]);
    }
    p.resize(cd.deg);
    for (auto& c : p) c.canonicalize();
}

std::vector<Rat> cyc_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, const CycData& cd) {
    std::vector<Rat> p(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) p[i + j] += a[i] * b[j];
    }
    cyc_reduce(p, cd);
    return p;
}

bool cyc_is_zero(const std::vector<Rat>& a) {
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

// inverse in Q[x]/Phi_m via the extended Euclidean algorithm
std::vector<Rat> cyc_inverse(const std::vector<Rat>& a, const CycData& cd) {
    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) {
        for (int i = int(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    auto scale = [](const Poly& p, const Rat& f) {
        Poly r = p;
        for (auto& c : r) c *= f;
        return r;
    };
    auto sub_shift = [](Poly& p, const Poly& q, const Rat& f, int sh) {
        if (p.size() < q.size() + sh) p.resize(q.size() + sh, Rat(0));
        for (size_t i = 0; i < q.size(); ++i) p[i + sh] -= f * q[i];
    };
    Poly r0(cd.phi.size());
    for (size_t i = 0; i < cd.phi.size(); ++i) r0[i] = Rat(cd.phi[i]);
    Poly r1 = a;
    Poly s0 = {Rat(0)}, s1 = {Rat(1)};  // coefficients of 'a' in the Bezout identity
    while (deg(r1) > 0) {
        int d0 = deg(r0), d1 = deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        Rat f = r0[d0] / r1[d1];
        sub_shift(r0, r1, f, d0 - d1);
        sub_shift(s0, s1, f, d0 - d1);
        if (deg(r0) < deg(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
    }
    if (deg(r1) != 0) throw Error("cyclotomic inverse of zero");
    Poly res = scale(s1, Rat(1) / r1[deg(r1)]);
    res.resize(cd.deg, Rat(0));
    for (auto& c : res) c.canonicalize();
    return res;
}

std::vector<Rat> cyc_qpow(const FieldMode& mode, long k) {
    const auto& cd = mode.cyc();
    long ek = (long(cd.e) * k) % long(cd.m);
    if (ek < 0) ek += cd.m;
    std::vector<Rat> p(size_t(ek) + 1, Rat(0));
    p[size_t(ek)] = 1;
    cyc_reduce(p, cd);
    return p;
}

Rat rat_pow(const Rat& q, long k) {
    Rat r(1);
    Rat base = k >= 0 ? q : Rat(1) / q;
    unsigned long n = k >= 0 ? (unsigned long)k : (unsigned long)(-k);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

}  // namespace

void Scalar::reduce_symbolic() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    // move all v-units out of the denominator
    int dl = den_.low_exp();
    num_ = num_.shifted(-dl);
    den_ = den_.shifted(-dl);
    Laurent g = Laurent::gcd(num_, den_);
    Laurent qn, qd;
    num_.divide_exact(g, &qn);
    den_.divide_exact(g, &qd);
    num_ = qn;
    den_ = qd;
    if (den_.terms().rbegin()->second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

void Scalar::check_same_mode(const Scalar& o) const {
    if (mode_ != o.mode_) throw ModeMismatch("scalar modes differ: " + mode_.str() + " vs " + o.mode_.str());
}

Scalar Scalar::zero(const FieldMode& mode) {
    Scalar s;
    s.mode_ = mode;
    if (mode.kind() == FieldKind::CyclotomicQ) s.cyc_.assign(mode.cyc().deg, Rat(0));
    return s;
}

Scalar Scalar::one(const FieldMode& mode) { return from_int(mode, 1); }

Scalar Scalar::from_int(const FieldMode& mode, const Int& n) {
    Scalar s = zero(mode);
    switch (mode.kind()) {
        case FieldKind::SymbolicV: s.num_ = Laurent(n); break;
        case FieldKind::CyclotomicQ: s.cyc_[0] = Rat(n); break;
        case FieldKind::RationalQ: s.rat_ = Rat(n); break;
    }
    return s;
}

Scalar Scalar::from_rational(const FieldMode& mode, const Rat& r) {
    Scalar s = zero(mode);
    switch (mode.kind()) {
        case FieldKind::SymbolicV:
            s.num_ = Laurent(r.get_num());
            s.den_ = Laurent(r.get_den());
            s.reduce_symbolic();
            break;
        case FieldKind::CyclotomicQ: s.cyc_[0] = r; break;
        case FieldKind::RationalQ: s.rat_ = r; break;
    }
    return s;
}

Scalar Scalar::qpow(const FieldMode& mode, long k) {
    Scalar s = zero(mode);
    switch (mode.kind()) {
        case FieldKind::SymbolicV: s.num_ = Laurent::v(int(k)); break;
        case FieldKind::CyclotomicQ: s.cyc_ = cyc_qpow(mode, k); break;
        case FieldKind::RationalQ: s.rat_ = rat_pow(mode.q(), k); break;
    }
    return s;
}

Scalar Scalar::from_laurent(const Laurent& num) {
    Scalar s;
    s.mode_ = FieldMode::symbolic();
    s.num_ = num;
    return s;
}

Scalar Scalar::fraction(const Laurent& num, const Laurent& den) {
    if (den.is_zero()) throw Error("zero denominator");
    Scalar s;
    s.mode_ = FieldMode::symbolic();
    s.num_ = num;
    s.den_ = den;
    s.reduce_symbolic();
    return s;
}

bool Scalar::is_zero() const {
    switch (mode_.kind()) {
        case FieldKind::SymbolicV: return num_.is_zero();
        case FieldKind::CyclotomicQ: return cyc_is_zero(cyc_);
        case FieldKind::RationalQ: return rat_ == 0;
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(mode_); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    switch (mode_.kind()) {
        case FieldKind::SymbolicV: s.num_ = -s.num_; break;
        case FieldKind::CyclotomicQ:
            for (auto& c : s.cyc_) c = -c;
            break;
        case FieldKind::RationalQ: s.rat_ = -s.rat_; break;
    }
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_mode(o);
    Scalar s = zero(mode_);
    switch (mode_.kind()) {
        case FieldKind::SymbolicV:
            s.num_ = num_ * o.den_ + o.num_ * den_;
            s.den_ = den_ * o.den_;
            s.reduce_symbolic();
            break;
        case FieldKind::CyclotomicQ:
            for (size_t i = 0; i < cyc_.size(); ++i) s.cyc_[i] = cyc_[i] + o.cyc_[i];
            break;
        case FieldKind::RationalQ: s.rat_ = rat_ + o.rat_; break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_mode(o);
    Scalar s = zero(mode_);
    switch (mode_.kind()) {
        case FieldKind::SymbolicV:
            s.num_ = num_ * o.num_;
            s.den_ = den_ * o.den_;
            s.reduce_symbolic();
            break;
        case FieldKind::CyclotomicQ: s.cyc_ = cyc_mul(cyc_, o.cyc_, mode_.cyc()); break;
        case FieldKind::RationalQ: s.rat_ = rat_ * o.rat_; break;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero scalar");
    Scalar s = zero(mode_);
    switch (mode_.kind()) {
        case FieldKind::SymbolicV:
            s.num_ = den_;
            s.den_ = num_;
            s.reduce_symbolic();
            break;
        case FieldKind::CyclotomicQ: s.cyc_ = cyc_inverse(cyc_, mode_.cyc()); break;
        case FieldKind::RationalQ: s.rat_ = 1 / rat_; break;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long k) const {
    Scalar base = k >= 0 ? *this : inverse();
    unsigned long n = k >= 0 ? (unsigned long)k : (unsigned long)(-k);
    Scalar r = one(mode_);
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (mode_ != o.mode_) return false;
    switch (mode_.kind()) {
        case FieldKind::SymbolicV: return num_ == o.num_ && den_ == o.den_;
        case FieldKind::CyclotomicQ: return cyc_ == o.cyc_;
        case FieldKind::RationalQ: return rat_ == o.rat_;
    }
    return false;
}

const Laurent& Scalar::num() const {
    if (!mode_.is_symbolic()) throw ModeMismatch("num(): not symbolic");
    return num_;
}

const Laurent& Scalar::den() const {
    if (!mode_.is_symbolic()) throw ModeMismatch("den(): not symbolic");
    return den_;
}

const std::vector<Rat>& Scalar::cyc_coeffs() const {
    if (mode_.kind() != FieldKind::CyclotomicQ) throw ModeMismatch("cyc_coeffs(): not cyclotomic");
    return cyc_;
}

const Rat& Scalar::rat() const {
    if (mode_.kind() != FieldKind::RationalQ) throw ModeMismatch("rat(): not rational");
    return rat_;
}

std::string Scalar::str() const {
    switch (mode_.kind()) {
        case FieldKind::SymbolicV: {
            if (den_.is_one()) return num_.str();
            std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
            std::string d = den_.term_count() > 1 ? "(" + den_.str() + ")" : den_.str();
            return n + "/" + d;
        }
        case FieldKind::CyclotomicQ: {
            if (cyc_is_zero(cyc_)) return "0";
            std::ostringstream os;
            bool first = true;
            for (int i = int(cyc_.size()) - 1; i >= 0; --i) {
                if (cyc_[size_t(i)] == 0) continue;
                Rat c = cyc_[size_t(i)];
                Rat abs = c < 0 ? Rat(-c) : c;
                if (first) {
                    if (c < 0) os << "-";
                    first = false;
                } else {
                    os << (c < 0 ? " - " : " + ");
                }
                if (i == 0) {
                    os << abs.get_str();
                } else {
                    if (abs != 1) os << abs.get_str();
                    os << "z";
                    if (i != 1) os << "^" << i;
                }
            }
            return os.str();
        }
        case FieldKind::RationalQ: return rat_.get_str();
    }
    return "?";
}

// -------------------------------------------------------- q-combinatorics

namespace {

// [n] as an integer Laurent polynomial: v^(n-1) + v^(n-3) + ... + v^(1-n)
Laurent qint_laurent(unsigned n) {
    Laurent r;
    for (unsigned j = 0; j < n; ++j) r.add_term(int(n) - 1 - 2 * int(j), 1);
    return r;
}

Scalar eval_laurent(const Laurent& p, const FieldMode& mode) {
    Scalar r = Scalar::zero(mode);
    for (auto& [e, c] : p.terms())
        r += Scalar::from_int(mode, c) * Scalar::qpow(mode, e);
    return r;
}

// Gaussian binomial [m over n] as an exact Laurent polynomial
Laurent qbinomial_laurent(long m, unsigned n) {
    // product form: prod_{i=1}^{n} [m-i+1] / [i] with [k] for negative k
    // equal to -[-k]
    Laurent num(1), den(1);
    for (unsigned i = 1; i <= n; ++i) {
        long k = m - long(i) + 1;
        if (k == 0) return Laurent();  // a vanishing factor
        num = num * (k > 0 ? qint_laurent(unsigned(k)) : -qint_laurent(unsigned(-k)));
        den = den * qint_laurent(i);
    }
    Laurent q;
    if (!num.divide_exact(den, &q))
        throw Error("Gaussian binomial is not a Laurent polynomial (internal)");
    return q;
}

}  // namespace

Scalar qint(unsigned n, const FieldMode& mode) { return eval_laurent(qint_laurent(n), mode); }

Scalar qfactorial(unsigned n, const FieldMode& mode) {
    Scalar r = Scalar::one(mode);
    for (unsigned i = 2; i <= n; ++i) r *= qint(i, mode);
    return r;
}

Scalar qbinomial(long m, unsigned n, const FieldMode& mode) {
    return eval_laurent(qbinomial_laurent(m, n), mode);
}

Scalar qbinomial_base(long m, unsigned n, unsigned base_exp, const FieldMode& mode) {
    Laurent p = qbinomial_laurent(m, n);
    Scalar r = Scalar::zero(mode);
    for (auto& [e, c] : p.terms())
        r += Scalar::from_int(mode, c) * Scalar::qpow(mode, e * long(base_exp));
    return r;
}

bool is_laurent(const Scalar& x) {
    if (!x.mode().is_symbolic()) throw ModeMismatch("is_laurent requires SymbolicV mode");
    return x.den().is_one();
}

bool in_localized_A(const Scalar& x) {
    if (!x.mode().is_symbolic()) throw ModeMismatch("in_localized_A requires SymbolicV mode");
    // reduced denominator must be +-v^j (v - v^-1)^k; in canonical form that
    // is exactly (v^2 - 1)^k
    Laurent d = x.den();
    const Laurent vv = Laurent::v(2) - Laurent(1);
    while (!d.is_one()) {
        Laurent q;
        if (!d.divide_exact(vv, &q)) return false;
        d = q.shifted(-q.low_exp());
    }
    return true;
}

Scalar specialize(const Scalar& x, const FieldMode& target) {
    if (!x.mode().is_symbolic()) throw ModeMismatch("specialize requires a SymbolicV input");
    if (target.is_symbolic()) return x;
    Scalar den = eval_laurent(x.den(), target);
    if (den.is_zero())
        throw VanishingDenominator("denominator " + x.den().str() + " vanishes at the target q");
    return eval_laurent(x.num(), target) / den;
}

}  // namespace qd
