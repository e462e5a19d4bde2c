#include "qdouble/textio.hpp"

#include <cctype>
#include <sstream>

namespace qd {

FieldMode parse_mode(const std::string& text) {
    if (text == "symbolic" || text.empty()) return FieldMode::symbolic();
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : s) {
            if (c == sep) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        return parts;
    };
    auto parts = split(text, ':');
    try {
        if (parts[0] == "cyclotomic" && parts.size() == 3)
            return FieldMode::cyclotomic(unsigned(std::stoul(parts[1])),
                                         unsigned(std::stoul(parts[2])));
        if (parts[0] == "rational" && parts.size() == 2) {
            Rat q(parts[1]);
            q.canonicalize();
            return FieldMode::rational(q);
        }
    } catch (const std::invalid_argument&) {
    }
    throw ParseError("bad mode '" + text + "' (want symbolic | cyclotomic:m:e | rational:q)");
}

// ------------------------------------------------------------------ parser

namespace {

struct Token {
    enum class Kind { Gen, Var, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    Gen gen = Gen::E;
    Int value = Int(0);
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Kind::End};
            return;
        }
        char c = s_[pos_];
        switch (c) {
            case '+': ++pos_; tok_ = {Token::Kind::Plus}; return;
            case '-': ++pos_; tok_ = {Token::Kind::Minus}; return;
            case '*': ++pos_; tok_ = {Token::Kind::Star}; return;
            case '/': ++pos_; tok_ = {Token::Kind::Slash}; return;
            case '^': ++pos_; tok_ = {Token::Kind::Caret}; return;
            case '(': ++pos_; tok_ = {Token::Kind::LParen}; return;
            case ')': ++pos_; tok_ = {Token::Kind::RParen}; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = {Token::Kind::Int};
            tok_.value = Int(s_.substr(start, pos_ - start));
            return;
        }
        if (c == 'K') {
            if (pos_ + 1 < s_.size() && s_[pos_ + 1] == 't') {
                pos_ += 2;
                tok_ = {Token::Kind::Gen, Gen::Kt};
            } else {
                ++pos_;
                tok_ = {Token::Kind::Gen, Gen::K};
            }
            return;
        }
        if (c == 'E') {
            ++pos_;
            tok_ = {Token::Kind::Gen, Gen::E};
            return;
        }
        if (c == 'F') {
            ++pos_;
            tok_ = {Token::Kind::Gen, Gen::F};
            return;
        }
        if (c == 'v' || c == 'q') {
            ++pos_;
            tok_ = {Token::Kind::Var};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "' at position " +
                         std::to_string(pos_));
    }

    std::string s_;
    size_t pos_ = 0;
    Token tok_{Token::Kind::End};
};

class Parser {
public:
    Parser(const std::string& text, Algebra alg, const FieldMode& mode)
        : lex_(text), alg_(alg), mode_(mode) {}

    PBWElement parse() {
        PBWElement r = expr();
        if (lex_.peek().kind != Token::Kind::End) throw ParseError("trailing input");
        return r;
    }

private:
    PBWElement expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        PBWElement r = term();
        if (neg) r = -r;
        while (lex_.peek().kind == Token::Kind::Plus || lex_.peek().kind == Token::Kind::Minus) {
            bool minus = lex_.take().kind == Token::Kind::Minus;
            PBWElement t = term();
            r = minus ? r - t : r + t;
        }
        return r;
    }

    bool starts_atom(Token::Kind k) const {
        return k == Token::Kind::Gen || k == Token::Kind::Var || k == Token::Kind::Int ||
               k == Token::Kind::LParen;
    }

    PBWElement term() {
        PBWElement r = factor();
        for (;;) {
            if (lex_.peek().kind == Token::Kind::Star) {
                lex_.take();
                r = multiply(r, factor());
            } else if (lex_.peek().kind == Token::Kind::Slash) {
                lex_.take();
                r = multiply(r, invert(factor()));
            } else if (starts_atom(lex_.peek().kind)) {
                r = multiply(r, factor());  // juxtaposition
            } else {
                return r;
            }
        }
    }

    PBWElement factor() {
        PBWElement base = atom();
        if (lex_.peek().kind != Token::Kind::Caret) return base;
        lex_.take();
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.take();
        if (t.kind != Token::Kind::Int) throw ParseError("expected integer exponent after ^");
        long e = std::stol(t.value.get_str());
        if (neg) e = -e;
        if (e >= 0) return base.pow(unsigned(e));
        return invert(base).pow(unsigned(-e));
    }

    PBWElement invert(const PBWElement& x) const {
        // only group-like monomials c K^a Kt^b are invertible here
        if (x.terms().size() != 1) throw ParseError("cannot invert a sum");
        const auto& [m, c] = *x.terms().begin();
        if (m.a != 0 || m.b != 0)
            throw ParseError("negative powers need an invertible (group-like) base");
        return PBWElement::monomial(alg_, mode_, {0, -m.c, -m.d, 0}, c.inverse());
    }

    PBWElement atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Gen: return PBWElement::generator(alg_, mode_, t.gen);
            case Token::Kind::Var:
                return PBWElement::unit(alg_, mode_) * Scalar::qpow(mode_, 1);
            case Token::Kind::Int:
                return PBWElement::unit(alg_, mode_) * Scalar::from_int(mode_, t.value);
            case Token::Kind::LParen: {
                PBWElement r = expr();
                if (lex_.take().kind != Token::Kind::RParen) throw ParseError("missing )");
                return r;
            }
            default: throw ParseError("unexpected token");
        }
    }

    Lexer lex_;
    Algebra alg_;
    FieldMode mode_;
};

}  // namespace

PBWElement parse_pbw(const std::string& text, Algebra alg, const FieldMode& mode) {
    return Parser(text, alg, mode).parse();
}

BorelElement parse_borel(const std::string& text, Side side, const FieldMode& mode) {
    PBWElement x = parse_pbw(text, Algebra::Uq, mode);
    BorelElement r(side, mode);
    for (auto& [m, c] : x.terms()) {
        if (side == Side::Upper) {
            if (m.b != 0) throw ParseError("upper Borel elements use E and K only");
            r.add({m.a, m.c}, c);
        } else {
            if (m.a != 0) throw ParseError("lower Borel elements use F and K only");
            // normal order K^c F^b back to the canonical F^b K^c
            r.add({m.b, m.c}, c * Scalar::qpow(mode, -2L * m.c * m.b));
        }
    }
    return r;
}

Scalar parse_scalar(const std::string& text, const FieldMode& mode) {
    PBWElement x = parse_pbw(text, Algebra::Dq, mode);
    if (x.is_zero()) return Scalar::zero(mode);
    if (x.terms().size() != 1 || !x.terms().begin()->first.is_unit())
        throw ParseError("expected a scalar expression, got '" + text + "'");
    return x.terms().begin()->second;
}

// ---------------------------------------------------------------- printing

std::string scalar_text(const Scalar& s) { return s.str(); }

std::string monomial_text(const PBWMonomial& m, Algebra alg) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* name, int e) {
        if (e == 0) return;
        if (!first) os << " ";
        first = false;
        os << name;
        if (e != 1) os << "^" << e;
    };
    emit("E", m.a);
    emit("K", m.c);
    emit(alg == Algebra::Uq ? "K" : "Kt", m.d);
    emit("F", m.b);
    return os.str();
}

namespace {

bool coeff_needs_parens(const Scalar& s) {
    if (!s.mode().is_symbolic()) return s.str().find(' ') != std::string::npos;
    // a plain sum needs parens; fractions already carry their own
    return s.den().is_one() && s.num().term_count() > 1;
}

std::string coeff_prefix(const Scalar& c, bool unit_monomial) {
    if (c.is_one() && !unit_monomial) return "";
    std::string s = scalar_text(c);
    if (unit_monomial) return s;
    if (coeff_needs_parens(c)) return "(" + s + ") ";
    return s + " ";
}

}  // namespace

std::string pbw_text(const PBWElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // canonical printing order: descending in the (a+b, a, c, d, b) order
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = false;
        Scalar cc = c;
        if (scalar_text(c)[0] == '-') {
            neg = true;
            cc = -c;
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        os << coeff_prefix(cc, m.is_unit());
        if (!m.is_unit()) os << monomial_text(m, x.algebra());
    }
    return os.str();
}

std::string pbw_latex(const PBWElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << scalar_text(c) << "\\right)";
        auto emit = [&](const char* name, int e) {
            if (e == 0) return;
            os << " " << name;
            if (e != 1) os << "^{" << e << "}";
        };
        emit("E", m.a);
        emit("K", m.c);
        emit(x.algebra() == Algebra::Uq ? "K" : "\\widetilde{K}", m.d);
        emit("F", m.b);
    }
    return os.str();
}

// -------------------------------------------------------------------- JSON

namespace {

Json laurent_json(const Laurent& p) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(Json::array({it->first, it->second.get_str()}));
    return terms;
}

Json mono_json(const PBWMonomial& m) { return Json::array({m.a, m.c, m.d, m.b}); }

}  // namespace

Json scalar_json(const Scalar& s) {
    switch (s.mode().kind()) {
        case FieldKind::SymbolicV:
            return Json{{"terms", laurent_json(s.num())}, {"den", laurent_json(s.den())}};
        case FieldKind::CyclotomicQ: {
            Json coeffs = Json::array();
            for (auto& c : s.cyc_coeffs()) coeffs.push_back(c.get_str());
            return Json{{"cyclotomic", Json{{"m", s.mode().cyc().m},
                                            {"e", s.mode().cyc().e},
                                            {"coeffs", coeffs}}}};
        }
        case FieldKind::RationalQ: return Json{{"rational", s.rat().get_str()}};
    }
    return {};
}

Json pbw_json(const PBWElement& x) {
    Json terms = Json::array();
    for (auto& [m, c] : x.terms())
        terms.push_back(Json{{"mono", mono_json(m)}, {"coeff", scalar_json(c)}});
    return Json{{"algebra", x.algebra() == Algebra::Dq ? "Dq" : "Uq"}, {"terms", terms}};
}

Json tensor_json(const TensorElement& t) {
    Json terms = Json::array();
    for (auto& [k, c] : t.terms())
        terms.push_back(Json{{"monos", Json::array({mono_json(k.first), mono_json(k.second)})},
                             {"coeff", scalar_json(c)}});
    return Json{{"legs", 2}, {"terms", terms}};
}

Json tensor3_json(const Tensor3Element& t) {
    Json terms = Json::array();
    for (auto& [k, c] : t.terms())
        terms.push_back(Json{{"monos", Json::array({mono_json(k.first), mono_json(k.second),
                                                    mono_json(k.third)})},
                             {"coeff", scalar_json(c)}});
    return Json{{"legs", 3}, {"terms", terms}};
}

Json double_json(const DoubleElement& x) {
    Json terms = Json::array();
    for (auto& [m, c] : x.terms())
        terms.push_back(Json{{"upper", Json::array({m.up.a, m.up.b})},
                             {"lower", Json::array({m.lo.a, m.lo.b})},
                             {"coeff", scalar_json(c)}});
    return Json{{"terms", terms}};
}

Json matrix_json(const ScalarMatrix& m) {
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (auto& [c, v] : m.row(r)) entries.push_back(Json::array({r, c, scalar_json(v)}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json module_json(const WeightModule& m) {
    const char* kind = "other";
    switch (m.kind) {
        case ModKind::Verma: kind = "verma"; break;
        case ModKind::Simple: kind = "simple"; break;
        case ModKind::OneDim: kind = "onedim"; break;
        case ModKind::Z0: kind = "z0"; break;
        case ModKind::Tensor: kind = "tensor"; break;
        case ModKind::Other: break;
    }
    Json kw = Json::array(), ktw = Json::array();
    for (auto& w : m.k_weight) kw.push_back(scalar_json(w));
    for (auto& w : m.kt_weight) ktw.push_back(scalar_json(w));
    return Json{{"kind", kind},
                {"dim", m.dim},
                {"mode", m.mode.str()},
                {"sign", m.sign > 0 ? "+" : "-"},
                {"s", scalar_json(m.s)},
                {"n", m.n},
                {"truncated", m.truncated},
                {"kWeights", kw},
                {"ktWeights", ktw},
                {"E", matrix_json(m.E)},
                {"F", matrix_json(m.F)}};
}

Json relation_report_json(const RelationReport& r) {
    Json items = Json::array();
    for (auto& i : r.items) items.push_back(Json{{"relation", i.name}, {"pass", i.pass}});
    return Json{{"pass", r.all_pass},
                {"truncationExempted", r.truncation_exempted},
                {"relations", items}};
}

Json decomposition_json(const DecompositionResult& d) {
    Json labels = Json::array();
    for (auto& [l, mult] : d.labels)
        labels.push_back(Json{{"n", l.n},
                              {"sign", l.sign > 0 ? "+" : "-"},
                              {"s", scalar_json(l.s)},
                              {"multiplicity", mult}});
    return Json{{"residual", d.residual}, {"summands", labels}};
}

CartanData cartan_from_json(const Json& j) {
    CartanData cd;
    if (!j.contains("a") || !j.contains("d")) throw ParseError("cartan json needs 'a' and 'd'");
    for (auto& row : j.at("a")) {
        std::vector<int> r;
        for (auto& v : row) r.push_back(v.get<int>());
        cd.a.push_back(std::move(r));
    }
    for (auto& v : j.at("d")) cd.d.push_back(v.get<int>());
    cd.n = int(cd.a.size());
    validate(cd);
    return cd;
}

namespace {

ScalarMatrix matrix_from_json(const Json& j, const FieldMode& mode) {
    const int rows = int(j.size());
    int cols = rows ? int(j.at(0).size()) : 0;
    ScalarMatrix m(rows, cols, mode);
    for (int r = 0; r < rows; ++r) {
        if (int(j.at(size_t(r)).size()) != cols) throw ParseError("ragged matrix");
        for (int c = 0; c < cols; ++c) {
            const Json& cell = j.at(size_t(r)).at(size_t(c));
            Scalar v = cell.is_string() ? parse_scalar(cell.get<std::string>(), mode)
                                        : Scalar::from_int(mode, cell.get<long>());
            m.set(r, c, v);
        }
    }
    return m;
}

}  // namespace

RankNRep rep_from_json(const Json& j, const std::vector<Scalar>& s, const FieldMode& mode) {
    auto mats = [&](const char* key) {
        std::vector<ScalarMatrix> out;
        for (auto& m : j.at(key)) out.push_back(matrix_from_json(m, mode));
        return out;
    };
    std::vector<ScalarMatrix> E = mats("E"), F = mats("F"), K = mats("K");
    if (j.contains("Kt")) {
        RankNRep rep;
        rep.dim = E.empty() ? 0 : E[0].rows();
        rep.E = std::move(E);
        rep.F = std::move(F);
        rep.K = std::move(K);
        for (auto& m : j.at("Kt")) rep.Kt.push_back(matrix_from_json(m, mode));
        if (rep.Kt.size() != rep.E.size()) throw ParseError("Kt arity mismatch");
        return rep;
    }
    return pullback_rep(E, F, K, s);
}

}  // namespace qd
