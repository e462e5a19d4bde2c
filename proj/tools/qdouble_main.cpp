// qdouble: exact computations in the quantum double of the Borel subalgebra
// of U_q(sl_2) -- PBW normal forms, the skew Hopf pairing, quantum-double
// multiplication, weight modules, the Taft-double specialization, and the
// identity-verification suites.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "qdouble/aform.hpp"
#include "qdouble/taft.hpp"
#include "qdouble/textio.hpp"
#include "qdouble/verify.hpp"

#include <fstream>

using namespace qd;

namespace {

int suite_criterion(const std::string& suite) {
    if (suite == "pbw-oracle") return 1;
    if (suite == "hopf-axioms") return 2;
    if (suite == "pairing-axioms") return 3;
    if (suite == "double-presentation") return 4;
    if (suite == "aform") return 5;
    if (suite == "representations") return 6;
    if (suite == "clebsch-gordan") return 7;
    if (suite == "taft") return 8;
    if (suite == "cartan") return 9;
    return 0;
}

Json report_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (auto& i : r.items) checks.push_back(Json{{"name", i.name}, {"pass", i.pass}});
    Json j{{"suite", r.suite}, {"pass", r.pass}, {"checks", checks}};
    if (!r.notes.empty()) {
        Json notes = Json::array();
        for (auto& n : r.notes) notes.push_back(n);
        j["notes"] = notes;
    }
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

WeightModule module_from_spec(const std::string& spec, const FieldMode& mode) {
    std::string kind = "simple";
    Scalar s = Scalar::one(mode), lam = Scalar::one(mode);
    int sign = +1, n = 0, trunc = 4, d = 0;
    std::string cur;
    auto apply = [&](const std::string& kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("module spec wants key=value: " + kv);
        std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        if (k == "kind") kind = v;
        else if (k == "s") s = parse_scalar(v, mode);
        else if (k == "lam") lam = parse_scalar(v, mode);
        else if (k == "sign") sign = (v == "-" ? -1 : +1);
        else if (k == "n") n = std::stoi(v);
        else if (k == "trunc") trunc = std::stoi(v);
        else if (k == "d") d = std::stoi(v);
        else throw ParseError("unknown module spec key: " + k);
    };
    for (char c : spec) {
        if (c == ',') {
            apply(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) apply(cur);
    if (kind == "verma") return verma(mode, s, sign, lam, trunc);
    if (kind == "simple") return simple(mode, s, n, sign);
    if (kind == "onedim") return one_dim(mode, s, sign);
    if (kind == "z0") return z0_module(mode, s, sign, lam, d);
    throw ParseError("unknown module kind: " + kind);
}

std::vector<Scalar> parse_scalar_list(const std::string& text, const FieldMode& mode) {
    std::vector<Scalar> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(parse_scalar(cur, mode));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_scalar(cur, mode));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quantum-double computations and verification suites"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --mode/--format after the subcommand name

    std::string mode_text = "symbolic";
    std::string format = "text";
    app.add_option("--mode", mode_text, "symbolic | cyclotomic:m:e | rational:q")
        ->capture_default_str();
    app.add_option("--format", format, "text | json | latex")->capture_default_str();

    // simplify
    std::string expr;
    std::string algebra = "Dq";
    auto* simplify = app.add_subcommand("simplify", "rewrite an expression to PBW normal form");
    simplify->add_option("expr", expr, "expression in E, F, K, Kt, v, integers")->required();
    simplify->add_option("--algebra", algebra, "Dq | Uq")->capture_default_str();

    // pair
    std::string upper_text, lower_text;
    auto* pairc = app.add_subcommand("pair", "evaluate the skew Hopf pairing");
    pairc->add_option("upper", upper_text, "upper Borel expression (E, K)")->required();
    pairc->add_option("lower", lower_text, "lower Borel expression (F, K)")->required();

    // double-mul
    std::vector<std::string> legs;
    auto* dmul = app.add_subcommand("double-mul",
                                    "multiply (A x B)(C x D) in the quantum double");
    dmul->add_option("legs", legs, "four Borel expressions: A B C D")->expected(4);

    // verify
    std::string suite = "all";
    int part = 1;
    int max_param = -1;
    bool timing = false;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite,
                    "all | pbw-oracle | hopf-axioms | pairing-axioms | double-presentation | "
                    "aform | lemma21 | lemma22 | delta-bracket | divided-hopf | "
                    "divided-products | reps | clebsch-gordan | taft | cartan");
    ver->add_option("--part", part, "lemma22 part (1-4)");
    ver->add_option("--max", max_param, "override the default grid bound");
    ver->add_flag("--timing", timing, "include elapsed milliseconds in the report");

    // module
    std::string kind = "simple", s_text = "1", lam_text = "1", sign_text = "+";
    int n_param = 0, trunc = 4, d_param = 0;
    auto* modc = app.add_subcommand("module", "construct a weight module and check it");
    modc->add_option("--kind", kind, "verma | simple | onedim | z0")->required();
    modc->add_option("--s", s_text, "chosen square root of z");
    modc->add_option("--sign", sign_text, "+ | -");
    modc->add_option("--lam", lam_text, "highest weight parameter");
    modc->add_option("--n", n_param, "simple label n");
    modc->add_option("--trunc", trunc, "Verma truncation length");
    modc->add_option("--d", d_param, "order of q^2 for z0 modules");

    // tensor-decompose
    std::string left_spec, right_spec;
    auto* tdec = app.add_subcommand("tensor-decompose",
                                    "decompose a tensor product of two modules");
    tdec->add_option("--left", left_spec, "module spec, e.g. kind=simple,s=3,n=2,sign=+")
        ->required();
    tdec->add_option("--right", right_spec, "module spec")->required();

    // taft
    int taft_d = 2;
    std::string taft_action = "dim";
    unsigned taft_m = 0, taft_e = 1;
    auto* taftc = app.add_subcommand("taft", "Taft-double computations");
    taftc->add_option("--d", taft_d, "order of q^2")->required();
    taftc->add_option("action", taft_action, "dim | gram | inventory");
    taftc->add_option("--m", taft_m, "cyclotomic order (default d for odd d, else 2d)");
    taftc->add_option("--e", taft_e, "q = zeta_m^e");

    // cartan
    std::string matrix_file, cartan_file, s_list;
    auto* cartanc = app.add_subcommand("cartan", "rank-n relation checking");
    auto* cartan_check = cartanc->add_subcommand("check", "check a matrix representation");
    cartan_check->add_option("--matrix-file", matrix_file, "JSON with E, F, K [, Kt] matrices")
        ->required();
    cartan_check->add_option("--cartan", cartan_file, "JSON with the Cartan data {a, d}")
        ->required();
    cartan_check->add_option("--s", s_list, "comma-separated chosen roots s_i")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const FieldMode mode = parse_mode(mode_text);

        if (*simplify) {
            Algebra alg = algebra == "Uq" ? Algebra::Uq : Algebra::Dq;
            PBWElement x = parse_pbw(expr, alg, mode);
            if (format == "json")
                emit(Json{{"command", "simplify"}, {"input", expr}, {"result", pbw_json(x)}});
            else if (format == "latex")
                std::cout << pbw_latex(x) << "\n";
            else
                std::cout << pbw_text(x) << "\n";
            return 0;
        }

        if (*pairc) {
            SkewPairing phi(mode);
            BorelElement x = parse_borel(upper_text, Side::Upper, mode);
            BorelElement y = parse_borel(lower_text, Side::Lower, mode);
            Scalar v = phi.pair(x, y);
            if (format == "json")
                emit(Json{{"command", "pair"},
                          {"upper", upper_text},
                          {"lower", lower_text},
                          {"value", scalar_json(v)}});
            else
                std::cout << scalar_text(v) << "\n";
            return 0;
        }

        if (*dmul) {
            SkewPairing phi(mode);
            DoubleElement a = DoubleElement::outer(parse_borel(legs[0], Side::Upper, mode),
                                                   parse_borel(legs[1], Side::Lower, mode));
            DoubleElement b = DoubleElement::outer(parse_borel(legs[2], Side::Upper, mode),
                                                   parse_borel(legs[3], Side::Lower, mode));
            DoubleElement prod = double_multiply(phi, a, b);
            if (format == "json")
                emit(Json{{"command", "double-mul"},
                          {"result", double_json(prod)},
                          {"asPbw", pbw_json(psi_inverse(prod))}});
            else
                std::cout << pbw_text(psi_inverse(prod)) << "\n";
            return 0;
        }

        if (*ver) {
            const auto t0 = std::chrono::steady_clock::now();
            std::vector<SuiteReport> reports;
            Json params = Json::object();
            if (suite == "all") {
                reports = verify_all();
            } else if (suite == "pbw-oracle") {
                int n = max_param > 0 ? max_param : 200;
                params["words"] = n;
                reports.push_back(verify_pbw_oracle(n));
            } else if (suite == "hopf-axioms") {
                int n = max_param > 0 ? max_param : 100;
                params["samples"] = n;
                reports.push_back(verify_hopf_axioms(n));
            } else if (suite == "pairing-axioms") {
                int n = max_param > 0 ? max_param : 200;
                params["pairs"] = n;
                reports.push_back(verify_pairing_axioms(n));
            } else if (suite == "double-presentation") {
                reports.push_back(verify_double_presentation());
            } else if (suite == "aform") {
                reports.push_back(verify_aform_suite());
            } else if (suite == "lemma21") {
                int m = max_param > 0 ? max_param : 5;
                params["max"] = m;
                reports.push_back(verify_lemma21_suite(m, m));
            } else if (suite == "lemma22") {
                params["part"] = part;
                reports.push_back(verify_lemma22_suite(part));
            } else if (suite == "delta-bracket") {
                int m = max_param > 0 ? max_param : 5;
                params["max"] = m;
                reports.push_back(verify_delta_bracket_suite(m));
            } else if (suite == "divided-hopf") {
                int m = max_param > 0 ? max_param : 4;
                params["max"] = m;
                reports.push_back(verify_divided_hopf_suite(m));
            } else if (suite == "divided-products") {
                int m = max_param > 0 ? max_param : 6;
                params["max"] = m;
                reports.push_back(verify_divided_products_suite(m));
            } else if (suite == "reps") {
                reports.push_back(verify_reps());
            } else if (suite == "clebsch-gordan") {
                int m = max_param > 0 ? max_param : 4;
                params["max"] = m;
                reports.push_back(verify_clebsch_gordan(m, m));
            } else if (suite == "taft") {
                reports.push_back(verify_taft_suite());
            } else if (suite == "cartan") {
                reports.push_back(verify_cartan_suite());
            } else {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            bool pass = true;
            Json arr = Json::array();
            for (auto& r : reports) {
                pass = pass && r.pass;
                Json j = report_json(r);
                if (suite == "all") j["criterion"] = suite_criterion(r.suite);
                arr.push_back(j);
            }
            Json out{{"command", "verify"}, {"suite", suite}, {"pass", pass},
                     {"reports", arr}};
            if (!params.empty()) out["params"] = params;
            if (timing) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                out["elapsed_ms"] = ms;
            }
            emit(out);
            return pass ? 0 : 1;
        }

        if (*modc) {
            int sign = sign_text == "-" ? -1 : +1;
            Scalar s = parse_scalar(s_text, mode), lam = parse_scalar(lam_text, mode);
            WeightModule m;
            if (kind == "verma") m = verma(mode, s, sign, lam, trunc);
            else if (kind == "simple") m = simple(mode, s, n_param, sign);
            else if (kind == "onedim") m = one_dim(mode, s, sign);
            else if (kind == "z0") m = z0_module(mode, s, sign, lam, d_param);
            else {
                std::cerr << "unknown module kind: " << kind << "\n";
                return 2;
            }
            RelationReport r = check_relations(m);
            emit(Json{{"command", "module"},
                      {"module", module_json(m)},
                      {"relations", relation_report_json(r)}});
            return r.all_pass ? 0 : 1;
        }

        if (*tdec) {
            WeightModule a = module_from_spec(left_spec, mode);
            WeightModule b = module_from_spec(right_spec, mode);
            WeightModule t = tensor(a, b);
            DecompositionResult d = decompose(t);
            emit(Json{{"command", "tensor-decompose"},
                      {"left", left_spec},
                      {"right", right_spec},
                      {"dim", t.dim},
                      {"decomposition", decomposition_json(d)}});
            return d.residual ? 1 : 0;
        }

        if (*taftc) {
            if (taft_m == 0) taft_m = (taft_d % 2 == 1) ? unsigned(taft_d) : unsigned(2 * taft_d);
            FieldMode tmode = mode.is_symbolic() ? FieldMode::cyclotomic(taft_m, taft_e) : mode;
            TaftDouble td(taft_d, tmode);
            if (taft_action == "dim") {
                emit(Json{{"command", "taft"},
                          {"d", taft_d},
                          {"mode", tmode.str()},
                          {"qOrder", td.q_order()},
                          {"dimension", td.dimension()},
                          {"relations", td.relations_report().all_pass},
                          {"hopfIdealSane", td.hopf_ideal_sane()}});
                return td.relations_report().all_pass ? 0 : 1;
            }
            if (taft_action == "gram") {
                ScalarMatrix g = gram_matrix(taft_d, tmode);
                Json rows = Json::array();
                for (int r = 0; r < g.rows(); ++r) {
                    Json row = Json::array();
                    for (int c = 0; c < g.cols(); ++c) row.push_back(scalar_text(g.at(r, c)));
                    rows.push_back(row);
                }
                bool nd = nondegenerate(g);
                emit(Json{{"command", "taft"},
                          {"d", taft_d},
                          {"mode", tmode.str()},
                          {"gram", rows},
                          {"determinantNonzero", nd},
                          {"blockStructure", gram_block_structure_ok(taft_d, tmode)}});
                return nd ? 0 : 1;
            }
            if (taft_action == "inventory") {
                std::vector<Scalar> lambdas = {Scalar::from_int(tmode, 2)};
                std::vector<Scalar> ss = {taft_d == 2 ? Scalar::qpow(tmode, 1)
                                                      : Scalar::from_int(tmode, 2)};
                Json inv = Json::array();
                bool pass = true;
                for (auto& e : simple_inventory(taft_d, tmode, lambdas, ss)) {
                    pass = pass && e.relations_pass && e.nilpotency_pass;
                    inv.push_back(Json{{"name", e.name},
                                       {"dim", e.module.dim},
                                       {"relations", e.relations_pass},
                                       {"nilpotency", e.nilpotency_pass},
                                       {"killsGroupIdeal", e.kills_group_ideal},
                                       {"simplicityChecked", e.simplicity_checked},
                                       {"simple", e.simple}});
                }
                emit(Json{{"command", "taft"}, {"d", taft_d}, {"mode", tmode.str()},
                          {"inventory", inv}, {"pass", pass}});
                return pass ? 0 : 1;
            }
            std::cerr << "unknown taft action: " << taft_action << "\n";
            return 2;
        }

        if (*cartanc) {
            std::ifstream cf(cartan_file), mf(matrix_file);
            if (!cf || !mf) {
                std::cerr << "cannot open input files\n";
                return 2;
            }
            Json cj = Json::parse(cf), mj = Json::parse(mf);
            CartanData cd = cartan_from_json(cj);
            std::vector<Scalar> s = parse_scalar_list(s_list, mode);
            RankNRep rep = rep_from_json(mj, s, mode);
            MatrixRepReport r = check_matrix_rep(cd, rep, mode);
            Json items = Json::array();
            for (auto& i : r.items) items.push_back(Json{{"relation", i.name}, {"pass", i.pass}});
            Json kd = Json::array(), ktd = Json::array();
            for (bool b : r.k_diagonal) kd.push_back(b);
            for (bool b : r.kt_diagonal) ktd.push_back(b);
            emit(Json{{"command", "cartan check"},
                      {"pass", r.all_pass},
                      {"kDiagonal", kd},
                      {"ktDiagonal", ktd},
                      {"relations", items}});
            return r.all_pass ? 0 : 1;
        }
    } catch (const ParseError& e) {
        emit(Json{{"error", Json{{"type", "parse"}, {"message", e.what()}}}});
        return 2;
    } catch (const DomainError& e) {
        emit(Json{{"error", Json{{"type", "domain"}, {"message", e.what()}}}});
        return 2;
    } catch (const Error& e) {
        emit(Json{{"error", Json{{"type", "error"}, {"message", e.what()}}}});
        return 1;
    }
    return 2;
}
