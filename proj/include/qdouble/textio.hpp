// Text and JSON interfaces: the expression grammar
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*
//   factor := atom ('^' int)?
//   atom   := 'E' | 'F' | 'K' | 'Kt' | 'v' | 'q' | integer | '(' expr ')'
// ('/' and negative powers need an invertible right operand: a scalar or a
// group-like monomial), plus canonical printers and the JSON element forms.

#pragma once

#include <json.hpp>

#include "qdouble/cartan.hpp"
#include "qdouble/hopf.hpp"
#include "qdouble/pairing.hpp"
#include "qdouble/rep.hpp"

namespace qd {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// "symbolic" | "cyclotomic:<m>:<e>" | "rational:<p>" | "rational:<p>/<r>"
FieldMode parse_mode(const std::string& text);

PBWElement parse_pbw(const std::string& text, Algebra alg, const FieldMode& mode);
// upper side accepts E/K words, lower side F/K words (converted to the
// canonical F-then-K Borel form)
BorelElement parse_borel(const std::string& text, Side side, const FieldMode& mode);
// an expression that must evaluate to a pure scalar
Scalar parse_scalar(const std::string& text, const FieldMode& mode);

std::string scalar_text(const Scalar& s);
std::string monomial_text(const PBWMonomial& m, Algebra alg);
std::string pbw_text(const PBWElement& x);
std::string pbw_latex(const PBWElement& x);

Json scalar_json(const Scalar& s);
Json pbw_json(const PBWElement& x);
Json tensor_json(const TensorElement& t);
Json tensor3_json(const Tensor3Element& t);
Json double_json(const DoubleElement& x);
Json matrix_json(const ScalarMatrix& m);
Json module_json(const WeightModule& m);
Json relation_report_json(const RelationReport& r);
Json decomposition_json(const DecompositionResult& d);

// cartan inputs: {"a": [[...]], "d": [...]} and
// {"E": [mat,...], "F": [...], "K": [...], "Kt": [...] (optional)} with
// matrices as dense rows of scalar expression strings
CartanData cartan_from_json(const Json& j);
RankNRep rep_from_json(const Json& j, const std::vector<Scalar>& s, const FieldMode& mode);

}  // namespace qd
