#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdc/decomposition.hpp"
#include "qdc/form.hpp"
#include "qdc/operators.hpp"
#include "qdc/qholo.hpp"
#include "qdc/qk_forms.hpp"
#include "qdc/real_dolbeault.hpp"
#include "qdc/symbol.hpp"

namespace qdc {

using Json = nlohmann::ordered_json;

// Polynomials are arrays of {"exps": [...4n exponents], "c": "p/q"}; forms are
// {"n", "k", "terms": [{"idx": [...], "coeff": poly}]}. Parsers throw
// InputError with a path such as "terms[1].idx[0]" on malformed input.

Json poly_to_json(const Poly& p, int nvars);
Poly poly_from_json(const Json& j, int nvars, const std::string& where = "");

Json form_to_json(const Form& f);
/// Index lists may be unsorted; the permutation sign is folded in and
/// repeated indices contribute nothing.
Form form_from_json(const Json& j);

Json qform_to_json(const QForm& a);

Json qfunction_to_json(const QFunction& f);
QFunction qfunction_from_json(const Json& j);

/// Parses a whole document; syntax errors become InputError with the byte
/// offset.
Json parse_json_text(const std::string& text);
/// Reads from the path, or from `in` when the path is "-".
Json read_json_input(const std::string& path, std::istream& in);

Json to_json(const std::vector<DecompositionRow>& rows);
Json to_json(const ComplexCheckReport& report);
Json to_json(const CohomologyDims& dims);
Json to_json(const EllipticityReport& report);
Json to_json(const std::vector<BonanPart>& parts, int n, int k);
Json to_json(const RealDolbeaultReport& report);
Json to_json(const RealDolbeaultIdentityReport& report);
Json to_json(const HqSplit& split);
Json to_json(const QholoEquivalence& e);
Json to_json(const QholoEllipticityReport& report);
Json to_json(const CounterexampleCheck& check);

}  // namespace qdc
