#include "qdc/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "qdc/errors.hpp"
#include "qdc/multi_index.hpp"

namespace qdc {

namespace {

std::string at(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? std::string("document") : where) + ": " + what);
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing \"" + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const std::string& key, const std::string& where) {
  const Json& a = field(j, key, where);
  if (!a.is_array()) fail(at(where, key), "expected an array");
  return a;
}

long long integer(const Json& j, const std::string& where, long long lo, long long hi) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const long long v = j.get<long long>();
  if (v < lo || v > hi) {
    fail(where, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

Rational rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string such as \"-3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

int dimension_n(const Json& j, const std::string& where) {
  return static_cast<int>(integer(field(j, "n", where), at(where, "n"), 1, MultiIndex::kMaxIndex / 4));
}

}  // namespace

Json poly_to_json(const Poly& p, int nvars) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"exps", m.padded(nvars)}, {"c", format_rational(c)}});
  }
  return out;
}

Poly poly_from_json(const Json& j, int nvars, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of monomials");
  Poly p;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string here = at(where, t);
    const Json& exps = array_field(j[t], "exps", here);
    if (static_cast<int>(exps.size()) != nvars) {
      fail(at(here, "exps"), "expected " + std::to_string(nvars) + " exponents, got " + std::to_string(exps.size()));
    }
    std::vector<unsigned> e;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      e.push_back(static_cast<unsigned>(integer(exps[i], at(at(here, "exps"), i), 0, 1 << 16)));
    }
    p.add_term(Monomial(std::move(e)), rational(field(j[t], "c", here), at(here, "c")));
  }
  return p;
}

Json form_to_json(const Form& f) {
  Json terms = Json::array();
  for (const auto& [idx, c] : f.terms()) {
    terms.push_back({{"idx", idx.indices()}, {"coeff", poly_to_json(c, f.dim())}});
  }
  return {{"n", f.n()}, {"k", f.k()}, {"terms", terms}};
}

Form form_from_json(const Json& j) {
  const int n = dimension_n(j, "");
  const int k = static_cast<int>(integer(field(j, "k", ""), "k", 0, 4 * n));
  const Json& terms = array_field(j, "terms", "");
  Form f(n, k);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string here = at("terms", t);
    const Json& idx = array_field(terms[t], "idx", here);
    if (static_cast<int>(idx.size()) != k) {
      fail(at(here, "idx"), "expected " + std::to_string(k) + " indices, got " + std::to_string(idx.size()));
    }
    std::vector<int> indices;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      indices.push_back(static_cast<int>(integer(idx[i], at(at(here, "idx"), i), 0, 4 * n - 1)));
    }
    f.add_unsorted(indices, poly_from_json(field(terms[t], "coeff", here), 4 * n, at(here, "coeff")));
  }
  return f;
}

Json qform_to_json(const QForm& a) {
  Json parts = Json::array();
  for (int p = 0; p < 4; ++p) parts.push_back(form_to_json(a[p]));
  return {{"n", a.n()}, {"k", a.k()}, {"components", parts}};
}

Json qfunction_to_json(const QFunction& f) {
  Json parts = Json::array();
  for (const Poly& p : f.components) parts.push_back(poly_to_json(p, 4 * f.n));
  return {{"n", f.n}, {"components", parts}};
}

QFunction qfunction_from_json(const Json& j) {
  QFunction f;
  f.n = dimension_n(j, "");
  const Json& parts = array_field(j, "components", "");
  if (parts.size() != 4) fail("components", "expected 4 components, got " + std::to_string(parts.size()));
  for (std::size_t p = 0; p < 4; ++p) f.components[p] = poly_from_json(parts[p], 4 * f.n, at("components", p));
  return f;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    buffer << file.rdbuf();
  }
  return parse_json_text(buffer.str());
}

Json to_json(const std::vector<DecompositionRow>& rows) {
  Json out = Json::array();
  for (const DecompositionRow& r : rows) out.push_back({{"k", r.k}, {"r", r.r}, {"epsilon", r.epsilon}, {"dim", r.dim}});
  return out;
}

Json to_json(const ComplexCheckReport& report) {
  Json nodes = Json::array();
  for (const NodeCheck& c : report.nodes) {
    nodes.push_back({{"k", c.node.k}, {"r", c.node.r}, {"trials", c.trials}, {"violations", c.violations}});
  }
  return {{"n", report.n},         {"max_degree", report.max_degree},   {"trials", report.trials},
          {"seed", report.seed},   {"passed", report.passed()},         {"nodes", nodes},
          {"violations", report.violations}};
}

Json to_json(const CohomologyDims& dims) {
  return {{"kernel", dims.kernel}, {"image", dims.image}, {"cohomology", dims.cohomology}};
}

Json to_json(const EllipticityReport& report) {
  std::vector<std::string> xi;
  for (const Rational& c : report.xi) xi.push_back(format_rational(c));
  Json nodes = Json::array();
  for (const NodeVerdict& v : report.nodes) {
    nodes.push_back({{"k0", v.k0},
                     {"k", v.k},
                     {"r", v.r},
                     {"dim", v.dim},
                     {"rank_in", v.rank_in},
                     {"rank_out", v.rank_out},
                     {"exact", v.exact},
                     {"predicted", v.predicted},
                     {"match", v.match()}});
  }
  return {{"n", report.n}, {"xi", xi}, {"all_match", report.all_match()}, {"nodes", nodes}};
}

Json to_json(const std::vector<BonanPart>& parts, int n, int k) {
  Json out = Json::array();
  for (const BonanPart& p : parts) out.push_back({{"omega_power", p.j}, {"effective", form_to_json(p.mu)}});
  return {{"n", n}, {"k", k}, {"parts", out}};
}

Json to_json(const CounterexampleCheck& check) {
  return {{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}};
}

Json to_json(const RealDolbeaultReport& report) {
  Json checks = Json::array();
  for (const CounterexampleCheck& c : report.checks) checks.push_back(to_json(c));
  Json nodes = Json::array();
  for (const U1Verdict& v : report.nodes) {
    nodes.push_back({{"p", v.p},
                     {"q", v.q},
                     {"dim", v.dim},
                     {"rank_in", v.rank_in},
                     {"rank_out", v.rank_out},
                     {"exact", v.exact},
                     {"predicted", v.predicted},
                     {"match", v.match()}});
  }
  return {{"n", report.n}, {"passed", report.passed()}, {"checks", checks}, {"nodes", nodes}};
}

Json to_json(const RealDolbeaultIdentityReport& report) {
  return {{"n", report.n},         {"trials", report.trials},         {"seed", report.seed},
          {"sections", report.sections}, {"passed", report.passed()}, {"violations", report.violations}};
}

Json to_json(const HqSplit& s) {
  return {{"n", s.n},
          {"k", s.k},
          {"r", s.r},
          {"total", s.total},
          {"upper", s.upper},
          {"lower", s.lower},
          {"predicted_upper", s.predicted_upper},
          {"predicted_lower", s.predicted_lower},
          {"matches", s.matches()}};
}

Json to_json(const QholoEquivalence& e) {
  return {{"n", e.n},
          {"max_degree", e.max_degree},
          {"functions", e.functions},
          {"cr_kernel", e.cr_kernel},
          {"v2_kernel", e.v2_kernel},
          {"same_kernel", e.same_kernel}};
}

Json to_json(const QholoEllipticityReport& report) {
  Json nodes = Json::array();
  for (const QNodeVerdict& v : report.nodes) {
    nodes.push_back({{"k", v.k},
                     {"s", v.s},
                     {"dim", v.dim},
                     {"rank_in", v.rank_in},
                     {"rank_out", v.rank_out},
                     {"exact", v.exact}});
  }
  return {{"n", report.n}, {"all_exact", report.all_exact()}, {"nodes", nodes}};
}

}  // namespace qdc
