#include "qdc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qdc/decomposition.hpp"
#include "qdc/errors.hpp"
#include "qdc/json_io.hpp"
#include "qdc/operators.hpp"
#include "qdc/qholo.hpp"
#include "qdc/qk_forms.hpp"
#include "qdc/real_dolbeault.hpp"
#include "qdc/sp1.hpp"
#include "qdc/symbol.hpp"

namespace qdc {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

long long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long out = 1;
  for (int i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

void require_n(int n) {
  if (n < 1 || n > 16) throw DomainError("n must lie in [1, 16]");
}

Form read_form(const RunConfig& c, std::istream& in) {
  if (!c.input) throw InputError("--form is required");
  Form f = form_from_json(read_json_input(*c.input, in));
  if (c.k && *c.k != f.k()) throw InputError("--k " + std::to_string(*c.k) + " does not match the form degree");
  return f;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int run_dims(const RunConfig& c, std::ostream& out) {
  require_n(c.n);
  const std::vector<DecompositionRow> rows = decomposition_table(c.n);
  std::vector<std::string> problems;
  for (int k = 0; k <= 4 * c.n; ++k) {
    long long sum = 0;
    for (const DecompositionRow& row : rows) {
      if (row.k == k) sum += row.dim;
    }
    if (sum != binomial(4 * c.n, k)) problems.push_back("row sum for k=" + std::to_string(k));
  }
  if (c.verify) {
    for (const DecompositionRow& row : rows) {
      if (eigenspace_dim(c.n, row.k, row.r) != row.dim) {
        problems.push_back("eigenspace dimension at (" + std::to_string(row.k) + "," + std::to_string(row.r) + ")");
      }
    }
  }
  switch (c.format) {
    case OutputFormat::csv:
      out << decomposition_table_csv(rows);
      break;
    case OutputFormat::json:
      write_json(out, {{"n", c.n}, {"verified", c.verify}, {"problems", problems}, {"rows", to_json(rows)}});
      break;
    case OutputFormat::text:
      out << "Lambda^k(R^" << 4 * c.n << ") = sum_r eps_{k,r} V_r\n";
      out << std::setw(4) << "k" << std::setw(4) << "r" << std::setw(10) << "epsilon" << std::setw(10) << "dim"
          << '\n';
      for (const DecompositionRow& row : rows) {
        out << std::setw(4) << row.k << std::setw(4) << row.r << std::setw(10) << row.epsilon << std::setw(10)
            << row.dim << '\n';
      }
      for (const std::string& p : problems) out << "mismatch: " << p << '\n';
      break;
  }
  return problems.empty() ? kExitPass : kExitMathFailure;
}

int run_project(const RunConfig& c, std::istream& in, std::ostream& out) {
  if (!c.r) throw InputError("--r is required");
  const Form f = read_form(c, in);
  if (*c.r < 0 || *c.r > max_weight(f.n(), f.k()) || (f.k() - *c.r) % 2 != 0) {
    throw DomainError("weight " + std::to_string(*c.r) + " does not occur in degree " + std::to_string(f.k()));
  }
  const Form p = project(f, *c.r);
  if (c.format == OutputFormat::text) {
    out << (p.is_zero() ? "0" : p.to_string()) << '\n';
  } else {
    write_json(out, form_to_json(p));
  }
  return kExitPass;
}

int run_act(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Form f = read_form(c, in);
  Form image;
  if (c.generator == "I") {
    image = act(Generator::I, f);
  } else if (c.generator == "J") {
    image = act(Generator::J, f);
  } else if (c.generator == "K") {
    image = act(Generator::K, f);
  } else {
    image = casimir(f);
  }
  if (c.format == OutputFormat::text) {
    out << (image.is_zero() ? "0" : image.to_string()) << '\n';
  } else {
    write_json(out, form_to_json(image));
  }
  return kExitPass;
}

int run_complex_check(const RunConfig& c, std::ostream& out) {
  require_n(c.n);
  if (c.max_degree < 0 || c.trials < 1) throw DomainError("need --max-degree >= 0 and --trials >= 1");
  const ComplexCheckReport report = verify_double_complex(c.n, c.max_degree, c.trials, c.seed);
  if (c.format == OutputFormat::json) {
    write_json(out, to_json(report));
  } else if (c.format == OutputFormat::csv) {
    out << "k,r,trials,violations\n";
    for (const NodeCheck& node : report.nodes) {
      out << node.node.k << ',' << node.node.r << ',' << node.trials << ',' << node.violations << '\n';
    }
  } else {
    out << "double complex on H^" << c.n << ", degree <= " << c.max_degree << ", " << c.trials
        << " trials per node, seed " << c.seed << '\n';
    for (const NodeCheck& node : report.nodes) {
      out << "  E_{" << node.node.k << "," << node.node.r << "}: " << node.trials << " sections, "
          << node.violations << " violations\n";
    }
    for (const std::string& v : report.violations) out << "violation: " << v << '\n';
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kExitPass : kExitMathFailure;
}

int run_cohomology(const RunConfig& c, std::ostream& out) {
  require_n(c.n);
  if (c.max_degree < 0) throw DomainError("--max-degree must be non-negative");
  if (c.k.has_value() != c.r.has_value()) throw InputError("give both --k and --r, or neither");
  std::vector<GridNode> nodes;
  if (c.k) {
    require_valid_node(*c.k, *c.r);
    if (*c.k > 4 * c.n || *c.r > max_weight(c.n, *c.k)) throw DomainError("node outside the grid");
    nodes.push_back({*c.k, *c.r});
  } else {
    nodes = grid_nodes(c.n);
  }
  Json rows = Json::array();
  if (c.format == OutputFormat::csv) out << "k,r,kernel,image,cohomology\n";
  if (c.format == OutputFormat::text) {
    out << "H^{k,r} of D' on H^" << c.n << ", coefficients of degree <= " << c.max_degree << '\n';
  }
  for (const GridNode& node : nodes) {
    const CohomologyDims d = cohomology_dims(c.n, node.k, node.r, c.max_degree);
    switch (c.format) {
      case OutputFormat::csv:
        out << node.k << ',' << node.r << ',' << d.kernel << ',' << d.image << ',' << d.cohomology << '\n';
        break;
      case OutputFormat::json: {
        Json row = {{"k", node.k}, {"r", node.r}};
        row.update(to_json(d));
        rows.push_back(row);
        break;
      }
      case OutputFormat::text:
        out << "  (" << node.k << "," << node.r << "): ker " << d.kernel << ", im " << d.image << ", H "
            << d.cohomology << '\n';
        break;
    }
  }
  if (c.format == OutputFormat::json) {
    write_json(out, {{"n", c.n}, {"max_degree", c.max_degree}, {"nodes", rows}});
  }
  return kExitPass;
}

int run_ellipticity(const RunConfig& c, std::ostream& out) {
  require_n(c.n);
  std::optional<Covector> xi;
  if (c.xi) xi = parse_covector(*c.xi, c.n);
  const EllipticityReport report = ellipticity_report(c.n, xi);
  if (c.format == OutputFormat::json) {
    write_json(out, to_json(report));
  } else if (c.format == OutputFormat::csv) {
    out << "k0,k,r,exact,predicted,match\n";
    for (const NodeVerdict& v : report.nodes) {
      out << v.k0 << ',' << v.k << ',' << v.r << ',' << v.exact << ',' << v.predicted << ',' << v.match() << '\n';
    }
  } else {
    out << "symbol sequences of D' on H^" << c.n << '\n';
    out << std::setw(4) << "k0" << std::setw(4) << "k" << std::setw(4) << "r" << std::setw(8) << "dim"
        << std::setw(8) << "in" << std::setw(8) << "out" << std::setw(8) << "exact" << std::setw(11) << "predicted"
        << '\n';
    for (const NodeVerdict& v : report.nodes) {
      out << std::setw(4) << v.k0 << std::setw(4) << v.k << std::setw(4) << v.r << std::setw(8) << v.dim
          << std::setw(8) << v.rank_in << std::setw(8) << v.rank_out << std::setw(8) << yes_no(v.exact)
          << std::setw(11) << yes_no(v.predicted) << (v.match() ? "" : "  MISMATCH") << '\n';
    }
    out << (report.all_match() ? "PASS" : "FAIL") << '\n';
  }
  return report.all_match() ? kExitPass : kExitMathFailure;
}

int run_bonan(const RunConfig& c, std::istream& in, std::ostream& out) {
  const Form f = read_form(c, in);
  if (c.n != f.n()) throw InputError("--n " + std::to_string(c.n) + " does not match the form");
  const std::vector<BonanPart> parts = kraines_bonan_decompose(f);
  const bool round_trip = kraines_bonan_recompose(f.n(), f.k(), parts) == f;
  if (c.format == OutputFormat::text) {
    for (const BonanPart& p : parts) {
      out << "Omega^" << p.j << " ^ (" << (p.mu.is_zero() ? "0" : p.mu.to_string()) << ")\n";
    }
    out << "recomposes: " << yes_no(round_trip) << '\n';
  } else {
    Json j = to_json(parts, f.n(), f.k());
    j["recomposes"] = round_trip;
    write_json(out, j);
  }
  return round_trip ? kExitPass : kExitMathFailure;
}

int run_qholo(const RunConfig& c, std::istream& in, std::ostream& out) {
  if (c.input) {
    const QFunction f = qfunction_from_json(read_json_input(*c.input, in));
    const Form residual = cauchy_riemann(f);
    const bool holomorphic = residual.is_zero();
    if (c.format == OutputFormat::text) out << (holomorphic ? "q-holomorphic" : "not q-holomorphic") << '\n';
    write_json(out, {{"q_holomorphic", holomorphic}, {"residual", form_to_json(residual)}});
    return holomorphic ? kExitPass : kExitMathFailure;
  }
  require_n(c.n);
  Json splits = Json::array();
  bool ok = true;
  for (int k = 0; k <= 4 * c.n; ++k) {
    for (int r : weights_in_degree(c.n, k)) {
      if (epsilon(c.n, k, r) == 0) continue;
      const HqSplit s = hq_split(c.n, k, r);
      ok = ok && s.matches();
      splits.push_back(to_json(s));
    }
  }
  const QholoEquivalence e = qholo_equivalence(1, c.max_degree);
  ok = ok && e.same_kernel;
  const QholoEllipticityReport ell = qholo_symbol_ellipticity(1);
  if (c.format == OutputFormat::text) {
    out << "H (x) E_{k,r} on H^" << c.n << " (upper, lower; predicted)\n";
    for (const Json& s : splits) {
      out << "  (" << s["k"] << "," << s["r"] << "): " << s["upper"] << ", " << s["lower"] << "; "
          << s["predicted_upper"] << ", " << s["predicted_lower"] << '\n';
    }
    out << "Cauchy-Riemann kernel " << e.cr_kernel << ", V_2 kernel " << e.v2_kernel << " on " << e.functions
        << " functions, equal: " << yes_no(e.same_kernel) << '\n';
    out << "quaternion-valued symbol sequences on H^1:\n";
    for (const QNodeVerdict& v : ell.nodes) {
      out << "  F_{" << v.k << "," << v.s << "}: dim " << v.dim << ", in " << v.rank_in << ", out " << v.rank_out
          << ", exact " << yes_no(v.exact) << '\n';
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
  } else {
    write_json(out, {{"n", c.n}, {"hq_split", splits}, {"equivalence", to_json(e)}, {"ellipticity", to_json(ell)},
                     {"passed", ok}});
  }
  return ok ? kExitPass : kExitMathFailure;
}

int run_real_dolbeault(const RunConfig& c, std::ostream& out) {
  require_n(c.n);
  const RealDolbeaultReport report = real_dolbeault_report(c.n);
  std::optional<RealDolbeaultIdentityReport> identities;
  if (!c.report) identities = verify_real_dolbeault_identities(c.n, c.max_degree, c.trials, c.seed);
  const bool ok = report.passed() && (!identities || identities->passed());
  if (c.format == OutputFormat::text) {
    for (const CounterexampleCheck& check : report.checks) {
      out << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.detail << ")\n";
    }
    out << std::setw(4) << "q" << std::setw(4) << "p" << std::setw(8) << "dim" << std::setw(8) << "exact"
        << std::setw(11) << "predicted" << '\n';
    for (const U1Verdict& v : report.nodes) {
      out << std::setw(4) << v.q << std::setw(4) << v.p << std::setw(8) << v.dim << std::setw(8) << yes_no(v.exact)
          << std::setw(11) << yes_no(v.predicted) << (v.match() ? "" : "  MISMATCH") << '\n';
    }
    if (identities) {
      out << "identities on " << identities->sections << " sections: " << identities->violations.size()
          << " violations\n";
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
  } else {
    Json j = to_json(report);
    if (identities) j["identities"] = to_json(*identities);
    j["passed"] = ok;
    write_json(out, j);
  }
  return ok ? kExitPass : kExitMathFailure;
}

void add_format(CLI::App* sub, RunConfig& c) {
  auto* json = sub->add_flag_callback("--json", [&c] { c.format = OutputFormat::json; }, "JSON output");
  auto* csv = sub->add_flag_callback("--csv", [&c] { c.format = OutputFormat::csv; }, "CSV output");
  json->excludes(csv);
}

CLI::Option* add_n(CLI::App* sub, RunConfig& c) {
  return sub->add_option("--n", c.n, "quaternionic dimension of H^n")->capture_default_str();
}

}  // namespace

ParsedArgs parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Quaternionic double complex calculator", "qdc"};
  app.require_subcommand(1);

  auto* dims = app.add_subcommand("dims", "multiplicities eps_{k,r} and dimensions of E_{k,r}");
  add_n(dims, c);
  add_format(dims, c);
  dims->add_flag("--verify", c.verify, "compare against Casimir eigenspace dimensions");

  auto* proj = app.add_subcommand("project", "project a form onto E_{k,r}");
  proj->add_option("--form", c.input, "form JSON file, - for stdin")->required();
  proj->add_option("--r", c.r, "weight")->required();
  proj->add_option("--k", c.k, "expected degree");
  add_format(proj, c);

  auto* actc = app.add_subcommand("act", "apply I, J, K or the Casimir C to a form");
  actc->add_option("--form", c.input, "form JSON file, - for stdin")->required();
  actc->add_option("--generator", c.generator, "I, J, K or C")
      ->check(CLI::IsMember({"I", "J", "K", "C"}))
      ->capture_default_str();
  add_format(actc, c);

  auto* cc = app.add_subcommand("complex-check", "check d = D' + Dbar and the double complex identities");
  add_n(cc, c);
  cc->add_option("--max-degree", c.max_degree, "coefficient degree bound")->capture_default_str();
  cc->add_option("--trials", c.trials, "random sections per node")->capture_default_str();
  cc->add_option("--seed", c.seed, "random seed")->capture_default_str();
  add_format(cc, c);

  auto* coh = app.add_subcommand("cohomology", "dimensions of ker D' / im D' on polynomial sections");
  add_n(coh, c);
  coh->add_option("--k", c.k, "degree");
  coh->add_option("--r", c.r, "weight");
  coh->add_option("--max-degree", c.max_degree, "coefficient degree bound")->capture_default_str();
  add_format(coh, c);

  auto* ell = app.add_subcommand("ellipticity", "exactness of the symbol sequences of D'");
  add_n(ell, c);
  ell->add_option("--xi", c.xi, "covector, comma separated rationals (default e^0)");
  add_format(ell, c);

  auto* bonan = app.add_subcommand("bonan", "Kraines-Bonan decomposition of a constant form");
  add_n(bonan, c);
  bonan->add_option("--k", c.k, "expected degree");
  bonan->add_option("--form", c.input, "form JSON file, - for stdin")->required();
  add_format(bonan, c);

  auto* qh = app.add_subcommand("qholo", "q-holomorphy check or the H (x) E_{k,r} report");
  add_n(qh, c);
  qh->add_option("--check", c.input, "QFunction JSON file, - for stdin");
  qh->add_option("--max-degree", c.max_degree, "degree bound of the equivalence check")->capture_default_str();
  add_format(qh, c);

  auto* rd = app.add_subcommand("real-dolbeault", "real Dolbeault complexes for the complex structure I");
  add_n(rd, c);
  rd->add_flag("--report", c.report, "counterexamples and verdict table only");
  rd->add_option("--max-degree", c.max_degree, "coefficient degree bound")->capture_default_str();
  rd->add_option("--trials", c.trials, "random sections per node")->capture_default_str();
  rd->add_option("--seed", c.seed, "random seed")->capture_default_str();
  add_format(rd, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitPass : kExitBadInput};
  }
  for (CLI::App* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  return {c, kExitPass};
}

int dispatch(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "dims") return run_dims(c, out);
    if (c.subcommand == "project") return run_project(c, in, out);
    if (c.subcommand == "act") return run_act(c, in, out);
    if (c.subcommand == "complex-check") return run_complex_check(c, out);
    if (c.subcommand == "cohomology") return run_cohomology(c, out);
    if (c.subcommand == "ellipticity") return run_ellipticity(c, out);
    if (c.subcommand == "bonan") return run_bonan(c, in, out);
    if (c.subcommand == "qholo") return run_qholo(c, in, out);
    if (c.subcommand == "real-dolbeault") return run_real_dolbeault(c, out);
    err << "error: unknown subcommand " << c.subcommand << '\n';
    return kExitBadInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InvariantViolation& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitMathFailure;
  } catch (const ContainmentError& e) {
    err << "verification failed: " << e.what() << " (" << e.offending() << ")\n";
    return kExitMathFailure;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const ParsedArgs parsed = parse_args(args, out, err);
  if (!parsed.config) return parsed.exit_code;
  return dispatch(*parsed.config, in, out, err);
}

}  // namespace qdc
