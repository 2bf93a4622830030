// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
// throughout (tolerance zero). Exit status is nonzero if any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../test_support.hpp"
#include "qdc/decomposition.hpp"
#include "qdc/exterior_basis.hpp"
#include "qdc/operators.hpp"
#include "qdc/qholo.hpp"
#include "qdc/qk_forms.hpp"
#include "qdc/real_dolbeault.hpp"
#include "qdc/sp1.hpp"
#include "qdc/symbol.hpp"

namespace qdc {
namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

long long binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

std::string node_text(int k, int r) { return "(" + std::to_string(k) + "," + std::to_string(r) + ")"; }

Outcome dimension_theorem() {
  Outcome o;
  int nodes = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= 4 * n; ++k) {
      long long sum = 0;
      for (int r : weights_in_degree(n, k)) {
        const long long formula = (r + 1) * epsilon(n, k, r);
        const long long computed = eigenspace_dim(n, k, r);
        o.require(formula == computed, "n=" + std::to_string(n) + " " + node_text(k, r) + ": formula " +
                                           std::to_string(formula) + ", eigenspace " + std::to_string(computed));
        if (n <= 2) {
          const long long kernel = casimir_kernel_basis(n, k, r).size();
          o.require(kernel == computed, "n=" + std::to_string(n) + " " + node_text(k, r) + ": Casimir kernel " +
                                            std::to_string(kernel));
        }
        sum += computed;
        ++nodes;
      }
      o.require(sum == binomial(4 * n, k), "n=" + std::to_string(n) + " k=" + std::to_string(k) + " row sum");
    }
  }
  o.note(std::to_string(nodes) + " nodes, n = 1..3");
  return o;
}

Outcome four_dimensional_example() {
  Outcome o;
  using testing::omega;
  const Form w1 = omega(1, 1), w2 = omega(2, 1), w3 = omega(3, 1);
  o.require(eigenspace_basis(1, 2, 2).same_span(SpaceBasis(1, 2, {w1, w2, w3})), "E_{2,2} = <omega_j^+>");
  o.require(eigenspace_basis(1, 2, 0).same_span(SpaceBasis(1, 2, {omega(1, -1), omega(2, -1), omega(3, -1)})),
            "E_{2,0} = <omega_j^->");

  // The printed table, entry for entry.
  struct Entry {
    Generator g;
    Form arg;
    Form value;
    std::string label;
  };
  const Form zero(1, 2);
  const std::vector<Entry> table = {
      {Generator::I, w1, zero, "I(w1+) = 0"},          {Generator::J, w1, w3 * Rational(-2), "J(w1+) = -2 w3+"},
      {Generator::K, w1, w2 * Rational(2), "K(w1+) = 2 w2+"}, {Generator::I, w2, w3 * Rational(2), "I(w2+) = 2 w3+"},
      {Generator::J, w2, zero, "J(w2+) = 0"},          {Generator::K, w2, w1 * Rational(-2), "K(w2+) = -2 w1+"},
      {Generator::I, w3, w3 * Rational(-2), "I(w3+) = -2 w3+"},
      {Generator::J, w3, w1 * Rational(2), "J(w3+) = 2 w1+"}, {Generator::K, w3, zero, "K(w3+) = 0"},
  };
  int matched = 0;
  for (const Entry& e : table) {
    const Form got = act(e.g, e.arg);
    if (got == e.value) {
      ++matched;
    } else {
      o.require(false, "table entry " + e.label + ", computed " + (got.is_zero() ? "0" : got.to_string()));
    }
  }
  o.note(std::to_string(matched) + "/9 table entries reproduced");
  if (act(Generator::I, w3) == w2 * Rational(-2)) o.note("computed I(w3+) = -2 w2+");

  bool identity = true;
  const ExteriorBasis& two = ExteriorBasis::get(1, 2);
  for (int i = 0; i < two.size(); ++i) {
    const Form e = Form::basis(1, two.element(i));
    identity = identity && casimir(e) == (hodge_star(e) + e) * Rational(-4);
  }
  o.require(identity, "I^2+J^2+K^2 = -4(*+1) on Lambda^2(H^1)");
  return o;
}

Outcome double_complex() {
  Outcome o;
  for (int n = 1; n <= 2; ++n) {
    const ComplexCheckReport report = verify_double_complex(n, 3, 20, kSeed, false);
    for (const std::string& v : report.violations) o.require(false, v);
    o.note("n=" + std::to_string(n) + ": " + std::to_string(report.nodes.size()) + " nodes x 20 sections");
  }
  return o;
}

Outcome closed_form_operators() {
  Outcome o;
  // Same generator, seed and call sequence as the double complex check, so
  // the trial sections coincide.
  for (int n = 1; n <= 2; ++n) {
    std::mt19937_64 rng(kSeed);
    int sections = 0;
    for (const GridNode& node : grid_nodes(n)) {
      for (int t = 0; t < 20; ++t) {
        const GradedSection s = random_section(rng, n, node, 3);
        ++sections;
        o.require(D_up_closed_form(s).form() == D_up(s).form(), "D' at " + node_text(node.k, node.r));
        o.require(D_down_closed_form(s).form() == D_down(s).form(), "Dbar at " + node_text(node.k, node.r));
      }
    }
    o.note("n=" + std::to_string(n) + ": " + std::to_string(sections) + " sections");
  }
  return o;
}

Outcome ellipticity() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    const EllipticityReport report = ellipticity_report(n);
    std::ostringstream failures;
    for (const NodeVerdict& v : report.nodes) {
      o.require(v.match(), "n=" + std::to_string(n) + " node " + node_text(v.k, v.r) + " exact=" +
                               std::to_string(v.exact));
      if (!v.exact) failures << " " << node_text(v.k, v.r);
    }
    o.note("n=" + std::to_string(n) + ": " + std::to_string(report.nodes.size()) + " nodes, failures at" +
           failures.str());
  }
  return o;
}

Outcome fine_dimensions() {
  Outcome o;
  int fine = 0;
  for (int m = 2; m <= 3; ++m) {
    for (int k = 0; k <= 4 * m; ++k) {
      for (int r : weights_in_degree(m, k)) {
        for (const FineNode& node : fine_nodes(k, r)) {
          const long long computed = fine_space_basis(m, node).size();
          o.require(computed == fine_dimension_formula(m, node), "n=" + std::to_string(m) + " " + node.label() +
                                                                     " has dimension " + std::to_string(computed));
          ++fine;
        }
      }
    }
  }
  const int n = 2;
  int sequences = 0;
  for (int k = 2; k + 2 <= 4 * n; ++k) {
    for (int r = k % 2; r <= k; r += 2) {
      const FiveSequenceReport rep = five_sequence_report(n, k, r);
      for (const ShortSequence& seq : rep.sequences) {
        o.require(seq.well_defined, seq.name + " sequence at " + node_text(k, r) + " is not a complex");
        if (r > 0) {
          ++sequences;
          o.require(seq.alternating_sum() == 0, seq.name + " alternating sum at " + node_text(k, r));
          o.require(seq.exact(), seq.name + " exactness at " + node_text(k, r));
        }
      }
      if (r == 0) {
        const ShortSequence& mid = rep.sequences[1];
        const long long e = epsilon(n - 1, k - 2, 0);
        o.require(mid.dims[0] == 0 && mid.dims[1] == 3 * e && mid.dims[2] == 4 * e,
                  "r=0 middle sequence dims at k=" + std::to_string(k));
        if (e > 0) o.require(!mid.exact(), "r=0 middle sequence should not be exact at k=" + std::to_string(k));
      }
    }
  }
  o.note(std::to_string(fine) + " fine spaces (n=2,3), " + std::to_string(sequences) + " sequences with r > 0 (n=2)");
  return o;
}

Outcome lie_in() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 3; ++n) {
    // Base forms live on the blocks other than H_0.
    for (int k = 0; k <= 4 * (n - 1); ++k) {
      for (int r = k % 2 == 0 ? 2 : 1; r <= max_weight(n - 1, k); r += 2) {
        const LieInSolution s = lie_in_solution_space(n, k, r, LieInCase::two_mid, 2);
        const int irreducibles = s.base.size() / (r + 1);
        const std::string where = "n=" + std::to_string(n) + " " + node_text(k, r);
        o.require(static_cast<int>(s.tuples.size()) == (r + 1) * irreducibles, "two_mid dimension at " + where);
        const std::size_t length = s.tuples.empty() ? 0 : s.tuples.front().size();
        o.require(same_span(length, s.tuples, two_mid_generated_tuples(s)), "two_mid span at " + where);
        ++cases;
      }
    }
  }
  int kernels = 0;
  for (int k = 1; k <= 7; ++k) {
    for (int r = 1; r <= k; ++r) {
      if (!is_valid_node(k - 1, r - 1)) continue;
      const KernelCharacterization kc = kernel_characterization(2, k, r);
      o.require(kc.equal(), "kernel characterization at " + node_text(k, r));
      ++kernels;
    }
  }
  o.note(std::to_string(cases) + " two_mid cases (n=2,3), " + std::to_string(kernels) + " kernel characterizations (n=2)");
  return o;
}

Outcome counterexamples() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    const std::vector<CounterexampleCheck> checks = counterexample_checks(n);
    for (const CounterexampleCheck& c : checks) o.require(c.passed, "n=" + std::to_string(n) + " " + c.name);
    o.note("n=" + std::to_string(n) + ": " + std::to_string(checks.size()) + " checks");
  }
  return o;
}

Outcome qk_forms() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const StructuralForms s = structural_forms(n);
    const QForm square = qwedge(s.Psi, s.Psi);
    const bool minus_two = square == QForm::times_unit(s.Omega * Rational(-2), kOne);
    o.require(minus_two, "Psi^Psi = -2 Omega, n=" + std::to_string(n));
    if (!minus_two && square == QForm::times_unit(-s.Omega, kOne)) {
      o.note("n=" + std::to_string(n) + ": computed Psi^Psi = -Omega exactly");
    }
  }
  for (int k = 0; k <= 6; ++k) {
    const BonanSystemReport sys = kraines_bonan_system(2, k);
    o.require(sys.exists() && sys.unique(), "Kraines-Bonan system full rank at k=" + std::to_string(k));
  }
  std::mt19937_64 rng(kSeed);
  int round_trips = 0;
  for (int t = 0; t < 500; ++t) {
    const int k = t % 7;
    const Form phi = testing::random_constant_form(rng, 2, k, 5);
    const std::vector<BonanPart> parts = kraines_bonan_decompose(phi);
    bool effective = true;
    for (const BonanPart& p : parts) effective = effective && is_effective(p.mu);
    const bool ok = effective && kraines_bonan_recompose(2, k, parts) == phi;
    o.require(ok, "round trip of " + phi.to_string());
    round_trips += ok;
  }
  o.note(std::to_string(round_trips) + "/500 Kraines-Bonan round trips, n=2, k <= 6");
  return o;
}

Outcome real_dolbeault() {
  Outcome o;
  const RealDolbeaultReport report = real_dolbeault_report(1);
  for (const CounterexampleCheck& c : report.checks) o.require(c.passed, c.name + " (" + c.detail + ")");
  for (const U1Verdict& v : report.nodes) {
    o.require(v.match(), "verdict at [[L^{" + std::to_string(v.p) + "," + std::to_string(v.q) + "}]]");
  }
  o.note(std::to_string(report.checks.size()) + " checks, " + std::to_string(report.nodes.size()) +
         " nodes on C^2");
  return o;
}

Outcome q_holomorphy() {
  Outcome o;
  const auto x = [](int i) { return Poly::variable(i); };
  o.require(is_q_holomorphic(QFunction{1, {Poly(2), Poly(-1), Poly(3), Poly(Rational(1, 5))}}), "constants");
  o.require(cauchy_riemann(QFunction{1, {x(0), x(1), x(2), x(3)}}) == one_form(1, 0) * Rational(-2),
            "f(q) = q has residual -2 e^0");
  o.require(is_q_holomorphic(QFunction{1, {x(1), -x(0), Poly(0), Poly(0)}}), "x1 - i x0");
  int splits = 0;
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= 4 * n; ++k) {
      for (int r : weights_in_degree(n, k)) {
        const HqSplit s = hq_split(n, k, r);
        o.require(s.matches() && s.total == 4LL * (r + 1) * epsilon(n, k, r),
                  "hq_split n=" + std::to_string(n) + " " + node_text(k, r));
        ++splits;
      }
    }
  }
  bool brackets = true;
  for (int k = 0; k <= 4; ++k) {
    const SparseMatrix& i = script_action_matrix(1, k, Generator::I);
    const SparseMatrix& j = script_action_matrix(1, k, Generator::J);
    const SparseMatrix& kk = script_action_matrix(1, k, Generator::K);
    brackets = brackets && i * j - j * i == kk * Rational(2) && j * kk - kk * j == i * Rational(2) &&
               kk * i - i * kk == j * Rational(2);
  }
  o.require(brackets, "script bracket relations on H (x) Lambda^k(H^1)");
  const QholoEquivalence e = qholo_equivalence(1, 2);
  o.require(e.same_kernel, "Cauchy-Riemann kernel equals the V_2 kernel");
  o.note(std::to_string(splits) + " hq_split nodes; CR kernel " + std::to_string(e.cr_kernel) + " of " +
         std::to_string(e.functions) + " functions");
  return o;
}

std::string cohomology_table() {
  std::ostringstream os;
  os << "n,max_degree,k,r,kernel,image,cohomology\n";
  const std::pair<int, int> cases[] = {{1, 3}, {2, 1}};
  for (const auto& [n, degree] : cases) {
    for (const GridNode& node : grid_nodes(n)) {
      const CohomologyDims d = cohomology_dims(n, node.k, node.r, degree);
      os << n << ',' << degree << ',' << node.k << ',' << node.r << ',' << d.kernel << ',' << d.image << ','
         << d.cohomology << '\n';
    }
  }
  return os.str();
}

Outcome cohomology_snapshot(const std::string& path) {
  Outcome o;
  const std::string computed = cohomology_table();
  std::ifstream in(path);
  if (!in) {
    o.require(false, "snapshot " + path + " missing");
    std::cout << computed;
    return o;
  }
  std::stringstream expected;
  expected << in.rdbuf();
  o.require(expected.str() == computed, "flat-model cohomology differs from " + path);
  if (!o.pass) std::cout << computed;
  o.note("regression snapshot only; every finite claim is covered by criteria 1-11");
  return o;
}

}  // namespace
}  // namespace qdc

int main(int argc, char** argv) {
  using namespace qdc;
  const std::string snapshot = argc > 1 ? argv[1] : QDC_SNAPSHOT;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"dimension theorem", dimension_theorem},
      {"four-dimensional example", four_dimensional_example},
      {"double complex identities", double_complex},
      {"closed-form operators", closed_form_operators},
      {"ellipticity theorem", ellipticity},
      {"fine dimensions and short sequences", fine_dimensions},
      {"lie-in conditions", lie_in},
      {"counterexamples and injectivity", counterexamples},
      {"quaternionic-Kaehler forms", qk_forms},
      {"real Dolbeault complex on C^2", real_dolbeault},
      {"q-holomorphy", q_holomorphy},
      {"flat-model cohomology snapshot", [&snapshot] { return cohomology_snapshot(snapshot); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << time.str() << " s]" << std::endl;
    for (const std::string& n : o.notes) std::cout << "    " << n << '\n';
    failed += !o.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
