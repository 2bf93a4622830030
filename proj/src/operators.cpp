#include "qdc/operators.hpp"

#include <map>
#include <sstream>

#include "qdc/errors.hpp"
#include "qdc/exterior_basis.hpp"

namespace qdc {

GradedSection::GradedSection(GridNode node, Form form) : node_(node), form_(std::move(form)) {
  require_valid_node(node_.k, node_.r);
  if (form_.k() != node_.k && !form_.is_zero()) throw DomainError("section degree does not match its node");
  if (form_.is_zero()) form_ = Form(form_.n(), node_.k);
  if (project(form_, node_.r) != form_) {
    throw DomainError("form is not a section of E_{" + std::to_string(node_.k) + "," + std::to_string(node_.r) + "}");
  }
}

GradedSection::GradedSection(GridNode node, Form form, bool) : node_(node), form_(std::move(form)) {}

GradedSection GradedSection::zero(int n, GridNode node) { return GradedSection(node, Form(n, node.k)); }

Form casimir_polynomial(const Form& a) {
  if (a.k() > a.dim()) return a;
  return apply_coefficientwise(casimir_matrix(a.n(), a.k()), a, a.k());
}

GradedSection D_up(const GradedSection& s) {
  const GridNode target{s.node_.k + 1, s.node_.r + 1};
  return GradedSection(target, project(exterior_d(s.form_), target.r), true);
}

GradedSection D_down(const GradedSection& s) {
  const GridNode target{s.node_.k + 1, s.node_.r - 1};
  if (target.r < 0) return GradedSection(target, Form(s.form_.n(), target.k), true);
  return GradedSection(target, project(exterior_d(s.form_), target.r), true);
}

GradedSection D_up_closed_form(const GradedSection& s) {
  const int r = s.node_.r;
  const Form da = exterior_d(s.form_);
  Form out = da * Rational(r - 1) + casimir_polynomial(da) * Rational(1, r + 1);
  out *= Rational(-1, 4);
  return GradedSection({s.node_.k + 1, r + 1}, std::move(out), true);
}

GradedSection D_down_closed_form(const GradedSection& s) {
  const int r = s.node_.r;
  const Form da = exterior_d(s.form_);
  Form out = da * Rational(r + 3) + casimir_polynomial(da) * Rational(1, r + 1);
  out *= Rational(1, 4);
  return GradedSection({s.node_.k + 1, r - 1}, std::move(out), true);
}

Form random_polynomial_form(std::mt19937_64& rng, int n, int k, int max_degree, int terms) {
  static const int kCoefficients[] = {-2, -1, 1, 2};
  const ExteriorBasis& basis = ExteriorBasis::get(n, k);
  Form f(n, k);
  if (basis.size() == 0) return f;
  for (int t = 0; t < terms; ++t) {
    const MultiIndex idx = basis.element(static_cast<int>(rng() % basis.size()));
    const int degree = static_cast<int>(rng() % (max_degree + 1));
    Monomial m;
    for (int d = 0; d < degree; ++d) m = m * Monomial::variable(static_cast<int>(rng() % (4 * n)));
    f.add_term(idx, Poly::monomial(m, kCoefficients[rng() % 4]));
  }
  return f;
}

GradedSection random_section(std::mt19937_64& rng, int n, GridNode node, int max_degree) {
  require_valid_node(node.k, node.r);
  if (epsilon(n, node.k, node.r) <= 0 || node.k > 4 * n) throw DomainError("E_{k,r} is zero at this node");
  for (;;) {
    Form f = project(random_polynomial_form(rng, n, node.k, max_degree), node.r);
    if (!f.is_zero()) return GradedSection(node, std::move(f), true);
  }
}

std::vector<GridNode> grid_nodes(int n) {
  std::vector<GridNode> nodes;
  for (int k = 0; k <= 4 * n; ++k) {
    for (int r : weights_in_degree(n, k)) {
      if (epsilon(n, k, r) > 0) nodes.push_back({k, r});
    }
  }
  return nodes;
}

ComplexCheckReport verify_double_complex(int n, int max_degree, int trials, std::uint64_t seed,
                                         bool check_closed_forms) {
  if (n < 1) throw DomainError("n must be positive");
  if (max_degree < 0 || trials < 0) throw DomainError("degree and trial count must be non-negative");
  ComplexCheckReport report{n, max_degree, trials, seed, {}, {}};
  std::mt19937_64 rng(seed);
  for (const GridNode& node : grid_nodes(n)) {
    NodeCheck check{node, trials, 0};
    for (int t = 0; t < trials; ++t) {
      const GradedSection s = random_section(rng, n, node, max_degree);
      const GradedSection up = D_up(s);
      const GradedSection down = D_down(s);
      std::vector<std::string> failed;
      if (exterior_d(s.form()) != up.form() + down.form()) failed.push_back("d != D' + Dbar");
      if (!D_up(up).form().is_zero()) failed.push_back("D'^2 != 0");
      if (node.r >= 1) {
        if (!D_down(down).form().is_zero()) failed.push_back("Dbar^2 != 0");
        if (!(D_up(down).form() + D_down(up).form()).is_zero()) failed.push_back("D'Dbar + DbarD' != 0");
      } else if (!down.form().is_zero()) {
        failed.push_back("Dbar nonzero at r = 0");
      } else if (!D_down(up).form().is_zero()) {
        failed.push_back("DbarD' != 0 at r = 0");
      }
      if (check_closed_forms) {
        if (D_up_closed_form(s).form() != up.form()) failed.push_back("closed form of D' disagrees");
        if (D_down_closed_form(s).form() != down.form()) failed.push_back("closed form of Dbar disagrees");
      }
      for (const std::string& what : failed) {
        std::ostringstream os;
        os << "node (" << node.k << "," << node.r << ") trial " << t << ": " << what << " for "
           << s.form().to_string();
        report.violations.push_back(os.str());
      }
      if (!failed.empty()) ++check.violations;
    }
    report.nodes.push_back(check);
  }
  return report;
}

namespace {

// Matrix of D'_{k,r} from E_{k,r} ⊗ P_p to Λ^{k+1} ⊗ P_{p-1}. Rows index
// (basis position, monomial), columns (eigenbasis vector, monomial).
SparseMatrix homogeneous_d_up(int n, int k, int r, int p) {
  const SpaceBasis& domain = eigenspace_basis(n, k, r);
  const std::vector<Monomial> source = monomials_of_degree(4 * n, p);
  const std::vector<Monomial> target = p > 0 ? monomials_of_degree(4 * n, p - 1) : std::vector<Monomial>{};
  std::map<std::vector<unsigned>, int> target_index;
  for (std::size_t i = 0; i < target.size(); ++i) target_index.emplace(target[i].padded(4 * n), static_cast<int>(i));
  const ExteriorBasis& out = ExteriorBasis::get(n, k + 1);
  const int rows = out.size() * static_cast<int>(target.size());
  SparseMatrix m(rows, domain.size() * static_cast<int>(source.size()));
  if (rows == 0 || domain.empty()) return m;
  // symbol[i][j]: coordinates of π_{k+1,r+1}(e^i ∧ v_j).
  std::vector<std::vector<Vector>> symbol(4 * n);
  for (int i = 0; i < 4 * n; ++i) {
    for (const Form& v : domain.vectors()) {
      const Form w = project(wedge(one_form(n, i), v), r + 1);
      symbol[i].push_back(w.is_zero() ? Vector(out.size()) : out.coords(w));
    }
  }
  for (int j = 0; j < domain.size(); ++j) {
    for (std::size_t s = 0; s < source.size(); ++s) {
      SparseMatrix::Column col;
      std::vector<unsigned> exps = source[s].padded(4 * n);
      for (int i = 0; i < 4 * n; ++i) {
        if (exps[i] == 0) continue;
        const unsigned power = exps[i];
        --exps[i];
        const int t = target_index.at(exps);
        ++exps[i];
        for (int pos = 0; pos < out.size(); ++pos) {
          const Rational& c = symbol[i][j][pos];
          if (c != 0) col.emplace_back(pos * static_cast<int>(target.size()) + t, c * power);
        }
      }
      m.set_column(j * static_cast<int>(source.size()) + static_cast<int>(s), std::move(col));
    }
  }
  return m;
}

long long d_up_rank(int n, int k, int r, int max_degree) {
  if (k < 0 || r < 0 || k > 4 * n || eigenspace_dim(n, k, r) == 0) return 0;
  long long total = 0;
  for (int p = 1; p <= max_degree; ++p) total += static_cast<long long>(rank(homogeneous_d_up(n, k, r, p)));
  return total;
}

long long section_count(int n, int k, int r, int max_degree) {
  if (k < 0 || r < 0 || k > 4 * n) return 0;
  long long monomials = 0;
  for (int p = 0; p <= max_degree; ++p) monomials += static_cast<long long>(monomials_of_degree(4 * n, p).size());
  return eigenspace_dim(n, k, r) * monomials;
}

}  // namespace

CohomologyDims cohomology_dims(int n, int k, int r, int max_degree) {
  require_valid_node(k, r);
  if (n < 1) throw DomainError("n must be positive");
  if (k > 4 * n) throw DomainError("degree exceeds 4n");
  if (max_degree < 0) throw DomainError("max degree must be non-negative");
  CohomologyDims dims;
  dims.kernel = section_count(n, k, r, max_degree) - d_up_rank(n, k, r, max_degree);
  dims.image = d_up_rank(n, k - 1, r - 1, max_degree);
  dims.cohomology = dims.kernel - dims.image;
  return dims;
}

}  // namespace qdc
